#include "itlog/seriesio.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace itlog {

void write_series(std::ostream& os, const RSeries& s) {
  os << "order " << s.order() << "\n";
  for (int k = 0; k <= s.order(); ++k) {
    const Rat& c = s.coeff(k);
    if (c == 0) continue;
    os << k << " " << c.get_num().get_str() << "/" << c.get_den().get_str() << "\n";
  }
}

void write_series(std::ostream& os, const CSeries& s) {
  os << "order " << s.order() << "\n";
  os.precision(17);
  for (int k = 0; k <= s.order(); ++k) {
    const Cplx& c = s.coeff(k);
    if (c == Cplx(0.0, 0.0)) continue;
    os << k << " " << c.real() << " " << c.imag() << "\n";
  }
}

namespace {

int read_order_line(std::istream& is) {
  std::string word;
  int order;
  if (!(is >> word) || word != "order" || !(is >> order) || order < 0)
    throw ParseError("series file must start with 'order N'", 0);
  return order;
}

}  // namespace

RSeries read_rseries(std::istream& is) {
  int order = read_order_line(is);
  std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
  int k;
  std::string value;
  while (is >> k >> value) {
    if (k < 0 || k > order) throw ParseError("coefficient index out of range", 0);
    c[static_cast<std::size_t>(k)] = rat_from_string(value);
  }
  return RSeries(order, std::move(c));
}

CSeries read_cseries(std::istream& is) {
  int order = read_order_line(is);
  std::vector<Cplx> c(static_cast<std::size_t>(order) + 1, Cplx(0.0, 0.0));
  int k;
  double re, im;
  while (is >> k >> re >> im) {
    if (k < 0 || k > order) throw ParseError("coefficient index out of range", 0);
    c[static_cast<std::size_t>(k)] = Cplx(re, im);
  }
  return CSeries(order, std::move(c));
}

std::string series_to_string(const RSeries& s) {
  std::ostringstream os;
  write_series(os, s);
  return os.str();
}

RSeries rseries_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_rseries(is);
}

namespace {

std::string derivative_symbol(const std::string& base, int k) {
  if (k <= 3) return base + std::string(static_cast<std::size_t>(k), '\'');
  return base + "^(" + std::to_string(k) + ")";
}

std::string monomial_string(const MultiIndex& i, const std::string& symbol) {
  std::string s;
  for (int k = 0; k <= i.top(); ++k) {
    int e = i.entry(k);
    if (e == 0) continue;
    if (!s.empty()) s += " ";
    std::string name = derivative_symbol(symbol, k);
    if (e == 1) {
      s += name;
    } else if (k == 0) {
      s += name + "^" + std::to_string(e);
    } else {
      s += "(" + name + ")^" + std::to_string(e);
    }
  }
  return s;
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    if (negative) out += "-";
    out += body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

std::string zpoly_string(const QPoly& p) {
  std::string s;
  for (int a = 0; a <= p.degree(); ++a) {
    Rat c = p.coeff(a);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat m = neg ? Rat(-c) : c;
    std::string body;
    if (a == 0) {
      body = rat_to_string(m);
    } else {
      std::string zpart = (a == 1) ? "z" : "z^" + std::to_string(a);
      body = (m == 1) ? zpart : rat_to_string(m) + " " + zpart;
    }
    append_signed(s, neg, body);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string diffpoly_to_string(const IntDiffPoly& p, const std::string& symbol) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [i, c] : p.terms()) {
    bool neg = c < 0;
    Int m = neg ? Int(-c) : c;
    std::string mono = monomial_string(i, symbol);
    std::string body;
    if (mono.empty())
      body = m.get_str();
    else if (m == 1)
      body = mono;
    else
      body = m.get_str() + " " + mono;
    append_signed(out, neg, body);
  }
  return out;
}

std::string diffpoly_to_string(const PolyDiffPoly& p, const std::string& symbol) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [i, poly] : p.terms()) {
    std::string mono = monomial_string(i, symbol);
    if (mono.empty()) {
      // bare polynomial term
      std::string ps = zpoly_string(poly);
      append_signed(out, false, poly.c.size() > 1 ? "(" + ps + ")" : ps);
      continue;
    }
    int nonzero = 0;
    for (const Rat& q : poly.c)
      if (q != 0) ++nonzero;
    if (nonzero == 1) {
      int a = poly.degree();
      Rat c(0);
      for (int t = 0; t <= poly.degree(); ++t)
        if (poly.coeff(t) != 0) {
          a = t;
          c = poly.coeff(t);
        }
      bool neg = c < 0;
      Rat m = neg ? Rat(-c) : c;
      std::string body;
      if (m != 1) body += rat_to_string(m) + " ";
      if (a > 0) body += (a == 1 ? std::string("z") : "z^" + std::to_string(a)) + " ";
      body += mono;
      append_signed(out, neg, body);
    } else {
      append_signed(out, false, "(" + zpoly_string(poly) + ") " + mono);
    }
  }
  return out;
}

namespace {

// Minimal recursive parser for the printed integer-coefficient format.
class DiffPolyParser {
 public:
  DiffPolyParser(const std::string& text, const std::string& symbol)
      : s_(text), sym_(symbol) {}

  IntDiffPoly parse() {
    IntDiffPoly acc;
    skip_ws();
    bool neg = consume_sign();
    acc = acc + parse_term(neg);
    for (;;) {
      skip_ws();
      if (i_ >= s_.size()) break;
      char c = s_[i_];
      if (c == '+' || c == '-') {
        ++i_;
        acc = acc + parse_term(c == '-');
      } else {
        throw ParseError("unexpected input in differential polynomial", i_);
      }
    }
    return acc;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool consume_sign() {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '-') {
      ++i_;
      return true;
    }
    if (i_ < s_.size() && s_[i_] == '+') ++i_;
    return false;
  }

  Int parse_integer() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == start) throw ParseError("expected an integer", start);
    return Int(s_.substr(start, i_ - start));
  }

  IntDiffPoly parse_term(bool neg) {
    skip_ws();
    Int coeff(1);
    if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      coeff = parse_integer();
    if (neg) coeff = -coeff;
    MultiIndex mono;
    for (;;) {
      skip_ws();
      if (i_ >= s_.size()) break;
      char c = s_[i_];
      if (c == '+' || c == '-') break;
      auto [k, e] = parse_factor();
      std::vector<int> v(static_cast<std::size_t>(std::max(mono.top(), k)) + 1, 0);
      for (int t = 0; t <= mono.top(); ++t) v[static_cast<std::size_t>(t)] = mono.entry(t);
      v[static_cast<std::size_t>(k)] += e;
      mono = MultiIndex(std::move(v));
    }
    return IntDiffPoly::monomial(mono, coeff);
  }

  // A factor is `X..` or `(X..)^e`; returns (derivative index, exponent).
  std::pair<int, int> parse_factor() {
    skip_ws();
    bool parenthesized = false;
    if (i_ < s_.size() && s_[i_] == '(') {
      parenthesized = true;
      ++i_;
    }
    int k = parse_symbol();
    int e = 1;
    if (parenthesized) {
      skip_ws();
      if (i_ >= s_.size() || s_[i_] != ')')
        throw ParseError("missing ')' in monomial", i_);
      ++i_;
    }
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      e = static_cast<int>(parse_integer().get_si());
    }
    return {k, e};
  }

  int parse_symbol() {
    skip_ws();
    if (s_.compare(i_, sym_.size(), sym_) != 0)
      throw ParseError("expected symbol '" + sym_ + "'", i_);
    i_ += sym_.size();
    int k = 0;
    while (i_ < s_.size() && s_[i_] == '\'') {
      ++k;
      ++i_;
    }
    if (k == 0 && i_ + 1 < s_.size() && s_[i_] == '^' && s_[i_ + 1] == '(') {
      i_ += 2;
      k = static_cast<int>(parse_integer().get_si());
      skip_ws();
      if (i_ >= s_.size() || s_[i_] != ')')
        throw ParseError("missing ')' in derivative marker", i_);
      ++i_;
    }
    return k;
  }

  const std::string& s_;
  std::string sym_;
  std::size_t i_ = 0;
};

}  // namespace

IntDiffPoly parse_diffpoly(const std::string& text, const std::string& symbol) {
  if (text == "0") return IntDiffPoly();
  return DiffPolyParser(text, symbol).parse();
}

}  // namespace itlog
