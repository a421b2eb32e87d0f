#include "itlog/expr.hpp"

#include <cctype>
#include <cmath>

namespace itlog {

namespace {

struct Token {
  enum class Kind { number, ident, op, lparen, rparen, comma, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::Kind::end, "", start};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      tok_ = {Token::Kind::number, s_.substr(start, i_ - start), start};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      tok_ = {Token::Kind::ident, s_.substr(start, i_ - start), start};
    } else if (c == '(') {
      ++i_;
      tok_ = {Token::Kind::lparen, "(", start};
    } else if (c == ')') {
      ++i_;
      tok_ = {Token::Kind::rparen, ")", start};
    } else if (c == ',') {
      ++i_;
      tok_ = {Token::Kind::comma, ",", start};
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      ++i_;
      tok_ = {Token::Kind::op, std::string(1, c), start};
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_{Token::Kind::end, "", 0};
};

bool is_builtin(const std::string& name) {
  return name == "exp" || name == "log" || name == "sin" || name == "expm1" ||
         name == "zexp" || name == "quadratic" || name == "moebius";
}

int arity(const std::string& name) {
  if (name == "exp" || name == "log" || name == "sin" || name == "moebius") return 1;
  return 0;
}

int precedence(char op) {
  switch (op) {
    case '+':
    case '-':
      return 1;
    case '*':
    case '/':
      return 2;
    case '^':
      return 3;
  }
  return 0;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  ExprPtr parse() {
    ExprPtr e = parse_binary(1);
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::end)
      throw ParseError("trailing input '" + t.text + "'", t.pos);
    return e;
  }

 private:
  ExprPtr parse_binary(int min_prec) {
    ExprPtr lhs = parse_unary();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::op) return lhs;
      char op = t.text[0];
      int prec = precedence(op);
      if (prec < min_prec) return lhs;
      std::size_t pos = lex_.take().pos;
      // ^ is right-associative; the others left.
      ExprPtr rhs = parse_binary(op == '^' ? prec : prec + 1);
      if (op == '^') check_integer_exponent(rhs, pos);
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::binary;
      node->op = op;
      node->args = {lhs, rhs};
      node->pos = pos;
      lhs = node;
    }
  }

  static void check_integer_exponent(const ExprPtr& e, std::size_t pos) {
    const Expr* x = e.get();
    if (x->kind == Expr::Kind::unary_minus) x = x->args[0].get();
    if (x->kind != Expr::Kind::number)
      throw ParseError("exponent must be an integer literal", pos);
  }

  ExprPtr parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::op && t.text == "-") {
      std::size_t pos = lex_.take().pos;
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::unary_minus;
      // unary minus binds tighter than * / but looser than ^
      node->args = {parse_binary(3)};
      node->pos = pos;
      return node;
    }
    if (t.kind == Token::Kind::op && t.text == "+") {
      lex_.take();
      return parse_unary();
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    Token t = lex_.take();
    auto node = std::make_shared<Expr>();
    node->pos = t.pos;
    switch (t.kind) {
      case Token::Kind::number:
        node->kind = Expr::Kind::number;
        node->number = rat_from_string(t.text);
        return node;
      case Token::Kind::lparen: {
        ExprPtr inner = parse_binary(1);
        expect_rparen(t.pos);
        return inner;
      }
      case Token::Kind::ident: {
        if (t.text == "z") {
          node->kind = Expr::Kind::variable;
          return node;
        }
        if (is_builtin(t.text)) {
          node->kind = Expr::Kind::call;
          node->name = t.text;
          if (arity(t.text) == 1) {
            const Token& open = lex_.peek();
            if (open.kind != Token::Kind::lparen)
              throw ParseError("'" + t.text + "' expects an argument", open.pos);
            lex_.take();
            node->args.push_back(parse_binary(1));
            expect_rparen(t.pos);
          } else if (lex_.peek().kind == Token::Kind::lparen) {
            lex_.take();
            expect_rparen(t.pos);  // accept "expm1()" as "expm1"
          }
          return node;
        }
        node->kind = Expr::Kind::param;
        node->name = t.text;
        return node;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  void expect_rparen(std::size_t open_pos) {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::rparen)
      throw ParseError("missing ')' for group opened here", open_pos);
    lex_.take();
  }

  Lexer lex_;
};

long integer_exponent(const ExprPtr& e) {
  if (e->kind == Expr::Kind::unary_minus)
    return -integer_exponent(e->args[0]);
  // guaranteed integral by the parser
  return e->number.get_num().get_si();
}

RSeries sin_taylor(int N) {
  std::vector<Rat> c(static_cast<std::size_t>(N) + 1, Rat(0));
  Rat fact(1);
  for (int k = 1; k <= N; ++k) {
    fact *= Rat(k);
    if (k % 2 == 1) c[static_cast<std::size_t>(k)] = ((k / 2) % 2 ? -1 : 1) / fact;
  }
  return RSeries(N, std::move(c));
}

Rat constant_value(const RSeries& s, std::size_t pos) {
  for (int k = 1; k <= s.order(); ++k)
    if (s.coeff(k) != 0)
      throw ParseError("expected a constant argument", pos);
  return s.coeff(0);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string normalize_expression(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::number:
      return rat_to_string(e->number);
    case Expr::Kind::variable:
      return "z";
    case Expr::Kind::param:
      return e->name;
    case Expr::Kind::unary_minus:
      return "(-" + normalize_expression(e->args[0]) + ")";
    case Expr::Kind::binary:
      return "(" + normalize_expression(e->args[0]) + e->op +
             normalize_expression(e->args[1]) + ")";
    case Expr::Kind::call: {
      std::string s = e->name + "(";
      for (std::size_t i = 0; i < e->args.size(); ++i) {
        if (i) s += ",";
        s += normalize_expression(e->args[i]);
      }
      return s + ")";
    }
  }
  return "";
}

RSeries eval_series(const ExprPtr& e, int N, const ParamMap& params) {
  switch (e->kind) {
    case Expr::Kind::number:
      return RSeries::monomial(0, e->number, N);
    case Expr::Kind::variable:
      if (N < 1) throw OrderDeficitError("order 0 truncation cannot hold z");
      return RSeries::identity(N);
    case Expr::Kind::param: {
      auto it = params.find(e->name);
      if (it == params.end())
        throw ParseError("unknown identifier '" + e->name + "'", e->pos);
      return RSeries::monomial(0, it->second, N);
    }
    case Expr::Kind::unary_minus:
      return -eval_series(e->args[0], N, params);
    case Expr::Kind::binary: {
      if (e->op == '^') {
        RSeries base = eval_series(e->args[0], N, params);
        return pow(base, static_cast<int>(integer_exponent(e->args[1])));
      }
      RSeries a = eval_series(e->args[0], N, params);
      RSeries b = eval_series(e->args[1], N, params);
      switch (e->op) {
        case '+':
          return a + b;
        case '-':
          return a - b;
        case '*':
          return a * b;
        case '/':
          return a / b;
      }
      throw EvalError("bad operator");
    }
    case Expr::Kind::call: {
      if (e->name == "expm1")
        return exp_series(RSeries::identity(N)) - RSeries::one(N);
      if (e->name == "zexp")
        return RSeries::identity(N) * exp_series(RSeries::identity(N));
      if (e->name == "quadratic") {
        RSeries zed = RSeries::identity(N);
        return zed + zed * zed;
      }
      if (e->name == "moebius") {
        Rat c = constant_value(eval_series(e->args[0], N, params), e->pos);
        RSeries zed = RSeries::identity(N);
        return zed / (RSeries::one(N) - c * zed);
      }
      RSeries arg = eval_series(e->args[0], N, params);
      if (e->name == "exp") return exp_series(arg);
      if (e->name == "log") return log_series(arg);
      if (e->name == "sin") return compose(sin_taylor(N), arg);
      throw ParseError("unknown function '" + e->name + "'", e->pos);
    }
  }
  throw EvalError("bad expression node");
}

namespace {

CSeries const_jet(const Cplx& v, int order) {
  return CSeries::monomial(0, v, order);
}

CSeries shifted(const CSeries& g) {
  std::vector<Cplx> c(g.coeffs());
  c[0] = Cplx(0.0, 0.0);
  return CSeries(g.order(), std::move(c));
}

CSeries taylor_exp(int N) {
  std::vector<Cplx> c(static_cast<std::size_t>(N) + 1);
  double fact = 1.0;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) fact *= k;
    c[static_cast<std::size_t>(k)] = Cplx(1.0 / fact, 0.0);
  }
  return CSeries(N, std::move(c));
}

// sin and cos Taylor series about 0.
CSeries taylor_sin(int N) {
  std::vector<Cplx> c(static_cast<std::size_t>(N) + 1, Cplx(0.0, 0.0));
  double fact = 1.0;
  for (int k = 1; k <= N; ++k) {
    fact *= k;
    if (k % 2 == 1) c[static_cast<std::size_t>(k)] = Cplx(((k / 2) % 2 ? -1.0 : 1.0) / fact, 0.0);
  }
  return CSeries(N, std::move(c));
}

CSeries taylor_cos(int N) {
  std::vector<Cplx> c(static_cast<std::size_t>(N) + 1, Cplx(0.0, 0.0));
  double fact = 1.0;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) fact *= k;
    if (k % 2 == 0) c[static_cast<std::size_t>(k)] = Cplx(((k / 2) % 2 ? -1.0 : 1.0) / fact, 0.0);
  }
  return CSeries(N, std::move(c));
}

}  // namespace

CSeries eval_jet(const ExprPtr& e, const CSeries& x, const ParamMap& params) {
  const int N = x.order();
  switch (e->kind) {
    case Expr::Kind::number:
      return const_jet(Cplx(e->number.get_d(), 0.0), N);
    case Expr::Kind::variable:
      return x;
    case Expr::Kind::param: {
      auto it = params.find(e->name);
      if (it == params.end())
        throw ParseError("unknown identifier '" + e->name + "'", e->pos);
      return const_jet(Cplx(it->second.get_d(), 0.0), N);
    }
    case Expr::Kind::unary_minus:
      return -eval_jet(e->args[0], x, params);
    case Expr::Kind::binary: {
      if (e->op == '^') {
        CSeries base = eval_jet(e->args[0], x, params);
        return pow(base, static_cast<int>(integer_exponent(e->args[1])));
      }
      CSeries a = eval_jet(e->args[0], x, params);
      CSeries b = eval_jet(e->args[1], x, params);
      switch (e->op) {
        case '+':
          return a + b;
        case '-':
          return a - b;
        case '*':
          return a * b;
        case '/':
          return a / b;
      }
      throw EvalError("bad operator");
    }
    case Expr::Kind::call: {
      if (e->name == "expm1") {
        Cplx a = x.coeff(0);
        return std::exp(a) * compose(taylor_exp(N), shifted(x)) - CSeries::one(N);
      }
      if (e->name == "zexp") {
        Cplx a = x.coeff(0);
        return x * (std::exp(a) * compose(taylor_exp(N), shifted(x)));
      }
      if (e->name == "quadratic") return x + x * x;
      if (e->name == "moebius") {
        CSeries c = eval_jet(e->args[0], const_jet(Cplx(0, 0), N), params);
        return x / (CSeries::one(N) - c.coeff(0) * x);
      }
      CSeries g = eval_jet(e->args[0], x, params);
      Cplx a = g.coeff(0);
      CSeries h = shifted(g);
      if (e->name == "exp") return std::exp(a) * compose(taylor_exp(N), h);
      if (e->name == "sin")
        return std::sin(a) * compose(taylor_cos(N), h) +
               std::cos(a) * compose(taylor_sin(N), h);
      if (e->name == "log") {
        if (std::abs(a) == 0.0) throw EvalError("log evaluated at 0");
        CSeries u = g / const_jet(a, N);  // constant term 1
        return const_jet(std::log(a), N) + log_series(u);
      }
      throw ParseError("unknown function '" + e->name + "'", e->pos);
    }
  }
  throw EvalError("bad expression node");
}

bool is_evaluable_map(const ExprPtr& e) {
  if (e->kind == Expr::Kind::call && e->name == "log") return false;
  for (const ExprPtr& a : e->args)
    if (!is_evaluable_map(a)) return false;
  return true;
}

ParabolicGerm eval_germ_for_itlog(const ExprPtr& e, int N, const ParamMap& params) {
  // p is only known after evaluation; retry deeper if the first truncation
  // turns out too shallow for the recurrence.
  ParabolicGerm g(eval_series(e, N + 1, params));
  if (g.p() > 2) g = ParabolicGerm(eval_series(e, N + g.p() - 1, params));
  return g;
}

}  // namespace itlog
