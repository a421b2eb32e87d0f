#ifndef ITLOG_DIFFPOLY_HPP
#define ITLOG_DIFFPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "itlog/multiindex.hpp"
#include "itlog/series.hpp"

namespace itlog {

// Dense univariate polynomial in z with rational coefficients; used as a
// coefficient ring for differential polynomials.
struct QPoly {
  std::vector<Rat> c;  // c[a] is the coefficient of z^a; trimmed

  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit QPoly(const Rat& x) {
    if (x != 0) c.push_back(x);
  }

  static QPoly from_int(long n) { return QPoly(Rat(n)); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Rat coeff(int a) const {
    return (a >= 0 && a <= degree()) ? c[static_cast<std::size_t>(a)] : Rat(0);
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const QPoly& o) const { return c == o.c; }

  QPoly operator+(const QPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (int a = 0; a < static_cast<int>(r.size()); ++a) r[a] = coeff(a) + o.coeff(a);
    return QPoly(std::move(r));
  }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }

  QPoly operator-(const QPoly& o) const { return *this + (-o); }

  QPoly operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return QPoly(std::move(r));
  }

  QPoly derivative() const {
    std::vector<Rat> r;
    for (int a = 1; a <= degree(); ++a) r.push_back(Rat(a) * coeff(a));
    return QPoly(std::move(r));
  }

  RSeries to_series(int order) const {
    RSeries s(order);
    std::vector<Rat> v(static_cast<std::size_t>(order) + 1, Rat(0));
    for (int a = 0; a <= std::min(degree(), order); ++a) v[a] = coeff(a);
    return RSeries(order, std::move(v));
  }
};

namespace ring {

inline bool is_zero(const Int& x) { return x == 0; }
inline bool is_zero(const QPoly& x) { return x.is_zero(); }
inline Int from_int_tag(const Int*, long n) { return Int(n); }
inline QPoly from_int_tag(const QPoly*, long n) { return QPoly::from_int(n); }
// Coefficient derivation: integers are constants, polynomials use d/dz.
inline Int derivative(const Int&) { return Int(0); }
inline QPoly derivative(const QPoly& x) { return x.derivative(); }
inline RSeries embed(const Int& x, int order) {
  return RSeries::monomial(0, Rat(x), order);
}
inline RSeries embed(const QPoly& x, int order) { return x.to_series(order); }

}  // namespace ring

// Differential polynomial P = sum_i P_i Y^i over a coefficient ring C
// (integers or rational-coefficient polynomials in z). Terms are keyed by
// canonical multi-index and iterate in ascending anti-lex order.
template <class C>
class DiffPoly {
 public:
  using TermMap = std::map<MultiIndex, C, AntilexLess>;

  DiffPoly() = default;

  static DiffPoly monomial(const MultiIndex& i, C coeff) {
    DiffPoly p;
    if (!ring::is_zero(coeff)) p.t_.emplace(i, std::move(coeff));
    return p;
  }

  static DiffPoly constant(long n) {
    return monomial(MultiIndex{}, ring::from_int_tag(static_cast<C*>(nullptr), n));
  }

  // The indeterminate itself, Y (or X).
  static DiffPoly indeterminate() {
    return monomial(MultiIndex{1}, ring::from_int_tag(static_cast<C*>(nullptr), 1));
  }

  bool is_zero() const { return t_.empty(); }
  const TermMap& terms() const { return t_; }

  C coeff(const MultiIndex& i) const {
    auto it = t_.find(i);
    return it == t_.end() ? ring::from_int_tag(static_cast<C*>(nullptr), 0) : it->second;
  }

  const MultiIndex& rank() const {
    if (t_.empty()) throw RankUndefinedError();
    return t_.rbegin()->first;
  }

  // Highest derivative index occurring in any supported monomial.
  int order() const {
    int r = 0;
    for (const auto& [i, c] : t_) r = std::max(r, i.top());
    return r;
  }

  int degree() const {
    if (t_.empty()) throw RankUndefinedError();
    int d = 0;
    for (const auto& [i, c] : t_) d = std::max(d, i.abs());
    return d;
  }

  int weight() const {
    if (t_.empty()) throw RankUndefinedError();
    int w = 0;
    for (const auto& [i, c] : t_) w = std::max(w, i.wt());
    return w;
  }

  bool homogeneous() const {
    if (t_.empty()) return false;
    int d = degree();
    for (const auto& [i, c] : t_)
      if (i.abs() != d) return false;
    return true;
  }

  bool isobaric() const {
    if (t_.empty()) return false;
    int w = weight();
    for (const auto& [i, c] : t_)
      if (i.wt() != w) return false;
    return true;
  }

  DiffPoly operator+(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, c);
    return r;
  }

  DiffPoly operator-(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, -c);
    return r;
  }

  DiffPoly operator-() const {
    DiffPoly r;
    for (const auto& [i, c] : t_) r.t_.emplace(i, -c);
    return r;
  }

  DiffPoly operator*(const DiffPoly& o) const {
    DiffPoly r;
    for (const auto& [i, ci] : t_)
      for (const auto& [j, cj] : o.t_) r.add_term(i + j, ci * cj);
    return r;
  }

  DiffPoly scaled(const C& s) const {
    DiffPoly r;
    if (ring::is_zero(s)) return r;
    for (const auto& [i, c] : t_) r.add_term(i, C(s * c));
    return r;
  }

  // Derivation extending the coefficient ring's: (Y^{(k)})' = Y^{(k+1)}.
  DiffPoly derivative() const {
    DiffPoly r;
    for (const auto& [i, c] : t_) {
      r.add_term(i, ring::derivative(c));
      for (int k = 0; k <= i.top(); ++k) {
        int e = i.entry(k);
        if (e == 0) continue;
        std::vector<int> v(i.entries());
        v.resize(static_cast<std::size_t>(std::max(i.top() + 2, k + 2)), 0);
        v[static_cast<std::size_t>(k)] -= 1;
        v[static_cast<std::size_t>(k) + 1] += 1;
        r.add_term(MultiIndex(std::move(v)), C(c * ring::from_int_tag(static_cast<C*>(nullptr), e)));
      }
    }
    return r;
  }

  bool operator==(const DiffPoly& o) const { return t_ == o.t_; }

  void add_term(const MultiIndex& i, const C& c) {
    if (ring::is_zero(c)) return;
    auto [it, fresh] = t_.emplace(i, c);
    if (!fresh) {
      it->second = it->second + c;
      if (ring::is_zero(it->second)) t_.erase(it);
    }
  }

 private:
  TermMap t_;
};

using IntDiffPoly = DiffPoly<Int>;
using PolyDiffPoly = DiffPoly<QPoly>;

// Substitutes the series y for the indeterminate: P(y, y', ..., y^{(r)}).
// Result order is order(y) - order(P); y must be deep enough that the top
// derivative retains at least one coefficient.
template <class C>
RSeries evaluate(const DiffPoly<C>& P, const RSeries& y) {
  int r = P.is_zero() ? 0 : P.order();
  if (y.order() < r)
    throw OrderDeficitError("series truncated too shallowly for an order-" +
                            std::to_string(r) + " differential polynomial");
  int m = y.order() - r;
  std::vector<RSeries> dy;
  dy.push_back(y);
  for (int k = 1; k <= r; ++k) dy.push_back(derive(dy.back()));

  RSeries acc(m);
  for (const auto& [i, c] : P.terms()) {
    RSeries term = ring::embed(c, m);
    for (int k = 0; k <= i.top(); ++k)
      for (int e = 0; e < i.entry(k); ++e)
        term = term * dy[static_cast<std::size_t>(k)].truncate(
                          std::min(m, dy[static_cast<std::size_t>(k)].order()));
    acc = acc + term.truncate(m);
  }
  return acc;
}

// Chain-rule family of Julia's equation: for 0 <= i <= j,
//   phi^{(j)}(f) (f')^{2j-1} = sum_i A_ij(f') phi^{(i)},
// with A_ij in Z{X} independent of f. A_jj = X^j; non-zero A_ij are
// homogeneous of degree j and isobaric of weight j-i.
struct ChainFamilyA {
  int upper;
  std::vector<std::vector<IntDiffPoly>> a;  // a[j][i], 0 <= i <= j <= upper

  const IntDiffPoly& at(int i, int j) const {
    return a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
};

ChainFamilyA chain_A(int j_max);

// Coefficients of the multi-index version: for j in N*,
//   phi^{j}(f) (f')^{2||j||-|j|} = sum_{i <= j, |i|=|j|} B_ij(f') phi^{i}.
// Returns all B_ij keyed by i.
std::map<MultiIndex, IntDiffPoly, AntilexLess> chain_B(const MultiIndex& j);

}  // namespace itlog

#endif
