#ifndef ITLOG_SERIES_HPP
#define ITLOG_SERIES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "itlog/errors.hpp"
#include "itlog/rational.hpp"

namespace itlog {

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N. Coefficients
// beyond the truncation order N are unknown, not zero; every operation
// returns the tightest order it can still guarantee. Values are immutable
// after construction.
template <class K>
class Series {
 public:
  using traits = coeff_traits<K>;

  explicit Series(int order) : c_(checked_size(order), K(0)) {}

  Series(int order, std::vector<K> coeffs) : c_(std::move(coeffs)) {
    c_.resize(checked_size(order), K(0));
  }

  static Series zero(int order) { return Series(order); }

  static Series one(int order) { return monomial(0, K(1), order); }

  // The identity series z.
  static Series identity(int order) { return monomial(1, K(1), order); }

  static Series monomial(int k, const K& coeff, int order) {
    Series s(order);
    if (k > order)
      throw OrderDeficitError("monomial exponent exceeds truncation order");
    s.c_[static_cast<std::size_t>(k)] = coeff;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const K& coeff(int k) const {
    if (k < 0 || k > order())
      throw OrderDeficitError("coefficient index " + std::to_string(k) +
                              " beyond truncation order " + std::to_string(order()));
    return c_[static_cast<std::size_t>(k)];
  }

  const std::vector<K>& coeffs() const { return c_; }

  // Index of the lowest non-zero stored coefficient, or nullopt if all
  // stored coefficients vanish.
  std::optional<int> valuation() const {
    for (int k = 0; k <= order(); ++k)
      if (!traits::is_zero(c_[static_cast<std::size_t>(k)])) return k;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  Series truncate(int m) const {
    if (m > order()) throw OrderDeficitError("cannot extend a truncated series");
    return Series(m, std::vector<K>(c_.begin(), c_.begin() + m + 1));
  }

  bool operator==(const Series& o) const { return c_ == o.c_; }

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw EmptyResultError("series truncation order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<K> c_;  // size order()+1
};

using RSeries = Series<Rat>;
using CSeries = Series<Cplx>;

template <class K>
Series<K> operator+(const Series<K>& a, const Series<K>& b) {
  int m = std::min(a.order(), b.order());
  std::vector<K> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Series<K>(m, std::move(c));
}

template <class K>
Series<K> operator-(const Series<K>& a, const Series<K>& b) {
  int m = std::min(a.order(), b.order());
  std::vector<K> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) c[k] = a.coeff(k) - b.coeff(k);
  return Series<K>(m, std::move(c));
}

template <class K>
Series<K> operator-(const Series<K>& a) {
  std::vector<K> c(a.coeffs());
  for (auto& x : c) x = -x;
  return Series<K>(a.order(), std::move(c));
}

template <class K>
Series<K> operator*(const K& s, const Series<K>& a) {
  std::vector<K> c(a.coeffs());
  for (auto& x : c) x = s * x;
  return Series<K>(a.order(), std::move(c));
}

namespace detail {

// Cauchy product of coefficient vectors, truncated at index m.
template <class K>
std::vector<K> convolve(const std::vector<K>& a, const std::vector<K>& b, int m) {
  std::vector<K> c(static_cast<std::size_t>(m) + 1, K(0));
  int na = static_cast<int>(a.size()) - 1;
  for (int i = 0; i <= std::min(na, m); ++i) {
    if (coeff_traits<K>::is_zero(a[i])) continue;
    int jmax = std::min(static_cast<int>(b.size()) - 1, m - i);
    for (int j = 0; j <= jmax; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace detail

template <class K>
Series<K> operator*(const Series<K>& a, const Series<K>& b) {
  int m = std::min(a.order(), b.order());
  return Series<K>(m, detail::convolve(a.coeffs(), b.coeffs(), m));
}

// Exact quotient q with q*b == a. Requires ord(b) <= ord(a).
template <class K>
Series<K> operator/(const Series<K>& a, const Series<K>& b) {
  auto vb = b.valuation();
  if (!vb) throw DivisionByZeroError();
  int v = *vb;
  auto va = a.valuation();
  if (va && *va < v)
    throw NotAPowerSeriesError("quotient would have a pole: ord(divisor)=" +
                               std::to_string(v) + " > ord(dividend)=" +
                               std::to_string(*va));
  int m = std::min(a.order(), b.order()) - v;
  if (m < 0) throw EmptyResultError("no quotient coefficients are determined");
  std::vector<K> q(static_cast<std::size_t>(m) + 1, K(0));
  const K& b0 = b.coeff(v);
  for (int k = 0; k <= m; ++k) {
    K s = (k + v <= a.order()) ? a.coeff(k + v) : K(0);
    for (int j = 0; j < k; ++j) {
      if (k - j + v <= b.order() && !coeff_traits<K>::is_zero(q[j]))
        s -= q[j] * b.coeff(k - j + v);
    }
    q[k] = s / b0;
  }
  return Series<K>(m, std::move(q));
}

template <class K>
Series<K> derive(const Series<K>& a) {
  if (a.order() == 0)
    throw EmptyResultError("derivative of an order-0 truncation has no known coefficients");
  int m = a.order() - 1;
  std::vector<K> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    c[k] = coeff_traits<K>::from_int(k + 1) * a.coeff(k + 1);
  return Series<K>(m, std::move(c));
}

template <class K>
Series<K> derive(const Series<K>& a, int times) {
  Series<K> r = a;
  for (int i = 0; i < times; ++i) r = derive(r);
  return r;
}

// outer(inner), Horner from the top coefficient down. inner(0) must be 0.
template <class K>
Series<K> compose(const Series<K>& outer, const Series<K>& inner) {
  if (!coeff_traits<K>::is_zero(inner.coeff(0)))
    throw CompositionError("inner series has non-zero constant term");
  int m = std::min(outer.order(), inner.order());
  std::vector<K> r(static_cast<std::size_t>(m) + 1, K(0));
  r[0] = outer.coeff(m);
  for (int k = m - 1; k >= 0; --k) {
    r = detail::convolve(r, inner.coeffs(), m);
    r[0] += outer.coeff(k);
  }
  return Series<K>(m, std::move(r));
}

template <class K>
Series<K> pow(const Series<K>& a, int n) {
  if (n < 0) {
    Series<K> inv = Series<K>::one(a.order()) / a;
    return pow(inv, -n);
  }
  Series<K> r = Series<K>::one(a.order());
  Series<K> base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    if ((n >>= 1) != 0) base = base * base;
  }
  return r;
}

// Compositional inverse: g with outer(g) == z == g(outer).
template <class K>
Series<K> reverse(const Series<K>& a) {
  if (!coeff_traits<K>::is_zero(a.coeff(0)))
    throw NotInvertibleError("compositional inverse requires a(0) = 0");
  if (a.order() < 1 || coeff_traits<K>::is_zero(a.coeff(1)))
    throw NotInvertibleError("compositional inverse requires a'(0) != 0");
  int m = a.order();
  const K a1 = a.coeff(1);
  std::vector<K> g(static_cast<std::size_t>(m) + 1, K(0));
  g[1] = K(1) / a1;
  for (int k = 2; k <= m; ++k) {
    Series<K> h = compose(a, Series<K>(m, g));
    // Raising g_k by delta moves h_k by a'(0)*delta and nothing below.
    g[k] -= h.coeff(k) / a1;
  }
  return Series<K>(m, std::move(g));
}

// Formal exponential; a(0) must be 0. Solves e' = a'e coefficientwise.
template <class K>
Series<K> exp_series(const Series<K>& a) {
  if (!coeff_traits<K>::is_zero(a.coeff(0)))
    throw CompositionError("exp of a series with non-zero constant term is not formal");
  int m = a.order();
  std::vector<K> e(static_cast<std::size_t>(m) + 1, K(0));
  e[0] = K(1);
  for (int k = 1; k <= m; ++k) {
    K s(0);
    for (int j = 1; j <= k; ++j)
      s += coeff_traits<K>::from_int(j) * a.coeff(j) * e[k - j];
    e[k] = s / coeff_traits<K>::from_int(k);
  }
  return Series<K>(m, std::move(e));
}

// Formal logarithm; a(0) must be 1. Solves l' = a'/a coefficientwise.
template <class K>
Series<K> log_series(const Series<K>& a) {
  if (a.coeff(0) != K(1))
    throw CompositionError("log of a series with constant term != 1 is not formal");
  int m = a.order();
  std::vector<K> l(static_cast<std::size_t>(m) + 1, K(0));
  for (int k = 1; k <= m; ++k) {
    K s = coeff_traits<K>::from_int(k) * a.coeff(k);
    for (int j = 1; j < k; ++j)
      s -= coeff_traits<K>::from_int(j) * l[j] * a.coeff(k - j);
    l[k] = s / coeff_traits<K>::from_int(k);
  }
  return Series<K>(m, std::move(l));
}

// n-fold self-composition (n >= 1). n = 0 is rejected: the result would be
// the identity, which is not parabolic.
template <class K>
Series<K> iterate(const Series<K>& f, int n) {
  if (n < 1) throw NonParabolicError("iterate requires n >= 1");
  Series<K> r = f;
  for (int i = 1; i < n; ++i) r = compose(r, f);
  return r;
}

// Normalized germ f = z + f_p z^p + ... with f_p != 0, p >= 2. Exact
// coefficients only; the float pipeline never constructs germs.
class ParabolicGerm {
 public:
  explicit ParabolicGerm(RSeries s) : s_(std::move(s)), p_(0) {
    if (s_.coeff(0) != 0) throw NonParabolicError("germ must fix 0");
    if (s_.order() < 2 || s_.coeff(1) != 1)
      throw NonParabolicError("germ must be tangent to the identity (f'(0) = 1)");
    for (int k = 2; k <= s_.order(); ++k) {
      if (s_.coeff(k) != 0) {
        p_ = k;
        break;
      }
    }
    if (p_ == 0)
      throw NonParabolicError("germ is the identity to its truncation order");
  }

  const RSeries& series() const { return s_; }
  int p() const { return p_; }
  const Rat& leading() const { return s_.coeff(p_); }

 private:
  RSeries s_;
  int p_;
};

inline ParabolicGerm germ_iterate(const ParabolicGerm& f, int n) {
  return ParabolicGerm(iterate(f.series(), n));
}

}  // namespace itlog

#endif
