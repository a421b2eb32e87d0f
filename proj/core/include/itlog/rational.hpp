#ifndef ITLOG_RATIONAL_HPP
#define ITLOG_RATIONAL_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

#include "itlog/errors.hpp"

namespace itlog {

// Exact arithmetic is carried by GMP throughout. mpq_class keeps values
// canonical (gcd(|num|,den)=1, den>=1) under all ring operations, so series
// equality is structural.
using Int = mpz_class;
using Rat = mpq_class;
using Cplx = std::complex<double>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DivisionByZeroError();
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) {
  return make_rat(Int(num), Int(den));
}

// Accepts "num", "num/den" or "-num/den".
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'", 0);
  q.canonicalize();
  if (q.get_den() == 0) throw DivisionByZeroError();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

template <class K>
struct coeff_traits;

template <>
struct coeff_traits<Rat> {
  static constexpr bool exact = true;
  static Rat from_int(long n) { return Rat(n); }
  static bool is_zero(const Rat& x) { return x == 0; }
};

template <>
struct coeff_traits<Cplx> {
  static constexpr bool exact = false;
  static Cplx from_int(long n) { return Cplx(static_cast<double>(n), 0.0); }
  static bool is_zero(const Cplx& x) { return x == Cplx(0.0, 0.0); }
};

}  // namespace itlog

#endif
