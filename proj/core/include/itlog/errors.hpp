#ifndef ITLOG_ERRORS_HPP
#define ITLOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace itlog {

// Base class for all computational errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero series") {}
};

// Quotient would have a pole: ord(divisor) > ord(dividend).
struct NotAPowerSeriesError : Error {
  explicit NotAPowerSeriesError(const std::string& msg) : Error(msg) {}
};

struct EmptyResultError : Error {
  explicit EmptyResultError(const std::string& msg) : Error(msg) {}
};

// Composition g(h) with h(0) != 0 is not defined on formal power series.
struct CompositionError : Error {
  explicit CompositionError(const std::string& msg) : Error(msg) {}
};

struct NotInvertibleError : Error {
  explicit NotInvertibleError(const std::string& msg) : Error(msg) {}
};

// An operation needs more input coefficients than the truncation provides.
struct OrderDeficitError : Error {
  explicit OrderDeficitError(const std::string& msg) : Error(msg) {}
};

struct NonParabolicError : Error {
  explicit NonParabolicError(const std::string& msg) : Error(msg) {}
};

struct BoettcherCaseError : Error {
  BoettcherCaseError() : Error("multiplier is 0 (Boettcher case, unsupported)") {}
};

// lambda^k == lambda for some 2 <= k <= N: the Schroeder pivot vanishes.
struct ResonantMultiplierError : Error {
  explicit ResonantMultiplierError(int k)
      : Error("resonant multiplier: lambda^" + std::to_string(k) + " = lambda"),
        resonant_k(k) {}
  int resonant_k;
};

struct RankUndefinedError : Error {
  RankUndefinedError() : Error("rank of the zero differential polynomial is undefined") {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct EvalError : Error {
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

struct NoFixedPointError : Error {
  explicit NoFixedPointError(const std::string& msg) : Error(msg) {}
};

struct NotRepellingError : Error {
  explicit NotRepellingError(const std::string& msg) : Error(msg) {}
};

struct DivergenceError : Error {
  DivergenceError(const std::string& msg, int last_n)
      : Error(msg), last_finite_n(last_n) {}
  int last_finite_n;
};

}  // namespace itlog

#endif
