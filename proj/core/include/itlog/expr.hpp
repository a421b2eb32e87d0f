#ifndef ITLOG_EXPR_HPP
#define ITLOG_EXPR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "itlog/series.hpp"

namespace itlog {

// Abstract syntax tree for the expression front-end: rational literals, the
// variable z, named parameters, + - * / ^ (integer exponents), the function
// symbols exp/log/sin and the builtin germs expm1, zexp, quadratic,
// moebius(c).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, variable, param, unary_minus, binary, call };
  Kind kind;
  Rat number;          // Kind::number
  std::string name;    // Kind::param / Kind::call
  char op = 0;         // Kind::binary: one of + - * / ^
  std::vector<ExprPtr> args;
  std::size_t pos = 0;  // source position, for error messages
};

using ParamMap = std::map<std::string, Rat>;

// Precedence-climbing parser; throws ParseError with a position on bad input.
ExprPtr parse_expression(const std::string& text);

// Canonical re-serialization (fully parenthesized); equal ASTs print equally.
// Used as the cache key component.
std::string normalize_expression(const ExprPtr& e);

// Bottom-up exact evaluation through the series ring, truncated at order N.
RSeries eval_series(const ExprPtr& e, int N, const ParamMap& params = {});

// Evaluates the expression on a complex Taylor jet: z is bound to the jet x
// (whose constant term is the expansion point). Order-0 jets give plain
// complex evaluation.
CSeries eval_jet(const ExprPtr& e, const CSeries& x, const ParamMap& params = {});

// True iff the expression stays inside the closed set of numerically
// evaluable maps (polynomials, rational functions, exp/sin-based entire
// germs); log is excluded.
bool is_evaluable_map(const ExprPtr& e);

// Convenience: evaluate and wrap as a parabolic germ truncated so that
// itlog to order N is possible (reads coefficients up to N+p-1).
ParabolicGerm eval_germ_for_itlog(const ExprPtr& e, int N, const ParamMap& params = {});

}  // namespace itlog

#endif
