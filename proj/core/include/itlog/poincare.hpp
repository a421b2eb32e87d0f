#ifndef ITLOG_POINCARE_HPP
#define ITLOG_POINCARE_HPP

#include <vector>

#include "itlog/expr.hpp"
#include "itlog/series.hpp"

namespace itlog {

// Numerically evaluable map: polynomials, rational functions and the
// exp/sin-based entire germs from the expression grammar. Supports plain
// complex evaluation and Taylor-jet propagation.
class EvaluableMap {
 public:
  EvaluableMap(ExprPtr e, ParamMap params = {});

  Cplx operator()(const Cplx& z) const;

  // Jet of f(center + w) as a series in w, truncated at order m.
  CSeries jet(const Cplx& center, int m) const;

  // Jet of f at the base point of the incoming jet, composed with it:
  // the Taylor expansion of f(t(w)) to the jet's order.
  CSeries apply_jet(const CSeries& t) const;

 private:
  ExprPtr e_;
  ParamMap params_;
};

struct FixedPointData {
  Cplx xi;
  int period = 1;
  Cplx lambda;  // multiplier (f^p)'(xi), |lambda| > 1
};

struct EvalReport {
  Cplx value;
  int n_used = 0;
  double error_estimate = 0.0;
  bool converged = false;
};

// Newton iteration on f^p(z) - z from the seed; rejects non-repelling
// points.
FixedPointData find_repelling_fixed_point(const EvaluableMap& f, const Cplx& seed,
                                          int period);

// Poincare function via psi(z) = lim_n f^{np}(xi + lambda^{-n} z);
// normalization psi(0) = xi, psi'(0) = 1.
EvalReport poincare_eval(const EvaluableMap& f, const FixedPointData& fp,
                         const Cplx& z, double tol);

// m-th derivative via an order-m jet along the forward orbit, scaled by
// lambda^{-mn}.
EvalReport poincare_derivative(const EvaluableMap& f, const FixedPointData& fp,
                               const Cplx& z, int m, double tol);

// max over samples of |psi(lambda z) - f^p(psi(z))|.
double check_schroeder_numeric(const EvaluableMap& f, const FixedPointData& fp,
                               const std::vector<Cplx>& samples, double tol);

}  // namespace itlog

#endif
