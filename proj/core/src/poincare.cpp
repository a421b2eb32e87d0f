#include "itlog/poincare.hpp"

#include <cmath>

#include "itlog/funceq.hpp"

namespace itlog {

namespace {

constexpr double kEscapeCap = 1e150;
constexpr int kMaxLimitIndex = 200;

}  // namespace

EvaluableMap::EvaluableMap(ExprPtr e, ParamMap params)
    : e_(std::move(e)), params_(std::move(params)) {
  if (!is_evaluable_map(e_))
    throw EvalError("expression is not an evaluable map (log is not entire)");
}

Cplx EvaluableMap::operator()(const Cplx& z) const {
  return eval_jet(e_, CSeries::monomial(0, z, 0), params_).coeff(0);
}

CSeries EvaluableMap::jet(const Cplx& center, int m) const {
  CSeries x(m, {center, Cplx(1.0, 0.0)});
  return eval_jet(e_, x, params_);
}

CSeries EvaluableMap::apply_jet(const CSeries& t) const {
  return eval_jet(e_, t, params_);
}

namespace {

// One orbit step with escape protection.
Cplx step(const EvaluableMap& f, const Cplx& z, int n_reached) {
  Cplx w = f(z);
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > kEscapeCap)
    throw DivergenceError("forward orbit escaped", n_reached);
  return w;
}

Cplx orbit(const EvaluableMap& f, Cplx z, int steps, int n_reached) {
  for (int i = 0; i < steps; ++i) z = step(f, z, n_reached);
  return z;
}

// Value and derivative of f^p at z.
std::pair<Cplx, Cplx> orbit_with_derivative(const EvaluableMap& f, Cplx z, int p) {
  Cplx d(1.0, 0.0);
  for (int i = 0; i < p; ++i) {
    CSeries j = f.jet(z, 1);
    d *= j.coeff(1);
    z = j.coeff(0);
    if (std::abs(z) > kEscapeCap) throw DivergenceError("orbit escaped", i);
  }
  return {z, d};
}

// Local expansion of the limit function at 0, from the float-mode conjugacy
// recurrence on the jet of f^p at xi. Seeding the orbit with it instead of
// the bare linear term keeps n small, below the double-precision floor that
// the amplified round-off in xi would otherwise impose.
constexpr int kSeedOrder = 10;

CSeries local_seed(const EvaluableMap& f, const FixedPointData& fp) {
  CSeries j = f.jet(fp.xi, kSeedOrder);
  for (int i = 1; i < fp.period; ++i) j = f.apply_jet(j);
  std::vector<Cplx> g(j.coeffs());
  g[0] = Cplx(0.0, 0.0);  // kill the fixed-point residual
  try {
    return schroeder_solve(CSeries(kSeedOrder, std::move(g)), kSeedOrder).phi;
  } catch (const Error&) {
    return CSeries::identity(1);  // fall back to the bare linear seed
  }
}

// Horner evaluation of the seed polynomial at a point / on an order-m jet.
Cplx seed_apply(const CSeries& seed, const Cplx& u) {
  Cplx acc = seed.coeff(seed.order()) * u;
  for (int k = seed.order() - 1; k >= 1; --k) acc = (acc + seed.coeff(k)) * u;
  return acc;
}

CSeries seed_apply(const CSeries& seed, const CSeries& u) {
  CSeries acc = seed.coeff(seed.order()) * u;
  for (int k = seed.order() - 1; k >= 1; --k)
    acc = (acc + CSeries::monomial(0, seed.coeff(k), u.order())) * u;
  return acc;
}

// Smallest starting n per the geometric-convergence heuristic: bring the
// probe within 1% of the local quadratic scale 1/|c2| of f^p at xi.
int starting_index(const EvaluableMap& f, const FixedPointData& fp, const Cplx& z) {
  double scale = 1.0;
  CSeries j = f.jet(fp.xi, 2);
  for (int i = 1; i < fp.period; ++i) j = f.apply_jet(j);
  double c2 = std::abs(j.coeff(2));
  if (c2 > 0.0) scale = 1.0 / c2;
  double target = 0.01 * scale;
  double mag = std::abs(z);
  double lam = std::abs(fp.lambda);
  int n = 0;
  while (mag > target && n < kMaxLimitIndex) {
    mag /= lam;
    ++n;
  }
  return n;
}

}  // namespace

FixedPointData find_repelling_fixed_point(const EvaluableMap& f, const Cplx& seed,
                                          int period) {
  if (period < 1) throw NoFixedPointError("period must be >= 1");
  Cplx z = seed;
  bool ok = false;
  double res = 0.0;
  for (int it = 0; it < 100; ++it) {
    auto [v, d] = orbit_with_derivative(f, z, period);
    Cplx r = v - z;
    res = std::abs(r);
    if (res < 1e-12 * (1.0 + std::abs(z))) {
      ok = true;
      break;
    }
    Cplx denom = d - Cplx(1.0, 0.0);
    if (std::abs(denom) == 0.0)
      throw NoFixedPointError("Newton step degenerate (multiplier 1)");
    z -= r / denom;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw NoFixedPointError("Newton iteration diverged");
  }
  // Polish to the round-off floor: the residual at the stopping tolerance is
  // amplified by lambda^n downstream, so every extra digit here is cheap
  // accuracy there.
  for (int it = 0; ok && res > 0.0 && it < 5; ++it) {
    auto [v, d] = orbit_with_derivative(f, z, period);
    Cplx cand = z - (v - z) / (d - Cplx(1.0, 0.0));
    auto [cv, cd] = orbit_with_derivative(f, cand, period);
    double r = std::abs(cv - cand);
    if (r >= res) break;
    z = cand;
    res = r;
  }
  auto [v, d] = orbit_with_derivative(f, z, period);
  if (!ok && std::abs(v - z) >= 1e-12 * (1.0 + std::abs(z)))
    throw NoFixedPointError("no fixed point found after 100 Newton steps");
  if (std::abs(d) <= 1.0 + 1e-9)
    throw NotRepellingError("multiplier |lambda| = " + std::to_string(std::abs(d)) +
                            " is not > 1");
  return FixedPointData{z, period, d};
}

EvalReport poincare_eval(const EvaluableMap& f, const FixedPointData& fp,
                         const Cplx& z, double tol) {
  if (tol <= 0.0) throw EvalError("tolerance must be positive");
  if (z == Cplx(0.0, 0.0)) return EvalReport{fp.xi, 0, 0.0, true};
  int n = starting_index(f, fp, z);
  CSeries seed = local_seed(f, fp);
  Cplx prev(0.0, 0.0);
  bool have_prev = false;
  EvalReport rep, best;
  bool have_best = false;
  for (; n <= kMaxLimitIndex; ++n) {
    Cplx start = fp.xi + seed_apply(seed, std::pow(fp.lambda, -n) * z);
    Cplx val = orbit(f, start, n * fp.period, n);
    rep.value = val;
    rep.n_used = n;
    if (have_prev) {
      rep.error_estimate = std::abs(val - prev);
      if (rep.error_estimate < tol) {
        rep.converged = true;
        return rep;
      }
      if (!have_best || rep.error_estimate < best.error_estimate) {
        best = rep;
        have_best = true;
      } else if (rep.error_estimate > 8.0 * best.error_estimate) {
        break;  // round-off amplification regime; refining further only degrades
      }
    }
    prev = val;
    have_prev = true;
  }
  EvalReport out = have_best ? best : rep;
  out.converged = false;
  return out;
}

EvalReport poincare_derivative(const EvaluableMap& f, const FixedPointData& fp,
                               const Cplx& z, int m, double tol) {
  if (m < 1) throw EvalError("derivative order must be >= 1");
  if (tol <= 0.0) throw EvalError("tolerance must be positive");
  int n = starting_index(f, fp, z);
  CSeries seed = local_seed(f, fp);
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  Cplx prev(0.0, 0.0);
  bool have_prev = false;
  EvalReport rep, best;
  bool have_best = false;
  for (; n <= kMaxLimitIndex; ++n) {
    // jet in w of f^{np}(xi + seed(lambda^{-n}(z + w))); the lambda^{-mn}
    // rescale of the classical formula is carried by the inner jet.
    Cplx scale = std::pow(fp.lambda, -n);
    std::vector<Cplx> uc(static_cast<std::size_t>(m) + 1, Cplx(0.0, 0.0));
    uc[0] = scale * z;
    uc[1] = scale;
    CSeries t = seed_apply(seed, CSeries(m, std::move(uc)));
    t = t + CSeries::monomial(0, fp.xi, m);
    for (int i = 0; i < n * fp.period; ++i) {
      t = f.apply_jet(t);
      if (std::abs(t.coeff(0)) > kEscapeCap)
        throw DivergenceError("jet orbit escaped", n);
    }
    Cplx val = fact * t.coeff(m);
    rep.value = val;
    rep.n_used = n;
    if (have_prev) {
      rep.error_estimate = std::abs(val - prev);
      if (rep.error_estimate < tol) {
        rep.converged = true;
        return rep;
      }
      if (!have_best || rep.error_estimate < best.error_estimate) {
        best = rep;
        have_best = true;
      } else if (rep.error_estimate > 8.0 * best.error_estimate) {
        break;
      }
    }
    prev = val;
    have_prev = true;
  }
  EvalReport out = have_best ? best : rep;
  out.converged = false;
  return out;
}

double check_schroeder_numeric(const EvaluableMap& f, const FixedPointData& fp,
                               const std::vector<Cplx>& samples, double tol) {
  double worst = 0.0;
  for (const Cplx& z : samples) {
    Cplx lhs = poincare_eval(f, fp, fp.lambda * z, tol).value;
    Cplx rhs = orbit(f, poincare_eval(f, fp, z, tol).value, fp.period, 0);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace itlog
