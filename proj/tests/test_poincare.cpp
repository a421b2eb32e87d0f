#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "itlog/expr.hpp"
#include "itlog/funceq.hpp"
#include "itlog/poincare.hpp"

using namespace itlog;

namespace {

EvaluableMap map_of(const char* text) {
  return EvaluableMap(parse_expression(text), {});
}

}  // namespace

TEST_CASE("fixed point finder: basic cases") {
  FixedPointData a = find_repelling_fixed_point(map_of("z^2"), Cplx(0.9, 0.0), 1);
  CHECK(std::abs(a.xi - Cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(a.lambda - Cplx(2.0, 0.0)) < 1e-12);

  FixedPointData b =
      find_repelling_fixed_point(map_of("2*z/(1+z^2)"), Cplx(0.1, 0.0), 1);
  CHECK(std::abs(b.xi) < 1e-12);
  CHECK(std::abs(b.lambda - Cplx(2.0, 0.0)) < 1e-12);
}

TEST_CASE("fixed point finder rejects non-repelling points") {
  // 0 is attracting for z/2 + z^2 near 0
  CHECK_THROWS_AS(
      find_repelling_fixed_point(map_of("z/2 + z^2"), Cplx(0.01, 0.0), 1),
      NotRepellingError);
  // parabolic: multiplier exactly 1
  CHECK_THROWS_AS(find_repelling_fixed_point(map_of("z + z^2"), Cplx(0.0, 0.0), 1),
                  NotRepellingError);
  // superattracting period-2 cycle of the basilica map
  CHECK_THROWS_AS(
      find_repelling_fixed_point(map_of("z^2 - 1"), Cplx(0.05, 0.0), 2),
      NotRepellingError);
}

TEST_CASE("period-2 cycle of z^2 at the primitive cube roots of unity") {
  // the cycle {w, w^2}, w = e^{2 pi i/3}, has multiplier 2w * 2w^2 = 4
  FixedPointData fp =
      find_repelling_fixed_point(map_of("z^2"), Cplx(-0.45, 0.83), 2);
  CHECK(std::abs(fp.xi - Cplx(-0.5, std::sqrt(3.0) / 2.0)) < 1e-10);
  CHECK(std::abs(fp.lambda - Cplx(4.0, 0.0)) < 1e-10);
}

TEST_CASE("limit evaluation reproduces tanh") {
  EvaluableMap f = map_of("2*z/(1+z^2)");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.1, 0.0), 1);
  for (double x : {0.1, 0.5, 1.0}) {
    EvalReport r = poincare_eval(f, fp, Cplx(x, 0.0), 1e-10);
    CHECK(r.converged);
    CHECK(std::abs(r.value - Cplx(std::tanh(x), 0.0)) < 1e-9);
  }
  EvalReport at0 = poincare_eval(f, fp, Cplx(0.0, 0.0), 1e-10);
  CHECK(at0.value == fp.xi);
  CHECK(at0.n_used == 0);
}

TEST_CASE("limit evaluation reproduces exp at the fixed point 1 of z^2") {
  EvaluableMap f = map_of("z^2");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.9, 0.0), 1);
  EvalReport r = poincare_eval(f, fp, Cplx(std::log(2.0), 0.0), 1e-10);
  CHECK(std::abs(r.value - Cplx(2.0, 0.0)) < 1e-9);
  EvalReport i = poincare_eval(f, fp, Cplx(0.0, 1.0), 1e-10);
  CHECK(std::abs(i.value - std::exp(Cplx(0.0, 1.0))) < 1e-9);
}

TEST_CASE("monotone refinement: halving tol moves within the old tol") {
  EvaluableMap f = map_of("2*z/(1+z^2)");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.1, 0.0), 1);
  for (double x : {0.3, 0.7}) {
    EvalReport coarse = poincare_eval(f, fp, Cplx(x, 0.0), 1e-6);
    EvalReport fine = poincare_eval(f, fp, Cplx(x, 0.0), 5e-7);
    CHECK(coarse.converged);
    CHECK(fine.converged);
    CHECK(std::abs(coarse.value - fine.value) <= 1e-6);
  }
}

TEST_CASE("derivatives via jet propagation") {
  EvaluableMap f = map_of("2*z/(1+z^2)");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.1, 0.0), 1);
  EvalReport d = poincare_derivative(f, fp, Cplx(0.0, 0.0), 1, 1e-10);
  CHECK(std::abs(d.value - Cplx(1.0, 0.0)) < 1e-9);  // psi'(0) = 1
  double x = 0.4;
  EvalReport dx = poincare_derivative(f, fp, Cplx(x, 0.0), 1, 1e-10);
  double sech2 = 1.0 / (std::cosh(x) * std::cosh(x));
  CHECK(std::abs(dx.value - Cplx(sech2, 0.0)) < 1e-8);

  EvaluableMap g = map_of("z^2");
  FixedPointData gp = find_repelling_fixed_point(g, Cplx(0.9, 0.0), 1);
  EvalReport d2 = poincare_derivative(g, gp, Cplx(0.0, 0.0), 2, 1e-10);
  CHECK(std::abs(d2.value - Cplx(1.0, 0.0)) < 1e-8);  // psi = e^z
}

TEST_CASE("jet-derivative consistency with finite differences") {
  EvaluableMap f = map_of("z^2 + z/4");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.8, 0.0), 1);
  Cplx z(0.2, 0.1);
  double h = 1e-5;
  Cplx up = poincare_eval(f, fp, z + Cplx(h, 0.0), 1e-12).value;
  Cplx dn = poincare_eval(f, fp, z - Cplx(h, 0.0), 1e-12).value;
  Cplx fd = (up - dn) / Cplx(2.0 * h, 0.0);
  Cplx jet = poincare_derivative(f, fp, z, 1, 1e-12).value;
  CHECK(std::abs(fd - jet) < 1e-7);
}

TEST_CASE("schroeder residual over a sample batch") {
  EvaluableMap f = map_of("2*z/(1+z^2)");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.1, 0.0), 1);
  std::vector<Cplx> samples;
  for (int k = 1; k <= 5; ++k) samples.emplace_back(0.08 * k, 0.03 * k);
  CHECK(check_schroeder_numeric(f, fp, samples, 1e-10) < 1e-8);
  CHECK(check_schroeder_numeric(f, fp, {}, 1e-10) == 0.0);
}

TEST_CASE("numeric mode agrees with the exact conjugacy coefficients") {
  // recover psi's Taylor coefficients at 0 by jets and compare with the
  // exact recurrence on the same polynomial map
  RSeries fr = Rat(2) * RSeries::identity(8) + RSeries::monomial(2, Rat(1), 8);
  SchroederResult<Rat> exact = schroeder_solve(fr, 8);
  EvaluableMap f = map_of("2*z + z^2");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.1, 0.0), 1);
  for (int m = 1; m <= 6; ++m) {
    EvalReport d = poincare_derivative(f, fp, Cplx(0.0, 0.0), m, 1e-12);
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    double expect = exact.phi.coeff(m).get_d() * fact;
    CHECK(std::abs(d.value - Cplx(expect, 0.0)) < 1e-6);
  }
}

TEST_CASE("escape guard raises a divergence error") {
  EvaluableMap f = map_of("z^2");
  FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.9, 0.0), 1);
  // forcing an absurd sample: psi = e^z overflows for huge real z
  CHECK_THROWS_AS(poincare_eval(f, fp, Cplx(400.0, 0.0), 1e-10), DivergenceError);
}

TEST_CASE("maps containing log are rejected") {
  CHECK_THROWS_AS(EvaluableMap(parse_expression("log(1+z)"), {}), EvalError);
}
