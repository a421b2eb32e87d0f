// Acceptance gate: one self-contained check per criterion, one PASS/FAIL
// line each. Run with a criterion number (1..12) or with no argument for
// the full gate. All tolerances and time budgets are pinned here.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "itlog/diffpoly.hpp"
#include "itlog/expr.hpp"
#include "itlog/funceq.hpp"
#include "itlog/guess.hpp"
#include "itlog/poincare.hpp"
#include "itlog/seriesio.hpp"
#include "itlog/verify.hpp"

using namespace itlog;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  std::string label;
  double time_budget_s;
  std::function<bool(std::string&)> check;
};

ParabolicGerm germ(const char* text, int order) {
  return eval_germ_for_itlog(parse_expression(text), order, {});
}

bool c1(std::string& detail) {
  RSeries phi = itlog_solve(germ("expm1", 7), 7).phi;
  const std::pair<int, Rat> pinned[] = {
      {2, make_rat(1, 2)},    {3, make_rat(-1, 12)}, {4, make_rat(1, 48)},
      {5, make_rat(-1, 180)}, {6, make_rat(11, 8640)}, {7, make_rat(-1, 6720)}};
  for (auto& [k, v] : pinned)
    if (phi.coeff(k) != v) {
      detail = "coefficient " + std::to_string(k) + " mismatch";
      return false;
    }
  return true;
}

bool c2(std::string& detail) {
  RSeries phi = itlog_solve(germ("expm1", 13), 13).phi;
  const char* pinned[] = {"1",    "-1/2",  "1/2",    "-2/3",     "11/12", "-3/4",
                          "-11/6", "29/4", "493/12", "-2711/6", "-12406/15",
                          "2636317/60"};
  Rat fact(1);
  for (int k = 2; k <= 13; ++k) {
    fact *= Rat(k);
    if (phi.coeff(k) * fact != rat_from_string(pinned[k - 2])) {
      detail = "k! * coefficient " + std::to_string(k) + " mismatch";
      return false;
    }
  }
  return true;
}

bool c3(std::string& detail) {
  std::vector<int> zeros = nonvanishing_scan(germ("exp(z) - 1", 302), 300);
  if (!zeros.empty()) {
    detail = "vanishing coefficient at k = " + std::to_string(zeros.front());
    return false;
  }
  detail = "no vanishing coefficient for 3 <= k <= 300";
  return true;
}

bool c4(std::string& detail) {
  for (const char* c : {"1", "-2", "3/5"}) {
    ParamMap p{{"c", rat_from_string(c)}};
    ParabolicGerm f = eval_germ_for_itlog(parse_expression("moebius(c)"), 60, p);
    RSeries phi = itlog_solve(f, 60).phi;
    if (phi != RSeries::monomial(2, rat_from_string(c), 60)) {
      detail = std::string("c = ") + c + " is not exactly c z^2";
      return false;
    }
  }
  return true;
}

bool c5(std::string& detail) {
  for (const char* text : {"z + z^2", "expm1", "zexp", "sin(z)"}) {
    ParabolicGerm f = germ(text, 44);
    for (int n : {2, 3})
      if (!scale_check(f, n, 40)) {
        detail = std::string(text) + ", n = " + std::to_string(n);
        return false;
      }
  }
  return true;
}

bool c6(std::string& detail) {
  ChainFamilyA A = chain_A(6);
  IntDiffPoly X = IntDiffPoly::indeterminate();
  for (int j = 0; j <= 6; ++j) {
    IntDiffPoly xj = IntDiffPoly::constant(1);
    for (int t = 0; t < j; ++t) xj = xj * X;
    if (A.at(j, j) != xj) {
      detail = "diagonal at j = " + std::to_string(j);
      return false;
    }
    for (int i = 0; i <= j; ++i) {
      const IntDiffPoly& a = A.at(i, j);
      if (a.terms().empty()) continue;
      if (!a.homogeneous() || a.degree() != j || !a.isobaric() ||
          a.weight() != j - i) {
        detail = "structure at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
    }
    if (j >= 1) {
      std::vector<int> e(static_cast<std::size_t>(j) + 1, 0);
      e[0] = j - 1;
      e[static_cast<std::size_t>(j)] = 1;
      if (A.at(0, j).rank() != MultiIndex(e)) {
        detail = "top monomial of the first row at j = " + std::to_string(j);
        return false;
      }
    }
  }
  if (!chain_a_oracle(germ("z + z^2", 40), 6, 25)) {
    detail = "substitution oracle";
    return false;
  }
  return true;
}

// Multi-indices supported on positions >= 1 with 1 <= weight <= 5.
std::vector<MultiIndex> small_weights() {
  std::vector<MultiIndex> out;
  std::vector<int> cur(6, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == 6) {
      MultiIndex j(cur);
      if (!j.is_zero()) out.push_back(j);
      return;
    }
    for (int e = 0; pos * e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      rec(pos + 1, left - pos * e);
      if (pos == 0) break;  // keep position 0 empty
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, 5);
  return out;
}

bool c7(std::string& detail) {
  ParabolicGerm f = germ("z + z^2", 40);
  IntDiffPoly X = IntDiffPoly::indeterminate();
  for (const MultiIndex& j : small_weights()) {
    auto B = chain_B(j);
    IntDiffPoly xw = IntDiffPoly::constant(1);
    for (int t = 0; t < j.wt(); ++t) xw = xw * X;
    if (B.at(j) != xw) {
      detail = "diagonal at j = " + j.to_string();
      return false;
    }
    const IntDiffPoly& top = B.at(MultiIndex(std::vector<int>{j.abs()}));
    if (!top.homogeneous() || top.degree() != j.wt() || !top.isobaric() ||
        top.weight() != j.wt()) {
      detail = "first-row structure at j = " + j.to_string();
      return false;
    }
    if (!chain_b_oracle(f, j, 25)) {
      detail = "substitution oracle at j = " + j.to_string();
      return false;
    }
  }
  return true;
}

bool c8(std::string& detail) {
  struct Control {
    const char* what;
    RSeries y;
    bool ade;
    const char* expect;
  };
  RSeries tanh_series = eval_series(
      parse_expression("(exp(2*z) - 1)/(exp(2*z) + 1)"), 130, {});
  std::vector<Control> controls;
  controls.push_back({"exp", eval_series(parse_expression("exp(z)"), 40, {}),
                      false, "-Y + Y'"});
  controls.push_back({"1/(1-z)", eval_series(parse_expression("1/(1-z)"), 40, {}),
                      false, "Y + (-1 + z) Y'"});
  controls.push_back({"tanh", tanh_series, true, "-1 + Y^2 + Y'"});
  controls.push_back({"z^2", eval_series(parse_expression("z^2"), 40, {}),
                      false, "-2 Y + z Y'"});
  for (const Control& c : controls) {
    auto start = Clock::now();
    GuessOutcome g = c.ade ? guess_ade(c.y, SearchBounds{})
                           : guess_linear_ode(c.y, SearchBounds{});
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!g.found() || diffpoly_to_string(*g.candidate, "Y") != c.expect) {
      detail = std::string(c.what) + ": wrong or missing candidate";
      return false;
    }
    if (secs >= 5.0) {
      detail = std::string(c.what) + ": took " + std::to_string(secs) + " s";
      return false;
    }
  }
  return true;
}

bool c9(std::string& detail) {
  SearchBounds ade_bounds;  // r=2 d=3 e=4 margin=20
  SearchBounds ode_bounds;
  ode_bounds.max_order = 4;
  ode_bounds.max_z_degree = 6;
  for (const char* text : {"z + z^2", "expm1"}) {
    ParabolicGerm f = germ(text, 122);
    RSeries phi = itlog_solve(f, 120).phi;
    for (bool ade : {true, false}) {
      auto start = Clock::now();
      GuessOutcome g = ade ? guess_ade(phi, ade_bounds)
                           : guess_linear_ode(phi, ode_bounds);
      double secs = std::chrono::duration<double>(Clock::now() - start).count();
      if (g.found()) {
        detail = std::string(text) + (ade ? " ade" : " ode") +
                 ": unexpected candidate " + diffpoly_to_string(*g.candidate, "Y");
        return false;
      }
      if (g.caveat.empty()) {
        detail = "missing caveat";
        return false;
      }
      if (secs >= 300.0) {
        detail = std::string(text) + ": took " + std::to_string(secs) + " s";
        return false;
      }
    }
  }
  detail = "none_within_bounds with caveat, both germs, both modes";
  return true;
}

bool c10(std::string& detail) {
  {
    EvaluableMap f(parse_expression("2*z/(1+z^2)"), {});
    auto start = Clock::now();
    FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.1, 0.0), 1);
    std::vector<Cplx> xs;
    for (int k = 1; k <= 10; ++k) {
      Cplx x(0.1 * k, 0.0);
      xs.push_back(x);
      Cplx v = poincare_eval(f, fp, x, 1e-11).value;
      if (std::abs(v - Cplx(std::tanh(0.1 * k), 0.0)) >= 1e-9) {
        detail = "tanh mismatch at x = " + std::to_string(0.1 * k);
        return false;
      }
    }
    if (check_schroeder_numeric(f, fp, xs, 1e-11) >= 1e-8) {
      detail = "composition residual too large";
      return false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 1.0) {
      detail = "tanh batch took " + std::to_string(secs) + " s";
      return false;
    }
  }
  {
    EvaluableMap f(parse_expression("z^2"), {});
    auto start = Clock::now();
    FixedPointData fp = find_repelling_fixed_point(f, Cplx(0.9, 0.0), 1);
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 6.283185);
    for (int k = 0; k < 20; ++k) {
      double r = radius(rng), a = angle(rng);
      Cplx z(r * std::cos(a), r * std::sin(a));
      Cplx v = poincare_eval(f, fp, z, 1e-11).value;
      if (std::abs(v - std::exp(z)) >= 1e-9) {
        detail = "exp mismatch at sample " + std::to_string(k);
        return false;
      }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs >= 1.0) {
      detail = "exp batch took " + std::to_string(secs) + " s";
      return false;
    }
  }
  return true;
}

bool c11(std::string& detail) {
  ParabolicGerm f = germ("z + z^2", 31);
  RSeries half = flow(f, make_rat(1, 2), 30);
  if (compose(half, half) != f.series().truncate(30)) {
    detail = "half-iterate composition";
    return false;
  }
  ParabolicGerm m = germ("z/(1 - z)", 31);
  RSeries ft = flow(m, make_rat(2, 3), 30);
  if (ft != eval_series(parse_expression("z/(1 - (2/3)*z)"), 30, {})) {
    detail = "moebius fractional iterate";
    return false;
  }
  return true;
}

bool c12(std::string& detail) {
  RSeries f = Rat(2) * RSeries::identity(20) + RSeries::monomial(2, Rat(1), 20);
  SchroederResult<Rat> r = schroeder_solve(f, 20);
  Rat fact(1);
  for (int k = 1; k <= 20; ++k) {
    fact *= Rat(k);
    if (r.phi.coeff(k) != Rat(1) / fact) {
      detail = "coefficient " + std::to_string(k);
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "itlog of e^z - 1 matches the pinned expansion to order 7", 1.0, c1},
      {2, "k! scaled itlog coefficients match the pinned sequence k = 2..13", 5.0, c2},
      {3, "no vanishing itlog coefficient of e^z - 1 for 3 <= k <= 300", 600.0, c3},
      {4, "itlog of z/(1 - cz) is exactly c z^2 to order 60", 10.0, c4},
      {5, "itlog of the n-th iterate is n times itlog, order 40", 30.0, c5},
      {6, "first chain family: structure and substitution oracle", 60.0, c6},
      {7, "second chain family: structure and substitution oracle", 120.0, c7},
      {8, "guesser positive controls recover the pinned equations", 20.0, c8},
      {9, "guesser negative controls return none_within_bounds", 600.0, c9},
      {10, "numeric conjugacy reproduces tanh and exp to 1e-9", 2.0, c10},
      {11, "formal flow: half-iterate and moebius closed form", 10.0, c11},
      {12, "exact linearization of 2z + z^2 has coefficients 1/k!", 5.0, c12},
  };

  int only = (argc > 1) ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const Criterion& c : all) {
    if (only && c.id != only) continue;
    std::string detail;
    auto start = Clock::now();
    bool pass = false;
    try {
      pass = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (pass && secs >= c.time_budget_s) {
      pass = false;
      detail = "over time budget: " + std::to_string(secs) + " s";
    }
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " - "
         << c.label;
    if (!detail.empty()) line << " (" << detail << ")";
    line << " [" << static_cast<long>(secs * 1000) << " ms]";
    std::cout << line.str() << "\n";
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
