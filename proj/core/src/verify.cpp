#include "itlog/verify.hpp"

#include "itlog/expr.hpp"

namespace itlog {

RSeries unit_pow(const RSeries& s, int e) {
  if (e >= 0) return pow(s, e);
  return pow(RSeries::one(s.order()) / s, -e);
}

bool chain_a_oracle(const ParabolicGerm& f, int j_max, int order) {
  const RSeries& fs = f.series();
  const int n_phi = order + j_max;
  if (fs.order() < n_phi + f.p() - 1) throw OrderDeficitError("germ truncated too shallowly");
  const RSeries phi = itlog_solve(f, n_phi).phi;
  const RSeries fprime = derive(fs);
  ChainFamilyA fam = chain_A(j_max);

  std::vector<RSeries> dphi{phi};
  for (int k = 1; k <= j_max; ++k) dphi.push_back(derive(dphi.back()));

  for (int j = 0; j <= j_max; ++j) {
    RSeries lhs = compose(dphi[static_cast<std::size_t>(j)], fs) *
                  unit_pow(fprime, 2 * j - 1);
    RSeries rhs(lhs.order());
    for (int i = 0; i <= j; ++i) {
      const IntDiffPoly& aij = fam.at(i, j);
      if (aij.is_zero()) continue;
      rhs = rhs + evaluate(aij, fprime) * dphi[static_cast<std::size_t>(i)];
    }
    if (lhs.truncate(order) != rhs.truncate(order)) return false;
  }
  return true;
}

bool chain_b_oracle(const ParabolicGerm& f, const MultiIndex& j, int order) {
  const RSeries& fs = f.series();
  const int top = std::max(j.top(), 0);
  const int n_phi = order + top + j.wt();
  if (fs.order() < n_phi + f.p() - 1) throw OrderDeficitError("germ truncated too shallowly");
  const RSeries phi = itlog_solve(f, n_phi).phi;
  const RSeries fprime = derive(fs);

  std::vector<RSeries> dphi{phi};
  for (int k = 1; k <= top; ++k) dphi.push_back(derive(dphi.back()));

  // lhs = prod_k (phi^{(k)} o f)^{j_k} * (f')^{2||j||-|j|}
  RSeries lhs = RSeries::one(fs.order());
  for (int k = 0; k <= top; ++k)
    for (int rep = 0; rep < j.entry(k); ++rep)
      lhs = lhs * compose(dphi[static_cast<std::size_t>(k)], fs);
  lhs = lhs * unit_pow(fprime, 2 * j.wt() - j.abs());

  auto b_family = chain_B(j);
  RSeries rhs(order);
  for (const auto& [i, bij] : b_family) {
    RSeries term = evaluate(bij, fprime);
    for (int k = 0; k <= i.top(); ++k)
      for (int rep = 0; rep < i.entry(k); ++rep)
        term = term * dphi[static_cast<std::size_t>(k)];
    rhs = rhs + term;
  }
  return lhs.truncate(order) == rhs.truncate(order);
}

namespace {

ParabolicGerm germ_from(const std::string& expr, int order) {
  return ParabolicGerm(eval_series(parse_expression(expr), order));
}

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
  out.push_back(CheckResult{name, pass, detail});
}

std::vector<CheckResult> suite_julia() {
  std::vector<CheckResult> out;
  for (const char* expr : {"z + z^2", "expm1", "zexp"}) {
    ParabolicGerm f = germ_from(expr, 40);
    ItlogResult r = itlog_solve(f, 30);
    RSeries res = julia_residual(f, r.phi);
    check(out, std::string("julia residual of itlog(") + expr + ") vanishes",
          res.truncate(30).is_zero());
  }
  // moebius family: itlog(z/(1-cz)) = c z^2 exactly
  ParabolicGerm f = germ_from("z/(1 - (3/5)*z)", 41);
  RSeries phi = itlog_solve(f, 40).phi;
  bool exact = phi.coeff(2) == make_rat(3, 5);
  for (int k = 3; k <= 40; ++k) exact = exact && phi.coeff(k) == 0;
  check(out, "itlog(z/(1-(3/5)z)) = (3/5) z^2", exact);
  return out;
}

std::vector<CheckResult> suite_chain_a() {
  std::vector<CheckResult> out;
  ChainFamilyA fam = chain_A(6);
  bool structure = true;
  for (int j = 0; j <= 6; ++j) {
    for (int i = 0; i <= j; ++i) {
      const IntDiffPoly& aij = fam.at(i, j);
      if (aij.is_zero()) continue;
      structure = structure && aij.degree() == j && aij.homogeneous();
      structure = structure && aij.weight() == j - i && aij.isobaric();
    }
    IntDiffPoly xj = IntDiffPoly::monomial(MultiIndex{j}, Int(1));
    structure = structure && fam.at(j, j) == xj;
    if (j >= 1) {
      std::vector<int> top(static_cast<std::size_t>(j) + 1, 0);
      top[0] = j - 1;
      top[static_cast<std::size_t>(j)] = 1;
      structure = structure && fam.at(0, j).rank() == MultiIndex(top);
    }
  }
  check(out, "A_ij structure (degree, weight, A_jj, top rank) for j <= 6", structure);
  check(out, "A substitution oracle, f = z + z^2, order 25",
        chain_a_oracle(germ_from("z + z^2", 40), 6, 25));
  check(out, "A substitution oracle, f = expm1, order 25",
        chain_a_oracle(germ_from("expm1", 40), 5, 25));
  return out;
}

std::vector<CheckResult> suite_chain_b() {
  std::vector<CheckResult> out;
  bool structure = true;
  bool oracle = true;
  ParabolicGerm f = germ_from("z + z^2", 45);
  // all j with ||j|| <= 4 and |j| <= 4 keeps the CLI suite quick
  for (int j0 = 0; j0 <= 2; ++j0)
    for (int j1 = 0; j1 <= 4; ++j1)
      for (int j2 = 0; j2 <= 2; ++j2) {
        MultiIndex j({j0, j1, j2});
        if (j.wt() > 4 || j.abs() > 4 || j.is_zero()) continue;
        auto fam = chain_B(j);
        structure = structure && fam.at(j) == IntDiffPoly::monomial(
                                                  MultiIndex{j.wt()}, Int(1));
        MultiIndex low({j.abs()});
        const IntDiffPoly& blow = fam.at(low);
        if (j.wt() > 0)
          structure = structure && blow.homogeneous() && blow.degree() == j.wt() &&
                      blow.isobaric() && blow.weight() == j.wt();
        oracle = oracle && chain_b_oracle(f, j, 20);
      }
  check(out, "B_jj = X^||j|| and B_(|j|),j structure", structure);
  check(out, "B substitution oracle, f = z + z^2, order 20", oracle);
  return out;
}

std::vector<CheckResult> suite_flow() {
  std::vector<CheckResult> out;
  ParabolicGerm q = germ_from("z + z^2", 31);
  RSeries half = flow(q, make_rat(1, 2), 30);
  RSeries glued = compose(half, half);
  check(out, "flow(z+z^2, 1/2) o flow(z+z^2, 1/2) = z + z^2 to order 30",
        glued == q.series().truncate(30));
  check(out, "flow(f, 1) = f to order 30", flow(q, Rat(1), 30) == q.series().truncate(30));
  check(out, "flow(f, 0) = z", flow(q, Rat(0), 30) == RSeries::identity(30));

  ParabolicGerm m = germ_from("z/(1 - z)", 31);
  RSeries ft = flow(m, make_rat(2, 3), 30);
  RSeries expect = eval_series(parse_expression("z/(1 - (2/3)*z)"), 30);
  check(out, "flow(z/(1-z), 2/3) = z/(1-(2/3)z) to order 30", ft == expect);
  return out;
}

std::vector<CheckResult> suite_scale() {
  std::vector<CheckResult> out;
  for (const char* expr : {"z + z^2", "expm1"}) {
    for (int n : {2, 3}) {
      ParabolicGerm f = germ_from(expr, 32);
      check(out,
            std::string("itlog((") + expr + ")^o" + std::to_string(n) + ") = " +
                std::to_string(n) + " itlog(" + expr + ") to order 30",
            scale_check(f, n, 30));
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& suite) {
  if (suite == "julia") return suite_julia();
  if (suite == "chainA") return suite_chain_a();
  if (suite == "chainB") return suite_chain_b();
  if (suite == "flow") return suite_flow();
  if (suite == "scale") return suite_scale();
  throw EvalError("unknown verify suite '" + suite + "'");
}

}  // namespace itlog
