#include "itlog/diffpoly.hpp"

namespace itlog {

// Differentiating phi^{(j)}(f) (f')^{2j-1} = sum_i A_ij(f') phi^{(i)} once
// and multiplying through by f' gives
//   A_{i,j+1} = X (A_ij)' + X A_{i-1,j} - (2j-1) X' A_ij
// with A outside 0 <= i <= j taken as zero. The recurrence is validated by
// the substitution oracle in the test suite.
ChainFamilyA chain_A(int j_max) {
  ChainFamilyA fam;
  fam.upper = j_max;
  fam.a.resize(static_cast<std::size_t>(j_max) + 1);
  fam.a[0] = {IntDiffPoly::constant(1)};
  const IntDiffPoly X = IntDiffPoly::indeterminate();
  const IntDiffPoly Xp = IntDiffPoly::monomial(MultiIndex{0, 1}, Int(1));
  for (int j = 0; j < j_max; ++j) {
    auto& next = fam.a[static_cast<std::size_t>(j) + 1];
    next.assign(static_cast<std::size_t>(j) + 2, IntDiffPoly());
    for (int i = 0; i <= j + 1; ++i) {
      IntDiffPoly acc;
      if (i <= j) {
        const IntDiffPoly& aij = fam.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        acc = X * aij.derivative() - Xp.scaled(Int(2 * j - 1)) * aij;
      }
      if (i >= 1)
        acc = acc + X * fam.a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) - 1];
      next[static_cast<std::size_t>(i)] = acc;
    }
  }
  return fam;
}

std::map<MultiIndex, IntDiffPoly, AntilexLess> chain_B(const MultiIndex& j) {
  // Expand prod_k (sum_{i<=k} A_ik(X) Phi_i)^{j_k} in commuting symbols
  // Phi_0, Phi_1, ... and collect the coefficient of each Phi^i.
  using Expansion = std::map<MultiIndex, IntDiffPoly, AntilexLess>;
  ChainFamilyA fam = chain_A(std::max(j.top(), 0));
  Expansion acc;
  acc.emplace(MultiIndex{}, IntDiffPoly::constant(1));
  for (int k = 0; k <= j.top(); ++k) {
    Expansion factor;
    for (int i = 0; i <= k; ++i) {
      const IntDiffPoly& aik = fam.at(i, k);
      if (!aik.is_zero()) factor.emplace(MultiIndex::unit(i), aik);
    }
    for (int rep = 0; rep < j.entry(k); ++rep) {
      Expansion next;
      for (const auto& [ia, pa] : acc)
        for (const auto& [ib, pb] : factor) {
          MultiIndex key = ia + ib;
          IntDiffPoly prod = pa * pb;
          auto [it, fresh] = next.emplace(key, prod);
          if (!fresh) it->second = it->second + prod;
        }
      acc = std::move(next);
    }
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second.is_zero())
      it = acc.erase(it);
    else
      ++it;
  }
  return acc;
}

}  // namespace itlog
