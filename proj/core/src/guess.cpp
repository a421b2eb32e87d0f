#include "itlog/guess.hpp"

#include <algorithm>

namespace itlog {

namespace {

void enumerate_rec(int pos, int r, int budget, std::vector<int>& cur,
                   std::vector<MultiIndex>& out) {
  if (pos > r) {
    out.push_back(MultiIndex(cur));
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur[static_cast<std::size_t>(pos)] = e;
    enumerate_rec(pos + 1, r, budget - e, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

// All multi-indices with order <= r and |i| <= d, ascending anti-lex.
std::vector<MultiIndex> ade_monomials(int r, int d) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(r) + 1, 0);
  enumerate_rec(0, r, d, cur, out);
  std::sort(out.begin(), out.end(), AntilexLess{});
  return out;
}

std::vector<MultiIndex> linear_monomials(int r, bool affine) {
  std::vector<MultiIndex> out;
  if (affine) out.push_back(MultiIndex{});
  for (int k = 0; k <= r; ++k) out.push_back(MultiIndex::unit(k));
  return out;
}

Int content(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int g(0);
  for (const Int& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (const Int& x : b) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

struct BasisVec {
  std::vector<Int> v;     // reduced column, length = rows
  std::vector<Int> comb;  // combination of original scaled columns
  int pivot;              // index of the first non-zero entry of v
};

struct ColumnKey {
  MultiIndex monomial;
  int z_power;
};

GuessOutcome run_search(const RSeries& y, const SearchBounds& b,
                        const std::vector<MultiIndex>& monomials) {
  const int r = b.max_order;
  const int e = b.max_z_degree;
  const int unknowns = static_cast<int>(monomials.size()) * (e + 1);
  if (b.margin < 1) throw OrderDeficitError("guess margin must be >= 1");
  if (y.order() < unknowns + b.margin)
    throw OrderDeficitError("guess needs order(y) >= " +
                            std::to_string(unknowns + b.margin) + ", got " +
                            std::to_string(y.order()));
  const int rows_top = y.order() - r;  // highest honestly known coefficient row

  // Truncated series of every admissible monomial Y^i.
  std::vector<RSeries> dy;
  dy.push_back(y);
  for (int k = 1; k <= r; ++k) dy.push_back(derive(dy.back()));
  std::vector<std::vector<Rat>> mono_coeffs;
  mono_coeffs.reserve(monomials.size());
  for (const MultiIndex& i : monomials) {
    RSeries s = RSeries::one(rows_top);
    for (int k = 0; k <= i.top(); ++k)
      for (int x = 0; x < i.entry(k); ++x)
        s = s * dy[static_cast<std::size_t>(k)].truncate(rows_top);
    mono_coeffs.push_back(s.coeffs());
  }

  // Columns in candidate-preference order: ascending monomial rank, then
  // ascending z-power. The first column dependent on its predecessors
  // yields the relation with minimal rank, then minimal z-degree.
  std::vector<ColumnKey> keys;
  for (std::size_t mi = 0; mi < monomials.size(); ++mi)
    for (int a = 0; a <= e; ++a) keys.push_back({monomials[mi], a});

  const int nrows = rows_top + 1;
  std::vector<BasisVec> basis;
  for (std::size_t col = 0; col < keys.size(); ++col) {
    const MultiIndex& i = keys[col].monomial;
    const int a = keys[col].z_power;
    std::size_t mi = static_cast<std::size_t>(
        std::find(monomials.begin(), monomials.end(), i) - monomials.begin());

    // Column of z^a * y^i, denominators cleared column-wise.
    Int denlcm(1);
    for (int row = a; row < nrows; ++row) {
      const Rat& q = mono_coeffs[mi][static_cast<std::size_t>(row - a)];
      mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    std::vector<Int> v(static_cast<std::size_t>(nrows), Int(0));
    for (int row = a; row < nrows; ++row) {
      Rat q = mono_coeffs[mi][static_cast<std::size_t>(row - a)] * Rat(denlcm);
      v[static_cast<std::size_t>(row)] = q.get_num();
    }
    std::vector<Int> comb(keys.size(), Int(0));
    comb[col] = denlcm;  // relation coefficients refer to the unscaled columns

    for (const BasisVec& bv : basis) {
      const Int beta = v[static_cast<std::size_t>(bv.pivot)];
      if (beta == 0) continue;
      const Int alpha = bv.v[static_cast<std::size_t>(bv.pivot)];
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = alpha * v[t] - beta * bv.v[t];
      for (std::size_t t = 0; t < comb.size(); ++t)
        comb[t] = alpha * comb[t] - beta * bv.comb[t];
      Int g = content(v, comb);
      if (g > 1) {
        for (Int& x : v) x /= g;
        for (Int& x : comb) x /= g;
      }
    }
    int pivot = -1;
    for (int row = 0; row < nrows; ++row)
      if (v[static_cast<std::size_t>(row)] != 0) {
        pivot = row;
        break;
      }
    if (pivot >= 0) {
      basis.push_back(BasisVec{std::move(v), std::move(comb), pivot});
      continue;
    }

    // Dependency found: assemble and normalize the candidate.
    PolyDiffPoly cand;
    for (std::size_t t = 0; t <= col; ++t) {
      if (comb[t] == 0) continue;
      std::vector<Rat> pc(static_cast<std::size_t>(keys[t].z_power) + 1, Rat(0));
      pc.back() = Rat(comb[t]);
      cand = cand + PolyDiffPoly::monomial(keys[t].monomial, QPoly(std::move(pc)));
    }
    Int g(0);
    for (const auto& [mon, poly] : cand.terms())
      for (const Rat& q : poly.c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num().get_mpz_t());
    const auto& top_poly = cand.terms().rbegin()->second;
    Rat lead = top_poly.c.back();
    Rat scale = (lead > 0 ? Rat(1) : Rat(-1)) / Rat(g);
    PolyDiffPoly normalized;
    for (const auto& [mon, poly] : cand.terms()) {
      std::vector<Rat> pc = poly.c;
      for (Rat& q : pc) q *= scale;
      normalized.add_term(mon, QPoly(std::move(pc)));
    }

    // Soundness re-check by direct substitution.
    RSeries check = evaluate(normalized, y);
    for (int row = 0; row <= std::min(check.order(), rows_top); ++row)
      if (check.coeff(row) != 0)
        throw EvalError("internal error: candidate fails substitution check");

    GuessOutcome out;
    out.verdict = GuessOutcome::Verdict::found;
    out.candidate = std::move(normalized);
    out.verified_to = rows_top;
    return out;
  }

  GuessOutcome out;
  out.verdict = GuessOutcome::Verdict::none_within_bounds;
  out.verified_to = rows_top;
  return out;
}

}  // namespace

GuessOutcome guess_ade(const RSeries& y, const SearchBounds& b) {
  return run_search(y, b, ade_monomials(b.max_order, b.max_total_degree));
}

GuessOutcome guess_linear_ode(const RSeries& y, const SearchBounds& b, bool affine) {
  return run_search(y, b, linear_monomials(b.max_order, affine));
}

RSeries egf_ogf_transform(const RSeries& y, GfDirection direction) {
  std::vector<Rat> c(y.coeffs());
  Rat fact(1);
  for (int k = 0; k <= y.order(); ++k) {
    if (k > 0) fact *= Rat(k);
    if (direction == GfDirection::to_ogf)
      c[static_cast<std::size_t>(k)] *= fact;
    else
      c[static_cast<std::size_t>(k)] /= fact;
  }
  return RSeries(y.order(), std::move(c));
}

std::vector<int> nonvanishing_scan(const ParabolicGerm& f, int k_max) {
  ItlogResult res = itlog_solve(f, k_max);
  std::vector<int> vanishing;
  for (int k = f.p() + 1; k <= k_max; ++k)
    if (res.phi.coeff(k) == 0) vanishing.push_back(k);
  return vanishing;
}

}  // namespace itlog
