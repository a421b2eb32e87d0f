#ifndef ITLOG_GUESS_HPP
#define ITLOG_GUESS_HPP

#include <string>
#include <optional>
#include <vector>

#include "itlog/diffpoly.hpp"
#include "itlog/funceq.hpp"
#include "itlog/series.hpp"

namespace itlog {

// Ansatz shape for the search: differential monomials Y^i with
// order(i) <= max_order and |i| <= max_total_degree, each multiplied by
// z^a for a <= max_z_degree. margin is the surplus of matched series
// coefficients over the number of unknowns.
struct SearchBounds {
  int max_order = 2;
  int max_total_degree = 3;
  int max_z_degree = 4;
  int margin = 20;
};

inline const char* kGuessCaveat =
    "none_within_bounds is not a transcendence proof; it only reports that no "
    "equation exists within the searched bounds at the verified order";

struct GuessOutcome {
  enum class Verdict { found, none_within_bounds };
  Verdict verdict;
  std::optional<PolyDiffPoly> candidate;  // normalized, integer coefficients
  int verified_to = 0;
  std::string caveat = kGuessCaveat;

  bool found() const { return verdict == Verdict::found; }
};

// Searches for an algebraic differential equation P(z, y, y', ...) = 0
// annihilating the truncated series y within the given bounds. The
// candidate is found by exact integer elimination and re-verified by
// direct substitution, independently of the elimination path.
GuessOutcome guess_ade(const RSeries& y, const SearchBounds& b);

// Same machinery restricted to the monomials Y, Y', ..., Y^{(r)} (|i| = 1).
// With affine = true the pure z^a columns are admitted as well, allowing
// inhomogeneous linear relations.
GuessOutcome guess_linear_ode(const RSeries& y, const SearchBounds& b,
                              bool affine = false);

enum class GfDirection { to_ogf, to_egf };

// Multiplies (to_ogf) or divides (to_egf) coefficient k by k!.
RSeries egf_ogf_transform(const RSeries& y, GfDirection direction);

// Exact itlog to order k_max; returns the indices k in p+1..k_max with
// phi_k = 0.
std::vector<int> nonvanishing_scan(const ParabolicGerm& f, int k_max);

}  // namespace itlog

#endif
