#ifndef ITLOG_VERIFY_HPP
#define ITLOG_VERIFY_HPP

#include <string>
#include <vector>

#include "itlog/diffpoly.hpp"
#include "itlog/funceq.hpp"

namespace itlog {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

// f' is a unit (f'(0) = 1), so negative exponents divide exactly.
RSeries unit_pow(const RSeries& s, int e);

// Evaluates both sides of phi^{(j)}(f) (f')^{2j-1} = sum_i A_ij(f') phi^{(i)}
// as series for all j <= j_max and compares exactly to `order`.
bool chain_a_oracle(const ParabolicGerm& f, int j_max, int order);

// Same for the multi-index identity with the B family.
bool chain_b_oracle(const ParabolicGerm& f, const MultiIndex& j, int order);

// Named invariant suites behind `verify --suite ...`:
// julia | chainA | chainB | flow | scale.
std::vector<CheckResult> verify_suite(const std::string& suite);

}  // namespace itlog

#endif
