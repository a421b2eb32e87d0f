#ifndef ITLOG_FUNCEQ_HPP
#define ITLOG_FUNCEQ_HPP

#include <cmath>

#include "itlog/series.hpp"

namespace itlog {

// The iterative logarithm phi = itlog(f): unique solution of Julia's
// equation phi(f(z)) = f'(z) phi(z) with leading term f_p z^p.
struct ItlogResult {
  RSeries phi;
  int source_p;
  int verified_order;
};

// Solving to order N consumes coefficients of f up to index N+p-1, so the
// germ must be truncated at least that deep.
ItlogResult itlog_solve(const ParabolicGerm& f, int N);

// compose(phi, f) - f' * phi at the guaranteed order.
RSeries julia_residual(const ParabolicGerm& f, const RSeries& phi);

// Checks itlog(f^n) == n * itlog(f) exactly to order N.
bool scale_check(const ParabolicGerm& f, int n, int N);

// Formal flow of f: exp(t D) applied to z, where D(g) = itlog(f) g'.
// flow(f, 1) == f and flow(f, s) o flow(f, t) == flow(f, s+t) mod z^{N+1}.
RSeries flow(const ParabolicGerm& f, const Rat& t, int N);

template <class K>
struct SchroederResult {
  K lambda;
  Series<K> phi;  // phi(0) = 0, phi'(0) = 1
};

namespace detail {

inline void check_schroeder_pivot(const Rat& lambda, const Rat& pivot, int k) {
  if (lambda == 0) throw BoettcherCaseError();
  if (pivot == 0) throw ResonantMultiplierError(k);
}

inline void check_schroeder_pivot(const Cplx& lambda, const Cplx& pivot, int k) {
  if (std::abs(lambda) == 0.0) throw BoettcherCaseError();
  if (std::abs(pivot) < 1e-12) throw ResonantMultiplierError(k);
}

}  // namespace detail

// Solves phi(lambda z) = f(phi(z)) with phi(0) = 0, phi'(0) = 1,
// lambda = f'(0). Coefficient phi_k has pivot lambda^k - lambda.
template <class K>
SchroederResult<K> schroeder_solve(const Series<K>& f, int N) {
  if (!coeff_traits<K>::is_zero(f.coeff(0)))
    throw CompositionError("Schroeder's equation requires f(0) = 0");
  if (f.order() < 1 || f.order() < N)
    throw OrderDeficitError("f must be truncated at least to the requested order");
  K lambda = f.coeff(1);
  std::vector<K> lpow(static_cast<std::size_t>(N) + 1, K(1));
  for (int k = 1; k <= N; ++k) lpow[k] = lpow[k - 1] * lambda;
  for (int k = 2; k <= N; ++k)
    detail::check_schroeder_pivot(lambda, K(lpow[k] - lambda), k);

  std::vector<K> phi(static_cast<std::size_t>(N) + 1, K(0));
  phi[1] = K(1);
  for (int k = 2; k <= N; ++k) {
    // [z^k] f(phi) with phi_k still 0; adding phi_k contributes lambda*phi_k.
    Series<K> g = compose(f.truncate(N), Series<K>(N, phi));
    phi[k] = g.coeff(k) / (lpow[k] - lambda);
  }
  return SchroederResult<K>{lambda, Series<K>(N, std::move(phi))};
}

}  // namespace itlog

#endif
