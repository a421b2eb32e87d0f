#include "itlog/funceq.hpp"

namespace itlog {

ItlogResult itlog_solve(const ParabolicGerm& f, int N) {
  const int p = f.p();
  if (N < p) throw OrderDeficitError("itlog needs N >= p");
  const int M = N + p - 1;  // highest coefficient index read from f
  if (f.series().order() < M)
    throw OrderDeficitError("itlog to order " + std::to_string(N) +
                            " needs f truncated to order " + std::to_string(M));
  const RSeries fs = f.series().truncate(M);
  const Rat fp = f.leading();

  // Matching the coefficient of z^{m+p-1} in phi(f) - f' phi determines
  // phi_m with pivot (m-p) f_p; unknowns above m cancel between the two
  // sides. S accumulates sum_{k<m} phi_k f^k, F walks the powers of f.
  std::vector<Rat> phi(static_cast<std::size_t>(N) + 1, Rat(0));
  phi[p] = fp;
  RSeries F = pow(fs, p);
  std::vector<Rat> S(static_cast<std::size_t>(M) + 1, Rat(0));
  for (int i = 0; i <= M; ++i) S[i] = fp * F.coeff(i);

  for (int m = p + 1; m <= N; ++m) {
    F = F * fs;  // f^m
    Rat c = S[m + p - 1];
    for (int k = p; k < m; ++k) {
      // [z^{m+p-1}] f' phi restricted to known phi_k: f'_{m+p-1-k} phi_k.
      int j = m + p - k;  // f'_{m+p-1-k} = j * f_j
      c -= phi[k] * Rat(j) * fs.coeff(j);
    }
    phi[m] = -c / (Rat(m - p) * fp);
    if (phi[m] != 0)
      for (int i = m; i <= M; ++i) S[i] += phi[m] * F.coeff(i);
  }
  return ItlogResult{RSeries(N, std::move(phi)), p, N};
}

RSeries julia_residual(const ParabolicGerm& f, const RSeries& phi) {
  return compose(phi, f.series()) - derive(f.series()) * phi;
}

bool scale_check(const ParabolicGerm& f, int n, int N) {
  if (n < 1) throw NonParabolicError("scale_check requires n >= 1");
  ParabolicGerm g = germ_iterate(f, n);
  RSeries lhs = itlog_solve(g, N).phi;
  RSeries rhs = Rat(n) * itlog_solve(f, N).phi;
  return lhs == rhs;
}

RSeries flow(const ParabolicGerm& f, const Rat& t, int N) {
  const int p = f.p();
  if (N < p) throw OrderDeficitError("flow needs N >= p");
  const RSeries phi = itlog_solve(f, N).phi;

  // g_k = D^k(z)/k! with D(g) = phi * g'. D raises the valuation by p-1,
  // and phi's valuation p makes each g_k exact to order N even though the
  // derivative forgets the top coefficient.
  std::vector<Rat> result(static_cast<std::size_t>(N) + 1, Rat(0));
  std::vector<Rat> g(static_cast<std::size_t>(N) + 1, Rat(0));
  if (N >= 1) g[1] = 1;
  result[1] = 1;
  Rat tk(1);
  for (int k = 1;; ++k) {
    std::vector<Rat> next(static_cast<std::size_t>(N) + 1, Rat(0));
    bool nonzero = false;
    for (int i = p; i <= N; ++i) {
      Rat s(0);
      for (int j = p; j <= i; ++j) {
        // phi_j * (g')_{i-j}, with (g')_l = (l+1) g_{l+1}, l <= i-p <= N-p.
        s += phi.coeff(j) * Rat(i - j + 1) * g[i - j + 1];
      }
      next[i] = s;
      if (s != 0) nonzero = true;
    }
    if (!nonzero) break;
    g = std::move(next);
    tk *= t / Rat(k);
    if (tk != 0)
      for (int i = 0; i <= N; ++i) result[i] += tk * g[i];
  }
  return RSeries(N, std::move(result));
}

}  // namespace itlog
