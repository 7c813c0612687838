// Hermitian eigendecomposition by cyclic Jacobi rotations.
//
// Each sweep visits every off-diagonal pivot (p,q). The pivot is first made
// real by the phase diag(1, conj(w)) with w = a_pq/|a_pq|, then annihilated
// by the classic 2x2 rotation with the smaller-angle root
// t = sign(tau)/(|tau| + sqrt(1+tau^2)), tau = (a_qq - a_pp)/(2|a_pq|).
// Convergence is quadratic; dimensions up to a few hundred finish in a
// handful of sweeps.

#pragma once

#include <algorithm>
#include <numeric>

#include "qhs/matrix.hpp"

namespace qhs {

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column k pairs with eigenvalues[k]
};

namespace detail {

inline double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

inline EighResult eigh(const Matrix& input, double herm_tol = kDefaultTol) {
  if (!is_hermitian(input, herm_tol))
    throw std::invalid_argument("eigh: matrix is not Hermitian");
  const int d = input.dim();
  Matrix a = input;
  Matrix v = Matrix::identity(d);

  // Relative target so large-norm inputs cannot stall below machine precision.
  const double target = 1e-13 * std::max(1.0, frobenius_norm(a));
  constexpr int kMaxSweeps = 64;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (detail::offdiag_norm(a) <= target) break;
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx w = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: [col p, col q] <- [col p, col q] * [[c, s], [-s*conj(w), c*conj(w)]]
        const cplx wc = std::conj(w);
        for (int r = 0; r < d; ++r) {
          const cplx arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * wc * arq;
          a(r, q) = s * arp + c * wc * arq;
          const cplx vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * wc * vrq;
          v(r, q) = s * vrp + c * wc * vrq;
        }
        // Rows p and q of U^H * A.
        for (int r = 0; r < d; ++r) {
          const cplx apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * w * aqr;
          a(q, r) = s * apr + c * w * aqr;
        }
        a(p, p) = cplx(app - t * mag, 0.0);
        a(q, q) = cplx(aqq + t * mag, 0.0);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EighResult res;
  res.eigenvalues.resize(d);
  res.eigenvectors = Matrix(d);
  for (int k = 0; k < d; ++k) {
    res.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < d; ++r) res.eigenvectors(r, k) = v(r, order[k]);
  }
  return res;
}

/// Eigenvalues of a Hermitian matrix, ascending.
inline std::vector<double> eigvalsh(const Matrix& a, double herm_tol = kDefaultTol) {
  return eigh(a, herm_tol).eigenvalues;
}

inline double min_eigenvalue(const Matrix& a, double herm_tol = kDefaultTol) {
  return eigvalsh(a, herm_tol).front();
}

inline bool is_psd(const Matrix& a, double tol = kDefaultTol) {
  return min_eigenvalue(a, tol) >= -tol;
}

}  // namespace qhs
