// Qubit-subset bookkeeping plus partial trace and partial transpose.
//
// Both reductions work by index arithmetic on computational indices: the bit
// of qubit q inside an n-qubit index x is (x >> (n-1-q)) & 1, qubit 0 being
// the most significant bit.

#pragma once

#include <algorithm>
#include <vector>

#include "qhs/matrix.hpp"

namespace qhs {

/// Strictly increasing list of 0-based qubit positions inside an n-qubit system.
struct QubitSubset {
  std::vector<int> indices;
  int n = 0;

  QubitSubset(std::vector<int> idx, int total) : indices(std::move(idx)), n(total) {
    if (n < 1) throw std::invalid_argument("QubitSubset: qubit count must be positive");
    for (std::size_t k = 0; k < indices.size(); ++k) {
      if (indices[k] < 0 || indices[k] >= n)
        throw std::invalid_argument("QubitSubset: index out of range");
      if (k > 0 && indices[k] <= indices[k - 1])
        throw std::invalid_argument("QubitSubset: indices must be strictly increasing");
    }
  }

  int size() const { return static_cast<int>(indices.size()); }
  bool contains(int q) const {
    return std::binary_search(indices.begin(), indices.end(), q);
  }

  QubitSubset complement() const {
    std::vector<int> rest;
    for (int q = 0; q < n; ++q)
      if (!contains(q)) rest.push_back(q);
    return QubitSubset(std::move(rest), n);
  }

  /// Bit mask over computational indices, qubit 0 = most significant bit.
  int mask() const {
    int m = 0;
    for (int q : indices) m |= 1 << (n - 1 - q);
    return m;
  }
};

namespace detail {

// Scatter the bits of `packed` (one per listed qubit, in list order, first
// qubit = most significant) into their positions inside a full n-qubit index.
inline int deposit_bits(int packed, const std::vector<int>& qubits, int n) {
  int out = 0;
  const int m = static_cast<int>(qubits.size());
  for (int k = 0; k < m; ++k) {
    const int bit = (packed >> (m - 1 - k)) & 1;
    out |= bit << (n - 1 - qubits[k]);
  }
  return out;
}

}  // namespace detail

/// Trace out the qubits listed in `traced`; the result acts on the kept
/// qubits in their original order and has the same trace as the input.
inline Matrix partial_trace(const Matrix& rho, const QubitSubset& traced) {
  const int n = rho.qubit_count();
  if (traced.n != n)
    throw std::invalid_argument("partial_trace: subset does not match qubit count");
  const QubitSubset kept = traced.complement();
  const int kd = 1 << kept.size();
  const int td = 1 << traced.size();
  Matrix out(kd);
  for (int r = 0; r < kd; ++r) {
    const int rk = detail::deposit_bits(r, kept.indices, n);
    for (int c = 0; c < kd; ++c) {
      const int ck = detail::deposit_bits(c, kept.indices, n);
      cplx s = 0.0;
      for (int t = 0; t < td; ++t) {
        const int tt = detail::deposit_bits(t, traced.indices, n);
        s += rho(rk | tt, ck | tt);
      }
      out(r, c) = s;
    }
  }
  return out;
}

/// Transpose the row/column indices of the qubits in `part` only.
inline Matrix partial_transpose(const Matrix& rho, const QubitSubset& part) {
  const int n = rho.qubit_count();
  if (part.n != n)
    throw std::invalid_argument("partial_transpose: subset does not match qubit count");
  const int mask = part.mask();
  const int d = rho.dim();
  Matrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int ip = (i & ~mask) | (j & mask);
      const int jp = (j & ~mask) | (i & mask);
      out(ip, jp) = rho(i, j);
    }
  return out;
}

}  // namespace qhs
