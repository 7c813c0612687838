// Dense complex matrices and state vectors over qubit-indexed spaces.
//
// Everything here is a value type: operations return fresh matrices and never
// mutate their inputs, so all functions are reentrant and safe to call
// concurrently. Qubit 0 is the leftmost Kronecker factor, i.e. the most
// significant bit of the computational index.

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhs {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Square dense complex matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;

  explicit Matrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("Matrix: dimension must be positive");
    a_.assign(static_cast<std::size_t>(dim) * dim, cplxize(0.0));
  }

  Matrix(int dim, std::vector<cplx> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("Matrix: dimension must be positive");
    if (a_.size() != static_cast<std::size_t>(dim) * dim)
      throw std::invalid_argument("Matrix: entry count does not match dimension");
    for (const cplx& z : a_)
      if (!is_finite(z)) throw std::invalid_argument("Matrix: non-finite entry");
  }

  Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    dim_ = static_cast<int>(rows.size());
    if (dim_ < 1) throw std::invalid_argument("Matrix: empty initializer");
    a_.reserve(static_cast<std::size_t>(dim_) * dim_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != dim_)
        throw std::invalid_argument("Matrix: initializer is not square");
      for (cplx z : row) {
        if (!is_finite(z)) throw std::invalid_argument("Matrix: non-finite entry");
        a_.push_back(z);
      }
    }
  }

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  /// Number of qubits for a qubit-indexed matrix; requires dim to be a power of two.
  int qubit_count() const {
    auto d = static_cast<unsigned>(dim_);
    if (dim_ < 1 || !std::has_single_bit(d))
      throw std::invalid_argument("Matrix: dimension is not a power of two");
    return std::countr_zero(d);
  }

  cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  cplx operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

  const std::vector<cplx>& data() const { return a_; }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.dim_ == rhs.dim_ && lhs.a_ == rhs.a_;
  }

 private:
  static cplx cplxize(double x) { return {x, 0.0}; }

  int dim_ = 0;
  std::vector<cplx> a_;
};

/// Column vector of complex amplitudes.
class StateVector {
 public:
  StateVector() = default;

  explicit StateVector(int dim) : amps_(static_cast<std::size_t>(dim)) {
    if (dim < 1) throw std::invalid_argument("StateVector: dimension must be positive");
  }

  StateVector(std::initializer_list<cplx> amps) : amps_(amps) {
    if (amps_.empty()) throw std::invalid_argument("StateVector: empty");
  }

  explicit StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw std::invalid_argument("StateVector: empty");
    for (const cplx& z : amps_)
      if (!is_finite(z)) throw std::invalid_argument("StateVector: non-finite amplitude");
  }

  int dim() const { return static_cast<int>(amps_.size()); }

  int qubit_count() const {
    auto d = static_cast<unsigned>(amps_.size());
    if (!std::has_single_bit(d))
      throw std::invalid_argument("StateVector: dimension is not a power of two");
    return std::countr_zero(d);
  }

  cplx& operator[](int i) { return amps_[static_cast<std::size_t>(i)]; }
  cplx operator[](int i) const { return amps_[static_cast<std::size_t>(i)]; }

  double norm() const {
    double s = 0.0;
    for (const cplx& z : amps_) s += std::norm(z);
    return std::sqrt(s);
  }

  cplx inner(const StateVector& other) const {
    if (dim() != other.dim())
      throw std::invalid_argument("StateVector: dimension mismatch in inner product");
    cplx s = 0.0;
    for (int i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
  }

  const std::vector<cplx>& amplitudes() const { return amps_; }

 private:
  std::vector<cplx> amps_;
};

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  const int da = a.dim(), db = b.dim();
  Matrix out(da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matmul: dimension mismatch");
  const int d = a.dim();
  Matrix out(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

inline StateVector apply(const Matrix& m, const StateVector& v) {
  if (m.dim() != v.dim()) throw std::invalid_argument("apply: dimension mismatch");
  StateVector out(m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
  Matrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(j, i) = a(i, j);
  return out;
}

inline cplx trace(const Matrix& a) {
  cplx s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dimension mismatch");
  Matrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline Matrix sub(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sub: dimension mismatch");
  Matrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline Matrix scale(cplx factor, const Matrix& a) {
  Matrix out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) = factor * a(i, j);
  return out;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
inline Matrix operator*(cplx factor, const Matrix& a) { return scale(factor, a); }

/// Rank-1 projector |v><v|; the projector of a unit vector is a pure state.
inline Matrix outer(const StateVector& v) {
  if (v.norm() == 0.0) throw std::invalid_argument("outer: zero vector");
  Matrix out(v.dim());
  for (int i = 0; i < v.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) out(i, j) = v[i] * std::conj(v[j]);
  return out;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const cplx& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

inline bool is_hermitian(const Matrix& a, double tol = kDefaultTol) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

inline bool is_unitary(const Matrix& a, double tol = kDefaultTol) {
  return max_abs_diff(matmul(a, adjoint(a)), Matrix::identity(a.dim())) <= tol;
}

/// cos(theta)*I + i*sin(theta)*a, valid when a*a = I.
///
/// This is the closed form of exp(i*theta*a) for an involutory generator.
inline Matrix involutory_exponential(double theta, const Matrix& a,
                                     double tol = kDefaultTol) {
  if (max_abs_diff(matmul(a, a), Matrix::identity(a.dim())) > tol)
    throw std::invalid_argument("involutory_exponential: generator is not involutory");
  Matrix out = scale(std::cos(theta), Matrix::identity(a.dim()));
  const cplx is = cplx(0.0, std::sin(theta));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) out(i, j) += is * a(i, j);
  return out;
}

}  // namespace qhs
