// Braid-group representation on n qubits and the general Bell basis.
//
// The generator g_i embeds the 4x4 matrix R into qubits (i-1, i):
// g_i = I^(i-1) (x) R (x) I^(n-i-1). R is given in three equivalent forms:
// the explicit entries, (I + i X(x)Y)/sqrt(2), and the involutory
// exponential exp(i pi/4 X(x)Y). Applying the ladder g_1*g_2*...*g_{n-1} to
// the computational basis columns yields 2^n orthonormal entangled states;
// as a literal matrix product acting on column vectors, g_{n-1} acts first.

#pragma once

#include <cctype>
#include <numbers>
#include <sstream>

#include "qhs/pauli.hpp"

namespace qhs {

struct BraidLetter {
  int index = 0;     // generator index, 1..n-1
  int exponent = 1;  // +1 or -1
};

/// Word over the braid generators; the empty word is the identity.
struct BraidWord {
  int n = 0;
  std::vector<BraidLetter> letters;

  BraidWord(int qubits, std::vector<BraidLetter> ls) : n(qubits), letters(std::move(ls)) {
    if (n < 2) throw std::invalid_argument("BraidWord: need at least 2 qubits");
    for (const auto& l : letters) {
      if (l.index < 1 || l.index > n - 1)
        throw std::invalid_argument("BraidWord: generator index out of range");
      if (l.exponent != 1 && l.exponent != -1)
        throw std::invalid_argument("BraidWord: exponent must be +1 or -1");
    }
  }

  /// Parse space-separated tokens like "g1 g2 g3^-1".
  static BraidWord parse(int qubits, std::string_view text) {
    std::vector<BraidLetter> ls;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || tok[0] != 'g')
        throw std::invalid_argument("BraidWord: bad token '" + tok + "'");
      std::size_t k = 1;
      while (k < tok.size() && std::isdigit(static_cast<unsigned char>(tok[k]))) ++k;
      if (k == 1) throw std::invalid_argument("BraidWord: bad token '" + tok + "'");
      BraidLetter l;
      l.index = std::stoi(tok.substr(1, k - 1));
      const std::string suffix = tok.substr(k);
      if (suffix == "^-1") l.exponent = -1;
      else if (!suffix.empty() && suffix != "^1" && suffix != "^+1")
        throw std::invalid_argument("BraidWord: bad token '" + tok + "'");
      ls.push_back(l);
    }
    return BraidWord(qubits, std::move(ls));
  }

  std::string str() const {
    std::string out;
    for (const auto& l : letters) {
      if (!out.empty()) out += ' ';
      out += 'g' + std::to_string(l.index);
      if (l.exponent == -1) out += "^-1";
    }
    return out;
  }
};

/// The explicit 4x4 unitary, entries in {0, +-1/sqrt(2)}.
inline Matrix r_matrix() {
  const double s = 1.0 / std::numbers::sqrt2;
  return Matrix{{s, 0, 0, s},
                {0, s, -s, 0},
                {0, s, s, 0},
                {-s, 0, 0, s}};
}

/// The same matrix as (I + i X(x)Y)/sqrt(2).
inline Matrix r_from_pauli() {
  const Matrix xy = kron(pauli_matrix('X'), pauli_matrix('Y'));
  Matrix out = Matrix::identity(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out(i, j) = (out(i, j) + cplx(0, 1) * xy(i, j)) / std::numbers::sqrt2;
  return out;
}

namespace detail {

inline Matrix embed_r(int n, int i, const Matrix& r) {
  if (n < 2) throw std::invalid_argument("generator: need at least 2 qubits");
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator: index out of range");
  Matrix out = i == 1 ? r : kron(Matrix::identity(1 << (i - 1)), r);
  if (n - i - 1 > 0) out = kron(out, Matrix::identity(1 << (n - i - 1)));
  return out;
}

}  // namespace detail

/// g_i on n qubits: I^(i-1) (x) R (x) I^(n-i-1).
inline Matrix generator(int n, int i) { return detail::embed_r(n, i, r_matrix()); }

/// Left-to-right matrix product of the word's generators; exponent -1 takes
/// the adjoint (R is unitary). On column vectors the rightmost letter acts first.
inline Matrix realize(const BraidWord& word) {
  Matrix out = Matrix::identity(1 << word.n);
  for (const auto& l : word.letters) {
    Matrix g = generator(word.n, l.index);
    if (l.exponent == -1) g = adjoint(g);
    out = matmul(out, g);
  }
  return out;
}

struct BraidDeviations {
  double commuting = 0.0;  // g_i g_j = g_j g_i for |i-j| > 1
  double braid = 0.0;      // g_i g_j g_i = g_j g_i g_j for |i-j| = 1
  double inverse = 0.0;    // g_i g_i^-1 = I

  double max() const { return std::max({commuting, braid, inverse}); }
};

/// Element-wise deviations of the three relation families, with a pluggable
/// 4x4 matrix in place of R (used to show broken representations fail).
inline BraidDeviations braid_relation_deviations(int n, const Matrix& r) {
  if (n < 2 || n > 8) throw std::invalid_argument("braid relations: n must be in [2, 8]");
  std::vector<Matrix> g;
  for (int i = 1; i <= n - 1; ++i) g.push_back(detail::embed_r(n, i, r));

  BraidDeviations dev;
  const Matrix eye = Matrix::identity(1 << n);
  for (int i = 0; i < n - 1; ++i) {
    dev.inverse = std::max(dev.inverse, max_abs_diff(matmul(g[i], adjoint(g[i])), eye));
    for (int j = 0; j < n - 1; ++j) {
      if (std::abs(i - j) > 1)
        dev.commuting =
            std::max(dev.commuting, max_abs_diff(matmul(g[i], g[j]), matmul(g[j], g[i])));
      if (std::abs(i - j) == 1)
        dev.braid = std::max(dev.braid, max_abs_diff(matmul(matmul(g[i], g[j]), g[i]),
                                                     matmul(matmul(g[j], g[i]), g[j])));
    }
  }
  return dev;
}

inline BraidDeviations braid_relation_deviations(int n) {
  return braid_relation_deviations(n, r_matrix());
}

inline bool verify_braid_relations(int n, double tol = kDefaultTol) {
  return braid_relation_deviations(n).max() <= tol;
}

inline bool verify_braid_relations(int n, double tol, const Matrix& r) {
  return braid_relation_deviations(n, r).max() <= tol;
}

/// (R(x)I)(I(x)R)(R(x)I) versus (I(x)R)(R(x)I)(I(x)R) on 8x8 matrices.
inline double yang_baxter_deviation(const Matrix& r) {
  const Matrix ri = kron(r, Matrix::identity(2));
  const Matrix ir = kron(Matrix::identity(2), r);
  return max_abs_diff(matmul(matmul(ri, ir), ri), matmul(matmul(ir, ri), ir));
}

inline double yang_baxter_deviation() { return yang_baxter_deviation(r_matrix()); }

inline bool verify_yang_baxter(double tol = kDefaultTol) {
  return yang_baxter_deviation() <= tol;
}

/// The ladder product g_1 * g_2 * ... * g_{n-1}.
inline Matrix braid_ladder(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("braid_ladder: n must be in [2, 8]");
  std::vector<BraidLetter> ls;
  for (int i = 1; i <= n - 1; ++i) ls.push_back({i, 1});
  return realize(BraidWord(n, std::move(ls)));
}

/// |B_i> = g_1 * g_2 * ... * g_{n-1} applied to basis column i-1, 1 <= i <= 2^n.
inline StateVector bell_state(int n, int i) {
  const Matrix u = braid_ladder(n);
  if (i < 1 || i > u.dim()) throw std::invalid_argument("bell_state: index out of range");
  StateVector v(u.dim());
  for (int r = 0; r < u.dim(); ++r) v[r] = u(r, i - 1);
  return v;
}

struct BellBasis {
  int n = 0;
  std::vector<StateVector> states;  // index order; 2^n orthonormal vectors

  /// Largest deviation of the Gram matrix from the identity.
  double gram_deviation() const {
    double dev = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = 0; j < states.size(); ++j) {
        const cplx g = states[i].inner(states[j]);
        dev = std::max(dev, std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))));
      }
    return dev;
  }
};

/// All 2^n states at once; they are the columns of one unitary, so the basis
/// is orthonormal by construction.
inline BellBasis bell_basis(int n) {
  const Matrix u = braid_ladder(n);
  BellBasis basis;
  basis.n = n;
  basis.states.reserve(static_cast<std::size_t>(u.dim()));
  for (int c = 0; c < u.dim(); ++c) {
    StateVector v(u.dim());
    for (int r = 0; r < u.dim(); ++r) v[r] = u(r, c);
    basis.states.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qhs
