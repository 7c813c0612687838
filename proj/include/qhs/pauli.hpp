// Pauli strings: length-n words over {I, X, Y, Z} naming tensor-product
// basis operators. Strings are encoded as base-4 integers (I=0, X=1, Y=2,
// Z=3) with qubit 0 as the most significant digit, so code order is
// lexicographic: II, IX, IY, IZ, XI, ...

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qhs/matrix.hpp"

namespace qhs {

namespace detail {

inline int pauli_digit(char letter) {
  switch (letter) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + letter + "'");
  }
}

inline char pauli_letter(int digit) { return "IXYZ"[digit & 3]; }

}  // namespace detail

class PauliString {
 public:
  explicit PauliString(std::string_view labels) : labels_(labels) {
    if (labels_.empty()) throw std::invalid_argument("PauliString: empty string");
    for (char c : labels_) detail::pauli_digit(c);  // validates the alphabet
  }

  static PauliString from_code(int n, std::uint64_t code) {
    if (n < 1 || n > 31) throw std::invalid_argument("PauliString: bad qubit count");
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int q = n - 1; q >= 0; --q) {
      s[static_cast<std::size_t>(q)] = detail::pauli_letter(static_cast<int>(code & 3));
      code >>= 2;
    }
    return PauliString(s);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  char letter(int q) const { return labels_[static_cast<std::size_t>(q)]; }
  const std::string& str() const { return labels_; }

  /// Count of non-identity letters.
  int weight() const {
    int w = 0;
    for (char c : labels_)
      if (c != 'I') ++w;
    return w;
  }

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (char l : labels_) c = (c << 2) | static_cast<std::uint64_t>(detail::pauli_digit(l));
    return c;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::string labels_;
};

inline int code_weight(std::uint64_t code, int n) {
  int w = 0;
  for (int q = 0; q < n; ++q) {
    if (code & 3) ++w;
    code >>= 2;
  }
  return w;
}

/// The standard 2x2 matrix for one letter; 'I' is the unit matrix.
inline Matrix pauli_matrix(char letter) {
  switch (detail::pauli_digit(letter)) {
    case 0: return Matrix{{1.0, 0.0}, {0.0, 1.0}};
    case 1: return Matrix{{0.0, 1.0}, {1.0, 0.0}};
    case 2: return Matrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
    default: return Matrix{{1.0, 0.0}, {0.0, -1.0}};
  }
}

/// n-fold Kronecker product of the string's letters, leftmost letter acting
/// on qubit 0. Hermitian, unitary and involutory by construction.
inline Matrix string_matrix(const PauliString& s) {
  Matrix out = pauli_matrix(s.letter(0));
  for (int q = 1; q < s.size(); ++q) out = kron(out, pauli_matrix(s.letter(q)));
  return out;
}

namespace detail {

// A Pauli-string matrix has exactly one nonzero entry per column: column j
// maps to row j ^ x_mask with a phase that is a product over the letters.
// Used to accumulate string matrices without forming Kronecker products.
struct SparsePauli {
  int x_mask = 0;  // bits flipped by X or Y letters

  SparsePauli(std::uint64_t code, int n) : code_(code), n_(n) {
    std::uint64_t c = code;
    for (int q = n - 1; q >= 0; --q) {
      const int digit = static_cast<int>(c & 3);
      c >>= 2;
      if (digit == 1 || digit == 2) x_mask |= 1 << (n - 1 - q);
    }
  }

  cplx phase(int column) const {
    cplx p = 1.0;
    std::uint64_t c = code_;
    for (int q = n_ - 1; q >= 0; --q) {
      const int digit = static_cast<int>(c & 3);
      c >>= 2;
      const int bit = (column >> (n_ - 1 - q)) & 1;
      if (digit == 2) p *= cplx(0.0, bit ? -1.0 : 1.0);  // Y
      else if (digit == 3 && bit) p = -p;                // Z
    }
    return p;
  }

 private:
  std::uint64_t code_;
  int n_;
};

}  // namespace detail

}  // namespace qhs
