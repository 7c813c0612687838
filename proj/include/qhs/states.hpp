// Canonical state constructors and the CLI-facing state grammar.

#pragma once

#include <charconv>
#include <optional>
#include <variant>

#include "qhs/braid.hpp"
#include "qhs/separability.hpp"

namespace qhs {

/// Standard basis column i-1 (1-based i), qubit 0 as the most significant bit.
inline StateVector computational_basis(int n, int i) {
  if (n < 1 || n > 12) throw std::invalid_argument("computational_basis: bad qubit count");
  if (i < 1 || i > (1 << n))
    throw std::invalid_argument("computational_basis: index out of range");
  StateVector v(1 << n);
  v[i - 1] = 1.0;
  return v;
}

/// (|0...0> + |1...1>)/sqrt(2) on n >= 2 qubits.
inline StateVector ghz(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("ghz: n must be in [2, 12]");
  StateVector v(1 << n);
  const double a = 1.0 / std::numbers::sqrt2;
  v[0] = a;
  v[(1 << n) - 1] = a;
  return v;
}

/// (|01> - |10>)/sqrt(2).
inline StateVector bell_singlet() {
  const double a = 1.0 / std::numbers::sqrt2;
  return StateVector{0.0, a, -a, 0.0};
}

/// Parsed form of the state grammar:
///   "ghz:3" | "singlet" | "werner:0.5" | "basis:3:7" | "bell:3:1" | "file:PATH"
///
/// file:PATH is resolved by the caller (the JSON loader lives one layer up);
/// density() on a file spec requires the preloaded matrix to be injected.
class StateSpec {
 public:
  struct Basis { int n; int i; };
  struct Ghz { int n; };
  struct Singlet {};
  struct Werner { double p; };
  struct BraidBell { int n; int i; };
  struct File { std::string path; };

  using Kind = std::variant<Basis, Ghz, Singlet, Werner, BraidBell, File>;

  static StateSpec parse(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      parts.emplace_back(text.substr(start, colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    const std::string& head = parts[0];
    try {
      if (head == "singlet" && parts.size() == 1) return StateSpec(Singlet{});
      if (head == "ghz" && parts.size() == 2) return StateSpec(Ghz{to_int(parts[1])});
      if (head == "werner" && parts.size() == 2)
        return StateSpec(Werner{to_double(parts[1])});
      if (head == "basis" && parts.size() == 3)
        return StateSpec(Basis{to_int(parts[1]), to_int(parts[2])});
      if (head == "bell" && parts.size() == 3)
        return StateSpec(BraidBell{to_int(parts[1]), to_int(parts[2])});
      if (head == "file" && parts.size() >= 2)
        return StateSpec(File{std::string(text.substr(5))});
    } catch (const std::invalid_argument&) {
      // fall through to the grammar error below
    }
    throw std::invalid_argument("unrecognized state spec '" + std::string(text) +
                                "' (expected ghz:N, singlet, werner:P, basis:N:I, "
                                "bell:N:I or file:PATH)");
  }

  const Kind& kind() const { return kind_; }

  bool is_file() const { return std::holds_alternative<File>(kind_); }
  const std::string& file_path() const { return std::get<File>(kind_).path; }

  /// The pure state vector, when one is named (everything but werner/file).
  std::optional<StateVector> vector() const {
    if (auto* b = std::get_if<Basis>(&kind_)) return computational_basis(b->n, b->i);
    if (auto* g = std::get_if<Ghz>(&kind_)) return ghz(g->n);
    if (std::holds_alternative<Singlet>(kind_)) return bell_singlet();
    if (auto* bb = std::get_if<BraidBell>(&kind_)) return bell_state(bb->n, bb->i);
    return std::nullopt;
  }

  /// Density matrix for non-file specs.
  Matrix density() const {
    if (auto* w = std::get_if<Werner>(&kind_)) return werner_state(w->p);
    if (auto v = vector()) return outer(*v);
    throw std::invalid_argument("StateSpec: file-backed specs must be loaded by the caller");
  }

  std::string describe() const {
    std::ostringstream out;
    if (auto* b = std::get_if<Basis>(&kind_)) out << "basis:" << b->n << ":" << b->i;
    else if (auto* g = std::get_if<Ghz>(&kind_)) out << "ghz:" << g->n;
    else if (std::holds_alternative<Singlet>(kind_)) out << "singlet";
    else if (auto* w = std::get_if<Werner>(&kind_)) out << "werner:" << w->p;
    else if (auto* bb = std::get_if<BraidBell>(&kind_)) out << "bell:" << bb->n << ":" << bb->i;
    else out << "file:" << std::get<File>(kind_).path;
    return out.str();
  }

 private:
  explicit StateSpec(Kind k) : kind_(std::move(k)) {}

  static int to_int(const std::string& s) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw std::invalid_argument("bad integer '" + s + "'");
    return v;
  }

  static double to_double(const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + s + "'");
    }
  }

  Kind kind_;
};

}  // namespace qhs
