#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace diamond {

/// Raised when an enumeration-bounded operation is invoked beyond its guard.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite commutative semiring as closed addition/multiplication tables
/// over dense element ids 0..n-1.
struct Semiring {
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;

  int size() const { return static_cast<int>(add.size()); }
  int plus(int a, int b) const { return add[a][b]; }
  int times(int a, int b) const { return mul[a][b]; }

  /// m-fold sum 1 + ... + 1; the empty sum is the zero element.
  int sum_of_ones(long long m) const;
};

/// The ring of integers modulo q. Throws std::invalid_argument for q < 1.
Semiring make_zq(int q);

/// Two-element Boolean semiring: add = or, mul = and.
Semiring make_bool2();

/// Exhaustively verifies all semiring axioms, including commutativity of
/// both operations. Returns an empty list iff the tables form a finite
/// commutative semiring; each violation names a witnessing tuple.
/// Structurally malformed tables throw std::invalid_argument.
std::vector<std::string> check_axioms(const Semiring& s);

/// Parses the named shorthands "zq:Q" and "bool2".
Semiring semiring_from_name(const std::string& name);

}  // namespace diamond
