#pragma once

#include <random>

#include <json.hpp>

#include "diamond/duality.hpp"
#include "diamond/quantify.hpp"

namespace diamond {

struct SuiteReport {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;
  bool ok() const { return failures.empty(); }
};

nlohmann::json report_to_json(const SuiteReport& r);

/// Seeded random DFA over the marked alphabet of base_letters letters.
Dfa random_marked_dfa(std::mt19937& rng, int base_letters, int max_states);

/// Semiring/monoid axioms, monad laws, convolution commutativity and the
/// r_mon morphism property.
SuiteReport verify_laws(unsigned seed);

/// Finite measure bijection: enumerated-and-filtered additive functions
/// against integrals, |X| <= 3, S in {bool2, Z2, Z3, Z4}.
SuiteReport verify_measures();

/// Quantifier-recognition theorem and its existential corollary on seeded
/// random DFAs, against the brute-force word semantics.
SuiteReport verify_oracle(unsigned seed, int max_len, int num_dfas);

/// The four duality biconditionals over the (M, S) grid.
SuiteReport verify_duality();

/// Quotient decompositions against direct quotients, exact on the diamond
/// monoid and spot-checked on words.
SuiteReport verify_quotients();

/// Reutenauer set-family equality over small base monoids.
SuiteReport verify_reutenauer();

/// factor-then-diamond round trip on random length-preserving recognisers.
SuiteReport verify_lengthpres(unsigned seed);

std::vector<SuiteReport> verify_all(unsigned seed, int max_len);

}  // namespace diamond
