#pragma once

#include <functional>

#include "diamond/monoid.hpp"
#include "diamond/semiring.hpp"

namespace diamond {

/// Brute-force semantic oracle: a total, deterministic membership predicate
/// over words of its alphabet.
struct LanguageOracle {
  std::vector<std::string> alphabet;
  std::function<bool(const Word&)> member;
};

/// The word over A x 2 with position i (1-based) marked and all other
/// letters unflagged. Throws std::out_of_range for i outside [1, |w|].
Word mark(const Word& w, int i);

/// The word w seen over A x 2 with every letter unflagged.
Word lift0(const Word& w);

/// Number of positions i with mark(w, i) in L; L ranges over A x 2 words.
int witness_count(const LanguageOracle& l, const Word& w);

/// True iff the m-fold sum 1_S + ... + 1_S equals k, where m is the witness
/// count of w (the empty sum is 0_S).
bool q_k_direct(const LanguageOracle& l, const Semiring& s, int k,
                const Word& w);

/// All words over an alphabet of the given size with length <= max_len, in
/// length-then-lexicographic order. Deterministic enumeration for the
/// verification suites.
std::vector<Word> words_up_to(int alphabet_size, int max_len);

}  // namespace diamond
