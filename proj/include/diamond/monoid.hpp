#pragma once

#include <string>
#include <vector>

namespace diamond {

/// A word is a sequence of letter indices into some alphabet.
using Word = std::vector<int>;

/// Characteristic vector over element ids.
using Subset = std::vector<char>;

struct FiniteMonoid {
  std::vector<std::vector<int>> mul;
  int identity = 0;

  int size() const { return static_cast<int>(mul.size()); }
  int times(int a, int b) const { return mul[a][b]; }
};

/// Empty result iff mul is associative with the designated two-sided
/// identity. Malformed tables throw std::invalid_argument.
std::vector<std::string> check_monoid_axioms(const FiniteMonoid& m);

FiniteMonoid trivial_monoid();
/// The additive cyclic monoid Z_n.
FiniteMonoid cyclic_monoid(int n);
/// {1, a, b} with xy = x for x, y in {a, b}; the smallest noncommutative monoid.
FiniteMonoid left_zero_monoid3();

/// All monoid structures on {0..n-1} (any identity element); n <= 3.
std::vector<FiniteMonoid> enumerate_monoids(int n);

struct MonoidMorphism {
  std::vector<std::string> alphabet;
  FiniteMonoid target;
  std::vector<int> letter_image;

  /// Left-to-right product of letter images; the empty word maps to the
  /// identity. Throws std::out_of_range on an unknown letter index.
  int eval(const Word& w) const;
};

struct Recogniser {
  MonoidMorphism morphism;
  Subset accepting;

  bool member(const Word& w) const {
    return accepting[morphism.eval(w)] != 0;
  }
};

enum class Side { Left, Right };

/// Left: {y : x*y in p}; right: {y : y*x in p}.
Subset quotient_set(const FiniteMonoid& m, int x, const Subset& p, Side side);

/// The alphabet A x 2: for each letter a, the unmarked copy "a" followed by
/// the marked copy "a'".
std::vector<std::string> marked_alphabet(const std::vector<std::string>& a);

constexpr int marked_index(int letter, int flag) { return 2 * letter + flag; }

struct Dfa {
  int states = 0;
  std::vector<std::string> alphabet;
  std::vector<std::vector<int>> delta;  // delta[state][letter]
  int initial = 0;
  Subset accepting;

  bool accepts(const Word& w) const;
};

/// Reachable-part Moore minimization.
Dfa minimize(const Dfa& d);

struct SyntacticMonoid {
  FiniteMonoid monoid;
  MonoidMorphism morphism;
  Subset accepting;
  /// Shortest word mapping to each element (BFS order: length, then letter
  /// order within a length).
  std::vector<Word> representative;
};

/// Transition monoid of the minimal DFA of L(d), with the induced morphism
/// and accepting set; recognises exactly L(d).
SyntacticMonoid syntactic_monoid(const Dfa& d);

Recogniser to_recogniser(const SyntacticMonoid& s);

}  // namespace diamond
