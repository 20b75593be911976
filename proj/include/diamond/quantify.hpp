#pragma once

#include "diamond/langlogic.hpp"
#include "diamond/measure.hpp"
#include "diamond/semimodule.hpp"

namespace diamond {

/// Element of the internal monoid S_f(M) x M of the quantifier recogniser.
struct DiamondElement {
  Vec f;
  int m = 0;
  bool operator==(const DiamondElement&) const = default;
  bool operator<(const DiamondElement& o) const {
    return f != o.f ? f < o.f : m < o.m;
  }
};

/// S_f(M) x M with the upper-triangular matrix multiplication
/// (f,m)(f',m') = (m.f' + f.m', mm').
struct DiamondMonoid {
  FiniteMonoid base;
  Semiring sr;

  DiamondElement identity() const {
    return {zero_vec(base.size(), sr), base.identity};
  }
  DiamondElement times(const DiamondElement& a, const DiamondElement& b) const {
    return {add_vec(translate_left(a.m, b.f, base, sr),
                    translate_right(a.f, b.m, base, sr), sr),
            base.times(a.m, b.m)};
  }

  /// Elements in lexicographic (coefficient vector, base id) order, with
  /// element index vec_index(f) * |M| + m. Guarded at |S|^|M|.|M| <= 65536.
  std::vector<DiamondElement> enumerate() const;
  long long index_of(const DiamondElement& e) const {
    return vec_index(e.f, sr) * base.size() + e.m;
  }
};

/// Accepting subsets of the diamond monoid, symbolic or explicit.
struct AcceptSpec {
  enum class Kind { Explicit, Qk, L0 };
  Kind kind = Kind::Explicit;
  Subset p;                            // subset of the base monoid (Qk, L0)
  int k = 0;                           // semiring element (Qk)
  std::vector<DiamondElement> elems;   // Explicit
};

struct DiamondRecogniser {
  DiamondMonoid dm;
  std::vector<std::string> alphabet;  // the base alphabet A
  std::vector<DiamondElement> letter_image;
  AcceptSpec accepting;

  DiamondElement eval(const Word& w) const;
  bool accepts_element(const DiamondElement& e) const;
  bool member(const Word& w) const { return accepts_element(eval(w)); }
};

/// (f,m) is accepted iff the integral of f over p equals k. The diamond
/// recogniser with this accepting set recognises Q_k(L) for L = phi^-1(p).
bool qk_accepts(const DiamondElement& e, const Subset& p, int k,
                const Semiring& s);

/// (f,m) is accepted iff m lies in p; recognises the unmarked-embedding
/// language L0.
bool l0_accepts(const DiamondElement& e, const Subset& p);

/// The marking transduction: w maps to the formal sum of its |w| marked
/// variants, each with coefficient 1.
WordSeries transduction_r(const Word& w, const Semiring& s);

/// The 2x2 monoid-morphism representation of the transduction: diagonal
/// entries 1.w0, the marking sum at (1,2), zero at (2,1).
Matrix<WordSeries> r_mon(const Word& w, const Semiring& s);

Matrix<WordSeries> r_mon_mul(const Matrix<WordSeries>& a,
                             const Matrix<WordSeries>& b, const Semiring& s);

/// f_w = sum over positions i of 1 . phi(mark(w, i)), for phi over A x 2.
Vec f_of_word(const MonoidMorphism& phi, const Word& w, const Semiring& s);

/// Splits a marked alphabet {a, a', b, b', ...} back into its base letters.
/// Throws std::invalid_argument if the alphabet is not marked-shaped.
std::vector<std::string> base_of_marked(const std::vector<std::string>& marked);

/// The diamond construction: given a recogniser phi over a marked alphabet
/// A x 2, builds the recogniser over A with letter images
/// a -> (chi_{phi(a,1)}, phi(a,0)) and the given accepting spec.
DiamondRecogniser diamond(const Recogniser& phi, const Semiring& s,
                          AcceptSpec accepting);

/// True iff every letter image has a characteristic first component.
bool is_length_preserving(const DiamondRecogniser& psi);

/// For a length-preserving psi, the recogniser phi over A x 2 with
/// phi(a,0) = pi2(psi(a)) and phi(a,1) = m_a; diamond(factor(psi)) has the
/// same letter images as psi. The accepting set of the factor is left empty.
/// Throws std::invalid_argument on non-length-preserving input.
Recogniser factor(const DiamondRecogniser& psi);

}  // namespace diamond
