#include "diamond/quantify.hpp"

#include <stdexcept>

namespace diamond {

std::vector<DiamondElement> DiamondMonoid::enumerate() const {
  long long vecs = enumerate_vecs_count(base.size(), sr);
  if (vecs * base.size() > 65536)
    throw GuardError("DiamondMonoid::enumerate: guard exceeded");
  std::vector<DiamondElement> out;
  out.reserve(static_cast<size_t>(vecs * base.size()));
  for (const Vec& f : enumerate_vecs(base.size(), sr))
    for (int m = 0; m < base.size(); ++m) out.push_back({f, m});
  return out;
}

DiamondElement DiamondRecogniser::eval(const Word& w) const {
  DiamondElement acc = dm.identity();
  for (int letter : w) {
    if (letter < 0 || letter >= static_cast<int>(letter_image.size()))
      throw std::out_of_range("unknown letter in word");
    acc = dm.times(acc, letter_image[letter]);
  }
  return acc;
}

bool qk_accepts(const DiamondElement& e, const Subset& p, int k,
                const Semiring& s) {
  int acc = s.zero;
  for (size_t m = 0; m < e.f.size(); ++m)
    if (p[m]) acc = s.plus(acc, e.f[m]);
  return acc == k;
}

bool l0_accepts(const DiamondElement& e, const Subset& p) {
  return p[e.m] != 0;
}

bool DiamondRecogniser::accepts_element(const DiamondElement& e) const {
  switch (accepting.kind) {
    case AcceptSpec::Kind::Qk:
      return qk_accepts(e, accepting.p, accepting.k, dm.sr);
    case AcceptSpec::Kind::L0:
      return l0_accepts(e, accepting.p);
    case AcceptSpec::Kind::Explicit:
      for (const auto& x : accepting.elems)
        if (x == e) return true;
      return false;
  }
  return false;
}

WordSeries transduction_r(const Word& w, const Semiring& s) {
  WordSeries out;
  if (s.one == s.zero) return out;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) out[mark(w, i)] = s.one;
  return out;
}

Matrix<WordSeries> r_mon(const Word& w, const Semiring& s) {
  WordSeries diag;
  if (s.one != s.zero) diag[lift0(w)] = s.one;
  return {{diag, transduction_r(w, s)}, {WordSeries{}, diag}};
}

Matrix<WordSeries> r_mon_mul(const Matrix<WordSeries>& a,
                             const Matrix<WordSeries>& b, const Semiring& s) {
  return mat_mul(
      a, b, WordSeries{},
      [&](const WordSeries& x, const WordSeries& y) { return series_add(x, y, s); },
      [&](const WordSeries& x, const WordSeries& y) { return series_concat(x, y, s); });
}

Vec f_of_word(const MonoidMorphism& phi, const Word& w, const Semiring& s) {
  Vec acc = zero_vec(phi.target.size(), s);
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    int m = phi.eval(mark(w, i));
    acc[m] = s.plus(acc[m], s.one);
  }
  return acc;
}

std::vector<std::string> base_of_marked(const std::vector<std::string>& marked) {
  if (marked.size() % 2 != 0)
    throw std::invalid_argument("alphabet is not marked-shaped (odd size)");
  std::vector<std::string> base;
  for (size_t i = 0; i < marked.size(); i += 2) {
    if (marked[i + 1] != marked[i] + "'")
      throw std::invalid_argument("alphabet is not marked-shaped at '" +
                                  marked[i] + "'");
    base.push_back(marked[i]);
  }
  return base;
}

DiamondRecogniser diamond(const Recogniser& phi, const Semiring& s,
                          AcceptSpec accepting) {
  DiamondRecogniser out;
  out.alphabet = base_of_marked(phi.morphism.alphabet);
  out.dm.base = phi.morphism.target;
  out.dm.sr = s;
  out.accepting = std::move(accepting);
  const int n = out.dm.base.size();
  for (size_t a = 0; a < out.alphabet.size(); ++a) {
    int m0 = phi.morphism.letter_image[marked_index(static_cast<int>(a), 0)];
    int m1 = phi.morphism.letter_image[marked_index(static_cast<int>(a), 1)];
    out.letter_image.push_back({unit_vec(n, m1, s), m0});
  }
  return out;
}

bool is_length_preserving(const DiamondRecogniser& psi) {
  // in the one-element semiring every vector is characteristic
  if (psi.dm.sr.size() == 1) return true;
  for (const auto& e : psi.letter_image) {
    int ones = 0;
    for (int c : e.f) {
      if (c == psi.dm.sr.one && c != psi.dm.sr.zero)
        ++ones;
      else if (c != psi.dm.sr.zero)
        return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

Recogniser factor(const DiamondRecogniser& psi) {
  if (!is_length_preserving(psi))
    throw std::invalid_argument("factor: recogniser is not length preserving");
  Recogniser phi;
  phi.morphism.alphabet = marked_alphabet(psi.alphabet);
  phi.morphism.target = psi.dm.base;
  phi.morphism.letter_image.resize(2 * psi.alphabet.size());
  for (size_t a = 0; a < psi.alphabet.size(); ++a) {
    const auto& e = psi.letter_image[a];
    int ma = 0;
    for (size_t m = 0; m < e.f.size(); ++m)
      if (e.f[m] != psi.dm.sr.zero) ma = static_cast<int>(m);
    phi.morphism.letter_image[marked_index(static_cast<int>(a), 0)] = e.m;
    phi.morphism.letter_image[marked_index(static_cast<int>(a), 1)] = ma;
  }
  phi.accepting.assign(psi.dm.base.size(), 0);
  return phi;
}

}  // namespace diamond
