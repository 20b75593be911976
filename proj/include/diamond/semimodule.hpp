#pragma once

#include <map>
#include <vector>

#include "diamond/monoid.hpp"
#include "diamond/semiring.hpp"

namespace diamond {

/// Element of S_f(X) for a finite base X: dense coefficient vector indexed
/// by elements of X. Totality of the vector subsumes finite support.
using Vec = std::vector<int>;

Vec zero_vec(int n, const Semiring& s);

/// Characteristic vector: coefficient 1 at x, 0 elsewhere.
Vec unit_vec(int n, int x, const Semiring& s);

Vec add_vec(const Vec& f, const Vec& g, const Semiring& s);
Vec scale_vec(int k, const Vec& f, const Semiring& s);

/// Functor action: pushforward along psi, summing over fibres.
Vec map_vec(const std::vector<int>& psi, int target_size, const Vec& f,
            const Semiring& s);

/// All |S|^n vectors over a base of size n. Index i has coefficients given
/// by the base-|S| digits of i, least significant digit at position 0; this
/// fixed order is also the base enumeration used by mult_vec.
std::vector<Vec> enumerate_vecs(int n, const Semiring& s);
long long enumerate_vecs_count(int n, const Semiring& s);
long long vec_index(const Vec& f, const Semiring& s);

/// Monad multiplication mu_X: F is a vector over the enumerated base
/// S_f(X), |X| = base_size. Guarded at |S|^|X| <= 4096.
Vec mult_vec(const Vec& F, int base_size, const Semiring& s);

/// Convolution on S_f(M): (f*g)(x) = sum over m*m' = x of f(m).g(m').
Vec convolve(const Vec& f, const Vec& g, const FiniteMonoid& m,
             const Semiring& s);

/// The other canonical product: same pairs, semiring factors multiplied in
/// the opposite order. Coincides with convolve iff S is commutative.
Vec convolve_rev(const Vec& f, const Vec& g, const FiniteMonoid& m,
                 const Semiring& s);

/// Translation actions m.f and f.m on S_f(M) (convolution with a unit).
Vec translate_left(int m, const Vec& f, const FiniteMonoid& mon,
                   const Semiring& s);
Vec translate_right(const Vec& f, int m, const FiniteMonoid& mon,
                    const Semiring& s);

/// Sparse element of S_f(B*) for an infinite word base: finitely many
/// (word, coefficient) pairs; absent words have coefficient 0.
using WordSeries = std::map<Word, int>;

WordSeries series_add(const WordSeries& a, const WordSeries& b,
                      const Semiring& s);
/// Cauchy product under concatenation.
WordSeries series_concat(const WordSeries& a, const WordSeries& b,
                         const Semiring& s);
/// Pushforward along a monoid morphism: words collapse to their images.
Vec series_map(const MonoidMorphism& phi, const WordSeries& a,
               const Semiring& s);

template <class E>
using Matrix = std::vector<std::vector<E>>;

/// One matrix product shared by every entry structure: entry operations are
/// passed in, dimensions must agree.
template <class E, class FAdd, class FMul>
Matrix<E> mat_mul(const Matrix<E>& a, const Matrix<E>& b, const E& zero,
                  FAdd add, FMul mul) {
  const size_t n = a.size();
  const size_t k = b.size();
  if (k == 0 || a.empty() || a[0].size() != k)
    throw std::invalid_argument("mat_mul: dimension mismatch");
  const size_t m = b[0].size();
  Matrix<E> out(n, std::vector<E>(m, zero));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      E acc = zero;
      for (size_t t = 0; t < k; ++t) acc = add(acc, mul(a[i][t], b[t][j]));
      out[i][j] = acc;
    }
  return out;
}

/// Deterministic rendering as a formal sum "s1.x1 + s2.x2" in base order.
std::string format_vec(const Vec& f, const Semiring& s);

}  // namespace diamond
