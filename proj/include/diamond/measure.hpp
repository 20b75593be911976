#pragma once

#include "diamond/semimodule.hpp"

namespace diamond {

/// An S-valued finitely additive measure on the powerset of a finite space,
/// stored extensionally: value[mask] for every subset mask of {0..space-1}.
/// Guarded at space <= 12.
struct Measure {
  int space = 0;
  std::vector<int> value;  // size 2^space

  unsigned full_mask() const { return (1u << space) - 1u; }
  int operator()(unsigned mask) const { return value[mask]; }
};

/// A generator of the dual algebra: [K, k] = { mu : mu(K) = k }.
struct ClopenGen {
  unsigned set = 0;
  int k = 0;
  bool operator==(const ClopenGen&) const = default;
};

/// Sum of coefficients of f over the subset given by mask.
int integrate(const Vec& f, unsigned mask, const Semiring& s);

/// Checks mu(empty) = 0 and the modular law
/// mu(K u L) + mu(K n L) = mu(K) + mu(L) for all K, L.
bool is_measure(const Measure& mu, const Semiring& s);

/// The measure Y -> integral of f over Y. Guarded at |X| <= 12.
Measure measure_of(const Vec& f, const Semiring& s);

/// All finitely additive measures on a space of size n; at finite scale this
/// is exactly { measure_of(f) : f in S^X }, of size |S|^n.
/// Guarded at |S|^n <= 4096.
std::vector<Measure> all_measures(int n, const Semiring& s);

Measure add_measures(const Measure& mu, const Measure& nu, const Semiring& s);
Measure scale_measure(int k, const Measure& mu, const Semiring& s);

/// Left: K -> mu(m^-1 K) with m^-1 K = {x : m*x in K}; right uses K m^-1.
/// The space is identified with the monoid carrier.
Measure act_monoid(int m, const Measure& mu, Side side, const FiniteMonoid& mon,
                   const Semiring& s);

/// f.mu = sum over m of f(m) . (m mu).
Measure act_semimodule(const Vec& f, const Measure& mu, Side side,
                       const FiniteMonoid& mon, const Semiring& s);

/// The vector fx with fx(y) = sum over m*x = y of f(m) (left side; right
/// side uses x*m = y).
Vec point_pushforward(const Vec& f, int x, Side side, const FiniteMonoid& mon,
                      const Semiring& s);

/// measure_of(point_pushforward(f, x)); equal to act_semimodule(f, mu_x).
Measure act_on_point(const Vec& f, int x, Side side, const FiniteMonoid& mon,
                     const Semiring& s);

inline bool in_clopen_gen(const Measure& mu, const ClopenGen& g) {
  return mu.value[g.set] == g.k;
}

}  // namespace diamond
