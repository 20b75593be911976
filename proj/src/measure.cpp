#include "diamond/measure.hpp"

#include <bit>
#include <stdexcept>

namespace diamond {

int integrate(const Vec& f, unsigned mask, const Semiring& s) {
  int acc = s.zero;
  for (size_t x = 0; x < f.size(); ++x)
    if (mask & (1u << x)) acc = s.plus(acc, f[x]);
  return acc;
}

bool is_measure(const Measure& mu, const Semiring& s) {
  if (mu.value.size() != (1u << mu.space)) return false;
  if (mu.value[0] != s.zero) return false;
  const unsigned full = mu.full_mask();
  for (unsigned k = 0; k <= full; ++k)
    for (unsigned l = 0; l <= full; ++l)
      if (s.plus(mu.value[k | l], mu.value[k & l]) !=
          s.plus(mu.value[k], mu.value[l]))
        return false;
  return true;
}

Measure measure_of(const Vec& f, const Semiring& s) {
  const int n = static_cast<int>(f.size());
  if (n > 12) throw GuardError("measure_of: space larger than guard (12)");
  Measure mu;
  mu.space = n;
  mu.value.resize(1u << n);
  mu.value[0] = s.zero;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int x = std::countr_zero(mask);
    mu.value[mask] = s.plus(mu.value[low], f[x]);
  }
  return mu;
}

std::vector<Measure> all_measures(int n, const Semiring& s) {
  long long count = 1;
  for (int i = 0; i < n; ++i) {
    count *= s.size();
    if (count > 4096) throw GuardError("all_measures: |S|^|X| exceeds guard");
  }
  std::vector<Measure> out;
  out.reserve(static_cast<size_t>(count));
  for (const Vec& f : enumerate_vecs(n, s)) out.push_back(measure_of(f, s));
  return out;
}

Measure add_measures(const Measure& mu, const Measure& nu, const Semiring& s) {
  if (mu.space != nu.space)
    throw std::invalid_argument("add_measures: space mismatch");
  Measure out = mu;
  for (size_t i = 0; i < out.value.size(); ++i)
    out.value[i] = s.plus(mu.value[i], nu.value[i]);
  return out;
}

Measure scale_measure(int k, const Measure& mu, const Semiring& s) {
  Measure out = mu;
  for (int& v : out.value) v = s.times(k, v);
  return out;
}

Measure act_monoid(int m, const Measure& mu, Side side, const FiniteMonoid& mon,
                   const Semiring& s) {
  (void)s;
  if (mu.space != mon.size())
    throw std::invalid_argument("act_monoid: space is not the monoid carrier");
  Measure out = mu;
  for (unsigned k = 0; k < mu.value.size(); ++k) {
    unsigned pre = 0;
    for (int x = 0; x < mon.size(); ++x) {
      int img = side == Side::Left ? mon.times(m, x) : mon.times(x, m);
      if (k & (1u << img)) pre |= 1u << x;
    }
    out.value[k] = mu.value[pre];
  }
  return out;
}

Measure act_semimodule(const Vec& f, const Measure& mu, Side side,
                       const FiniteMonoid& mon, const Semiring& s) {
  Measure acc = scale_measure(s.zero, mu, s);
  for (int m = 0; m < mon.size(); ++m)
    acc = add_measures(acc, scale_measure(f[m], act_monoid(m, mu, side, mon, s), s), s);
  return acc;
}

Vec point_pushforward(const Vec& f, int x, Side side, const FiniteMonoid& mon,
                      const Semiring& s) {
  Vec out(mon.size(), s.zero);
  for (int m = 0; m < mon.size(); ++m) {
    int y = side == Side::Left ? mon.times(m, x) : mon.times(x, m);
    out[y] = s.plus(out[y], f[m]);
  }
  return out;
}

Measure act_on_point(const Vec& f, int x, Side side, const FiniteMonoid& mon,
                     const Semiring& s) {
  return measure_of(point_pushforward(f, x, side, mon, s), s);
}

}  // namespace diamond
