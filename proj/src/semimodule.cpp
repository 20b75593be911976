#include "diamond/semimodule.hpp"

#include "fmt_util.hpp"
#include <stdexcept>

namespace diamond {

Vec zero_vec(int n, const Semiring& s) { return Vec(n, s.zero); }

Vec unit_vec(int n, int x, const Semiring& s) {
  if (x < 0 || x >= n) throw std::out_of_range("unit_vec: base element out of range");
  Vec f(n, s.zero);
  f[x] = s.one;
  return f;
}

Vec add_vec(const Vec& f, const Vec& g, const Semiring& s) {
  if (f.size() != g.size()) throw std::invalid_argument("add_vec: base mismatch");
  Vec out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = s.plus(f[i], g[i]);
  return out;
}

Vec scale_vec(int k, const Vec& f, const Semiring& s) {
  Vec out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = s.times(k, f[i]);
  return out;
}

Vec map_vec(const std::vector<int>& psi, int target_size, const Vec& f,
            const Semiring& s) {
  if (psi.size() != f.size()) throw std::invalid_argument("map_vec: psi not total");
  Vec out(target_size, s.zero);
  for (size_t x = 0; x < f.size(); ++x) {
    if (psi[x] < 0 || psi[x] >= target_size)
      throw std::out_of_range("map_vec: psi image out of range");
    out[psi[x]] = s.plus(out[psi[x]], f[x]);
  }
  return out;
}

long long enumerate_vecs_count(int n, const Semiring& s) {
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= s.size();
    if (total > (1LL << 40)) throw GuardError("enumerate_vecs: base too large");
  }
  return total;
}

std::vector<Vec> enumerate_vecs(int n, const Semiring& s) {
  long long total = enumerate_vecs_count(n, s);
  if (total > 1 << 20) throw GuardError("enumerate_vecs: base too large");
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(total));
  for (long long i = 0; i < total; ++i) {
    Vec f(n);
    long long c = i;
    for (int j = 0; j < n; ++j) {
      f[j] = static_cast<int>(c % s.size());
      c /= s.size();
    }
    out.push_back(std::move(f));
  }
  return out;
}

long long vec_index(const Vec& f, const Semiring& s) {
  long long idx = 0;
  for (size_t j = f.size(); j-- > 0;) idx = idx * s.size() + f[j];
  return idx;
}

Vec mult_vec(const Vec& F, int base_size, const Semiring& s) {
  long long inner = enumerate_vecs_count(base_size, s);
  if (inner > 4096) throw GuardError("mult_vec: enumeration guard exceeded");
  if (static_cast<long long>(F.size()) != inner)
    throw std::invalid_argument("mult_vec: F is not indexed by S_f(X)");
  auto inner_vecs = enumerate_vecs(base_size, s);
  Vec out(base_size, s.zero);
  for (long long i = 0; i < inner; ++i)
    for (int x = 0; x < base_size; ++x)
      out[x] = s.plus(out[x], s.times(F[i], inner_vecs[i][x]));
  return out;
}

Vec convolve(const Vec& f, const Vec& g, const FiniteMonoid& m,
             const Semiring& s) {
  const int n = m.size();
  if (static_cast<int>(f.size()) != n || static_cast<int>(g.size()) != n)
    throw std::invalid_argument("convolve: vectors not over the monoid carrier");
  Vec out(n, s.zero);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = m.times(a, b);
      out[x] = s.plus(out[x], s.times(f[a], g[b]));
    }
  return out;
}

Vec convolve_rev(const Vec& f, const Vec& g, const FiniteMonoid& m,
                 const Semiring& s) {
  const int n = m.size();
  if (static_cast<int>(f.size()) != n || static_cast<int>(g.size()) != n)
    throw std::invalid_argument("convolve: vectors not over the monoid carrier");
  Vec out(n, s.zero);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = m.times(a, b);
      out[x] = s.plus(out[x], s.times(g[b], f[a]));
    }
  return out;
}

Vec translate_left(int m, const Vec& f, const FiniteMonoid& mon,
                   const Semiring& s) {
  Vec out(mon.size(), s.zero);
  for (int n = 0; n < mon.size(); ++n) {
    int y = mon.times(m, n);
    out[y] = s.plus(out[y], f[n]);
  }
  return out;
}

Vec translate_right(const Vec& f, int m, const FiniteMonoid& mon,
                    const Semiring& s) {
  Vec out(mon.size(), s.zero);
  for (int n = 0; n < mon.size(); ++n) {
    int y = mon.times(n, m);
    out[y] = s.plus(out[y], f[n]);
  }
  return out;
}

WordSeries series_add(const WordSeries& a, const WordSeries& b,
                      const Semiring& s) {
  WordSeries out = a;
  for (const auto& [w, c] : b) {
    auto it = out.find(w);
    int v = it == out.end() ? c : s.plus(it->second, c);
    if (v == s.zero)
      out.erase(w);
    else
      out[w] = v;
  }
  // normalize zeros possibly present in a
  for (auto it = out.begin(); it != out.end();)
    it = it->second == s.zero ? out.erase(it) : std::next(it);
  return out;
}

WordSeries series_concat(const WordSeries& a, const WordSeries& b,
                         const Semiring& s) {
  WordSeries out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      auto it = out.find(w);
      int acc = it == out.end() ? s.zero : it->second;
      out[w] = s.plus(acc, s.times(cu, cv));
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == s.zero ? out.erase(it) : std::next(it);
  return out;
}

Vec series_map(const MonoidMorphism& phi, const WordSeries& a,
               const Semiring& s) {
  Vec out(phi.target.size(), s.zero);
  for (const auto& [w, c] : a) {
    int m = phi.eval(w);
    out[m] = s.plus(out[m], c);
  }
  return out;
}

std::string format_vec(const Vec& f, const Semiring& s) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == s.zero) continue;
    if (!out.empty()) out += " + ";
    out += detail::fmt("{}·x{}", f[i], i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace diamond
