#include "diamond/duality.hpp"

#include "fmt_util.hpp"
#include <map>
#include <set>

namespace diamond {

unsigned subset_to_mask(const Subset& p) {
  if (p.size() > 31) throw GuardError("subset_to_mask: carrier too large");
  unsigned mask = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i]) mask |= 1u << i;
  return mask;
}

Subset mask_to_subset(unsigned mask, int n) {
  Subset p(n, 0);
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) p[i] = 1;
  return p;
}

unsigned mask_quotient(const FiniteMonoid& mon, int m, unsigned kset, Side side) {
  unsigned out = 0;
  for (int x = 0; x < mon.size(); ++x) {
    int img = side == Side::Left ? mon.times(m, x) : mon.times(x, m);
    if (kset & (1u << img)) out |= 1u << x;
  }
  return out;
}

ClopenGen gen_quotient(const FiniteMonoid& mon, int m, unsigned kset, int k,
                       Side side) {
  return {mask_quotient(mon, m, kset, side), k};
}

unsigned support_quotient_set(const FiniteMonoid& mon, const Semiring& s,
                              const Vec& f, unsigned kset, int k, Side side) {
  unsigned out = 0;
  for (int x = 0; x < mon.size(); ++x) {
    // the split I = {n in Sup(f) : n*x in K} is forced by x
    int acc = s.zero;
    for (int n = 0; n < mon.size(); ++n) {
      if (f[n] == s.zero) continue;
      int img = side == Side::Left ? mon.times(n, x) : mon.times(x, n);
      if (kset & (1u << img)) acc = s.plus(acc, f[n]);
    }
    if (acc == k) out |= 1u << x;
  }
  return out;
}

bool pair_quotient_pred(const FiniteMonoid& mon, const Semiring& s,
                        const Vec& f, int m, unsigned kset, int k,
                        const Measure& mu, int x, Side side) {
  for (int k1 = 0; k1 < s.size(); ++k1)
    for (int k2 = 0; k2 < s.size(); ++k2) {
      if (s.plus(k1, k2) != k) continue;
      if (mu.value[mask_quotient(mon, m, kset, side)] != k1) continue;
      if (support_quotient_set(mon, s, f, kset, k2, side) & (1u << x)) return true;
    }
  return false;
}

DualityReport check_duality(const FiniteMonoid& mon, const Semiring& s) {
  DualityReport report;
  auto fail = [&](std::string msg) {
    if (report.failures.size() < 32) report.failures.push_back(std::move(msg));
  };
  const int n = mon.size();
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= s.size();
    if (space > 256) throw GuardError("check_duality: |S|^|M| exceeds guard");
  }
  auto measures = all_measures(n, s);
  auto vecs = enumerate_vecs(n, s);
  const unsigned full = (1u << n) - 1u;

  for (const Vec& f : vecs)
    for (int m = 0; m < n; ++m)
      for (unsigned kset = 0; kset <= full; ++kset)
        for (int k = 0; k < s.size(); ++k) {
          ClopenGen gen{kset, k};
          ClopenGen lifted = gen_quotient(mon, m, kset, k, Side::Left);
          for (const Measure& mu : measures) {
            ++report.checked;
            // lambda_11 vs Lambda_11
            bool space_side =
                in_clopen_gen(act_monoid(m, mu, Side::Left, mon, s), gen);
            if (space_side != in_clopen_gen(mu, lifted))
              fail(detail::fmt("l11/L11 mismatch at m={} K={} k={}", m, kset, k));
            for (int x = 0; x < n; ++x) {
              // lambda_12 vs Lambda_12
              bool l12 = in_clopen_gen(act_on_point(f, x, Side::Left, mon, s), gen);
              bool L12 = (support_quotient_set(mon, s, f, kset, k, Side::Left) &
                          (1u << x)) != 0;
              if (l12 != L12)
                fail(detail::fmt("l12/L12 mismatch at x={} K={} k={}", x, kset, k));
              // lambda_1 vs Lambda_1
              Measure combined =
                  add_measures(act_monoid(m, mu, Side::Left, mon, s),
                               act_on_point(f, x, Side::Left, mon, s), s);
              bool l1 = in_clopen_gen(combined, gen);
              bool L1 = pair_quotient_pred(mon, s, f, m, kset, k, mu, x, Side::Left);
              if (l1 != L1)
                fail(detail::fmt("l1/L1 mismatch at m={} x={} K={} k={}", m, x,
                                 kset, k));
              // lambda_2 vs Lambda_2
              bool l2 = (kset & (1u << mon.times(m, x))) != 0;
              bool L2 = (mask_quotient(mon, m, kset, Side::Left) & (1u << x)) != 0;
              if (l2 != L2)
                fail(detail::fmt("l2/L2 mismatch at m={} x={} K={}", m, x, kset));
            }
          }
        }
  return report;
}

bool QuotientDecomposition::member_element(const DiamondElement& e,
                                           const Semiring& s) const {
  for (const auto& part : parts) {
    if (integrate(e.f, part.qk_gen.set, s) != part.qk_gen.k) continue;
    if (part.l0_set & (1u << e.m)) return true;
  }
  return false;
}

QuotientDecomposition quotient_qk(const Word& u, const Recogniser& phi, int k,
                                  const Semiring& s, Side side) {
  const FiniteMonoid& mon = phi.morphism.target;
  QuotientDecomposition d;
  d.f_u = f_of_word(phi.morphism, u, s);
  d.m_u = phi.morphism.eval(lift0(u));
  d.kset = subset_to_mask(phi.accepting);
  d.k = k;
  d.side = side;
  for (int k1 = 0; k1 < s.size(); ++k1)
    for (int k2 = 0; k2 < s.size(); ++k2) {
      if (s.plus(k1, k2) != k) continue;
      QuotientPart part;
      part.k1 = k1;
      part.k2 = k2;
      part.qk_gen = gen_quotient(mon, d.m_u, d.kset, k1, side);
      part.l0_set = support_quotient_set(mon, s, d.f_u, d.kset, k2, side);
      d.parts.push_back(part);
    }
  return d;
}

namespace {

using SubsetFamily = std::set<unsigned>;

// closure under complement, binary intersection and left/right quotients
SubsetFamily close_family(SubsetFamily family, unsigned full,
                          const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> cur(family.begin(), family.end());
    auto insert = [&](unsigned t) {
      if (family.insert(t).second) grew = true;
    };
    for (unsigned t : cur) insert(~t & full);
    for (unsigned t : cur)
      for (unsigned r : cur) insert(t & r);
    for (unsigned t : cur)
      for (int d = 0; d < n; ++d) {
        unsigned left = 0, right = 0;
        for (int e = 0; e < n; ++e) {
          if (t & (1u << mul[d][e])) left |= 1u << e;
          if (t & (1u << mul[e][d])) right |= 1u << e;
        }
        insert(left);
        insert(right);
      }
  }
  return family;
}

}  // namespace

ReutenauerReport reutenauer_check(const Recogniser& phi, const Semiring& s) {
  AcceptSpec acc;
  acc.kind = AcceptSpec::Kind::L0;
  acc.p.assign(phi.morphism.target.size(), 0);
  DiamondRecogniser psi = diamond(phi, s, acc);

  // image submonoid of the diamond morphism
  std::vector<DiamondElement> image{psi.dm.identity()};
  std::map<DiamondElement, int> index{{image[0], 0}};
  for (size_t i = 0; i < image.size(); ++i)
    for (const auto& g : psi.letter_image) {
      DiamondElement next = psi.dm.times(image[i], g);
      if (!index.count(next)) {
        if (image.size() >= 14) throw GuardError("reutenauer_check: image too large");
        index[next] = static_cast<int>(image.size());
        image.push_back(next);
      }
    }
  const int n = static_cast<int>(image.size());
  const unsigned full = (1u << n) - 1u;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a][b] = index.at(psi.dm.times(image[a], image[b]));

  // every subset of the image is the trace of an accepting set of some
  // length-preserving recogniser (psi itself), so the recognised family is
  // generated by the singleton traces
  SubsetFamily recognised;
  recognised.insert(0);
  for (int i = 0; i < n; ++i) recognised.insert(1u << i);
  recognised = close_family(std::move(recognised), full, mul);

  // traces of the L0 and Qk accepting sets
  SubsetFamily generated;
  generated.insert(0);
  const int msize = phi.morphism.target.size();
  for (unsigned pmask = 0; pmask < (1u << msize); ++pmask) {
    Subset p = mask_to_subset(pmask, msize);
    unsigned l0 = 0;
    for (int i = 0; i < n; ++i)
      if (l0_accepts(image[i], p)) l0 |= 1u << i;
    generated.insert(l0);
    for (int k = 0; k < s.size(); ++k) {
      unsigned qk = 0;
      for (int i = 0; i < n; ++i)
        if (qk_accepts(image[i], p, k, s)) qk |= 1u << i;
      generated.insert(qk);
    }
  }
  generated = close_family(std::move(generated), full, mul);

  ReutenauerReport report;
  report.image_size = n;
  report.recognised_family = recognised.size();
  report.generated_family = generated.size();
  report.equal = recognised == generated;
  return report;
}

}  // namespace diamond
