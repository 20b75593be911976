#pragma once

#include "diamond/quantify.hpp"

namespace diamond {

unsigned subset_to_mask(const Subset& p);
Subset mask_to_subset(unsigned mask, int n);

/// Quotient of a clopen generator by a monoid element:
/// [K,k] -> [m^-1 K, k] (left) or [K m^-1, k] (right).
ClopenGen gen_quotient(const FiniteMonoid& mon, int m, unsigned kset, int k,
                       Side side);

/// Quotient of a monoid subset: m^-1 K (left) or K m^-1 (right).
unsigned mask_quotient(const FiniteMonoid& mon, int m, unsigned kset, Side side);

/// The base-monoid subset dual to the support decomposition of f:
/// x belongs iff the sum of f over {n in Sup(f) : n*x in K} equals k
/// (left side; right side uses x*n).
unsigned support_quotient_set(const FiniteMonoid& mon, const Semiring& s,
                              const Vec& f, unsigned kset, int k, Side side);

/// Combined quotient predicate on pairs (mu, x): true iff some split
/// k1 + k2 = k has mu(m^-1 K) = k1 and x in the support set for k2.
bool pair_quotient_pred(const FiniteMonoid& mon, const Semiring& s,
                        const Vec& f, int m, unsigned kset, int k,
                        const Measure& mu, int x, Side side);

struct DualityReport {
  long long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustively verifies the four duality biconditionals between the
/// measure-side actions and the algebra-side quotient operators, over all
/// (f, m), measures, points, subsets and semiring values.
/// Guarded at |S|^|M| <= 256.
DualityReport check_duality(const FiniteMonoid& mon, const Semiring& s);

/// One (k1, k2) split of the quotient decomposition of u^-1 Q_k(L).
struct QuotientPart {
  int k1 = 0;
  int k2 = 0;
  ClopenGen qk_gen;   // [phi(u0)^-1 K, k1]
  unsigned l0_set = 0;  // Boolean combination over subsets of Sup(f_u)
};

struct QuotientDecomposition {
  Vec f_u;
  int m_u = 0;
  unsigned kset = 0;
  int k = 0;
  Side side = Side::Left;
  std::vector<QuotientPart> parts;

  /// Membership of a diamond-monoid element in the decomposed language.
  bool member_element(const DiamondElement& e, const Semiring& s) const;
};

/// Decomposition of u^-1 Q_k(L) (or Q_k(L) u^-1) for L = phi^-1(accepting),
/// phi over a marked alphabet; u is a word over the base alphabet.
QuotientDecomposition quotient_qk(const Word& u, const Recogniser& phi, int k,
                                  const Semiring& s, Side side = Side::Left);

struct ReutenauerReport {
  int image_size = 0;
  size_t recognised_family = 0;  // quotient-closed BA from all recognised sets
  size_t generated_family = 0;   // from the L0 / Qk generator traces
  bool equal = false;
};

/// Compares, on the image submonoid of the diamond morphism of phi, the
/// quotient-closed Boolean set family generated by all length-preserving-
/// recognised accepting sets against the one generated by the L0 and Qk
/// generator traces. Exact set-family equality. Guarded at image size <= 14.
ReutenauerReport reutenauer_check(const Recogniser& phi, const Semiring& s);

}  // namespace diamond
