#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/duality.hpp"

using namespace diamond;

TEST_CASE("mask and subset conversions are inverse") {
  for (unsigned mask = 0; mask < 16; ++mask)
    CHECK(subset_to_mask(mask_to_subset(mask, 4)) == mask);
  CHECK(mask_to_subset(0b101, 3) == Subset{1, 0, 1});
}

TEST_CASE("mask quotient agrees with subset quotient") {
  const FiniteMonoid m = left_zero_monoid3();
  for (unsigned kset = 0; kset < 8; ++kset)
    for (int x = 0; x < 3; ++x)
      for (Side side : {Side::Left, Side::Right})
        CHECK(mask_quotient(m, x, kset, side) ==
              subset_to_mask(quotient_set(m, x, mask_to_subset(kset, 3), side)));
}

TEST_CASE("support quotient set is definitional") {
  const FiniteMonoid m = cyclic_monoid(3);
  const Semiring s = make_zq(2);
  for (const Vec& f : enumerate_vecs(3, s))
    for (unsigned kset = 0; kset < 8; ++kset)
      for (int k = 0; k < 2; ++k) {
        const unsigned got = support_quotient_set(m, s, f, kset, k, Side::Left);
        for (int x = 0; x < 3; ++x) {
          int acc = s.zero;
          for (int n = 0; n < 3; ++n)
            if (f[n] != s.zero && (kset & (1u << m.times(n, x))))
              acc = s.plus(acc, f[n]);
          CHECK(((got >> x) & 1u) == static_cast<unsigned>(acc == k ? 1 : 0));
        }
      }
}

TEST_CASE("duality biconditionals hold exhaustively") {
  const DualityReport r = check_duality(cyclic_monoid(2), make_zq(3));
  CHECK(r.checked > 0);
  CHECK(r.failures.empty());
}

TEST_CASE("duality guard") {
  CHECK_THROWS_AS(check_duality(cyclic_monoid(5), make_zq(4)), GuardError);
}

TEST_CASE("quotients of the existential language") {
  // phi: a -> identity, a' -> the flip of Z2; P = {1}; over bool2 with k = 1
  // this recognises Q(exists)(odd marked a) = every nonempty word.
  Recogniser rec;
  rec.morphism.alphabet = marked_alphabet({"a"});
  rec.morphism.target = cyclic_monoid(2);
  rec.morphism.letter_image = {0, 1};
  rec.accepting = {0, 1};
  const Semiring s = make_bool2();

  const DiamondRecogniser d =
      ::diamond::diamond(rec, s, AcceptSpec{AcceptSpec::Kind::Qk, rec.accepting, 1, {}});
  const QuotientDecomposition q1 = quotient_qk({0}, rec, 1, s, Side::Left);
  const QuotientDecomposition q0 = quotient_qk({0}, rec, 0, s, Side::Left);
  for (const Word& w : words_up_to(1, 6)) {
    // a^-1 of "nonempty" is everything; a^-1 of "empty word only" is nothing
    CHECK(q1.member_element(d.eval(w), s));
    CHECK_FALSE(q0.member_element(d.eval(w), s));
  }
}

TEST_CASE("quotient decomposition covers exactly the semiring splits") {
  Recogniser rec;
  rec.morphism.alphabet = marked_alphabet({"a"});
  rec.morphism.target = cyclic_monoid(2);
  rec.morphism.letter_image = {1, 1};
  rec.accepting = {0, 1};
  const Semiring s = make_zq(3);
  const QuotientDecomposition d = quotient_qk({0, 0}, rec, 2, s, Side::Right);
  CHECK(d.parts.size() == 3);  // 0+2, 1+1, 2+0
  for (const QuotientPart& p : d.parts) CHECK(s.plus(p.k1, p.k2) == 2);
  CHECK(d.m_u == 0);
  CHECK(d.f_u == f_of_word(rec.morphism, {0, 0}, s));
}

TEST_CASE("reutenauer families on the trivial base monoid") {
  Recogniser rec;
  rec.morphism.alphabet = marked_alphabet({"a"});
  rec.morphism.target = trivial_monoid();
  rec.morphism.letter_image = {0, 0};
  rec.accepting = {0};

  // one-element semiring: the diamond image is a point, both algebras are
  // {empty, point}
  const ReutenauerReport degenerate = reutenauer_check(rec, make_zq(1));
  CHECK(degenerate.image_size == 1);
  CHECK(degenerate.recognised_family == 2);
  CHECK(degenerate.generated_family == 2);
  CHECK(degenerate.equal);

  const ReutenauerReport r = reutenauer_check(rec, make_bool2());
  CHECK(r.image_size == 2);
  CHECK(r.equal);
  CHECK(r.recognised_family == 4);
}
