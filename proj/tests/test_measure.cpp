#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diamond/duality.hpp"
#include "diamond/measure.hpp"

using namespace diamond;

TEST_CASE("integration sums over the subset") {
  const Semiring s = make_zq(5);
  const Vec f = {1, 2, 3};
  CHECK(integrate(f, 0b000, s) == 0);
  CHECK(integrate(f, 0b101, s) == 4);
  CHECK(integrate(f, 0b111, s) == 1);
}

TEST_CASE("integrals are measures") {
  for (const Semiring& s : {make_bool2(), make_zq(3)}) {
    for (int n = 0; n <= 3; ++n)
      for (const Vec& f : enumerate_vecs(n, s)) {
        const Measure mu = measure_of(f, s);
        CHECK(mu.space == n);
        CHECK(is_measure(mu, s));
        for (unsigned mask = 0; mask <= mu.full_mask(); ++mask)
          CHECK(mu(mask) == integrate(f, mask, s));
      }
  }
}

TEST_CASE("non-additive set functions are rejected") {
  const Semiring s = make_zq(3);
  Measure mu;
  mu.space = 2;
  mu.value = {0, 1, 1, 1};  // mu({0,1}) should be 2
  CHECK_FALSE(is_measure(mu, s));
  mu.value = {1, 0, 0, 0};  // mu(empty) nonzero
  CHECK_FALSE(is_measure(mu, s));
  mu.value = {0, 1, 1, 2};
  CHECK(is_measure(mu, s));
}

TEST_CASE("measures are exactly integrals on small spaces") {
  for (const Semiring& s : {make_bool2(), make_zq(4)}) {
    for (int n = 0; n <= 2; ++n) {
      std::set<std::vector<int>> integrals;
      for (const Vec& f : enumerate_vecs(n, s))
        integrals.insert(measure_of(f, s).value);
      long long expected = 1;
      for (int i = 0; i < n; ++i) expected *= s.size();
      CHECK(static_cast<long long>(integrals.size()) == expected);
      const auto all = all_measures(n, s);
      CHECK(all.size() == integrals.size());
      for (const Measure& mu : all) {
        CHECK(is_measure(mu, s));
        CHECK(integrals.count(mu.value) == 1);
      }
    }
  }
}

TEST_CASE("monoid action on measures is quotienting") {
  const FiniteMonoid mon = left_zero_monoid3();
  const Semiring s = make_zq(2);
  for (const Vec& f : enumerate_vecs(mon.size(), s)) {
    const Measure mu = measure_of(f, s);
    for (int m = 0; m < mon.size(); ++m)
      for (Side side : {Side::Left, Side::Right}) {
        const Measure acted = act_monoid(m, mu, side, mon, s);
        CHECK(is_measure(acted, s));
        for (unsigned mask = 0; mask <= mu.full_mask(); ++mask)
          CHECK(acted(mask) == mu(mask_quotient(mon, m, mask, side)));
      }
  }
}

TEST_CASE("semimodule action is the linear extension of the monoid action") {
  const FiniteMonoid mon = cyclic_monoid(3);
  const Semiring s = make_zq(3);
  for (const Vec& f : enumerate_vecs(mon.size(), s))
    for (const Vec& g : enumerate_vecs(mon.size(), s)) {
      const Measure mu = measure_of(g, s);
      for (Side side : {Side::Left, Side::Right}) {
        Measure expected{mon.size(),
                         std::vector<int>(1u << mon.size(), s.zero)};
        for (int m = 0; m < mon.size(); ++m)
          expected = add_measures(
              expected, scale_measure(f[m], act_monoid(m, mu, side, mon, s), s),
              s);
        const Measure got = act_semimodule(f, mu, side, mon, s);
        CHECK(got.value == expected.value);
      }
    }
}

TEST_CASE("point action matches the pushforward integral") {
  const FiniteMonoid mon = left_zero_monoid3();
  const Semiring s = make_zq(4);
  for (const Vec& f : enumerate_vecs(mon.size(), s))
    for (int x = 0; x < mon.size(); ++x)
      for (Side side : {Side::Left, Side::Right}) {
        const Measure direct = act_on_point(f, x, side, mon, s);
        const Measure via_action = act_semimodule(
            f, measure_of(unit_vec(mon.size(), x, s), s), side, mon, s);
        CHECK(direct.value == via_action.value);
        CHECK(direct.value == measure_of(point_pushforward(f, x, side, mon, s), s).value);
      }
}

TEST_CASE("guards") {
  const Semiring s = make_zq(2);
  CHECK_THROWS_AS(measure_of(Vec(13, 0), s), GuardError);
  CHECK_THROWS_AS(all_measures(13, s), GuardError);
}

TEST_CASE("clopen generator membership") {
  const Semiring s = make_zq(3);
  const Measure mu = measure_of(Vec{1, 2}, s);
  CHECK(in_clopen_gen(mu, ClopenGen{0b11, 0}));
  CHECK(in_clopen_gen(mu, ClopenGen{0b01, 1}));
  CHECK_FALSE(in_clopen_gen(mu, ClopenGen{0b10, 1}));
}
