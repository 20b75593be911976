#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/semimodule.hpp"

using namespace diamond;

TEST_CASE("enumeration and indexing are inverse") {
  for (const Semiring& s : {make_bool2(), make_zq(3)}) {
    for (int n = 0; n <= 3; ++n) {
      const auto vecs = enumerate_vecs(n, s);
      CHECK(static_cast<long long>(vecs.size()) == enumerate_vecs_count(n, s));
      for (size_t i = 0; i < vecs.size(); ++i)
        CHECK(vec_index(vecs[i], s) == static_cast<long long>(i));
    }
  }
}

TEST_CASE("vector arithmetic") {
  const Semiring s = make_zq(4);
  const Vec f = {1, 2, 3};
  const Vec g = {3, 3, 0};
  CHECK(add_vec(f, g, s) == Vec{0, 1, 3});
  CHECK(scale_vec(2, f, s) == Vec{2, 0, 2});
  CHECK(add_vec(f, zero_vec(3, s), s) == f);
  CHECK(unit_vec(3, 1, s) == Vec{0, 1, 0});
}

TEST_CASE("pushforward sums over fibres") {
  const Semiring s = make_zq(3);
  // psi: 0,1 -> 0 and 2 -> 1
  const Vec f = {1, 2, 2};
  CHECK(map_vec({0, 0, 1}, 2, f, s) == Vec{0, 2});
}

TEST_CASE("units convolve to units") {
  for (const FiniteMonoid& m :
       {trivial_monoid(), cyclic_monoid(3), left_zero_monoid3()}) {
    const Semiring s = make_zq(3);
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b)
        CHECK(convolve(unit_vec(m.size(), a, s), unit_vec(m.size(), b, s), m, s) ==
              unit_vec(m.size(), m.times(a, b), s));
  }
}

TEST_CASE("translations agree with convolution by a unit") {
  const FiniteMonoid m = left_zero_monoid3();
  for (const Semiring& s : {make_bool2(), make_zq(3)}) {
    for (const Vec& f : enumerate_vecs(m.size(), s))
      for (int x = 0; x < m.size(); ++x) {
        CHECK(translate_left(x, f, m, s) ==
              convolve(unit_vec(m.size(), x, s), f, m, s));
        CHECK(translate_right(f, x, m, s) ==
              convolve(f, unit_vec(m.size(), x, s), m, s));
      }
  }
}

TEST_CASE("the two convolution products agree on a noncommutative monoid") {
  const FiniteMonoid m = left_zero_monoid3();
  const Semiring s = make_zq(4);
  for (const Vec& f : enumerate_vecs(m.size(), s))
    for (const Vec& g : enumerate_vecs(m.size(), s))
      CHECK(convolve(f, g, m, s) == convolve_rev(f, g, m, s));
}

TEST_CASE("boolean convolution is set product") {
  const FiniteMonoid m = cyclic_monoid(3);
  const Semiring s = make_bool2();
  const Vec f = {1, 1, 0};  // {0, 1}
  const Vec g = {0, 1, 1};  // {1, 2}
  // {0+1, 0+2, 1+1, 1+2} = {1, 2, 0}
  CHECK(convolve(f, g, m, s) == Vec{1, 1, 1});
}

TEST_CASE("monad multiplication flattens formal sums") {
  const Semiring s = make_zq(2);
  const int n = 2;
  // F = 1.(x0 + x1) + 1.(x1): base index of {1,1} is 3, of {0,1} is 2
  Vec big = zero_vec(4, s);
  big[3] = 1;
  big[2] = 1;
  CHECK(mult_vec(big, n, s) == Vec{1, 0});
  CHECK_THROWS_AS(mult_vec(Vec(8192, 0), 13, s), GuardError);
}

TEST_CASE("word series operations") {
  const Semiring s = make_zq(3);
  const Word a = {0}, b = {1}, ab = {0, 1};
  WordSeries u{{a, 1}, {b, 2}};
  WordSeries v{{b, 1}};
  // 2.b + 1.b = 0.b over Z3: zero coefficients are dropped
  CHECK(series_add(u, v, s) == WordSeries{{a, 1}});
  CHECK(series_concat(u, v, s) == WordSeries{{ab, 1}, {{1, 1}, 2}});
}

TEST_CASE("series pushforward along a morphism") {
  MonoidMorphism phi{{"a", "b"}, cyclic_monoid(2), {1, 0}};
  const Semiring s = make_zq(3);
  WordSeries u{{{0}, 1}, {{0, 0}, 1}, {{1}, 2}};
  // a -> 1, aa -> 0, b -> 0: coefficients 1 at 1, 1+2 at 0
  CHECK(series_map(phi, u, s) == Vec{0, 1});
}

TEST_CASE("matrix product validates dimensions") {
  auto add = [](int a, int b) { return a + b; };
  auto mul = [](int a, int b) { return a * b; };
  Matrix<int> a = {{1, 2}, {3, 4}};
  Matrix<int> b = {{1, 0}, {0, 1}};
  CHECK(mat_mul(a, b, 0, add, mul) == a);
  Matrix<int> bad = {{1, 2, 3}};
  CHECK_THROWS_AS(mat_mul(a, bad, 0, add, mul), std::invalid_argument);
}

TEST_CASE("formatting is deterministic") {
  const Semiring s = make_zq(3);
  CHECK(format_vec({0, 0, 0}, s) == "0");
  const std::string text = format_vec({1, 0, 2}, s);
  CHECK(text.find("x0") != std::string::npos);
  CHECK(text.find("x2") != std::string::npos);
  CHECK(text.find("x1") == std::string::npos);
}
