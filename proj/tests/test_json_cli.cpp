#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamond/json_io.hpp"

using namespace diamond;

TEST_CASE("semiring round trip") {
  for (const Semiring& s : {make_bool2(), make_zq(4)}) {
    const Semiring back = semiring_from_json(semiring_to_json(s));
    CHECK(back.add == s.add);
    CHECK(back.mul == s.mul);
    CHECK(back.zero == s.zero);
    CHECK(back.one == s.one);
  }
}

TEST_CASE("semiring deserialization validates the axioms") {
  json j = semiring_to_json(make_zq(3));
  j["mul"][1][2] = 1;
  CHECK_THROWS_AS(semiring_from_json(j), std::invalid_argument);
  json mismatched = semiring_to_json(make_zq(3));
  mismatched["n"] = 4;
  CHECK_THROWS_AS(semiring_from_json(mismatched), std::invalid_argument);
}

TEST_CASE("semiring_from_spec accepts names") {
  CHECK(semiring_from_spec("zq:3").size() == 3);
  CHECK(semiring_from_spec("bool2").times(1, 1) == 1);
  CHECK_THROWS(semiring_from_spec("/nonexistent/path.json"));
}

TEST_CASE("monoid round trip") {
  const FiniteMonoid m = left_zero_monoid3();
  const FiniteMonoid back = monoid_from_json(monoid_to_json(m));
  CHECK(back.mul == m.mul);
  CHECK(back.identity == m.identity);
  json broken = monoid_to_json(m);
  broken["mul"][0][1] = 2;
  CHECK_THROWS_AS(monoid_from_json(broken), std::invalid_argument);
}

TEST_CASE("dfa round trip and validation") {
  Dfa d;
  d.states = 2;
  d.alphabet = {"a", "a'"};
  d.delta = {{0, 1}, {1, 1}};
  d.initial = 0;
  d.accepting = {0, 1};
  const Dfa back = dfa_from_json(dfa_to_json(d));
  CHECK(back.states == d.states);
  CHECK(back.delta == d.delta);
  CHECK(back.accepting == d.accepting);

  json bad = dfa_to_json(d);
  bad["delta"][0][1] = 7;
  CHECK_THROWS_AS(dfa_from_json(bad), std::invalid_argument);
}

TEST_CASE("recogniser round trip") {
  Recogniser r;
  r.morphism.alphabet = marked_alphabet({"a"});
  r.morphism.target = cyclic_monoid(2);
  r.morphism.letter_image = {0, 1};
  r.accepting = {0, 1};
  const Recogniser back = recogniser_from_json(recogniser_to_json(r));
  CHECK(back.morphism.alphabet == r.morphism.alphabet);
  CHECK(back.morphism.letter_image == r.morphism.letter_image);
  CHECK(back.morphism.target.mul == r.morphism.target.mul);
  CHECK(back.accepting == r.accepting);
}

TEST_CASE("diamond recogniser round trip") {
  Recogniser r;
  r.morphism.alphabet = marked_alphabet({"a", "b"});
  r.morphism.target = cyclic_monoid(3);
  r.morphism.letter_image = {0, 1, 2, 0};
  r.accepting = {0, 0, 1};
  const Semiring s = make_zq(3);
  for (AcceptSpec spec :
       {AcceptSpec{AcceptSpec::Kind::Qk, r.accepting, 2, {}},
        AcceptSpec{AcceptSpec::Kind::L0, r.accepting, 0, {}},
        AcceptSpec{AcceptSpec::Kind::Explicit, {}, 0,
                   {DiamondElement{{1, 0, 2}, 1}}}}) {
    const DiamondRecogniser d = ::diamond::diamond(r, s, spec);
    const DiamondRecogniser back = diamond_from_json(diamond_to_json(d));
    CHECK(back.alphabet == d.alphabet);
    CHECK(back.letter_image == d.letter_image);
    CHECK(back.dm.base.mul == d.dm.base.mul);
    CHECK(back.dm.sr.mul == d.dm.sr.mul);
    CHECK(back.accepting.kind == d.accepting.kind);
    CHECK(back.accepting.p == d.accepting.p);
    CHECK(back.accepting.k == d.accepting.k);
    CHECK(back.accepting.elems == d.accepting.elems);
    // behaviour preserved
    for (const Word& w : words_up_to(2, 4))
      CHECK(back.member(w) == d.member(w));
  }
}

TEST_CASE("word parsing prefers marked letters") {
  const auto alphabet = marked_alphabet({"a", "b"});
  CHECK(parse_word("a'ba", alphabet) == Word{1, 2, 0});
  CHECK(parse_word("", alphabet) == Word{});
  CHECK(parse_word("ab'a'", alphabet) == Word{0, 3, 1});
  CHECK_THROWS_AS(parse_word("ax", alphabet), std::invalid_argument);
}
