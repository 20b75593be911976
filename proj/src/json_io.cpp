#include "diamond/json_io.hpp"

#include <fstream>

namespace diamond {

namespace {

std::vector<int> accepting_list(const Subset& p) {
  std::vector<int> out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i]) out.push_back(static_cast<int>(i));
  return out;
}

Subset accepting_subset(const json& j, int n) {
  Subset p(n, 0);
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= n) throw std::invalid_argument("accepting id out of range");
    p[v] = 1;
  }
  return p;
}

}  // namespace

json semiring_to_json(const Semiring& s) {
  return json{{"n", s.size()}, {"add", s.add}, {"mul", s.mul},
              {"zero", s.zero}, {"one", s.one}};
}

Semiring semiring_from_json(const json& j) {
  Semiring s;
  s.add = j.at("add").get<std::vector<std::vector<int>>>();
  s.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  s.zero = j.at("zero").get<int>();
  s.one = j.at("one").get<int>();
  if (j.contains("n") && j.at("n").get<int>() != s.size())
    throw std::invalid_argument("semiring: n does not match table size");
  auto bad = check_axioms(s);
  if (!bad.empty())
    throw std::invalid_argument("semiring axioms fail: " + bad.front());
  return s;
}

Semiring semiring_from_spec(const std::string& spec) {
  if (spec == "bool2" || spec.rfind("zq:", 0) == 0)
    return semiring_from_name(spec);
  return semiring_from_json(load_json_file(spec));
}

json monoid_to_json(const FiniteMonoid& m) {
  return json{{"size", m.size()}, {"mul", m.mul}, {"identity", m.identity}};
}

FiniteMonoid monoid_from_json(const json& j) {
  FiniteMonoid m;
  m.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  m.identity = j.at("identity").get<int>();
  auto bad = check_monoid_axioms(m);
  if (!bad.empty())
    throw std::invalid_argument("monoid axioms fail: " + bad.front());
  return m;
}

json dfa_to_json(const Dfa& d) {
  return json{{"states", d.states},   {"alphabet", d.alphabet},
              {"delta", d.delta},     {"initial", d.initial},
              {"accepting", accepting_list(d.accepting)}};
}

Dfa dfa_from_json(const json& j) {
  Dfa d;
  d.states = j.at("states").get<int>();
  d.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  d.delta = j.at("delta").get<std::vector<std::vector<int>>>();
  d.initial = j.at("initial").get<int>();
  d.accepting = accepting_subset(j.at("accepting"), d.states);
  if (static_cast<int>(d.delta.size()) != d.states)
    throw std::invalid_argument("dfa: delta has wrong number of rows");
  for (const auto& row : d.delta) {
    if (row.size() != d.alphabet.size())
      throw std::invalid_argument("dfa: delta row width mismatch");
    for (int t : row)
      if (t < 0 || t >= d.states)
        throw std::invalid_argument("dfa: transition target out of range");
  }
  if (d.initial < 0 || d.initial >= d.states)
    throw std::invalid_argument("dfa: initial state out of range");
  return d;
}

json recogniser_to_json(const Recogniser& r) {
  json letters = json::object();
  for (size_t a = 0; a < r.morphism.alphabet.size(); ++a)
    letters[r.morphism.alphabet[a]] = r.morphism.letter_image[a];
  return json{{"monoid", monoid_to_json(r.morphism.target)},
              {"alphabet", r.morphism.alphabet},
              {"letters", letters},
              {"accepting", accepting_list(r.accepting)}};
}

Recogniser recogniser_from_json(const json& j) {
  Recogniser r;
  r.morphism.target = monoid_from_json(j.at("monoid"));
  const auto& letters = j.at("letters");
  if (j.contains("alphabet"))
    r.morphism.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  else
    for (auto it = letters.begin(); it != letters.end(); ++it)
      r.morphism.alphabet.push_back(it.key());
  for (const auto& name : r.morphism.alphabet) {
    int img = letters.at(name).get<int>();
    if (img < 0 || img >= r.morphism.target.size())
      throw std::invalid_argument("letter image out of range");
    r.morphism.letter_image.push_back(img);
  }
  r.accepting = accepting_subset(j.at("accepting"), r.morphism.target.size());
  return r;
}

json diamond_to_json(const DiamondRecogniser& d) {
  json letters = json::object();
  for (size_t a = 0; a < d.alphabet.size(); ++a)
    letters[d.alphabet[a]] =
        json{{"f", d.letter_image[a].f}, {"m", d.letter_image[a].m}};
  json acc;
  switch (d.accepting.kind) {
    case AcceptSpec::Kind::Qk:
      acc = json{{"kind", "qk"},
                 {"P", accepting_list(d.accepting.p)},
                 {"k", d.accepting.k}};
      break;
    case AcceptSpec::Kind::L0:
      acc = json{{"kind", "l0"}, {"P", accepting_list(d.accepting.p)}};
      break;
    case AcceptSpec::Kind::Explicit: {
      json elems = json::array();
      for (const auto& e : d.accepting.elems)
        elems.push_back(json{{"f", e.f}, {"m", e.m}});
      acc = json{{"kind", "explicit"}, {"elements", elems}};
      break;
    }
  }
  return json{{"type", "diamond"},
              {"alphabet", d.alphabet},
              {"semiring", semiring_to_json(d.dm.sr)},
              {"monoid", monoid_to_json(d.dm.base)},
              {"letters", letters},
              {"accepting", acc}};
}

DiamondRecogniser diamond_from_json(const json& j) {
  DiamondRecogniser d;
  d.dm.base = monoid_from_json(j.at("monoid"));
  d.dm.sr = semiring_from_json(j.at("semiring"));
  d.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  const auto& letters = j.at("letters");
  for (const auto& name : d.alphabet) {
    const auto& e = letters.at(name);
    DiamondElement el{e.at("f").get<Vec>(), e.at("m").get<int>()};
    if (static_cast<int>(el.f.size()) != d.dm.base.size())
      throw std::invalid_argument("letter vector has wrong length");
    d.letter_image.push_back(std::move(el));
  }
  const auto& acc = j.at("accepting");
  std::string kind = acc.at("kind").get<std::string>();
  if (kind == "qk") {
    d.accepting.kind = AcceptSpec::Kind::Qk;
    d.accepting.p = accepting_subset(acc.at("P"), d.dm.base.size());
    d.accepting.k = acc.at("k").get<int>();
  } else if (kind == "l0") {
    d.accepting.kind = AcceptSpec::Kind::L0;
    d.accepting.p = accepting_subset(acc.at("P"), d.dm.base.size());
  } else if (kind == "explicit") {
    d.accepting.kind = AcceptSpec::Kind::Explicit;
    for (const auto& e : acc.at("elements"))
      d.accepting.elems.push_back({e.at("f").get<Vec>(), e.at("m").get<int>()});
  } else {
    throw std::invalid_argument("unknown accepting kind '" + kind + "'");
  }
  return d;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return json::parse(in);
}

Word parse_word(const std::string& text,
                const std::vector<std::string>& alphabet) {
  Word out;
  size_t pos = 0;
  while (pos < text.size()) {
    int best = -1;
    size_t best_len = 0;
    for (size_t a = 0; a < alphabet.size(); ++a) {
      const std::string& letter = alphabet[a];
      if (letter.size() > best_len && text.compare(pos, letter.size(), letter) == 0) {
        best = static_cast<int>(a);
        best_len = letter.size();
      }
    }
    if (best < 0)
      throw std::invalid_argument("unknown letter at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    out.push_back(best);
    pos += best_len;
  }
  return out;
}

}  // namespace diamond
