#include "diamond/monoid.hpp"

#include <algorithm>
#include "fmt_util.hpp"
#include <map>
#include <queue>
#include <stdexcept>

namespace diamond {

std::vector<std::string> check_monoid_axioms(const FiniteMonoid& m) {
  const int n = m.size();
  if (n == 0) throw std::invalid_argument("monoid has no elements");
  for (const auto& row : m.mul) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("monoid table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("monoid table entry out of range");
  }
  if (m.identity < 0 || m.identity >= n)
    throw std::invalid_argument("monoid identity out of range");

  std::vector<std::string> bad;
  auto report = [&](std::string msg) {
    if (bad.size() < 64) bad.push_back(std::move(msg));
  };
  for (int a = 0; a < n; ++a) {
    if (m.times(m.identity, a) != a || m.times(a, m.identity) != a)
      report(detail::fmt("identity law fails at {}", a));
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (m.times(m.times(a, b), c) != m.times(a, m.times(b, c)))
          report(detail::fmt("associativity fails at ({},{},{})", a, b, c));
  }
  return bad;
}

FiniteMonoid trivial_monoid() { return FiniteMonoid{{{0}}, 0}; }

FiniteMonoid cyclic_monoid(int n) {
  FiniteMonoid m;
  m.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.mul[a][b] = (a + b) % n;
  m.identity = 0;
  return m;
}

FiniteMonoid left_zero_monoid3() {
  // element 0 is the identity; 1 and 2 absorb on the left
  FiniteMonoid m;
  m.mul = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  m.identity = 0;
  return m;
}

std::vector<FiniteMonoid> enumerate_monoids(int n) {
  if (n < 1 || n > 3)
    throw std::invalid_argument("enumerate_monoids supports n in [1,3]");
  std::vector<FiniteMonoid> out;
  const int cells = n * n;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    FiniteMonoid m;
    m.mul.assign(n, std::vector<int>(n));
    long long c = code;
    for (int i = 0; i < cells; ++i) {
      m.mul[i / n][i % n] = static_cast<int>(c % n);
      c /= n;
    }
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
      bool ok = true;
      for (int a = 0; a < n; ++a)
        if (m.mul[cand][a] != a || m.mul[a][cand] != a) ok = false;
      if (ok) e = cand;
    }
    if (e < 0) continue;
    m.identity = e;
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c2 = 0; c2 < n && assoc; ++c2)
          if (m.times(m.times(a, b), c2) != m.times(a, m.times(b, c2)))
            assoc = false;
    if (assoc) out.push_back(std::move(m));
  }
  return out;
}

int MonoidMorphism::eval(const Word& w) const {
  int acc = target.identity;
  for (int letter : w) {
    if (letter < 0 || letter >= static_cast<int>(letter_image.size()))
      throw std::out_of_range("unknown letter in word");
    acc = target.times(acc, letter_image[letter]);
  }
  return acc;
}

Subset quotient_set(const FiniteMonoid& m, int x, const Subset& p, Side side) {
  const int n = m.size();
  Subset out(n, 0);
  for (int y = 0; y < n; ++y) {
    int prod = side == Side::Left ? m.times(x, y) : m.times(y, x);
    out[y] = p[prod];
  }
  return out;
}

std::vector<std::string> marked_alphabet(const std::vector<std::string>& a) {
  std::vector<std::string> out;
  out.reserve(2 * a.size());
  for (const auto& letter : a) {
    out.push_back(letter);
    out.push_back(letter + "'");
  }
  return out;
}

bool Dfa::accepts(const Word& w) const {
  int q = initial;
  for (int letter : w) {
    if (letter < 0 || letter >= static_cast<int>(alphabet.size()))
      throw std::out_of_range("unknown letter in word");
    q = delta[q][letter];
  }
  return accepting[q] != 0;
}

Dfa minimize(const Dfa& d) {
  const int k = static_cast<int>(d.alphabet.size());

  // reachable part
  std::vector<int> order;
  std::vector<int> idx(d.states, -1);
  order.push_back(d.initial);
  idx[d.initial] = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < k; ++a) {
      int t = d.delta[order[i]][a];
      if (idx[t] < 0) {
        idx[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const int n = static_cast<int>(order.size());

  // Moore refinement
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = d.accepting[order[i]] ? 1 : 0;
  int nclasses = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_to_class;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig{cls[i]};
      for (int a = 0; a < k; ++a) sig.push_back(cls[idx[d.delta[order[i]][a]]]);
      auto [it, fresh] = sig_to_class.try_emplace(sig, static_cast<int>(sig_to_class.size()));
      (void)fresh;
      next[i] = it->second;
    }
    int m = static_cast<int>(sig_to_class.size());
    cls.swap(next);
    if (m == nclasses) break;
    nclasses = m;
  }

  Dfa out;
  out.states = nclasses;
  out.alphabet = d.alphabet;
  out.delta.assign(nclasses, std::vector<int>(k, 0));
  out.accepting.assign(nclasses, 0);
  out.initial = cls[0];
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < k; ++a)
      out.delta[cls[i]][a] = cls[idx[d.delta[order[i]][a]]];
    if (d.accepting[order[i]]) out.accepting[cls[i]] = 1;
  }
  return out;
}

SyntacticMonoid syntactic_monoid(const Dfa& input) {
  Dfa d = minimize(input);
  const int n = d.states;
  const int k = static_cast<int>(d.alphabet.size());

  using Fn = std::vector<int>;  // state -> state
  std::map<Fn, int> id_of;
  std::vector<Fn> elems;
  std::vector<Word> reps;

  Fn ident(n);
  for (int q = 0; q < n; ++q) ident[q] = q;
  id_of[ident] = 0;
  elems.push_back(ident);
  reps.push_back({});

  // BFS closure under extension by a letter: reps come out shortest-first,
  // lexicographic within a length.
  for (size_t i = 0; i < elems.size(); ++i) {
    Fn cur = elems[i];
    Word rep = reps[i];
    for (int a = 0; a < k; ++a) {
      Fn nxt(n);
      for (int q = 0; q < n; ++q) nxt[q] = d.delta[cur[q]][a];
      if (!id_of.count(nxt)) {
        id_of[nxt] = static_cast<int>(elems.size());
        elems.push_back(nxt);
        Word r = rep;
        r.push_back(a);
        reps.push_back(std::move(r));
      }
    }
  }

  const int m = static_cast<int>(elems.size());
  SyntacticMonoid out;
  out.monoid.mul.assign(m, std::vector<int>(m));
  out.monoid.identity = 0;
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      Fn comp(n);
      for (int q = 0; q < n; ++q) comp[q] = elems[t][elems[s][q]];
      out.monoid.mul[s][t] = id_of.at(comp);
    }

  out.morphism.alphabet = d.alphabet;
  out.morphism.target = out.monoid;
  out.morphism.letter_image.resize(k);
  for (int a = 0; a < k; ++a) {
    Fn fn(n);
    for (int q = 0; q < n; ++q) fn[q] = d.delta[q][a];
    out.morphism.letter_image[a] = id_of.at(fn);
  }

  out.accepting.assign(m, 0);
  for (int s = 0; s < m; ++s)
    if (d.accepting[elems[s][d.initial]]) out.accepting[s] = 1;

  out.representative = std::move(reps);
  return out;
}

Recogniser to_recogniser(const SyntacticMonoid& s) {
  return Recogniser{s.morphism, s.accepting};
}

}  // namespace diamond
