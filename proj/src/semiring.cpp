#include "diamond/semiring.hpp"

#include "fmt_util.hpp"

namespace diamond {

int Semiring::sum_of_ones(long long m) const {
  int acc = zero;
  for (long long i = 0; i < m; ++i) acc = plus(acc, one);
  return acc;
}

Semiring make_zq(int q) {
  if (q < 1) throw std::invalid_argument("make_zq: modulus must be >= 1");
  Semiring s;
  s.add.assign(q, std::vector<int>(q));
  s.mul.assign(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      s.add[a][b] = (a + b) % q;
      s.mul[a][b] = (a * b) % q;
    }
  s.zero = 0;
  s.one = 1 % q;
  return s;
}

Semiring make_bool2() {
  Semiring s;
  s.add = {{0, 1}, {1, 1}};
  s.mul = {{0, 0}, {0, 1}};
  s.zero = 0;
  s.one = 1;
  return s;
}

namespace {

void check_table_shape(const std::vector<std::vector<int>>& t, int n,
                       const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument(detail::fmt("{} table has {} rows, expected {}",
                                            name, t.size(), n));
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument(detail::fmt("{} table row is not {} wide", name, n));
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument(
            detail::fmt("{} table entry {} out of range [0,{})", name, v, n));
  }
}

}  // namespace

std::vector<std::string> check_axioms(const Semiring& s) {
  const int n = s.size();
  if (n == 0) throw std::invalid_argument("semiring has no elements");
  check_table_shape(s.add, n, "add");
  check_table_shape(s.mul, n, "mul");
  if (s.zero < 0 || s.zero >= n || s.one < 0 || s.one >= n)
    throw std::invalid_argument("designated zero/one out of range");

  std::vector<std::string> bad;
  auto report = [&](std::string msg) {
    if (bad.size() < 64) bad.push_back(std::move(msg));
  };

  for (int a = 0; a < n; ++a) {
    if (s.plus(a, s.zero) != a)
      report(detail::fmt("{} + 0 != {}", a, a));
    if (s.times(a, s.one) != a)
      report(detail::fmt("{} * 1 != {}", a, a));
    if (s.times(a, s.zero) != s.zero || s.times(s.zero, a) != s.zero)
      report(detail::fmt("0 does not annihilate {}", a));
    for (int b = 0; b < n; ++b) {
      if (s.plus(a, b) != s.plus(b, a))
        report(detail::fmt("addition not commutative at ({},{})", a, b));
      if (s.times(a, b) != s.times(b, a))
        report(detail::fmt("multiplication not commutative at ({},{})", a, b));
      for (int c = 0; c < n; ++c) {
        if (s.plus(s.plus(a, b), c) != s.plus(a, s.plus(b, c)))
          report(detail::fmt("addition not associative at ({},{},{})", a, b, c));
        if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c)))
          report(detail::fmt("multiplication not associative at ({},{},{})", a, b, c));
        if (s.times(a, s.plus(b, c)) != s.plus(s.times(a, b), s.times(a, c)))
          report(detail::fmt("left distributivity fails at ({},{},{})", a, b, c));
        if (s.times(s.plus(a, b), c) != s.plus(s.times(a, c), s.times(b, c)))
          report(detail::fmt("right distributivity fails at ({},{},{})", a, b, c));
      }
    }
  }
  return bad;
}

Semiring semiring_from_name(const std::string& name) {
  if (name == "bool2") return make_bool2();
  if (name.rfind("zq:", 0) == 0) {
    int q = 0;
    try {
      q = std::stoi(name.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad zq modulus in '" + name + "'");
    }
    return make_zq(q);
  }
  throw std::invalid_argument("unknown semiring name '" + name + "'");
}

}  // namespace diamond
