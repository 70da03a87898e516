// Inputs shared by the test binaries: fixture and random digraphs, plus the
// multiplication tables of the small groups.

#ifndef DHOPF_TESTS_FIXTURES_HPP_
#define DHOPF_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dhopf/digraph.hpp"
#include "dhopf/linalg.hpp"

namespace fixtures {

using dhopf::Digraph;

// mpq_class(num, den) is not reduced on construction, and GMP arithmetic
// expects reduced operands.
inline dhopf::Rational ratio(int num, int den) {
  dhopf::Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Digraph a2() { return Digraph::build({"a", "b"}, {{"a", "b"}}); }

inline Digraph triangle() { return Digraph::build({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}, {"p", "r"}}); }

inline Digraph square() {
  return Digraph::build({"p", "q", "q2", "r"}, {{"p", "q"}, {"q", "r"}, {"p", "q2"}, {"q2", "r"}});
}

inline Digraph cycle(int n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) e.emplace_back(v[i], v[(i + 1) % n]);
  return Digraph::build(v, e);
}

inline std::vector<std::pair<std::string, Digraph>> named_fixtures() {
  return {{"A2", a2()},         {"T", triangle()},   {"Q", square()},     {"C3", cycle(3)},
          {"C4", cycle(4)},     {"C5", cycle(5)},    {"C6", cycle(6)}};
}

// A valid digraph (no loops, no 2-cycles) with at most max_v vertices and
// max_e edges.
inline Digraph random_digraph(std::mt19937& rng, int max_v, int max_e) {
  int n = std::uniform_int_distribution<int>(1, max_v)(rng);
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  int m = std::uniform_int_distribution<int>(0, std::min<int>(max_e, int(pairs.size())))(rng);
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < m; ++i) {
    auto [a, b] = pairs[i];
    if (rng() & 1) std::swap(a, b);
    e.emplace_back(v[a], v[b]);
  }
  return Digraph::build(v, e);
}

using Table = std::vector<std::vector<int>>;

inline Table table_from(int order, const std::function<int(int, int)>& op) {
  Table t(order, std::vector<int>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) t[g][h] = op(g, h);
  return t;
}

inline Table cyclic(int n) {
  return table_from(n, [n](int a, int b) { return (a + b) % n; });
}

// Z/m x Z/n with (a, b) stored as a * n + b.
inline Table product(int m, int n) {
  return table_from(m * n, [m, n](int x, int y) { return ((x / n + y / n) % m) * n + (x % n + y % n) % n; });
}

// Dihedral group of order 2n: r^i s^j stored as j * n + i, with s r = r^-1 s.
inline Table dihedral(int n) {
  return table_from(2 * n, [n](int x, int y) {
    int i = x % n, j = x / n, k = y % n, l = y / n;
    int rot = j ? (i - k + n) % n : (i + k) % n;
    return ((j + l) % 2) * n + rot;
  });
}

// Quaternion group: +-1, +-i, +-j, +-k stored as sign * 4 + unit index.
inline Table quaternion() {
  // unit products for 1, i, j, k: value = (sign, unit)
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4]  = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return table_from(8, [](int x, int y) {
    int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
    return ((sx + sy + neg[ux][uy]) % 2) * 4 + unit[ux][uy];
  });
}

// The fourteen groups of order at most 8, identity first in each table.
inline std::vector<std::pair<std::string, Table>> small_groups() {
  return {{"Z1", cyclic(1)},       {"Z2", cyclic(2)},         {"Z3", cyclic(3)},   {"Z4", cyclic(4)},
          {"Z2xZ2", product(2, 2)}, {"Z5", cyclic(5)},         {"Z6", cyclic(6)},   {"S3", dihedral(3)},
          {"Z7", cyclic(7)},       {"Z8", cyclic(8)},         {"Z4xZ2", product(4, 2)},
          {"Z2^3", table_from(8, [](int a, int b) { return a ^ b; })},
          {"D4", dihedral(4)},     {"Q8", quaternion()}};
}

}  // namespace fixtures

#endif  // DHOPF_TESTS_FIXTURES_HPP_
