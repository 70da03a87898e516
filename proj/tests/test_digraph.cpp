#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "dhopf/digraph.hpp"
#include "fixtures.hpp"

using namespace dhopf;

namespace {

DigraphErrorCode parse_error(const std::string& text) {
  try {
    parse_digraph(text);
  } catch (const DigraphError& e) {
    return e.code;
  }
  FAIL("expected a DigraphError for " << text);
  return DigraphErrorCode::Schema;
}

}  // namespace

TEST_CASE("parse_digraph accepts the fixture format and rejects bad input") {
  Digraph d = parse_digraph(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  CHECK(d.num_vertices() == 2);
  CHECK(d.num_edges() == 1);
  CHECK(d.has_edge(0, 1));

  CHECK(parse_error(R"({"vertices":["a"],"edges":[["a","a"]]})") == DigraphErrorCode::Loop);
  CHECK(parse_error(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})") == DigraphErrorCode::TwoCycle);
  CHECK(parse_error(R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"]]})") == DigraphErrorCode::DuplicateEdge);
  CHECK(parse_error(R"({"vertices":["a","a"]})") == DigraphErrorCode::DuplicateVertex);
  CHECK(parse_error(R"({"vertices":[""]})") == DigraphErrorCode::EmptyVertexId);
  CHECK(parse_error(R"({"vertices":["a"],"edges":[["a","z"]]})") == DigraphErrorCode::UnknownVertex);
  CHECK(parse_error(R"({"vertices":"a"})") == DigraphErrorCode::Schema);
  CHECK(parse_error(R"({"vertices":["a"],"colour":1})") == DigraphErrorCode::Schema);
  CHECK(parse_error("{not json") == DigraphErrorCode::Schema);

  Digraph two = parse_digraph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]],"allow_two_cycles":true})");
  CHECK(two.num_edges() == 2);
}

TEST_CASE("vertices are ordered by identifier") {
  Digraph d = Digraph::build({"z", "m", "a"}, {{"z", "a"}});
  CHECK(d.vertices() == std::vector<std::string>{"a", "m", "z"});
  CHECK(d.edges()[0].src == 2);
  CHECK(d.edges()[0].dst == 0);
}

TEST_CASE("2-paths, triangles and squares on the fixtures") {
  auto A2 = fixtures::a2(), T = fixtures::triangle(), Q = fixtures::square(), C5 = fixtures::cycle(5);
  CHECK(paths2(A2).empty());
  CHECK(paths2(T) == std::vector<Path2>{{0, 1, 2}});
  CHECK(paths2(C5).size() == 5);

  CHECK(triangles(T) == std::vector<Path2>{{0, 1, 2}});
  CHECK(triangles(C5).empty());
  CHECK(triangles(Q).empty());

  int p = Q.vertex("p"), q = Q.vertex("q"), q2 = Q.vertex("q2"), r = Q.vertex("r");
  CHECK(squares(Q) == std::vector<Square>{{p, q, q2, r}});
  CHECK(squares(T).empty());
  CHECK(squares(A2).empty());
}

TEST_CASE("distinguished vertex") {
  auto Q = fixtures::square(), T = fixtures::triangle(), C5 = fixtures::cycle(5);
  CHECK(distinguished_vertex(Q, Q.vertex("p"), Q.vertex("r")) == Q.vertex("q"));
  CHECK_FALSE(distinguished_vertex(T, T.vertex("q"), T.vertex("p")).has_value());
  CHECK(distinguished_vertex(C5, C5.vertex("v0"), C5.vertex("v2")) == C5.vertex("v1"));
  CHECK_THROWS_AS(distinguished_vertex(T, T.vertex("p"), T.vertex("r")), std::invalid_argument);
}

TEST_CASE("double quiver counts") {
  DoubleQuiver A2(fixtures::a2());
  CHECK(A2.num_vertices() == 4);
  CHECK(A2.arrows().size() == 6);
  std::map<Family, int> fam;
  for (auto const& a : A2.arrows()) ++fam[a.fam];
  CHECK(fam[Family::GenLeft] == 1);
  CHECK(fam[Family::GenRight] == 1);
  CHECK(fam[Family::GenLeftY] == 2);
  CHECK(fam[Family::GenRightY] == 2);

  DoubleQuiver T(fixtures::triangle());
  CHECK(T.num_vertices() == 9);
  CHECK(T.arrows().size() == 36);

  DoubleQuiver empty(Digraph::build({"a", "b", "c"}, {}));
  CHECK(empty.num_vertices() == 9);
  CHECK(empty.arrows().empty());
}

TEST_CASE("random digraphs: enumeration invariants against brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = fixtures::random_digraph(rng, 7, 14);
    int n     = int(d.num_vertices());
    std::size_t m = d.num_edges();
    DoubleQuiver dq(d);
    CHECK(dq.arrows().size() == 2 * m * m + 2 * n * m);

    // GenLeft and GenRight arrows pair up with the same edge data and
    // reversed endpoints.
    std::multiset<std::tuple<int, int, int, int>> left, right;
    for (auto const& a : dq.arrows()) {
      if (a.fam == Family::GenLeft) left.insert({a.e1, a.e2, a.src, a.dst});
      if (a.fam == Family::GenRight) right.insert({a.e1, a.e2, a.dst, a.src});
    }
    CHECK(left == right);

    std::vector<Path2> tri, two;
    std::vector<Square> sq;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (d.has_edge(a, b) && d.has_edge(b, c)) two.push_back({a, b, c});
          if (d.has_edge(a, b) && d.has_edge(b, c) && d.has_edge(a, c)) tri.push_back({a, b, c});
          for (int c2 = b + 1; c2 < n; ++c2)
            if (d.has_edge(a, b) && d.has_edge(a, c2) && d.has_edge(b, c) && d.has_edge(c2, c)) sq.push_back({a, b, c2, c});
        }
    auto sorted = [](auto v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    CHECK(sorted(paths2(d)) == two);
    CHECK(sorted(triangles(d)) == tri);
    CHECK(sorted(squares(d)) == sorted(sq));

    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (a != c && !d.has_edge(a, c)) {
          std::optional<int> least;
          for (int b = n - 1; b >= 0; --b)
            if (d.has_edge(a, b) && d.has_edge(b, c)) least = b;
          CHECK(distinguished_vertex(d, a, c) == least);
        }
  }
}
