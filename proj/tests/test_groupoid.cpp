#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dhopf/groupoid.hpp"
#include "fixtures.hpp"
#include "homology.hpp"

using namespace dhopf;

namespace {

GroupoidWord random_word(std::mt19937& rng, const Digraph& d, int start, std::size_t len) {
  GroupoidWord w{start, {}};
  int at = start;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Letter> options;
    for (std::size_t e = 0; e < d.num_edges(); ++e) {
      if (d.edges()[e].src == at) options.push_back({int(e), 1});
      if (d.edges()[e].dst == at) options.push_back({int(e), -1});
    }
    if (options.empty()) break;
    Letter l = options[rng() % options.size()];
    w.letters.push_back(l);
    at = l.sign > 0 ? d.edges()[l.edge].dst : d.edges()[l.edge].src;
  }
  return w;
}

bool same(const Abelianization& a, const Abelianization& b) { return a.free_rank == b.free_rank && a.torsion == b.torsion; }

}  // namespace

TEST_CASE("word syntax") {
  auto T = fixtures::triangle();
  auto w = parse_word(T, "(p<q).(q<r).(p<r)^-1");
  CHECK(w.start == T.vertex("p"));
  CHECK(w.length() == 3);
  CHECK(word_end(T, w) == T.vertex("p"));
  CHECK(format_word(T, w) == "(p<q).(q<r).(p<r)^-1");
  CHECK(parse_word(T, " id( q ) ") == identity_word(T.vertex("q")));
  CHECK(format_word(T, identity_word(T.vertex("r"))) == "id(r)");

  CHECK_THROWS_AS(parse_word(T, "(p<q).(p<r)"), WordError);  // broken path
  CHECK_THROWS_AS(parse_word(T, "(q<p)"), WordError);        // no such edge
  CHECK_THROWS_AS(parse_word(T, "(p<q"), WordError);
  CHECK_THROWS_AS(parse_word(T, "id(z)"), WordError);
  CHECK_THROWS_AS(parse_word(T, ""), WordError);
  CHECK_THROWS_AS(concat(T, letter_word(T, 0), letter_word(T, 0)), WordError);
}

TEST_CASE("free reduction and inverses on random words") {
  std::mt19937 rng(31);
  for (auto const& [name, d] : fixtures::named_fixtures())
    for (int trial = 0; trial < 30; ++trial) {
      auto w = random_word(rng, d, int(rng() % d.num_vertices()), rng() % 7);
      REQUIRE(is_valid(d, w));
      auto r = free_reduce(w);
      CHECK(free_reduce(r) == r);
      CHECK(r.length() <= w.length());
      CHECK(word_end(d, r) == word_end(d, w));
      for (std::size_t i = 1; i < r.letters.size(); ++i)
        CHECK_FALSE((r.letters[i].edge == r.letters[i - 1].edge && r.letters[i].sign == -r.letters[i - 1].sign));
      CHECK(inverse(d, inverse(d, w)) == w);
      CHECK(free_reduce(concat(d, w, inverse(d, w))) == identity_word(w.start));
      CHECK(parse_word(d, format_word(d, w)) == w);
    }
}

TEST_CASE("the defining relations hold with replayable certificates") {
  auto T  = fixtures::triangle();
  auto PT = fundamental_groupoid(T);
  REQUIRE(PT.relators.size() == 1);
  CHECK(format_word(T, PT.relators[0]) == "(p<q).(q<r).(p<r)^-1");
  auto a = parse_word(T, "(p<q).(q<r)"), b = parse_word(T, "(p<r)");
  auto r = word_equal(PT, a, b, 4);
  REQUIRE(r.equal);
  CHECK(replay(PT, a, r.steps) == free_reduce(b));

  auto Q  = fixtures::square();
  auto PQ = fundamental_groupoid(Q);
  REQUIRE(PQ.relators.size() == 1);
  CHECK(format_word(Q, PQ.relators[0]) == "(p<q).(q<r).(q2<r)^-1.(p<q2)^-1");
  auto c = parse_word(Q, "(p<q).(q<r)"), e = parse_word(Q, "(p<q2).(q2<r)");
  r = word_equal(PQ, c, e, 4);
  REQUIRE(r.equal);
  CHECK(replay(PQ, c, r.steps) == e);

  // A tampered certificate is rejected.
  auto bad = r.steps;
  bad.back().result = c;
  CHECK_FALSE(replay(PQ, c, bad).has_value());

  // The free groupoid identifies nothing.
  CHECK_FALSE(word_equal(free_groupoid(Q), c, e, 6).equal);
  CHECK_THROWS_AS(word_equal(PQ, c, identity_word(0), 4), WordError);

  auto C5 = fixtures::cycle(5);
  auto loop = parse_word(C5, "(v0<v1).(v1<v2).(v2<v3).(v3<v4).(v4<v0)");
  auto res = word_equal(fundamental_groupoid(C5), loop, identity_word(0), 8);
  CHECK_FALSE(res.equal);
  CHECK(res.explored > 0);
}

TEST_CASE("inserting a relator is undone by the search") {
  std::mt19937 rng(5);
  for (auto const& d : {fixtures::triangle(), fixtures::square()}) {
    auto P = fundamental_groupoid(d);
    for (int trial = 0; trial < 20; ++trial) {
      auto rel = P.relators[0];
      if (rng() & 1) rel = inverse(d, rel);
      // A prefix ending at the relator's base point, then a suffix from it.
      auto u = free_reduce(inverse(d, random_word(rng, d, rel.start, rng() % 3)));
      auto suffix = free_reduce(random_word(rng, d, rel.start, rng() % 3));
      auto w1 = concat(d, concat(d, u, rel), suffix);
      auto w2 = concat(d, u, suffix);
      auto r  = word_equal(P, w1, w2, w1.length());
      REQUIRE(r.equal);
      CHECK(replay(P, w1, r.steps) == free_reduce(w2));
    }
  }
}

TEST_CASE("isotropy groups and their abelianization on the fixtures") {
  for (auto const& [name, d] : fixtures::named_fixtures()) {
    INFO(name);
    auto P  = fundamental_groupoid(d);
    auto gp = pi1_presentation(P, 0);
    auto ab = abelianization(tietze_simplify(gp));
    CHECK(same(ab, abelianization(gp)));
    CHECK(same(ab, oracles::h1_by_cells(d, 0)));
    CHECK(ab.torsion.empty());
    CHECK(ab.free_rank == (name.front() == 'C' ? 1u : 0u));
  }
  CHECK_THROWS_AS(pi1_presentation(fundamental_groupoid(fixtures::a2()), 7), WordError);
}

TEST_CASE("isotropy groups on random digraphs") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Digraph d = fixtures::random_digraph(rng, 7, 12);
    int base  = int(rng() % d.num_vertices());
    auto P    = fundamental_groupoid(d);
    auto gp   = pi1_presentation(P, base);
    auto simp = tietze_simplify(gp);
    CHECK(simp.generators.size() <= gp.generators.size());
    auto ab = abelianization(gp);
    CHECK(same(abelianization(simp), ab));
    CHECK(same(ab, oracles::h1_by_cells(d, base)));

    // Without triangles and squares the group is free of rank |E| - |V| + 1
    // on the component.
    if (triangles(d).empty() && squares(d).empty()) {
      auto in = oracles::component(d, base);
      std::size_t v = 0, e = 0;
      for (bool x : in) v += x;
      for (auto const& ed : d.edges()) e += in[ed.src];
      CHECK(gp.relators.empty());
      CHECK(gp.generators.size() == e - v + 1);
      CHECK(ab.free_rank == e - v + 1);
    }
  }
}

TEST_CASE("bounded arrow enumeration") {
  ArrowEnumeration T(fundamental_groupoid(fixtures::triangle()), 6);
  CHECK(T.finite());
  CHECK(T.count() == 9);
  CHECK(T.level() == 2);
  ArrowEnumeration Q(fundamental_groupoid(fixtures::square()), 6);
  CHECK(Q.finite());
  CHECK(Q.count() == 16);
  CHECK_FALSE(ArrowEnumeration(fundamental_groupoid(fixtures::square()), 4).finite());
  ArrowEnumeration A2(fundamental_groupoid(fixtures::a2()), 6);
  CHECK(A2.finite());
  CHECK(A2.count() == 4);
  CHECK_FALSE(ArrowEnumeration(fundamental_groupoid(fixtures::cycle(5)), 8).finite());

  auto d = fixtures::triangle();
  for (std::size_t i = 0; i < T.count(); ++i) CHECK(T.classify(T.representatives()[i]) == i);
  CHECK(T.classify(parse_word(d, "(p<q).(q<r)")) == T.classify(parse_word(d, "(p<r)")));
  CHECK(T.classify(parse_word(d, "(p<q)")) != T.classify(parse_word(d, "(p<r)")));
}

TEST_CASE("arrow counts of forests are sums of squared component sizes") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    Digraph d = fixtures::random_digraph(rng, 4, 3);
    // Keep only forests: every component has one fewer edge than vertices.
    std::size_t expected = 0, edges_in = 0;
    std::vector<bool> seen(d.num_vertices());
    for (int v = 0; v < int(d.num_vertices()); ++v) {
      if (seen[v]) continue;
      auto in = oracles::component(d, v);
      std::size_t size = 0;
      for (std::size_t x = 0; x < in.size(); ++x)
        if (in[x]) {
          seen[x] = true;
          ++size;
        }
      expected += size * size;
      edges_in += size - 1;
    }
    if (edges_in != d.num_edges()) continue;
    ArrowEnumeration en(fundamental_groupoid(d), 8);
    CHECK(en.finite());
    CHECK(en.count() == expected);
    ++checked;
  }
  CHECK(checked > 10);
}
