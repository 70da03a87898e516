#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dhopf/calculus.hpp"
#include "fixtures.hpp"

using namespace dhopf;

namespace {

int edge(const Digraph& d, const std::string& a, const std::string& b) {
  return d.edge_index(d.vertex(a), d.vertex(b));
}

Func random_func(std::mt19937& rng, std::size_t n) {
  Func f(n);
  for (auto& x : f.c) x = fixtures::ratio(int(rng() % 9) - 4, 1 + int(rng() % 3));
  return f;
}

Form1 random_form(std::mt19937& rng, std::size_t m) {
  Form1 w(m);
  for (auto& x : w.c) x = fixtures::ratio(int(rng() % 9) - 4, 1 + int(rng() % 3));
  return w;
}

}  // namespace

TEST_CASE("d0 on the fixtures") {
  for (auto const& [name, d] : fixtures::named_fixtures()) {
    Calculus c(d);
    CHECK_MESSAGE(c.d0(c.one()).is_zero(), name);
  }

  auto T = fixtures::triangle();
  Calculus cT(T);
  CHECK(cT.d0(cT.func(T.vertex("p"))) == Rational(-1) * cT.omega(edge(T, "p", "q")) - cT.omega(edge(T, "p", "r")));

  auto A2 = fixtures::a2();
  Calculus cA(A2);
  CHECK(cA.d0(cA.func(A2.vertex("b"))) == cA.omega(edge(A2, "a", "b")));
}

TEST_CASE("d1 and the wedge product") {
  auto T = fixtures::triangle();
  Calculus cT(T);
  int p = T.vertex("p"), q = T.vertex("q"), r = T.vertex("r");
  CHECK(cT.d1(cT.omega(edge(T, "p", "q"))) == cT.omega2({p, q, r}));
  CHECK(cT.wedge(cT.omega(edge(T, "p", "q")), cT.omega(edge(T, "p", "r"))).is_zero());

  auto A2 = fixtures::a2();
  Calculus cA(A2);
  CHECK(cA.basis2().empty());
  CHECK(cA.d1(cA.omega(0)).is_zero());

  auto Q = fixtures::square();
  Calculus cQ(Q);
  int qp = Q.vertex("p"), qq = Q.vertex("q"), qq2 = Q.vertex("q2"), qr = Q.vertex("r");
  CHECK(cQ.basis2().size() == 1);
  CHECK(cQ.omega2({qp, qq, qr}) == Rational(-1) * cQ.omega2({qp, qq2, qr}));
  CHECK_FALSE(cQ.omega2({qp, qq2, qr}).is_zero());
}

TEST_CASE("evaluation pairings and Upsilon on small digraphs") {
  auto A2 = fixtures::a2();
  Calculus cA(A2);
  CHECK(cA.ev1(cA.vec(0), cA.omega(0)) == cA.func(A2.vertex("b")));
  CHECK(cA.upsilon(cA.vec(0)) == cA.func(A2.vertex("a")) - cA.func(A2.vertex("b")));
  CHECK(cA.upsilon(Vec1(1)).is_zero());

  auto T = fixtures::triangle();
  Calculus cT(T);
  for (std::size_t e = 0; e < T.num_edges(); ++e)
    for (std::size_t f = 0; f < T.num_edges(); ++f)
      if (e != f) CHECK(cT.ev1(cT.vec(int(e)), cT.omega(int(f))).is_zero());

  // Degree two: matched basis pairs give f_c and mismatched ones give zero.
  for (auto const& [name, d] : fixtures::named_fixtures()) {
    Calculus c(d);
    for (auto const& x : c.basis2())
      for (auto const& w : c.basis2())
        CHECK_MESSAGE(c.ev2(c.vec2(x), c.omega2(w)) == (x == w ? c.func(x.c) : Func(d.num_vertices())), name);
  }
}

TEST_CASE("the calculus suite passes on the fixtures") {
  for (auto const& [name, d] : fixtures::named_fixtures()) {
    auto r = check_calculus(d);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.checked > 0);
  }
  auto none = Digraph::build({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}});
  CHECK(check_calculus(none).passed());
}

TEST_CASE("random digraphs: identities by direct evaluation") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Digraph d = fixtures::random_digraph(rng, 7, 14);
    Calculus c(d);
    std::size_t n = d.num_vertices(), m = d.num_edges();

    // The degree-two basis has one element per 2-path less one per
    // non-adjacent ordered pair joined by a 2-path.
    std::set<std::pair<int, int>> gapped;
    for (auto const& p : c.all_paths2())
      if (!d.has_edge(p.a, p.c)) gapped.insert({p.a, p.c});
    CHECK(c.basis2().size() == c.all_paths2().size() - gapped.size());

    // The relation killed in degree two.
    for (auto const& [a, cc] : gapped) {
      Form2 sum(c.basis2().size());
      for (auto const& p : c.all_paths2())
        if (p.a == a && p.c == cc) sum += c.omega2(p);
      CHECK(sum.is_zero());
    }

    for (int k = 0; k < 3; ++k) {
      Func f = random_func(rng, n), g = random_func(rng, n);
      CHECK(c.d1(c.d0(f)).is_zero());
      CHECK(c.d0(f * g) == c.left(f, c.d0(g)) + c.right(c.d0(f), g));
      Form1 w = random_form(rng, m);
      CHECK(c.d1(c.left(f, w)) == c.wedge(c.d0(f), w) + c.left(f, c.d1(w)));
    }

    CHECK(check_calculus(d).passed());
  }
}
