#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhopf/hopf.hpp"
#include "fixtures.hpp"
#include "groupoids.hpp"

using namespace dhopf;

namespace {

Func indicator(std::size_t n, int p) {
  Func f(n);
  f.c[p] = 1;
  return f;
}

std::vector<std::pair<std::string, Digraph>> hopf_fixtures() {
  return {{"A2", fixtures::a2()}, {"T", fixtures::triangle()}, {"Q", fixtures::square()}};
}

// Ideal pair of function_hopf(g) for an object set S0 and arrow set S1: the
// functions vanishing on them.
HopfIdealReport complement_ideal(const HopfPresentation& hp, const FiniteGroupoid& g, const std::vector<bool>& S0,
                                 const std::vector<bool>& S1) {
  std::vector<Func>    J;
  std::vector<AlgElem> I;
  for (std::size_t p = 0; p < g.num_objects(); ++p)
    if (!S0[p]) J.push_back(indicator(g.num_objects(), int(p)));
  for (std::size_t e = 0; e < g.num_arrows(); ++e)
    if (!S1[e]) I.push_back(vertex_elem(int(e)));
  return is_hopf_ideal(hp, J, I, 1);
}

}  // namespace

TEST_CASE("structure maps of the first-order algebra on generators") {
  auto T  = fixtures::triangle();
  auto hp = hx1_hopf(T);
  DoubleAlgebra A(T);
  std::size_t n = T.num_vertices();
  for (int p = 0; p < int(n); ++p)
    for (int q = 0; q < int(n); ++q) {
      CHECK(eps(hp, A.v(p, q)) == (p == q ? indicator(n, p) : Func(n)));
      CHECK(antipode(hp, A.v(p, q)) == A.v(q, p));
    }
  CHECK(delta(hp, A.unit()) == tensor_normalize(hp.quiver, A.unit(), A.unit()));
  Func one(n);
  for (auto& x : one.c) x = 1;
  CHECK(eps(hp, A.unit()) == one);

  // Anti-multiplicativity on composable products.
  const Quiver& q = hp.quiver;
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    for (std::size_t b = 0; b < q.num_arrows(); ++b) {
      AlgElem x = arrow_elem(int(a)), y = arrow_elem(int(b));
      AlgElem xy = mul(q, x, y);
      if (xy.is_zero()) continue;
      CHECK(antipode(hp, xy) == mul(q, antipode(hp, y), antipode(hp, x)));
      CHECK(eps(hp, xy) == eps(hp, mul(q, x, source_of(hp, eps(hp, y)))));
    }

  // Translation on images of the source and target maps.
  for (int p = 0; p < int(n); ++p) {
    CHECK(translation(hp, A.s(p)) == op_normalize(q, tensor(A.s(p), A.unit())));
    CHECK(translation(hp, A.t(p)) == op_normalize(q, tensor(A.unit(), A.s(p))));
  }
}

TEST_CASE("the differential algebra needs a flat Upsilon") {
  auto a2 = fixtures::a2();
  auto h = hx1_hopf(a2), x = dx_hopf(a2);
  CHECK(x.relations.relations == h.relations.relations);
  CHECK(x.delta.arrow == h.delta.arrow);
  CHECK(x.antipode.arrow == h.antipode.arrow);

  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = fixtures::random_digraph(rng, 5, 8);
    if (check_upsilon_flat(d).passed())
      CHECK_NOTHROW(dx_hopf(d));
    else
      CHECK_THROWS_AS(dx_hopf(d), std::invalid_argument);
  }
}

TEST_CASE("axiom suites on the fixtures") {
  for (auto const& [name, d] : hopf_fixtures())
    for (bool dx : {false, true}) {
      auto hp = dx ? dx_hopf(d) : hx1_hopf(d);
      HopfChecker C(hp, 4);
      for (auto const& [suite, rep] : {std::pair{"coring", C.coring()},
                                       {"bialgebroid", C.bialgebroid()},
                                       {"antipode", C.antipode()},
                                       {"well-defined", C.well_defined()},
                                       {"translation", C.translation()}}) {
        INFO(name << (dx ? " dx " : " hx1 ") << suite);
        CHECK(!rep.instances.empty());
        CHECK(rep.count(CheckStatus::Unknown) == 0);
        CHECK(rep.count(CheckStatus::Fail) == 0);
        REQUIRE(rep.max_minimal_N().has_value());
        CHECK(*rep.max_minimal_N() <= 4);
      }
    }
}

TEST_CASE("a degree bound that is too small leaves axioms Unknown") {
  auto hp = hx1_hopf(fixtures::a2());
  auto r  = check_antipode(hp, 1);
  CHECK(r.count(CheckStatus::Unknown) > 0);
  CHECK(r.count(CheckStatus::Fail) == 0);
}

TEST_CASE("groupoid rings") {
  auto z2 = FiniteGroupoid::connected(fixtures::cyclic(2), 1);
  auto hz = groupoid_ring(z2);
  CHECK(hz.quiver.num_vertices() + hz.quiver.num_arrows() == 2);
  int g = z2.identity[0] == 0 ? 1 : 0;
  CHECK(antipode(hz, groupoid_arrow_elem(z2, g)) == groupoid_arrow_elem(z2, z2.inverse[g]));

  auto pair = FiniteGroupoid::connected(fixtures::cyclic(1), 2);
  CHECK(pair.num_arrows() == 4);
  auto hp = groupoid_ring(pair);
  for (int e = 0; e < 4; ++e) {
    AlgElem x = groupoid_arrow_elem(pair, e);
    CHECK(delta(hp, x) == tensor_normalize(hp.quiver, x, x));
    CHECK(eps(hp, x) == indicator(2, pair.dst[e]));
    CHECK(antipode(hp, x) == groupoid_arrow_elem(pair, pair.inverse[e]));
  }

  auto discrete = FiniteGroupoid::disjoint_union(FiniteGroupoid::connected(fixtures::cyclic(1), 1, "A"),
                                                 FiniteGroupoid::connected(fixtures::cyclic(1), 1, "B"));
  auto hd = groupoid_ring(discrete);
  CHECK(hd.quiver.num_arrows() == 0);
  CHECK(hd.quiver.num_vertices() == 2);
}

TEST_CASE("function algebras of groupoids") {
  auto z2 = FiniteGroupoid::connected(fixtures::cyclic(2), 1);
  auto hf = function_hopf(z2);
  int id = z2.identity[0], g = 1 - id;
  Tensor2 expected = tensor(vertex_elem(id), vertex_elem(g));
  add_scaled(expected, 1, tensor(vertex_elem(g), vertex_elem(id)));
  CHECK(delta(hf, vertex_elem(g)) == normalize(hf.quiver, expected));
  CHECK(antipode(hf, vertex_elem(g)) == vertex_elem(z2.inverse[g]));

  auto discrete = FiniteGroupoid::connected(fixtures::cyclic(1), 1);
  auto hd = function_hopf(discrete);
  CHECK(delta(hd, vertex_elem(0)) == tensor_normalize(hd.quiver, vertex_elem(0), vertex_elem(0)));
}

TEST_CASE("groupoid Hopf algebroids satisfy every axiom exactly") {
  for (auto const& [name, g] : fixtures::small_groupoids(2, 8)) {
    INFO(name);
    for (auto const& hp : {groupoid_ring(g), function_hopf(g)}) {
      auto r = HopfChecker(hp, 1).all();
      CHECK(r.count(CheckStatus::Fail) == 0);
      CHECK(r.count(CheckStatus::Unknown) == 0);
    }
  }
}

TEST_CASE("Hopf ideals of function algebras and subgroupoids") {
  // The pair groupoid on two objects: dropping object B and every arrow that
  // touches it leaves the subgroupoid on A.
  auto pair = FiniteGroupoid::connected(fixtures::cyclic(1), 2);
  auto hp   = function_hopf(pair);
  std::vector<bool> S0(2), S1(4);
  int A = 0;
  S0[A] = true;
  for (int e = 0; e < 4; ++e) S1[e] = pair.src[e] == A && pair.dst[e] == A;
  CHECK(is_subgroupoid(pair, S0, S1));
  CHECK(complement_ideal(hp, pair, S0, S1).passed());

  // Z/3 with the identity and one generator, but not its inverse.
  auto z3 = FiniteGroupoid::connected(fixtures::cyclic(3), 1);
  auto h3 = function_hopf(z3);
  int id = z3.identity[0], g = (id + 1) % 3;
  std::vector<bool> T0{true}, T1(3);
  T1[id] = T1[g] = true;
  CHECK_FALSE(is_subgroupoid(z3, T0, T1));
  auto rep = complement_ideal(h3, z3, T0, T1);
  CHECK_FALSE(rep.passed());
  CHECK(rep.lh != CheckStatus::Pass);

  // Exhaustive agreement on the groupoids with at most two objects.
  std::size_t pairs = 0;
  for (auto const& [name, g3] : fixtures::small_groupoids(2, 4)) {
    auto h = function_hopf(g3);
    std::size_t no = g3.num_objects(), na = g3.num_arrows();
    for (std::size_t m0 = 0; m0 < (1u << no); ++m0)
      for (std::size_t m1 = 0; m1 < (1u << na); ++m1) {
        std::vector<bool> s0(no), s1(na);
        for (std::size_t p = 0; p < no; ++p) s0[p] = m0 >> p & 1;
        for (std::size_t e = 0; e < na; ++e) s1[e] = m1 >> e & 1;
        INFO(name << " objects " << m0 << " arrows " << m1);
        CHECK(complement_ideal(h, g3, s0, s1).passed() == is_subgroupoid(g3, s0, s1));
        ++pairs;
      }
  }
  CHECK(pairs > 100);
}
