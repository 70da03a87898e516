// Acceptance run: one line per criterion, exit status nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "dhopf/isotopy.hpp"
#include "fixtures.hpp"
#include "groupoids.hpp"
#include "homology.hpp"
#include "oracles.hpp"

using namespace dhopf;

namespace {

struct Verdict {
  bool        ok = true;
  std::string detail;
};

// Collects a pass flag and the first few reasons for failure.
class Tally {
 public:
  void require(bool cond, const std::string& why) {
    if (cond) return;
    if (failures_++ < 5) detail_ << (failures_ > 1 ? "; " : "") << why;
  }
  Verdict verdict(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    std::ostringstream s;
    s << failures_ << " failure(s): " << detail_.str();
    return {false, s.str()};
  }

 private:
  std::size_t        failures_ = 0;
  std::ostringstream detail_;
};

std::vector<std::pair<std::string, Digraph>> core_fixtures() {
  return {{"A2", fixtures::a2()}, {"T", fixtures::triangle()}, {"Q", fixtures::square()}};
}

Verdict calculus_suite() {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (auto const& [name, d] : fixtures::named_fixtures()) {
    auto r = check_calculus(d);
    checked += r.checked;
    t.require(r.passed(), name + ": " + (r.passed() ? "" : r.mismatches[0].what + " on " + r.mismatches[0].element));
  }
  std::mt19937 rng(2718);
  for (int i = 0; i < 50; ++i) {
    Digraph d = fixtures::random_digraph(rng, 8, 20);
    auto r = check_calculus(d);
    checked += r.checked;
    t.require(r.passed(), "random digraph " + std::to_string(i));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 10, "took " + std::to_string(secs) + " s");
  return t.verdict("7 fixtures + 50 random digraphs, " + std::to_string(checked) + " identities, " +
                   std::to_string(secs).substr(0, 4) + " s");
}

Verdict kappa_consistency() {
  Tally t;
  int worst = 0;
  std::size_t total = 0;
  for (auto const& [name, d] : core_fixtures()) {
    auto P  = hx1_relations(d);
    auto gc = gen_change(d);
    auto images = kappa_images(gc);
    std::vector<IdealOracle> oracles;
    for (int n = 0; n <= 4; ++n) oracles.emplace_back(P.alg.quiver(), P.relations, n);
    for (auto const& k : images) {
      int n = 0;
      while (n <= 4 && !oracles[n].is_zero(k.image)) ++n;
      t.require(n <= 4, name + " " + k.label);
      if (n <= 4) worst = std::max(worst, n);
      ++total;
    }
  }
  return t.verdict(std::to_string(total) + " relations certify zero, max minimal N = " + std::to_string(worst));
}

Verdict hopf_suites() {
  Tally t;
  std::size_t total = 0;
  int worst = 0;
  for (auto const& [name, d] : core_fixtures())
    for (bool dx : {false, true}) {
      auto hp = dx ? dx_hopf(d) : hx1_hopf(d);
      auto r  = HopfChecker(hp, 4).all();
      total += r.instances.size();
      std::string tag = name + (dx ? " dx" : " hx1");
      t.require(r.count(CheckStatus::Unknown) == 0, tag + ": " + std::to_string(r.count(CheckStatus::Unknown)) + " unknown");
      t.require(r.count(CheckStatus::Fail) == 0, tag + ": " + std::to_string(r.count(CheckStatus::Fail)) + " failed");
      auto n = r.max_minimal_N();
      t.require(n && *n <= 4, tag + ": minimal N above 4");
      if (n) worst = std::max(worst, *n);
    }
  return t.verdict(std::to_string(total) + " axiom instances on hx1/dx of A2, T, Q, max minimal N = " + std::to_string(worst));
}

Verdict isotopy_collapse() {
  Tally t;
  auto r = digraph_iso_hx1(fixtures::triangle(), 3);
  std::size_t items = 0;
  for (auto const& c : r.collapse) {
    if (c.kind != "vertex" && c.kind != "mismatched" && c.kind != "inverse") continue;
    ++items;
    int bound = c.kind == "inverse" ? 2 : 3;
    t.require(c.status == CheckStatus::Pass && c.minimal_N && *c.minimal_N <= bound, c.kind + " " + c.what);
  }
  t.require(items > 0, "no collapse items");
  auto nv = r.max_minimal_N("vertex"), nm = r.max_minimal_N("mismatched"), ni = r.max_minimal_N("inverse");
  return t.verdict(std::to_string(items) + " items on T, max N vertex " + std::to_string(nv.value_or(-1)) +
                   ", mismatched " + std::to_string(nm.value_or(-1)) + ", inverse " + std::to_string(ni.value_or(-1)));
}

Verdict fundamental_groupoid_counts() {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  for (auto const& [name, d, want] : {std::tuple{"T", fixtures::triangle(), 9}, std::tuple{"Q", fixtures::square(), 16},
                                      std::tuple{"A2", fixtures::a2(), 4}}) {
    ArrowEnumeration en(fundamental_groupoid(d), 6);
    t.require(en.finite() && en.count() == std::size_t(want),
              std::string(name) + " gave " + (en.finite() ? std::to_string(en.count()) : "not stabilized"));
  }
  for (auto const& [name, d, rank] : {std::tuple{"T", fixtures::triangle(), 0}, std::tuple{"Q", fixtures::square(), 0},
                                      std::tuple{"C5", fixtures::cycle(5), 1}, std::tuple{"C6", fixtures::cycle(6), 1}}) {
    auto ab     = abelianization(tietze_simplify(pi1_presentation(fundamental_groupoid(d), 0)));
    auto oracle = oracles::h1_by_cells(d, 0);
    t.require(ab.free_rank == std::size_t(rank) && ab.torsion.empty(), std::string(name) + " H1 rank " + std::to_string(ab.free_rank));
    t.require(oracle.free_rank == ab.free_rank && oracle.torsion == ab.torsion, std::string(name) + " disagrees with the cell oracle");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 5, "took " + std::to_string(secs) + " s");
  return t.verdict("T 9, Q 16, A2 4 arrows; H1 T 0, Q 0, C5 Z, C6 Z");
}

Verdict word_problem() {
  Tally t;
  for (auto const& [d, w1, w2] : {std::tuple{fixtures::triangle(), "(p<q).(q<r)", "(p<r)"},
                                  std::tuple{fixtures::square(), "(p<q).(q<r)", "(p<q2).(q2<r)"}}) {
    auto P = fundamental_groupoid(d);
    auto a = parse_word(d, w1), b = parse_word(d, w2);
    auto r = word_equal(P, a, b, 4);
    t.require(r.equal, std::string(w1) + " = " + w2 + " not found");
    t.require(replay(P, a, r.steps) == free_reduce(b), std::string(w1) + " certificate does not replay");
  }
  return t.verdict("triangle and square relations Equal at L = 4, certificates replay");
}

Verdict hopf_ideals_are_subgroupoids() {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  auto groupoids = fixtures::small_groupoids(3, 8);
  std::size_t pairs = 0, subgroupoids = 0;
  for (auto const& [name, g] : groupoids) {
    auto hp = function_hopf(g);
    std::size_t no = g.num_objects(), na = g.num_arrows();
    for (std::size_t m0 = 0; m0 < (1u << no); ++m0)
      for (std::size_t m1 = 0; m1 < (1u << na); ++m1) {
        std::vector<bool> S0(no), S1(na);
        std::vector<Func> J;
        std::vector<AlgElem> I;
        for (std::size_t p = 0; p < no; ++p) {
          S0[p] = m0 >> p & 1;
          if (S0[p]) continue;
          Func f(no);
          f.c[p] = 1;
          J.push_back(f);
        }
        for (std::size_t e = 0; e < na; ++e) {
          S1[e] = m1 >> e & 1;
          if (!S1[e]) I.push_back(vertex_elem(int(e)));
        }
        bool ideal = is_hopf_ideal(hp, J, I, 1).passed(), sub = is_subgroupoid(g, S0, S1);
        t.require(ideal == sub, name + " objects " + std::to_string(m0) + " arrows " + std::to_string(m1));
        ++pairs;
        subgroupoids += sub;
      }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 30, "took " + std::to_string(secs) + " s");
  return t.verdict(std::to_string(groupoids.size()) + " groupoids, " + std::to_string(pairs) + " pairs, " +
                   std::to_string(subgroupoids) + " subgroupoids, " + std::to_string(secs).substr(0, 4) + " s");
}

Verdict projected_relations() {
  Tally t;
  auto T  = fixtures::triangle();
  auto iso = digraph_iso_dx(T, 4);
  auto rg  = realize_groupoid(iso.groupoid, 6);
  t.require(rg.groupoid.num_arrows() == 9, "realized " + std::to_string(rg.groupoid.num_arrows()) + " arrows");
  auto images = project_dx_relations(T, rg);
  for (auto const& p : images) t.require(p.image.is_zero(), p.label);
  return t.verdict(std::to_string(images.size()) + " dx relations vanish in the ring of the 9-arrow groupoid");
}

Verdict linear_algebra() {
  Tally t;
  std::mt19937 rng(1618);
  for (int i = 0; i < 200; ++i) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    auto m = oracles::random_int_matrix(rng, rows, cols, -9, 9);
    t.require(smith_normal_form(m).invariant_factors == oracles::smith_by_minors(m), "SNF matrix " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    auto m = oracles::random_int_matrix(rng, rows, cols, -3, 3);
    if (i % 4 == 0 && rows > 2) m[rows - 1] = m[0];
    std::vector<std::vector<Rational>> mq;
    for (auto const& row : m) mq.emplace_back(row.begin(), row.end());
    t.require(rref(QMatrix::from_dense(mq)).rank == oracles::rank_by_minors(mq), "rank matrix " + std::to_string(i));
  }
  return t.verdict("200 Smith forms and 200 ranks agree with minor oracles");
}

}  // namespace

int main() {
  std::vector<std::function<Verdict()>> criteria = {calculus_suite,   kappa_consistency,           hopf_suites,
                                                    isotopy_collapse, fundamental_groupoid_counts, word_problem,
                                                    hopf_ideals_are_subgroupoids, projected_relations, linear_algebra};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << ": " << (v.ok ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
    failed += !v.ok;
  }
  return failed == 0 ? 0 : 1;
}
