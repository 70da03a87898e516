#include "dhopf/isotopy.hpp"

#include <stdexcept>

namespace dhopf {

IsotopyIdeal isotropy_ideal(const HopfPresentation& hp) {
  IsotopyIdeal ideal;
  auto const& q = hp.quiver;
  for (std::size_t p = 0; p < q.num_base(); ++p) {
    ideal.I_gens.push_back(source_image(q, int(p)) - target_image(q, int(p)));
    ideal.labels.push_back("iso(" + q.base_labels[p] + ")");
  }
  return ideal;
}

HopfPresentation isotopy_quotient(const HopfPresentation& hp) {
  HopfPresentation out = hp;
  out.name += "-iso";
  IsotopyIdeal ideal = isotropy_ideal(hp);
  bool all_zero      = true;
  for (std::size_t i = 0; i < ideal.I_gens.size(); ++i) {
    if (ideal.I_gens[i].is_zero()) continue;
    all_zero = false;
    out.relations.add(ideal.I_gens[i], ideal.labels[i]);
  }
  if (!all_zero) out.exact = nullptr;
  return out;
}

CheckStatus IsoResult::status() const {
  CheckStatus s = CheckStatus::Pass;
  for (auto const& c : collapse) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Unknown) s = CheckStatus::Unknown;
  }
  return s;
}

std::optional<int> IsoResult::max_minimal_N(const std::string& kind) const {
  std::optional<int> m;
  for (auto const& c : collapse)
    if ((kind.empty() || c.kind == kind) && c.minimal_N && (!m || *c.minimal_N > *m)) m = c.minimal_N;
  return m;
}

namespace {

class CollapseChecker {
 public:
  CollapseChecker(const HopfPresentation& hp, int N) : Q_(hp.quotient(N)) {}

  void expect_zero(IsoResult& res, std::string kind, std::string what, const AlgElem& x) const {
    CollapseItem item{std::move(kind), std::move(what), x, CheckStatus::Unknown, std::nullopt};
    item.minimal_N = x.is_zero() ? std::optional<int>(0)
                                 : Q_.minimal_degree([&](int k) { return Q_.reduce(x, k).is_zero(); });
    if (item.minimal_N) item.status = CheckStatus::Pass;
    res.collapse.push_back(std::move(item));
  }

 private:
  Quotient Q_;
};

void hx1_collapse(const Digraph& d, const HopfPresentation& iso, const HopfPresentation& parent, int N,
                  IsoResult& res) {
  DoubleAlgebra A(d);
  auto const& dq = A.dq();
  auto const& q  = A.quiver();
  CollapseChecker C(iso, N);
  int n = int(d.num_vertices());

  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r)
      if (p != r) C.expect_zero(res, "vertex", dq.vertex_label(dq.vertex(p, r)), A.v(p, r));
  for (std::size_t a = 0; a < dq.arrows().size(); ++a) {
    auto const& ar = dq.arrows()[a];
    bool pair      = ar.fam == Family::GenLeft || ar.fam == Family::GenRight;
    if (pair && ar.e1 == ar.e2) continue;
    C.expect_zero(res, "mismatched", q.arrows[a].label, arrow_elem(int(a)));
  }
  for (auto const& e : d.edges()) {
    int a = e.src, b = e.dst;
    AlgElem gl = A.gl(a, b, a, b), gr = A.gr(a, b, a, b);
    std::string ab = d.name(a) + d.name(b);
    C.expect_zero(res, "inverse", "GR(" + ab + ") GL(" + ab + ") - (" + d.name(a) + "|" + d.name(a) + ")",
                  A.mul({gr, gl}) - A.v(a, a));
    C.expect_zero(res, "inverse", "GL(" + ab + ") GR(" + ab + ") - (" + d.name(b) + "|" + d.name(b) + ")",
                  A.mul({gl, gr}) - A.v(b, b));
  }
  IsotopyIdeal ideal = isotropy_ideal(parent);
  for (std::size_t i = 0; i < ideal.I_gens.size(); ++i)
    C.expect_zero(res, "antipode", "S(" + ideal.labels[i] + ")", antipode(parent, ideal.I_gens[i]));
}

}  // namespace

IsoResult digraph_iso_hx1(const Digraph& d, int N) {
  IsoResult res;
  res.groupoid        = free_groupoid(d);
  HopfPresentation hp = hx1_hopf(d);
  hx1_collapse(d, isotopy_quotient(hp), hp, N, res);
  return res;
}

IsoResult digraph_iso_dx(const Digraph& d, int N) {
  IsoResult res;
  res.groupoid         = fundamental_groupoid(d);
  HopfPresentation hp  = dx_hopf(d);
  HopfPresentation iso = isotopy_quotient(hp);
  hx1_collapse(d, iso, hp, N, res);

  DoubleAlgebra A(d);
  CollapseChecker C(iso, N);
  auto G = [&](int a, int b) { return A.gl(a, b, a, b); };
  auto nm = [&](int a, int b) { return "GL(" + d.name(a) + d.name(b) + ")"; };
  for (auto const& t : triangles(d))
    C.expect_zero(res, "triangle", nm(t.b, t.c) + " " + nm(t.a, t.b) + " - " + nm(t.a, t.c),
                  A.mul({G(t.b, t.c), G(t.a, t.b)}) - G(t.a, t.c));
  for (auto const& s : squares(d))
    C.expect_zero(res, "square",
                  nm(s.q, s.r) + " " + nm(s.p, s.q) + " - " + nm(s.q2, s.r) + " " + nm(s.p, s.q2),
                  A.mul({G(s.q, s.r), G(s.p, s.q)}) - A.mul({G(s.q2, s.r), G(s.p, s.q2)}));
  return res;
}

RealizedGroupoid realize_groupoid(const GroupoidPresentation& pres, std::size_t cap) {
  auto const& d = pres.digraph;
  ArrowEnumeration en(pres, cap);
  if (!en.finite()) throw std::runtime_error("arrow enumeration did not stabilize within length " + std::to_string(cap));
  auto cls = [&](const GroupoidWord& w) {
    auto c = en.classify(w);
    if (!c) throw std::runtime_error("word " + format_word(d, w) + " left the enumerated classes");
    return int(*c);
  };

  RealizedGroupoid rg;
  FiniteGroupoid& g = rg.groupoid;
  g.objects         = d.vertices();
  auto const& reps  = en.representatives();
  std::size_t na    = reps.size();
  g.comp.assign(na, std::vector<int>(na, -1));
  for (auto const& w : reps) {
    g.arrow_names.push_back(format_word(d, w));
    g.src.push_back(w.start);
    g.dst.push_back(word_end(d, w));
    g.inverse.push_back(cls(inverse(d, w)));
  }
  for (std::size_t v = 0; v < d.num_vertices(); ++v) g.identity.push_back(cls(identity_word(int(v))));
  for (std::size_t f = 0; f < na; ++f)
    for (std::size_t h = 0; h < na; ++h)
      if (g.src[h] == g.dst[f]) g.comp[h][f] = cls(concat(d, reps[f], reps[h]));
  g.validate();
  for (std::size_t e = 0; e < d.num_edges(); ++e) rg.edge_arrow.push_back(cls(letter_word(d, int(e))));
  return rg;
}

std::vector<ProjectedRelation> project_dx_relations(const Digraph& d, const RealizedGroupoid& rg) {
  Presentation P      = dx_relations(d);
  auto const& dq      = P.alg.dq();
  auto const& g       = rg.groupoid;
  HopfPresentation gr = groupoid_ring(g);
  auto const& gq      = gr.quiver;

  auto vertex_image = [&](int v) {
    int p = dq.first(v), r = dq.second(v);
    return p == r ? vertex_elem(p) : AlgElem();
  };
  auto arrow_image = [&](int a) {
    auto const& ar = dq.arrows()[a];
    if (ar.e1 != ar.e2) return AlgElem();
    if (ar.fam == Family::GenLeft) return groupoid_arrow_elem(g, rg.edge_arrow[ar.e1]);
    if (ar.fam == Family::GenRight) return groupoid_arrow_elem(g, g.inverse[rg.edge_arrow[ar.e1]]);
    return AlgElem();
  };

  std::vector<ProjectedRelation> out;
  for (std::size_t i = 0; i < P.relations.size(); ++i) {
    AlgElem img;
    for (auto const& [w, c] : P.relations.relations[i].terms) {
      if (w.arrows.empty()) {
        img += c * vertex_image(w.vertex);
        continue;
      }
      AlgElem prod = arrow_image(w.arrows.front());
      for (std::size_t k = 1; k < w.arrows.size() && !prod.is_zero(); ++k) prod = mul(gq, prod, arrow_image(w.arrows[k]));
      img += c * prod;
    }
    out.push_back({P.relations.labels[i], gr.exact(img)});
  }
  return out;
}

}  // namespace dhopf
