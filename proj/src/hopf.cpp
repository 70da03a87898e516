#include "dhopf/hopf.hpp"

#include <stdexcept>

namespace dhopf {

namespace {

template <class T>
const T& entry(const GenTable<T>& t, const Word& w, const char* what) {
  if (t.empty()) throw std::logic_error(std::string(what) + " table absent");
  return w.arrows.empty() ? t.vertex.at(w.vertex) : t.arrow.at(w.arrows.front());
}

const Tensor2& arrow_entry(const GenTable<Tensor2>& t, int a, const char* what) {
  if (t.empty()) throw std::logic_error(std::string(what) + " table absent");
  return t.arrow.at(a);
}

Tensor2 delta_word(const HopfPresentation& hp, const Word& w) {
  if (w.arrows.empty()) return entry(hp.delta, w, "coproduct");
  Tensor2 acc = arrow_entry(hp.delta, w.arrows[0], "coproduct");
  for (std::size_t i = 1; i < w.arrows.size(); ++i)
    acc = normalize(hp.quiver, tensor_mul(hp.quiver, acc, hp.delta.arrow.at(w.arrows[i])));
  return acc;
}

Func eps_word(const HopfPresentation& hp, const Word& w) {
  if (w.arrows.empty()) return entry(hp.eps, w, "counit");
  auto const& q = hp.quiver;
  // eps(g rest) = eps(g s(eps(rest))) and g s(f_p) = g exactly when p lies
  // under the source of g.
  Func cur = hp.eps.arrow.at(w.arrows.back());
  for (std::size_t i = w.arrows.size() - 1; i-- > 0;) {
    int a          = w.arrows[i];
    Rational scale = cur.c.at(q.sigma[q.arrows[a].src]);
    cur            = scale * hp.eps.arrow.at(a);
  }
  return cur;
}

AlgElem anti_word(const HopfPresentation& hp, const GenTable<AlgElem>& t, const Word& w, const char* what) {
  if (w.arrows.empty()) return entry(t, w, what);
  if (t.empty()) throw std::logic_error(std::string(what) + " table absent");
  AlgElem acc = t.arrow.at(w.arrows.back());
  for (std::size_t i = w.arrows.size() - 1; i-- > 0;) acc = mul(hp.quiver, acc, t.arrow.at(w.arrows[i]));
  return acc;
}

Tensor2 translation_word(const HopfPresentation& hp, const Word& w) {
  if (w.arrows.empty()) return entry(hp.translation, w, "translation");
  Tensor2 acc = arrow_entry(hp.translation, w.arrows[0], "translation");
  for (std::size_t i = 1; i < w.arrows.size(); ++i)
    acc = op_normalize(hp.quiver, tensor_mul_op(hp.quiver, acc, hp.translation.arrow.at(w.arrows[i])));
  return acc;
}

}  // namespace

Tensor2 delta(const HopfPresentation& hp, const AlgElem& x) {
  Tensor2 out;
  for (auto const& [w, c] : x.terms) add_scaled(out, c, delta_word(hp, w));
  return out;
}

Func eps(const HopfPresentation& hp, const AlgElem& x) {
  Func out(hp.num_base());
  for (auto const& [w, c] : x.terms) out += c * eps_word(hp, w);
  return out;
}

AlgElem antipode(const HopfPresentation& hp, const AlgElem& x) {
  AlgElem out;
  for (auto const& [w, c] : x.terms) out += c * anti_word(hp, hp.antipode, w, "antipode");
  return out;
}

AlgElem antipode_inv(const HopfPresentation& hp, const AlgElem& x) {
  AlgElem out;
  for (auto const& [w, c] : x.terms) out += c * anti_word(hp, hp.antipode_inv, w, "inverse antipode");
  return out;
}

Tensor2 translation(const HopfPresentation& hp, const AlgElem& x) {
  Tensor2 out;
  for (auto const& [w, c] : x.terms) add_scaled(out, c, translation_word(hp, w));
  return out;
}

AlgElem source_of(const HopfPresentation& hp, const Func& f) {
  AlgElem out;
  for (std::size_t p = 0; p < f.c.size(); ++p)
    if (f.c[p] != 0) out += f.c[p] * source_image(hp.quiver, int(p));
  return out;
}

AlgElem target_of(const HopfPresentation& hp, const Func& f) {
  AlgElem out;
  for (std::size_t p = 0; p < f.c.size(); ++p)
    if (f.c[p] != 0) out += f.c[p] * target_image(hp.quiver, int(p));
  return out;
}

// ---------------------------------------------------------------------------
// Tables over the double quiver

namespace {

using OldTensor = std::vector<std::pair<OldExpr, OldExpr>>;

// Translation map on the old generators.
std::map<OldGen, OldTensor> old_translation(const Digraph& d) {
  auto const& E = d.edges();
  int n         = int(d.num_vertices());
  OldExpr one   = {{{}, Rational(1)}};
  auto F        = [](int p) { return old({OldKind::F, p}); };
  auto Fb       = [](int p) { return old({OldKind::FBar, p}); };
  auto e        = [](int k) { return old({OldKind::E, k}); };
  auto eb       = [](int k) { return old({OldKind::EBar, k}); };

  std::map<OldGen, OldTensor> T;
  for (int p = 0; p < n; ++p) {
    T[{OldKind::F, p}]    = {{F(p), one}};
    T[{OldKind::FBar, p}] = {{one, F(p)}};
  }
  for (std::size_t k = 0; k < E.size(); ++k) {
    OldTensor te{{e(int(k)), one}}, teb;
    for (std::size_t j = 0; j < E.size(); ++j) {
      int a = E[j].src, b = E[j].dst;
      te.push_back({Rational(-1) * commutator(e(int(k)), Fb(b)), eb(int(j))});
      OldExpr c = commutator(e(int(k)), Rational(-1) * Fb(a));
      teb.push_back({eb(int(j)), c});
      teb.push_back({Rational(-1) * one, eb(int(j)) * c});
    }
    T[{OldKind::E, int(k)}]    = te;
    T[{OldKind::EBar, int(k)}] = teb;
  }
  return T;
}

Tensor2 expand_tensor(const GenChange& gc, const OldTensor& t) {
  Tensor2 out;
  for (auto const& [x, y] : t) add_scaled(out, 1, tensor(gc.expand(x), gc.expand(y)));
  return out;
}

// Translation value of a path generator from its expression in old
// generators, multiplied out with the translation-map product rule.
Tensor2 translation_from_old(const GenChange& gc, const std::map<OldGen, Tensor2>& T, const OldExpr& x) {
  auto const& q = gc.alg.quiver();
  Tensor2 out;
  for (auto const& [w, c] : x) {
    Tensor2 acc = tensor(unit(q), unit(q));
    for (auto const& g : w) acc = tensor_mul_op(q, acc, T.at(g));
    add_scaled(out, c, acc);
  }
  return op_normalize(q, out);
}

HopfPresentation double_hopf(Presentation P, std::string name) {
  const DoubleAlgebra& A = P.alg;
  auto const& d          = A.digraph();
  auto const& dq         = A.dq();
  auto const& E          = d.edges();
  const Quiver& q        = A.quiver();
  int n                  = int(d.num_vertices());

  HopfPresentation hp;
  hp.name      = std::move(name);
  hp.quiver    = q;
  hp.relations = P.relations;

  auto f = [&](int p) {
    Func x(n);
    x.c[p] = 1;
    return x;
  };

  for (std::size_t v = 0; v < dq.num_vertices(); ++v) {
    int p = dq.first(int(v)), r = dq.second(int(v));
    Tensor2 t;
    for (int i = 0; i < n; ++i) add_to(t, Word::at(dq.vertex(p, i)), Word::at(dq.vertex(i, r)), 1);
    hp.delta.vertex.push_back(normalize(q, t));
    hp.eps.vertex.push_back(p == r ? f(p) : Func(n));
    hp.antipode.vertex.push_back(A.v(r, p));
  }
  hp.antipode_inv.vertex = hp.antipode.vertex;

  for (auto const& ar : dq.arrows()) {
    auto const& e1 = E[ar.e1];
    int a = e1.src, b = e1.dst;
    Tensor2 t;
    switch (ar.fam) {
      case Family::GenLeft: {
        auto const& e2 = E[ar.e2];
        int c = e2.src, dd = e2.dst;
        for (auto const& m : E) add_scaled(t, 1, tensor(A.gl(a, b, m.src, m.dst), A.gl(m.src, m.dst, c, dd)));
        hp.eps.arrow.push_back(ar.e1 == ar.e2 ? f(b) : Func(n));
        hp.antipode.arrow.push_back(A.gr(c, dd, a, b));
        hp.antipode_inv.arrow.push_back(A.gr(c, dd, a, b));
        break;
      }
      case Family::GenRight: {
        auto const& e2 = E[ar.e2];
        int c = e2.src, dd = e2.dst;
        for (auto const& m : E) add_scaled(t, 1, tensor(A.gr(a, b, m.src, m.dst), A.gr(m.src, m.dst, c, dd)));
        hp.eps.arrow.push_back(ar.e1 == ar.e2 ? f(a) : Func(n));
        hp.antipode.arrow.push_back(A.gl(c, dd, a, b));
        hp.antipode_inv.arrow.push_back(A.gl(c, dd, a, b));
        break;
      }
      case Family::GenLeftY: {
        int c = ar.point;
        for (auto const& m : E) add_scaled(t, 1, tensor(A.gl(a, b, m.src, m.dst), A.gly(m.src, m.dst, c)));
        for (int s = 0; s < n; ++s) add_scaled(t, 1, tensor(A.gly(a, b, s), A.v(s, c)));
        hp.eps.arrow.push_back(Func(n));
        hp.antipode.arrow.push_back(-A.gry(a, b, c));
        AlgElem inv;
        for (int s : d.in(c)) inv -= A.mul({A.gly(s, c, a), A.gr(s, c, a, b)});
        hp.antipode_inv.arrow.push_back(inv);
        break;
      }
      case Family::GenRightY: {
        int c = ar.point;
        for (auto const& m : E) add_scaled(t, 1, tensor(A.gry(m.src, m.dst, c), A.gr(m.src, m.dst, a, b)));
        for (int s = 0; s < n; ++s) add_scaled(t, 1, tensor(A.v(c, s), A.gry(a, b, s)));
        hp.eps.arrow.push_back(Func(n));
        AlgElem s;
        for (int u : d.out(c)) s -= A.mul({A.gry(c, u, b), A.gl(a, b, c, u)});
        hp.antipode.arrow.push_back(s);
        hp.antipode_inv.arrow.push_back(-A.gly(a, b, c));
        break;
      }
    }
    hp.delta.arrow.push_back(normalize(q, t));
  }

  GenChange gc = gen_change(d);
  std::map<OldGen, Tensor2> T;
  for (auto const& [g, ot] : old_translation(d)) T.emplace(g, expand_tensor(gc, ot));
  for (auto const& x : gc.backward_vertex) hp.translation.vertex.push_back(translation_from_old(gc, T, x));
  for (auto const& x : gc.backward_arrow) hp.translation.arrow.push_back(translation_from_old(gc, T, x));
  return hp;
}

}  // namespace

HopfPresentation hx1_hopf(const Digraph& d) { return double_hopf(hx1_relations(d), "hx1"); }

HopfPresentation dx_hopf(const Digraph& d) {
  CalculusReport flat = check_upsilon_flat(d);
  if (!flat.passed())
    throw std::invalid_argument("Upsilon is not flat on this digraph (" + flat.mismatches.front().element + ")");
  return double_hopf(dx_relations(d), "dx");
}

// ---------------------------------------------------------------------------
// Reports

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Unknown: return "unknown";
    case CheckStatus::Fail: return "fail";
  }
  return "?";
}

std::size_t HopfReport::count(CheckStatus s) const {
  std::size_t k = 0;
  for (auto const& i : instances) k += i.status == s;
  return k;
}

std::optional<int> HopfReport::max_minimal_N() const {
  std::optional<int> m;
  for (auto const& i : instances)
    if (i.minimal_N && (!m || *i.minimal_N > *m)) m = i.minimal_N;
  return m;
}

void HopfReport::append(const HopfReport& o) {
  instances.insert(instances.end(), o.instances.begin(), o.instances.end());
  notices.insert(notices.end(), o.notices.begin(), o.notices.end());
}

// ---------------------------------------------------------------------------
// Checker

HopfChecker::HopfChecker(const HopfPresentation& hp, int max_degree) : hp_(hp), Q_(hp.quotient(max_degree)) {}

std::vector<std::pair<Word, std::string>> HopfChecker::generators() const {
  auto const& q = hp_.quiver;
  std::vector<std::pair<Word, std::string>> g;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) g.emplace_back(Word::at(int(v)), q.vertex_labels[v]);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) g.emplace_back(Word::of(int(a)), q.arrows[a].label);
  return g;
}

CheckInstance HopfChecker::exact(std::string axiom, std::string idx, bool ok) const {
  return {std::move(axiom), std::move(idx), ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? std::optional<int>(0) : std::nullopt};
}

namespace {

CheckInstance from_degree(std::string axiom, std::string idx, std::optional<int> n, bool exact) {
  CheckStatus s = n ? CheckStatus::Pass : (exact ? CheckStatus::Fail : CheckStatus::Unknown);
  return {std::move(axiom), std::move(idx), s, n};
}

}  // namespace

CheckInstance HopfChecker::modulo(std::string axiom, std::string idx, const AlgElem& diff) const {
  auto n = diff.is_zero() ? std::optional<int>(0)
                          : Q_.minimal_degree([&](int k) { return Q_.reduce(diff, k).is_zero(); });
  return from_degree(std::move(axiom), std::move(idx), n, Q_.exact());
}

CheckInstance HopfChecker::modulo(std::string axiom, std::string idx, const Tensor2& diff) const {
  auto n = diff.empty() ? std::optional<int>(0)
                        : Q_.minimal_degree([&](int k) { return reduce_tensor(Q_, diff, k).empty(); });
  return from_degree(std::move(axiom), std::move(idx), n, Q_.exact());
}

CheckInstance HopfChecker::modulo(std::string axiom, std::string idx, const Tensor3& diff) const {
  auto n = diff.empty() ? std::optional<int>(0)
                        : Q_.minimal_degree([&](int k) { return reduce_tensor(Q_, diff, k).empty(); });
  return from_degree(std::move(axiom), std::move(idx), n, Q_.exact());
}

HopfReport HopfChecker::coring() const {
  auto const& q = hp_.quiver;
  HopfReport rep;
  for (auto const& [g, label] : generators()) {
    Tensor2 D = delta_word(hp_, g);

    Tensor3 coassoc;
    for (auto const& [k, c] : D) {
      for (auto const& [k2, c2] : delta_word(hp_, k.first)) add_to(coassoc, k2.first, k2.second, k.second, c * c2);
      for (auto const& [k2, c2] : delta_word(hp_, k.second)) add_to(coassoc, k.first, k2.first, k2.second, -c * c2);
    }
    rep.instances.push_back(modulo("coassociativity", label, normalize(q, coassoc)));

    AlgElem left = -AlgElem(g), right = -AlgElem(g);
    for (auto const& [k, c] : D) {
      left.add(k.second, c * eps_word(hp_, k.first).c.at(q.sigma[target(q, k.second)]));
      right.add(k.first, c * eps_word(hp_, k.second).c.at(q.tau[target(q, k.first)]));
    }
    rep.instances.push_back(modulo("counit-left", label, left));
    rep.instances.push_back(modulo("counit-right", label, right));

    for (std::size_t r = 0; r < q.num_base(); ++r) {
      Func a = eps(hp_, mul(q, AlgElem(g), source_image(q, int(r))));
      Func b = eps(hp_, mul(q, AlgElem(g), target_image(q, int(r))));
      rep.instances.push_back(exact("counit-balanced", label + "; " + q.base_labels[r], a == b));
    }
  }
  for (std::size_t p = 0; p < q.num_base(); ++p) {
    AlgElem s = source_image(q, int(p)), t = target_image(q, int(p));
    Tensor2 ds = delta(hp_, s), dt = delta(hp_, t);
    add_scaled(ds, -1, normalize(q, tensor(s, unit(q))));
    add_scaled(dt, -1, normalize(q, tensor(unit(q), t)));
    rep.instances.push_back(modulo("coproduct-source", q.base_labels[p], normalize(q, ds)));
    rep.instances.push_back(modulo("coproduct-target", q.base_labels[p], normalize(q, dt)));
    Func fp(q.num_base());
    fp.c[p] = 1;
    rep.instances.push_back(exact("counit-source", q.base_labels[p], eps(hp_, s) == fp));
    rep.instances.push_back(exact("counit-target", q.base_labels[p], eps(hp_, t) == fp));
  }
  return rep;
}

HopfReport HopfChecker::bialgebroid() const {
  auto const& q = hp_.quiver;
  HopfReport rep;
  AlgElem one = unit(q);
  Tensor2 du  = delta(hp_, one);
  add_scaled(du, -1, normalize(q, tensor(one, one)));
  rep.instances.push_back(modulo("coproduct-unit", "1", normalize(q, du)));
  Func all(q.num_base());
  for (auto& x : all.c) x = 1;
  rep.instances.push_back(exact("counit-unit", "1", eps(hp_, one) == all));

  auto gens = generators();
  for (auto const& [g, label] : gens) {
    bool ok = true;
    for (auto const& [k, c] : delta_word(hp_, g))
      if (q.tau[source(q, k.first)] != q.sigma[source(q, k.second)]) ok = false;
    rep.instances.push_back(exact("takeuchi", label, ok));
  }

  for (auto const& [g, lg] : gens)
    for (auto const& [h, lh] : gens) {
      std::string idx = lg + " * " + lh;
      // The product is replaced by its normal form at the full degree, so
      // the comparison exercises the relations rather than the free algebra.
      AlgElem prod = Q_.reduce(mul(q, AlgElem(g), AlgElem(h)), Q_.max_degree());
      Tensor2 diff = delta(hp_, prod);
      add_scaled(diff, -1, normalize(q, tensor_mul(q, delta_word(hp_, g), delta_word(hp_, h))));
      rep.instances.push_back(modulo("coproduct-multiplicative", idx, normalize(q, diff)));

      Func target_value = eps(hp_, mul(q, AlgElem(g), source_of(hp_, eps_word(hp_, h))));
      rep.instances.push_back(exact("counit-multiplicative", idx, eps(hp_, prod) == target_value));
    }
  return rep;
}

HopfReport HopfChecker::antipode() const {
  auto const& q = hp_.quiver;
  HopfReport rep;
  if (hp_.antipode.empty()) {
    rep.notices.push_back(hp_.name + ": no antipode table; antipode checks skipped");
    return rep;
  }
  for (std::size_t p = 0; p < q.num_base(); ++p)
    rep.instances.push_back(exact("antipode-source", q.base_labels[p],
                                  dhopf::antipode(hp_, source_image(q, int(p))) == target_image(q, int(p))));

  bool have_inv = !hp_.antipode_inv.empty();
  if (!have_inv) rep.notices.push_back(hp_.name + ": no inverse antipode table; inverse checks skipped");
  for (auto const& [g, label] : generators()) {
    Tensor2 D = delta_word(hp_, g);
    AlgElem Sg = anti_word(hp_, hp_.antipode, g, "antipode");

    Tensor2 lhs;
    for (auto const& [k, c] : D)
      for (auto const& [k2, c2] : delta(hp_, anti_word(hp_, hp_.antipode, k.first, "antipode")))
        if (auto y = compose(q, k2.first, k.second)) add_to(lhs, *y, k2.second, c * c2);
    add_scaled(lhs, -1, tensor(unit(q), Sg));
    rep.instances.push_back(modulo("antipode-left", label, normalize(q, lhs)));

    if (!have_inv) continue;
    AlgElem Sig = anti_word(hp_, hp_.antipode_inv, g, "inverse antipode");
    Tensor2 rhs;
    for (auto const& [k, c] : D)
      for (auto const& [k2, c2] : delta(hp_, anti_word(hp_, hp_.antipode_inv, k.second, "inverse antipode")))
        if (auto y = compose(q, k2.second, k.first)) add_to(rhs, k2.first, *y, c * c2);
    add_scaled(rhs, -1, tensor(Sig, unit(q)));
    rep.instances.push_back(modulo("antipode-right", label, normalize(q, rhs)));

    rep.instances.push_back(modulo("inverse-after-antipode", label, antipode_inv(hp_, Sg) - AlgElem(g)));
    rep.instances.push_back(modulo("antipode-after-inverse", label, dhopf::antipode(hp_, Sig) - AlgElem(g)));
  }
  return rep;
}

HopfReport HopfChecker::well_defined() const {
  auto const& q = hp_.quiver;
  HopfReport rep;
  for (std::size_t i = 0; i < hp_.relations.size(); ++i) {
    const AlgElem& r         = hp_.relations.relations[i];
    const std::string& label = hp_.relations.labels[i];
    rep.instances.push_back(modulo("coproduct-relation", label, delta(hp_, r)));
    bool eps_ok = eps(hp_, r).is_zero();
    for (std::size_t p = 0; p < q.num_base(); ++p) {
      eps_ok = eps_ok && eps(hp_, mul(q, r, source_image(q, int(p)))).is_zero();
      eps_ok = eps_ok && eps(hp_, mul(q, r, target_image(q, int(p)))).is_zero();
    }
    rep.instances.push_back(exact("counit-relation", label, eps_ok));
    if (!hp_.antipode.empty()) rep.instances.push_back(modulo("antipode-relation", label, dhopf::antipode(hp_, r)));
    if (!hp_.antipode_inv.empty())
      rep.instances.push_back(modulo("inverse-antipode-relation", label, antipode_inv(hp_, r)));
    if (!hp_.translation.empty())
      rep.instances.push_back(modulo("translation-relation", label, dhopf::translation(hp_, r)));
  }
  return rep;
}

HopfReport HopfChecker::translation() const {
  auto const& q = hp_.quiver;
  HopfReport rep;
  if (hp_.translation.empty()) {
    rep.notices.push_back(hp_.name + ": no translation table; translation checks skipped");
    return rep;
  }
  for (auto const& [g, label] : generators()) {
    Tensor2 beta;
    for (auto const& [k, c] : translation_word(hp_, g))
      for (auto const& [k2, c2] : delta_word(hp_, k.first))
        if (auto y = compose(q, k2.second, k.second)) add_to(beta, k2.first, *y, c * c2);
    add_scaled(beta, -1, tensor(AlgElem(g), unit(q)));
    rep.instances.push_back(modulo("translation", label, normalize(q, beta)));
  }
  return rep;
}

HopfReport HopfChecker::all() const {
  HopfReport rep = coring();
  rep.append(bialgebroid());
  rep.append(well_defined());
  rep.append(antipode());
  rep.append(translation());
  return rep;
}

HopfReport check_coring(const HopfPresentation& hp, int N) { return HopfChecker(hp, N).coring(); }
HopfReport check_bialgebroid(const HopfPresentation& hp, int N) { return HopfChecker(hp, N).bialgebroid(); }
HopfReport check_antipode(const HopfPresentation& hp, int N) { return HopfChecker(hp, N).antipode(); }
HopfReport check_well_defined(const HopfPresentation& hp, int N) { return HopfChecker(hp, N).well_defined(); }
HopfReport check_translation(const HopfPresentation& hp, int N) { return HopfChecker(hp, N).translation(); }

}  // namespace dhopf
