#include "dhopf/presentations.hpp"

#include <stdexcept>

namespace dhopf {

DoubleAlgebra::DoubleAlgebra(const Digraph& d) : dq_(d), q_(quiver_from_double(dq_)) {}

namespace {

AlgElem checked_arrow(int idx, const char* what) {
  if (idx < 0) throw std::invalid_argument(std::string(what) + ": edge not in digraph");
  return arrow_elem(idx);
}

}  // namespace

AlgElem DoubleAlgebra::v(int p, int q) const { return vertex_elem(dq_.vertex(p, q)); }
AlgElem DoubleAlgebra::gl(int a, int b, int c, int d) const { return checked_arrow(dq_.gl(a, b, c, d), "GL"); }
AlgElem DoubleAlgebra::gr(int a, int b, int c, int d) const { return checked_arrow(dq_.gr(a, b, c, d), "GR"); }
AlgElem DoubleAlgebra::gly(int a, int b, int q) const { return checked_arrow(dq_.gly(a, b, q), "GLY"); }
AlgElem DoubleAlgebra::gry(int c, int d, int p) const { return checked_arrow(dq_.gry(c, d, p), "GRY"); }

const char* kind_name(PresentationKind k) { return k == PresentationKind::HX1 ? "hx1" : "dx"; }

namespace {

std::string edge_str(const Digraph& d, int a, int b) { return d.name(a) + "->" + d.name(b); }

}  // namespace

Presentation hx1_relations(const Digraph& d) {
  Presentation P{DoubleAlgebra(d), {}, PresentationKind::HX1};
  const DoubleAlgebra& A = P.alg;
  auto const& E          = d.edges();
  int n                  = int(d.num_vertices());

  // Pairs of edges into a common target b: (a->b, p->b).
  for (auto const& e1 : E)
    for (auto const& e2 : E) {
      if (e1.dst != e2.dst) continue;
      int a = e1.src, p = e2.src, b = e1.dst;
      for (int q = 0; q < n; ++q) {
        std::string idx = "(" + edge_str(d, a, b) + ", " + edge_str(d, p, b) + "; " + d.name(q) + ")";
        AlgElem r1, r2;
        for (int i : d.out(q)) {
          r1 += A.mul({A.gr(a, b, q, i), A.gl(p, b, q, i)});
          r2 += A.mul({A.gr(q, i, a, b), A.gl(q, i, p, b)});
        }
        if (a == p) {
          r1 -= A.v(a, q);
          r2 -= A.v(q, a);
        }
        P.relations.add(r1, "H1a" + idx);
        P.relations.add(r2, "H1b" + idx);
      }
    }

  // Pairs of edges out of a common source: (d->a, d->p).
  for (auto const& e1 : E)
    for (auto const& e2 : E) {
      if (e1.src != e2.src) continue;
      int s = e1.src, a = e1.dst, p = e2.dst;
      for (int q = 0; q < n; ++q) {
        std::string idx = "(" + edge_str(d, s, a) + ", " + edge_str(d, s, p) + "; " + d.name(q) + ")";
        AlgElem r1, r2;
        for (int i : d.in(q)) {
          r1 += A.mul({A.gl(s, a, i, q), A.gr(s, p, i, q)});
          r2 += A.mul({A.gl(i, q, s, a), A.gr(i, q, s, p)});
        }
        if (a == p) {
          r1 -= A.v(a, q);
          r2 -= A.v(q, a);
        }
        P.relations.add(r1, "H2a" + idx);
        P.relations.add(r2, "H2b" + idx);
      }
    }

  // GRY and GLY in terms of the others, per edge s->t and vertex q.
  for (auto const& e : E) {
    int s = e.src, t = e.dst;
    for (int q = 0; q < n; ++q) {
      std::string idx = "(" + edge_str(d, s, t) + "; " + d.name(q) + ")";
      AlgElem r1 = A.gry(s, t, q), r2 = -A.gly(s, t, q);
      for (int i : d.out(q)) r1 -= A.mul({A.gr(q, i, s, t), A.gly(q, i, t)});
      for (int i : d.in(q)) r2 += A.mul({A.gl(s, t, i, q), A.gry(i, q, s)});
      P.relations.add(r1, "H3a" + idx);
      P.relations.add(r2, "H3b" + idx);
    }
  }
  return P;
}

namespace {

void require_path2(const Digraph& d, int p, int q, int r) {
  if (!d.has_edge(p, q) || !d.has_edge(q, r))
    throw std::invalid_argument(d.name(p) + "->" + d.name(q) + "->" + d.name(r) + " is not a 2-path");
}

}  // namespace

AlgElem P_expr(const DoubleAlgebra& A, int p, int q, int r, int a, int b) {
  auto const& d = A.digraph();
  require_path2(d, p, q, r);
  AlgElem x;
  for (int i : d.out(a))
    if (d.has_edge(i, b)) x += A.mul({A.gl(q, r, i, b), A.gl(p, q, a, i)});
  if (d.has_edge(a, b)) {
    x -= A.mul({A.gly(q, r, b), A.gl(p, q, a, b)});
    x -= A.mul({A.gl(q, r, a, b), A.gly(p, q, a)});
  }
  return x;
}

AlgElem Q_expr(const DoubleAlgebra& A, int p, int q, int r, int a, int b) {
  auto const& d = A.digraph();
  require_path2(d, p, q, r);
  AlgElem x;
  for (int i : d.out(a))
    if (d.has_edge(i, b)) x += A.mul({A.gr(a, i, p, q), A.gr(i, b, q, r)});
  if (d.has_edge(a, b)) {
    x += A.mul({A.gr(a, b, p, q), A.gry(q, r, b)});
    x += A.mul({A.gry(p, q, a), A.gr(a, b, q, r)});
  }
  return x;
}

Presentation dx_relations(const Digraph& d) {
  Presentation P = hx1_relations(d);
  P.kind         = PresentationKind::DX;
  const DoubleAlgebra& A = P.alg;
  int n                  = int(d.num_vertices());
  auto nm                = [&](int v) { return d.name(v); };

  for (auto const& sq : squares(d)) {
    int p = sq.p, q = sq.q, q2 = sq.q2, r = sq.r;
    std::string base = "(" + nm(p) + "," + nm(q) + "," + nm(q2) + "," + nm(r);
    for (int c = 0; c < n; ++c)
      P.relations.add(A.mul({A.gly(q, r, c), A.gly(p, q, c)}) - A.mul({A.gly(q2, r, c), A.gly(p, q2, c)}),
                      "Sq1" + base + "; " + nm(c) + ")");
    for (int c = 0; c < n; ++c)
      P.relations.add(A.mul({A.gry(p, q, c), A.gry(q, r, c)}) - A.mul({A.gry(p, q2, c), A.gry(q2, r, c)}),
                      "Sq1'" + base + "; " + nm(c) + ")");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        P.relations.add(P_expr(A, p, q, r, a, b) - P_expr(A, p, q2, r, a, b),
                        "SqP" + base + "; " + nm(a) + "," + nm(b) + ")");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        P.relations.add(Q_expr(A, p, q, r, a, b) - Q_expr(A, p, q2, r, a, b),
                        "SqQ" + base + "; " + nm(a) + "," + nm(b) + ")");
  }

  for (auto const& tr : triangles(d)) {
    int p = tr.a, q = tr.b, r = tr.c;
    std::string base = "(" + nm(p) + "," + nm(q) + "," + nm(r);
    for (int c = 0; c < n; ++c)
      P.relations.add(A.mul({A.gly(q, r, c), A.gly(p, q, c)}) + A.gly(p, r, c), "Tri1" + base + "; " + nm(c) + ")");
    for (int c = 0; c < n; ++c)
      P.relations.add(A.mul({A.gry(p, q, c), A.gry(q, r, c)}) - A.gry(p, r, c), "Tri1'" + base + "; " + nm(c) + ")");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        AlgElem x = P_expr(A, p, q, r, a, b);
        if (d.has_edge(a, b)) x -= A.gl(p, r, a, b);
        P.relations.add(x, "Tri2" + base + "; " + nm(a) + "," + nm(b) + ")");
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        AlgElem x = Q_expr(A, p, q, r, a, b);
        if (d.has_edge(a, b)) x -= A.gr(a, b, p, r);
        P.relations.add(x, "Tri2'" + base + "; " + nm(a) + "," + nm(b) + ")");
      }
  }
  return P;
}

// ---------------------------------------------------------------------------
// Old generators

OldExpr old(OldGen g) { return OldExpr{{{g}, Rational(1)}}; }

namespace {

void accumulate(OldExpr& x, const std::vector<OldGen>& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = x.try_emplace(w, 0);
  it->second += c;
  if (it->second == 0) x.erase(it);
}

}  // namespace

OldExpr operator+(const OldExpr& x, const OldExpr& y) {
  OldExpr out = x;
  for (auto const& [w, c] : y) accumulate(out, w, c);
  return out;
}

OldExpr operator-(const OldExpr& x, const OldExpr& y) {
  OldExpr out = x;
  for (auto const& [w, c] : y) accumulate(out, w, -c);
  return out;
}

OldExpr operator*(const OldExpr& x, const OldExpr& y) {
  OldExpr out;
  for (auto const& [wx, cx] : x)
    for (auto const& [wy, cy] : y) {
      std::vector<OldGen> w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      accumulate(out, w, cx * cy);
    }
  return out;
}

OldExpr operator*(const Rational& c, const OldExpr& x) {
  OldExpr out;
  for (auto const& [w, v] : x) accumulate(out, w, c * v);
  return out;
}

OldExpr commutator(const OldExpr& x, const OldExpr& y) { return x * y - y * x; }

std::string old_label(const Digraph& d, const OldGen& g) {
  switch (g.kind) {
    case OldKind::F: return "f_" + d.name(g.index);
    case OldKind::FBar: return "fbar_" + d.name(g.index);
    case OldKind::E: return "e(" + d.name(d.edges()[g.index].dst) + "<-" + d.name(d.edges()[g.index].src) + ")";
    case OldKind::EBar: return "ebar(" + d.name(d.edges()[g.index].dst) + "<-" + d.name(d.edges()[g.index].src) + ")";
  }
  return "?";
}

std::string old_expr_label(const Digraph& d, const OldExpr& x) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto const& [w, c] : x) {
    if (c < 0) s += first ? "-" : " - ";
    else if (!first) s += " + ";
    if (abs(c) != 1 || w.empty()) s += Rational(abs(c)).get_str() + (w.empty() ? "" : " ");
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " * " : "") + old_label(d, w[i]);
    first = false;
  }
  return s;
}

std::vector<OldGen> GenChange::old_generators() const {
  std::vector<OldGen> out;
  for (auto const& [g, x] : forward) out.push_back(g);
  return out;
}

AlgElem GenChange::expand(const OldExpr& x) const {
  AlgElem out;
  for (auto const& [w, c] : x) {
    AlgElem prod = alg.unit();
    for (auto const& g : w) prod = dhopf::mul(alg.quiver(), prod, forward.at(g));
    out += c * prod;
  }
  return out;
}

OldExpr GenChange::pull_back(const AlgElem& x) const {
  OldExpr out;
  for (auto const& [w, c] : x.terms) {
    OldExpr prod;
    if (w.arrows.empty()) {
      prod = backward_vertex.at(w.vertex);
    } else {
      prod = backward_arrow.at(w.arrows.front());
      for (std::size_t i = 1; i < w.arrows.size(); ++i) prod = prod * backward_arrow.at(w.arrows[i]);
    }
    out = out + c * prod;
  }
  return out;
}

GenChange gen_change(const Digraph& d) {
  GenChange gc{DoubleAlgebra(d), {}, {}, {}};
  const DoubleAlgebra& A = gc.alg;
  auto const& E          = d.edges();
  int n                  = int(d.num_vertices());

  for (int p = 0; p < n; ++p) {
    gc.forward[{OldKind::F, p}]    = A.s(p);
    gc.forward[{OldKind::FBar, p}] = A.t(p);
  }
  for (std::size_t k = 0; k < E.size(); ++k) {
    int s = E[k].src, t = E[k].dst;
    AlgElem e, eb;
    for (int q = 0; q < n; ++q) {
      e += A.gly(s, t, q) + A.v(t, q);
      eb += A.gry(s, t, q) - A.v(q, s);
    }
    for (auto const& x : E) {
      e -= A.gl(s, t, x.src, x.dst);
      eb += A.gr(x.src, x.dst, s, t);
    }
    gc.forward[{OldKind::E, int(k)}]    = e;
    gc.forward[{OldKind::EBar, int(k)}] = eb;
  }

  auto F  = [&](int p) { return old({OldKind::F, p}); };
  auto Fb = [&](int p) { return old({OldKind::FBar, p}); };
  auto e  = [&](int a, int b) { return old({OldKind::E, d.edge_index(a, b)}); };
  auto eb = [&](int a, int b) { return old({OldKind::EBar, d.edge_index(a, b)}); };

  auto const& dq = A.dq();
  for (std::size_t v = 0; v < dq.num_vertices(); ++v)
    gc.backward_vertex.push_back(F(dq.first(int(v))) * Fb(dq.second(int(v))));
  for (auto const& ar : dq.arrows()) {
    auto const& e1 = E[ar.e1];
    switch (ar.fam) {
      case Family::GenLeft: {
        auto const& e2 = E[ar.e2];
        gc.backward_arrow.push_back(Rational(-1) * (Fb(e2.dst) * e(e1.src, e1.dst) * Fb(e2.src)));
        break;
      }
      case Family::GenRight: {
        auto const& e2 = E[ar.e2];
        gc.backward_arrow.push_back(F(e1.src) * eb(e2.src, e2.dst) * F(e1.dst));
        break;
      }
      case Family::GenLeftY: {
        int q = ar.point;
        gc.backward_arrow.push_back(Fb(q) * e(e1.src, e1.dst) * Fb(q) - F(e1.dst) * Fb(q));
        break;
      }
      case Family::GenRightY: {
        int p = ar.point;
        gc.backward_arrow.push_back(F(p) * eb(e1.src, e1.dst) * F(p) + F(p) * Fb(e1.src));
        break;
      }
    }
  }
  return gc;
}

RoundtripReport roundtrip_check(const Digraph& d) {
  GenChange gc = gen_change(d);
  RoundtripReport rep;
  auto const& Q = gc.alg.quiver();
  for (std::size_t v = 0; v < Q.num_vertices(); ++v) {
    ++rep.path_checked;
    if (gc.expand(gc.backward_vertex[v]) != vertex_elem(int(v))) rep.failures.push_back(Q.vertex_labels[v]);
  }
  for (std::size_t a = 0; a < Q.num_arrows(); ++a) {
    ++rep.path_checked;
    if (gc.expand(gc.backward_arrow[a]) != arrow_elem(int(a))) rep.failures.push_back(Q.arrows[a].label);
  }
  for (auto const& [g, img] : gc.forward) {
    ++rep.old_checked;
    if (gc.expand(gc.pull_back(img)) != img) rep.failures.push_back(old_label(d, g));
  }
  return rep;
}

std::vector<KappaImage> kappa_images(const GenChange& gc) {
  auto const& d = gc.alg.digraph();
  auto const& E = d.edges();
  int n         = int(d.num_vertices());
  auto F        = [&](int p) { return old({OldKind::F, p}); };
  auto Fb       = [&](int p) { return old({OldKind::FBar, p}); };
  auto e        = [&](int k) { return old({OldKind::E, k}); };
  auto eb       = [&](int k) { return old({OldKind::EBar, k}); };

  std::vector<KappaImage> out;
  auto push = [&](std::string label, OldExpr x) {
    AlgElem img = gc.expand(x);
    out.push_back({std::move(label), std::move(x), std::move(img)});
  };

  for (std::size_t k = 0; k < E.size(); ++k) {
    std::string idx = "(" + edge_str(d, E[k].src, E[k].dst) + ")";
    OldExpr inv1 = Rational(-1) * eb(int(k));
    OldExpr inv2 = Rational(-1) * e(int(k));
    for (std::size_t j = 0; j < E.size(); ++j) {
      int a = E[j].src, b = E[j].dst;
      inv1  = inv1 + commutator(eb(int(k)), Rational(-1) * F(a)) * e(int(j));
      inv2  = inv2 + commutator(e(int(k)), Fb(b)) * eb(int(j));
    }
    push("Inv1" + idx, inv1);
    push("Inv2" + idx, inv2);
  }

  for (std::size_t k = 0; k < E.size(); ++k) {
    int s = E[k].src, t = E[k].dst;
    for (int q = 0; q < n; ++q) {
      std::string idx = "(" + edge_str(d, s, t) + "; " + d.name(q) + ")";
      Rational sign   = Rational(int(q == t) - int(q == s));
      OldExpr h1 = Rational(-1) * sign * Fb(t);
      OldExpr h2 = Rational(-1) * sign * F(s);
      for (std::size_t j = 0; j < E.size(); ++j) {
        int a = E[j].src, b = E[j].dst;
        h1    = h1 + commutator(e(int(j)), Fb(q)) * commutator(eb(int(k)), F(b));
        h2    = h2 + commutator(eb(int(j)), F(q)) * commutator(e(int(k)), Rational(-1) * Fb(a));
      }
      push("Hpf1" + idx, h1);
      push("Hpf2" + idx, h2);
    }
  }
  return out;
}

}  // namespace dhopf
