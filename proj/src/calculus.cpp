#include "dhopf/calculus.hpp"

namespace dhopf {

Func operator*(const Func& f, const Func& g) {
  Func h(f.c.size());
  for (std::size_t i = 0; i < f.c.size(); ++i) h.c[i] = f.c[i] * g.c[i];
  return h;
}

Calculus::Calculus(const Digraph& d) : d_(d), e2_(paths2(d)) {
  int n = static_cast<int>(d.num_vertices());
  // Distinguished 2-paths: one per non-adjacent ordered pair with a 2-path.
  std::map<std::pair<int, int>, int> dist;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (d.has_edge(a, c)) continue;
      if (auto b = distinguished_vertex(d, a, c)) dist[{a, c}] = *b;
    }
  for (auto const& p : e2_) {
    auto it = dist.find({p.a, p.c});
    if (it != dist.end() && it->second == p.b) continue;
    basis_index_[p] = static_cast<int>(basis_.size());
    basis_.push_back(p);
  }
  for (auto const& p : e2_) {
    std::vector<std::pair<int, Rational>> v;
    if (auto it = basis_index_.find(p); it != basis_index_.end()) {
      v.emplace_back(it->second, Rational(1));
    } else {
      for (int b : d.out(p.a))
        if (b != p.b && d.has_edge(b, p.c)) v.emplace_back(basis_index_.at({p.a, b, p.c}), Rational(-1));
    }
    rewrite_[p] = std::move(v);
  }
}

int Calculus::basis2_index(const Path2& p) const {
  auto it = basis_index_.find(p);
  return it == basis_index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, Rational>> Calculus::coords(const Path2& p) const {
  auto it = rewrite_.find(p);
  if (it == rewrite_.end()) throw std::invalid_argument("not a 2-path: " + path_label(p));
  return it->second;
}

Func Calculus::func(int p) const {
  Func f(d_.num_vertices());
  f.c.at(p) = 1;
  return f;
}

Func Calculus::one() const {
  Func f(d_.num_vertices());
  for (auto& x : f.c) x = 1;
  return f;
}

Form1 Calculus::omega(int e) const {
  Form1 w(d_.num_edges());
  w.c.at(e) = 1;
  return w;
}

Vec1 Calculus::vec(int e) const {
  Vec1 x(d_.num_edges());
  x.c.at(e) = 1;
  return x;
}

Form2 Calculus::omega2(const Path2& p) const {
  Form2 w(basis_.size());
  for (auto const& [i, c] : coords(p)) w.c[i] += c;
  return w;
}

Vec2 Calculus::vec2(const Path2& p) const {
  Vec2 x(basis_.size());
  for (auto const& [i, c] : coords(p)) x.c[i] += c;
  return x;
}

Form1 Calculus::d0(const Func& f) const {
  Form1 w(d_.num_edges());
  for (std::size_t e = 0; e < d_.num_edges(); ++e) {
    auto [a, b] = d_.edges()[e];
    w.c[e] = f.c[b] - f.c[a];
  }
  return w;
}

Form2 Calculus::d1(const Form1& w) const {
  Form2 out(basis_.size());
  for (std::size_t e = 0; e < d_.num_edges(); ++e) {
    if (w.c[e] == 0) continue;
    auto [a, b] = d_.edges()[e];
    auto add = [&](const Path2& p, const Rational& s) {
      for (auto const& [i, c] : coords(p)) out.c[i] += s * w.c[e] * c;
    };
    for (int t : d_.out(b)) add({a, b, t}, 1);
    for (int s : d_.in(a)) add({s, a, b}, 1);
    for (int i : d_.out(a))
      if (d_.has_edge(i, b)) add({a, i, b}, -1);
  }
  return out;
}

Form2 Calculus::wedge(const Form1& w, const Form1& r) const {
  Form2 out(basis_.size());
  for (auto const& p : e2_) {
    Rational s = w.c[d_.edge_index(p.a, p.b)] * r.c[d_.edge_index(p.b, p.c)];
    if (s == 0) continue;
    for (auto const& [i, c] : coords(p)) out.c[i] += s * c;
  }
  return out;
}

Form1 Calculus::left(const Func& f, const Form1& w) const {
  Form1 o = w;
  for (std::size_t e = 0; e < o.c.size(); ++e) o.c[e] *= f.c[d_.edges()[e].src];
  return o;
}

Form1 Calculus::right(const Form1& w, const Func& f) const {
  Form1 o = w;
  for (std::size_t e = 0; e < o.c.size(); ++e) o.c[e] *= f.c[d_.edges()[e].dst];
  return o;
}

Vec1 Calculus::left(const Func& f, const Vec1& x) const {
  Vec1 o = x;
  for (std::size_t e = 0; e < o.c.size(); ++e) o.c[e] *= f.c[d_.edges()[e].dst];
  return o;
}

Vec1 Calculus::right(const Vec1& x, const Func& f) const {
  Vec1 o = x;
  for (std::size_t e = 0; e < o.c.size(); ++e) o.c[e] *= f.c[d_.edges()[e].src];
  return o;
}

// The rewriting relation only mixes 2-paths with equal endpoints, so the
// actions are diagonal in basis coordinates.
Form2 Calculus::left(const Func& f, const Form2& w) const {
  Form2 o = w;
  for (std::size_t i = 0; i < o.c.size(); ++i) o.c[i] *= f.c[basis_[i].a];
  return o;
}

Form2 Calculus::right(const Form2& w, const Func& f) const {
  Form2 o = w;
  for (std::size_t i = 0; i < o.c.size(); ++i) o.c[i] *= f.c[basis_[i].c];
  return o;
}

Vec2 Calculus::left(const Func& f, const Vec2& x) const {
  Vec2 o = x;
  for (std::size_t i = 0; i < o.c.size(); ++i) o.c[i] *= f.c[basis_[i].c];
  return o;
}

Vec2 Calculus::right(const Vec2& x, const Func& f) const {
  Vec2 o = x;
  for (std::size_t i = 0; i < o.c.size(); ++i) o.c[i] *= f.c[basis_[i].a];
  return o;
}

Func Calculus::ev1(const Vec1& x, const Form1& w) const {
  Func f(d_.num_vertices());
  for (std::size_t e = 0; e < w.c.size(); ++e) f.c[d_.edges()[e].dst] += x.c[e] * w.c[e];
  return f;
}

Func Calculus::ev1r(const Form1& w, const Vec1& x) const {
  Func f(d_.num_vertices());
  for (std::size_t e = 0; e < w.c.size(); ++e) f.c[d_.edges()[e].src] += x.c[e] * w.c[e];
  return f;
}

std::vector<std::pair<Form1, Vec1>> Calculus::coev1() const {
  std::vector<std::pair<Form1, Vec1>> out;
  for (std::size_t e = 0; e < d_.num_edges(); ++e) out.emplace_back(omega(int(e)), vec(int(e)));
  return out;
}

std::vector<std::pair<Vec1, Form1>> Calculus::coev1r() const {
  std::vector<std::pair<Vec1, Form1>> out;
  for (std::size_t e = 0; e < d_.num_edges(); ++e) out.emplace_back(vec(int(e)), omega(int(e)));
  return out;
}

Func Calculus::ev2(const Vec2& x, const Form2& w) const {
  Func f(d_.num_vertices());
  for (std::size_t i = 0; i < basis_.size(); ++i) f.c[basis_[i].c] += x.c[i] * w.c[i];
  return f;
}

Func Calculus::ev2r(const Form2& w, const Vec2& x) const {
  Func f(d_.num_vertices());
  for (std::size_t i = 0; i < basis_.size(); ++i) f.c[basis_[i].a] += x.c[i] * w.c[i];
  return f;
}

std::vector<std::pair<Form2, Vec2>> Calculus::coev2() const {
  std::vector<std::pair<Form2, Vec2>> out;
  for (auto const& p : basis_) out.emplace_back(omega2(p), vec2(p));
  return out;
}

std::vector<std::pair<Vec2, Form2>> Calculus::coev2r() const {
  std::vector<std::pair<Vec2, Form2>> out;
  for (auto const& p : basis_) out.emplace_back(vec2(p), omega2(p));
  return out;
}

Func Calculus::upsilon(const Vec1& x) const {
  Func f(d_.num_vertices());
  for (std::size_t e = 0; e < x.c.size(); ++e) {
    f.c[d_.edges()[e].src] += x.c[e];
    f.c[d_.edges()[e].dst] -= x.c[e];
  }
  return f;
}

std::string Calculus::edge_label(int e) const { return d_.edge_name(e); }

std::string Calculus::path_label(const Path2& p) const {
  return d_.name(p.a) + "->" + d_.name(p.b) + "->" + d_.name(p.c);
}

namespace {

template <class T>
void expect_equal(CalculusReport& r, const T& lhs, const T& rhs, const std::string& what, const std::string& where) {
  ++r.checked;
  if (!(lhs == rhs)) r.mismatches.push_back({what, where});
}

}  // namespace

CalculusReport check_d_squared(const Calculus& c) {
  CalculusReport r;
  auto const& d = c.digraph();
  for (int p = 0; p < int(d.num_vertices()); ++p)
    expect_equal(r, c.d1(c.d0(c.func(p))), Form2(c.basis2().size()), "d1(d0(f))=0", "f_" + d.name(p));
  return r;
}

CalculusReport check_leibniz(const Calculus& c) {
  CalculusReport r;
  auto const& d = c.digraph();
  for (int p = 0; p < int(d.num_vertices()); ++p)
    for (int e = 0; e < int(d.num_edges()); ++e) {
      Func  f = c.func(p);
      Form1 w = c.omega(e);
      std::string at = "f_" + d.name(p) + ", w(" + c.edge_label(e) + ")";
      expect_equal(r, c.d1(c.left(f, w)), c.wedge(c.d0(f), w) + c.left(f, c.d1(w)), "left Leibniz", at);
      expect_equal(r, c.d1(c.right(w, f)), c.right(c.d1(w), f) - c.wedge(w, c.d0(f)), "right Leibniz", at);
    }
  return r;
}

CalculusReport check_snakes(const Calculus& c) {
  CalculusReport r;
  std::size_t m = c.digraph().num_edges(), k = c.basis2().size();
  for (std::size_t e = 0; e < m; ++e) {
    Vec1  x = c.vec(int(e));
    Form1 w = c.omega(int(e));
    std::string at = c.edge_label(int(e));
    Vec1  s1(m);
    Form1 s2(m), s3(m);
    Vec1  s4(m);
    for (auto const& [om, v] : c.coev1()) s1 += c.left(c.ev1(x, om), v);
    for (auto const& [om, v] : c.coev1()) s2 += c.right(om, c.ev1(v, w));
    for (auto const& [v, om] : c.coev1r()) s3 += c.left(c.ev1r(w, v), om);
    for (auto const& [v, om] : c.coev1r()) s4 += c.right(v, c.ev1r(om, x));
    expect_equal(r, s1, x, "(ev1 x id)(id x coev1) = id", at);
    expect_equal(r, s2, w, "(id x ev1)(coev1 x id) = id", at);
    expect_equal(r, s3, w, "(ev1r x id)(id x coev1r) = id", at);
    expect_equal(r, s4, x, "(id x ev1r)(coev1r x id) = id", at);
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vec2  x = c.vec2(c.basis2()[i]);
    Form2 w = c.omega2(c.basis2()[i]);
    std::string at = c.path_label(c.basis2()[i]);
    Vec2  s1(k);
    Form2 s2(k), s3(k);
    Vec2  s4(k);
    for (auto const& [om, v] : c.coev2()) s1 += c.left(c.ev2(x, om), v);
    for (auto const& [om, v] : c.coev2()) s2 += c.right(om, c.ev2(v, w));
    for (auto const& [v, om] : c.coev2r()) s3 += c.left(c.ev2r(w, v), om);
    for (auto const& [v, om] : c.coev2r()) s4 += c.right(v, c.ev2r(om, x));
    expect_equal(r, s1, x, "(ev2 x id)(id x coev2) = id", at);
    expect_equal(r, s2, w, "(id x ev2)(coev2 x id) = id", at);
    expect_equal(r, s3, w, "(ev2r x id)(id x coev2r) = id", at);
    expect_equal(r, s4, x, "(id x ev2r)(coev2r x id) = id", at);
  }
  return r;
}

CalculusReport check_pivotal(const Digraph& d) {
  Calculus c(d);
  CalculusReport r;
  auto const& E2 = c.all_paths2();
  for (auto const& basis : c.basis2()) {
    Vec2 x = c.vec2(basis);
    // Both sides live in X1 (x)_A X1, whose basis is e(c<-b) (x) e(b<-a) for
    // a->b->c in E2; they are compared coordinate by coordinate.
    std::vector<Rational> lhs(E2.size()), rhs(E2.size());
    for (std::size_t k = 0; k < E2.size(); ++k) {
      auto const& p  = E2[k];
      Form2 w        = c.wedge(c.omega(d.edge_index(p.a, p.b)), c.omega(d.edge_index(p.b, p.c)));
      Func  l        = c.ev2(x, w);   // acts on the left of e(c<-b)
      Func  rr       = c.ev2r(w, x);  // acts on the right of e(b<-a)
      lhs[k]         = l.c[p.c];
      rhs[k]         = rr.c[p.a];
    }
    ++r.checked;
    if (lhs != rhs) r.mismatches.push_back({"pivotality of wedge", c.path_label(basis)});
  }
  return r;
}

CalculusReport check_upsilon_flat(const Digraph& d) {
  Calculus c(d);
  CalculusReport r;
  std::size_t m = d.num_edges();
  for (auto const& basis : c.basis2()) {
    Vec2 x = c.vec2(basis);
    Vec1 first(m);
    for (std::size_t e = 0; e < m; ++e) first += c.left(c.ev2(x, c.d1(c.omega(int(e)))), c.vec(int(e)));
    Func total = c.upsilon(first);
    Vec1 second(m);
    for (auto const& p : c.all_paths2()) {
      int ab = d.edge_index(p.a, p.b), bc = d.edge_index(p.b, p.c);
      Func inner = c.ev2(x, c.wedge(c.omega(ab), c.omega(bc)));
      Func u     = c.upsilon(c.left(inner, c.vec(bc)));
      second += c.left(u, c.vec(ab));
    }
    total += c.upsilon(second);
    ++r.checked;
    if (!total.is_zero()) r.mismatches.push_back({"Upsilon flatness", c.path_label(basis)});
  }
  return r;
}

CalculusReport check_calculus(const Digraph& d) {
  Calculus c(d);
  CalculusReport all;
  for (auto const& part : {check_d_squared(c), check_leibniz(c), check_snakes(c), check_pivotal(d), check_upsilon_flat(d)}) {
    all.checked += part.checked;
    all.mismatches.insert(all.mismatches.end(), part.mismatches.begin(), part.mismatches.end());
  }
  return all;
}

}  // namespace dhopf
