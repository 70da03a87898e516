#include <set>
#include <stdexcept>

#include "dhopf/hopf.hpp"

namespace dhopf {

void FiniteGroupoid::validate() const {
  auto bad = [](const std::string& m) { throw std::invalid_argument("groupoid: " + m); };
  std::size_t na = num_arrows(), no = num_objects();
  if (src.size() != na || dst.size() != na || inverse.size() != na || comp.size() != na) bad("table sizes disagree");
  if (identity.size() != no) bad("one identity per object required");
  for (std::size_t a = 0; a < na; ++a) {
    if (src[a] < 0 || std::size_t(src[a]) >= no || dst[a] < 0 || std::size_t(dst[a]) >= no) bad("endpoint out of range");
    if (comp[a].size() != na) bad("composition table is not square");
  }
  for (std::size_t g = 0; g < na; ++g)
    for (std::size_t f = 0; f < na; ++f) {
      int h = comp[g][f];
      if ((src[g] == dst[f]) != (h >= 0)) bad("composition defined exactly on composable pairs");
      if (h >= 0 && (src[h] != src[f] || dst[h] != dst[g])) bad("composite has wrong endpoints");
    }
  for (std::size_t p = 0; p < no; ++p) {
    int e = identity[p];
    if (e < 0 || std::size_t(e) >= na || src[e] != int(p) || dst[e] != int(p)) bad("identity misplaced");
    for (std::size_t a = 0; a < na; ++a) {
      if (src[a] == int(p) && comp[a][e] != int(a)) bad("right unit law");
      if (dst[a] == int(p) && comp[e][a] != int(a)) bad("left unit law");
    }
  }
  for (std::size_t h = 0; h < na; ++h)
    for (std::size_t g = 0; g < na; ++g)
      for (std::size_t f = 0; f < na; ++f) {
        int gf = comp[g][f], hg = comp[h][g];
        if (gf < 0 || hg < 0) continue;
        if (comp[h][gf] != comp[hg][f]) bad("associativity");
      }
  for (std::size_t a = 0; a < na; ++a) {
    int b = inverse[a];
    if (b < 0 || std::size_t(b) >= na) bad("inverse out of range");
    if (comp[b][a] != identity[src[a]] || comp[a][b] != identity[dst[a]]) bad("inverse law");
  }
}

FiniteGroupoid FiniteGroupoid::connected(const std::vector<std::vector<int>>& table, int k, const std::string& tag) {
  int order = int(table.size());
  std::vector<int> inv(order, -1);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (table[g][h] == 0) inv[g] = h;

  FiniteGroupoid G;
  for (int i = 0; i < k; ++i) G.objects.push_back(tag + std::to_string(i));
  // Arrow (g; i <- j) has index (g * k + i) * k + j.
  auto idx = [&](int g, int i, int j) { return (g * k + i) * k + j; };
  int na   = order * k * k;
  G.arrow_names.resize(na);
  G.src.resize(na);
  G.dst.resize(na);
  G.inverse.resize(na);
  G.comp.assign(na, std::vector<int>(na, -1));
  for (int g = 0; g < order; ++g)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int a            = idx(g, i, j);
        G.arrow_names[a] = "g" + std::to_string(g) + ":" + G.objects[i] + "<-" + G.objects[j];
        G.src[a]         = j;
        G.dst[a]         = i;
        G.inverse[a]     = idx(inv[g], j, i);
      }
  for (int i = 0; i < k; ++i) G.identity.push_back(idx(0, i, i));
  for (int g = 0; g < order; ++g)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int h = 0; h < order; ++h)
          for (int l = 0; l < k; ++l) G.comp[idx(g, i, j)][idx(h, j, l)] = idx(table[g][h], i, l);
  return G;
}

FiniteGroupoid FiniteGroupoid::disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid G = a;
  int no = int(a.num_objects()), na = int(a.num_arrows()), nt = na + int(b.num_arrows());
  G.objects.insert(G.objects.end(), b.objects.begin(), b.objects.end());
  G.arrow_names.insert(G.arrow_names.end(), b.arrow_names.begin(), b.arrow_names.end());
  for (std::size_t x = 0; x < b.num_arrows(); ++x) {
    G.src.push_back(b.src[x] + no);
    G.dst.push_back(b.dst[x] + no);
    G.inverse.push_back(b.inverse[x] + na);
  }
  for (int e : b.identity) G.identity.push_back(e + na);
  for (auto& row : G.comp) row.resize(nt, -1);
  for (std::size_t g = 0; g < b.num_arrows(); ++g) {
    std::vector<int> row(nt, -1);
    for (std::size_t f = 0; f < b.num_arrows(); ++f)
      if (b.comp[g][f] >= 0) row[na + f] = b.comp[g][f] + na;
    G.comp.push_back(std::move(row));
  }
  return G;
}

bool is_subgroupoid(const FiniteGroupoid& g, const std::vector<bool>& objects, const std::vector<bool>& arrows) {
  for (std::size_t p = 0; p < g.num_objects(); ++p)
    if (objects[p] && !arrows[g.identity[p]]) return false;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    if (!arrows[a]) continue;
    if (!objects[g.src[a]] || !objects[g.dst[a]] || !arrows[g.inverse[a]]) return false;
    for (std::size_t b = 0; b < g.num_arrows(); ++b)
      if (arrows[b] && g.comp[a][b] >= 0 && !arrows[g.comp[a][b]]) return false;
  }
  return true;
}

HopfPresentation groupoid_ring(const FiniteGroupoid& g) {
  g.validate();
  HopfPresentation hp;
  hp.name = "groupoid-ring";
  Quiver& q = hp.quiver;
  q.base_labels = g.objects;
  for (std::size_t p = 0; p < g.num_objects(); ++p) {
    q.vertex_labels.push_back("id(" + g.objects[p] + ")");
    q.sigma.push_back(int(p));
    q.tau.push_back(int(p));
  }
  // Quiver arrow for every non-identity groupoid arrow; as_word maps any
  // groupoid arrow to its path of length at most one.
  std::vector<int> arrow_of(g.num_arrows(), -1);
  std::vector<bool> is_id(g.num_arrows(), false);
  for (int e : g.identity) is_id[e] = true;
  std::vector<int> groupoid_arrow;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    if (is_id[a]) continue;
    arrow_of[a] = int(q.arrows.size());
    groupoid_arrow.push_back(int(a));
    q.arrows.push_back({g.src[a], g.dst[a], g.arrow_names[a]});
  }
  q.finalize();
  auto as_word = [is_id, arrow_of, src = g.src](int a) { return is_id[a] ? Word::at(src[a]) : Word::of(arrow_of[a]); };

  for (std::size_t i = 0; i < groupoid_arrow.size(); ++i)
    for (std::size_t j = 0; j < groupoid_arrow.size(); ++j) {
      int x = groupoid_arrow[i], y = groupoid_arrow[j];
      int c = g.comp[x][y];
      if (c < 0) continue;
      AlgElem r = mul(q, arrow_elem(int(i)), arrow_elem(int(j)));
      r -= AlgElem(as_word(c));
      hp.relations.add(r, g.arrow_names[x] + " . " + g.arrow_names[y]);
    }

  hp.exact = [g, groupoid_arrow, as_word](const AlgElem& x) {
    AlgElem out;
    for (auto const& [w, c] : x.terms) {
      if (w.arrows.empty()) {
        out.add(w, c);
        continue;
      }
      int cur = groupoid_arrow[w.arrows.back()];
      for (std::size_t i = w.arrows.size() - 1; i-- > 0;) cur = g.comp[groupoid_arrow[w.arrows[i]]][cur];
      out.add(as_word(cur), c);
    }
    return out;
  };

  std::size_t no = g.num_objects();
  auto f = [&](int p) {
    Func x(no);
    x.c[p] = 1;
    return x;
  };
  for (std::size_t p = 0; p < no; ++p) {
    Word v = Word::at(int(p));
    hp.delta.vertex.push_back(normalize(q, tensor(AlgElem(v), AlgElem(v))));
    hp.eps.vertex.push_back(f(int(p)));
    hp.antipode.vertex.push_back(AlgElem(v));
    hp.translation.vertex.push_back(op_normalize(q, tensor(AlgElem(v), AlgElem(v))));
  }
  for (int a : groupoid_arrow) {
    AlgElem e(as_word(a)), ei(as_word(g.inverse[a]));
    hp.delta.arrow.push_back(normalize(q, tensor(e, e)));
    hp.eps.arrow.push_back(f(g.dst[a]));
    hp.antipode.arrow.push_back(ei);
    hp.translation.arrow.push_back(op_normalize(q, tensor(e, ei)));
  }
  hp.antipode_inv = hp.antipode;
  return hp;
}

AlgElem groupoid_arrow_elem(const FiniteGroupoid& g, int a) {
  int k = 0;
  for (int x = 0; x < a; ++x)
    if (g.identity[g.src[x]] != x) ++k;
  if (g.identity.at(g.src.at(a)) == a) return vertex_elem(g.src[a]);
  return arrow_elem(k);
}

HopfPresentation function_hopf(const FiniteGroupoid& g) {
  g.validate();
  HopfPresentation hp;
  hp.name = "function-algebra";
  Quiver& q = hp.quiver;
  q.base_labels = g.objects;
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    q.vertex_labels.push_back("f[" + g.arrow_names[a] + "]");
    q.sigma.push_back(g.src[a]);
    q.tau.push_back(g.dst[a]);
  }
  q.finalize();
  hp.exact = [](const AlgElem& x) { return x; };

  std::size_t no = g.num_objects(), na = g.num_arrows();
  std::vector<bool> is_id(na, false);
  for (int e : g.identity) is_id[e] = true;
  for (std::size_t e = 0; e < na; ++e) {
    Tensor2 d, t;
    for (std::size_t e1 = 0; e1 < na; ++e1)
      for (std::size_t e2 = 0; e2 < na; ++e2)
        if (g.comp[e2][e1] == int(e)) {
          add_to(d, Word::at(int(e1)), Word::at(int(e2)), 1);
          add_to(t, Word::at(int(e1)), Word::at(g.inverse[e2]), 1);
        }
    hp.delta.vertex.push_back(normalize(q, d));
    hp.translation.vertex.push_back(op_normalize(q, t));
    Func x(no);
    if (is_id[e]) x.c[g.src[e]] = 1;
    hp.eps.vertex.push_back(x);
    hp.antipode.vertex.push_back(vertex_elem(g.inverse[e]));
  }
  hp.antipode_inv = hp.antipode;
  return hp;
}

bool HopfIdealReport::passed() const {
  return bq1 == CheckStatus::Pass && bq2 == CheckStatus::Pass && bq3 == CheckStatus::Pass && lh == CheckStatus::Pass;
}

HopfIdealReport is_hopf_ideal(const HopfPresentation& hp, const std::vector<Func>& J_gens,
                              const std::vector<AlgElem>& I_gens, int N) {
  auto const& q = hp.quiver;
  RelationSet rels = hp.relations;
  for (std::size_t i = 0; i < I_gens.size(); ++i) rels.add(I_gens[i], "I" + std::to_string(i));
  IdealOracle O(q, rels, N);
  auto zero = [&](const AlgElem& x) { return O.is_zero(x); };
  auto zero2 = [&](const Tensor2& t) {
    Tensor2 out;
    for (auto const& [k, c] : t) {
      const AlgElem& x = O.reduce_word(k.first);
      const AlgElem& y = O.reduce_word(k.second);
      for (auto const& [wx, cx] : x.terms)
        for (auto const& [wy, cy] : y.terms) add_to(out, wx, wy, c * cx * cy);
    }
    return out.empty();
  };

  std::vector<bool> in_J(hp.num_base(), false);
  for (auto const& j : J_gens)
    for (std::size_t p = 0; p < j.c.size(); ++p)
      if (j.c[p] != 0) in_J[p] = true;
  auto inside_J = [&](const Func& f) {
    for (std::size_t p = 0; p < f.c.size(); ++p)
      if (f.c[p] != 0 && !in_J[p]) return false;
    return true;
  };

  HopfIdealReport rep;
  auto fail = [](CheckStatus& s) { s = CheckStatus::Unknown; };

  for (std::size_t p = 0; p < hp.num_base(); ++p) {
    if (!in_J[p]) continue;
    if (!zero(source_image(q, int(p))) || !zero(target_image(q, int(p)))) fail(rep.bq1);
  }

  for (auto const& x : I_gens) {
    if (rep.bq2 == CheckStatus::Pass && !zero2(delta(hp, x))) fail(rep.bq2);
    if (rep.lh == CheckStatus::Pass) {
      if (hp.translation.empty() || !zero2(translation(hp, x))) fail(rep.lh);
    }
    if (rep.bq3 == CheckStatus::Pass) {
      int room = N - int(x.max_length());
      std::vector<Word> us = room >= 0 ? words_up_to(q, room) : std::vector<Word>{};
      for (std::size_t p = 0; p < hp.num_base() && rep.bq3 == CheckStatus::Pass; ++p) {
        Func a = eps(hp, mul(q, x, source_image(q, int(p))));
        if (!inside_J(a)) {
          fail(rep.bq3);
          break;
        }
        for (auto const& u : us) {
          Rational s = a.c[q.sigma[source(q, u)]];
          if (s != 0 && !inside_J(s * eps(hp, AlgElem(u)))) {
            fail(rep.bq3);
            break;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace dhopf
