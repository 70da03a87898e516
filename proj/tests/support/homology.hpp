// First homology of the fundamental groupoid of a digraph computed from its
// 2-complex, independently of the spanning-tree presentations in the library.

#ifndef DHOPF_TESTS_HOMOLOGY_HPP_
#define DHOPF_TESTS_HOMOLOGY_HPP_

#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "dhopf/groupoid.hpp"

namespace oracles {

using dhopf::Abelianization;
using dhopf::Digraph;
using dhopf::Integer;

// Vertices in the undirected component of v.
inline std::vector<bool> component(const Digraph& d, int v) {
  std::vector<bool> in(d.num_vertices());
  std::vector<int> stack{v};
  in[v] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto const& e : d.edges())
      for (auto [a, b] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}})
        if (a == x && !in[b]) {
          in[b] = true;
          stack.push_back(b);
        }
  }
  return in;
}

// H1 of the component of `base` from the 2-complex: columns are the edges of
// the component, rows the exponent sums of the triangle and square relators,
// plus one unit row per edge of a spanning forest grown by union-find in
// reverse edge order (a different tree from any the library would choose).
inline Abelianization h1_by_cells(const Digraph& d, int base) {
  auto in = component(d, base);
  std::vector<int> col(d.num_edges(), -1);
  int cols = 0;
  for (std::size_t e = 0; e < d.num_edges(); ++e)
    if (in[d.edges()[e].src]) col[e] = cols++;
  std::vector<std::vector<Integer>> rows;
  auto add = [&](std::vector<std::pair<int, int>> terms) {
    if (!in[d.edges()[terms[0].first].src]) return;
    std::vector<Integer> row(cols);
    for (auto [e, s] : terms) row[col[e]] += s;
    rows.push_back(row);
  };
  for (auto const& t : dhopf::triangles(d))
    add({{d.edge_index(t.a, t.b), 1}, {d.edge_index(t.b, t.c), 1}, {d.edge_index(t.a, t.c), -1}});
  for (auto const& s : dhopf::squares(d))
    add({{d.edge_index(s.p, s.q), 1}, {d.edge_index(s.q, s.r), 1}, {d.edge_index(s.q2, s.r), -1},
         {d.edge_index(s.p, s.q2), -1}});
  std::vector<int> parent(d.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int e = int(d.num_edges()) - 1; e >= 0; --e) {
    if (col[e] < 0) continue;
    int a = find(d.edges()[e].src), b = find(d.edges()[e].dst);
    if (a == b) continue;
    parent[a] = b;
    std::vector<Integer> row(cols);
    row[col[e]] = 1;
    rows.push_back(row);
  }
  Abelianization ab;
  if (cols == 0) return ab;
  if (rows.empty()) {
    ab.free_rank = std::size_t(cols);
    return ab;
  }
  auto snf = dhopf::smith_normal_form(rows);
  ab.free_rank = std::size_t(cols) - snf.rank;
  for (auto const& f : snf.invariant_factors)
    if (f > 1) ab.torsion.push_back(f);
  return ab;
}

}  // namespace oracles

#endif  // DHOPF_TESTS_HOMOLOGY_HPP_
