// Every finite groupoid with at most three objects and at most eight arrows,
// up to isomorphism, built as disjoint unions of connected pieces G x Pair(k).

#ifndef DHOPF_TESTS_GROUPOIDS_HPP_
#define DHOPF_TESTS_GROUPOIDS_HPP_

#include <functional>
#include <string>
#include <vector>

#include "dhopf/hopf.hpp"
#include "fixtures.hpp"

namespace fixtures {

struct NamedGroupoid {
  std::string           name;
  dhopf::FiniteGroupoid groupoid;
};

inline std::vector<NamedGroupoid> small_groupoids(std::size_t max_objects = 3, std::size_t max_arrows = 8) {
  struct Piece {
    std::string name;
    Table       table;
    std::size_t k;
    std::size_t arrows() const { return table.size() * k * k; }
  };
  std::vector<Piece> pieces;
  for (std::size_t k = 1; k <= max_objects; ++k)
    for (auto const& [name, table] : small_groups())
      if (table.size() * k * k <= max_arrows) pieces.push_back({name + "*Pair" + std::to_string(k), table, k});

  std::vector<NamedGroupoid> out;
  std::vector<std::size_t> chosen;
  // Multisets of pieces in non-decreasing index order.
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t objs,
                                                                       std::size_t arrows) {
    if (!chosen.empty()) {
      NamedGroupoid ng;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        auto const& p = pieces[chosen[i]];
        auto part     = dhopf::FiniteGroupoid::connected(p.table, int(p.k), std::string(1, char('A' + i)));
        ng.groupoid   = i == 0 ? part : dhopf::FiniteGroupoid::disjoint_union(ng.groupoid, part);
        ng.name += (i ? " + " : "") + p.name;
      }
      out.push_back(std::move(ng));
    }
    for (std::size_t i = from; i < pieces.size(); ++i) {
      if (objs + pieces[i].k > max_objects || arrows + pieces[i].arrows() > max_arrows) continue;
      chosen.push_back(i);
      rec(i, objs + pieces[i].k, arrows + pieces[i].arrows());
      chosen.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

}  // namespace fixtures

#endif  // DHOPF_TESTS_GROUPOIDS_HPP_
