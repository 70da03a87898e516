#include "dhopf/digraph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace dhopf {

const char* error_code_name(DigraphErrorCode c) {
  switch (c) {
    case DigraphErrorCode::Schema: return "Schema";
    case DigraphErrorCode::EmptyVertexId: return "EmptyVertexId";
    case DigraphErrorCode::DuplicateVertex: return "DuplicateVertex";
    case DigraphErrorCode::UnknownVertex: return "UnknownVertex";
    case DigraphErrorCode::Loop: return "Loop";
    case DigraphErrorCode::DuplicateEdge: return "DuplicateEdge";
    case DigraphErrorCode::TwoCycle: return "TwoCycle";
  }
  return "?";
}

Digraph Digraph::build(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
                       bool allow_two_cycles) {
  Digraph g;
  g.allow_two_cycles_ = allow_two_cycles;
  for (auto const& v : vertices)
    if (v.empty()) throw DigraphError(DigraphErrorCode::EmptyVertexId, "vertex identifiers must be nonempty");
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end())
    throw DigraphError(DigraphErrorCode::DuplicateVertex, "duplicate vertex '" + *it + "'");
  g.names_ = std::move(vertices);
  std::size_t n = g.names_.size();
  g.index_.assign(n, std::vector<int>(n, -1));

  std::set<Edge> seen;
  for (auto const& [s, t] : edges) {
    int a = g.vertex(s), b = g.vertex(t);
    if (a == b) throw DigraphError(DigraphErrorCode::Loop, "loop at '" + s + "'");
    if (!seen.insert({a, b}).second)
      throw DigraphError(DigraphErrorCode::DuplicateEdge, "duplicate edge " + s + "->" + t);
  }
  if (!allow_two_cycles)
    for (auto const& e : seen)
      if (seen.count({e.dst, e.src}))
        throw DigraphError(DigraphErrorCode::TwoCycle, "2-cycle between '" + g.names_[e.src] + "' and '" +
                                                           g.names_[e.dst] + "' (set allow_two_cycles to permit)");

  g.edges_.assign(seen.begin(), seen.end());
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    auto [a, b] = g.edges_[i];
    g.index_[a][b] = static_cast<int>(i);
    g.out_[a].push_back(b);
    g.in_[b].push_back(a);
  }
  for (auto& v : g.in_) std::sort(v.begin(), v.end());
  return g;
}

int Digraph::vertex(const std::string& id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) throw DigraphError(DigraphErrorCode::UnknownVertex, "unknown vertex '" + id + "'");
  return static_cast<int>(it - names_.begin());
}

int Digraph::edge_index(int a, int b) const {
  if (a < 0 || b < 0 || a >= static_cast<int>(names_.size()) || b >= static_cast<int>(names_.size())) return -1;
  return index_[a][b];
}

std::string Digraph::edge_name(int e) const {
  return names_[edges_.at(e).src] + "->" + names_[edges_.at(e).dst];
}

Digraph parse_digraph(const std::string& json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DigraphError(DigraphErrorCode::Schema, std::string("malformed JSON: ") + e.what());
  }
  auto schema = [](const std::string& msg) { return DigraphError(DigraphErrorCode::Schema, msg); };
  if (!j.is_object()) throw schema("top level must be an object");
  for (auto const& [k, v] : j.items())
    if (k != "vertices" && k != "edges" && k != "allow_two_cycles") throw schema("unexpected key '" + k + "'");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw schema("'vertices' must be an array");
  std::vector<std::string> vs;
  for (auto const& v : j["vertices"]) {
    if (!v.is_string()) throw schema("vertex identifiers must be strings");
    vs.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> es;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw schema("'edges' must be an array");
    for (auto const& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw schema("each edge must be a pair of vertex identifiers");
      es.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  bool allow = false;
  if (j.contains("allow_two_cycles")) {
    if (!j["allow_two_cycles"].is_boolean()) throw schema("'allow_two_cycles' must be a boolean");
    allow = j["allow_two_cycles"].get<bool>();
  }
  return Digraph::build(std::move(vs), es, allow);
}

std::vector<Path2> paths2(const Digraph& d) {
  std::vector<Path2> out;
  for (auto const& e : d.edges())
    for (int c : d.out(e.dst)) out.push_back({e.src, e.dst, c});
  return out;
}

std::vector<Path2> triangles(const Digraph& d) {
  std::vector<Path2> out;
  for (auto const& p : paths2(d))
    if (d.has_edge(p.a, p.c)) out.push_back(p);
  return out;
}

std::vector<Square> squares(const Digraph& d) {
  std::vector<Square> out;
  int n = static_cast<int>(d.num_vertices());
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r) {
      std::vector<int> mids;
      for (int q : d.out(p))
        if (d.has_edge(q, r)) mids.push_back(q);
      for (std::size_t i = 0; i < mids.size(); ++i)
        for (std::size_t j = i + 1; j < mids.size(); ++j) out.push_back({p, mids[i], mids[j], r});
    }
  return out;
}

std::optional<int> distinguished_vertex(const Digraph& d, int a, int c) {
  if (d.has_edge(a, c)) throw std::invalid_argument("distinguished_vertex: " + d.name(a) + "->" + d.name(c) + " is an edge");
  for (int b : d.out(a))
    if (d.has_edge(b, c)) return b;
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::GenLeft: return "GenLeft";
    case Family::GenRight: return "GenRight";
    case Family::GenLeftY: return "GenLeftY";
    case Family::GenRightY: return "GenRightY";
  }
  return "?";
}

DoubleQuiver::DoubleQuiver(const Digraph& d) : d_(d), n_(d.num_vertices()), m_(d.num_edges()) {
  auto const& E = d.edges();
  int n = static_cast<int>(n_);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      arrows_.push_back({Family::GenLeft, int(i), int(j), -1, E[i].src * n + E[j].src, E[i].dst * n + E[j].dst});
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j)
      arrows_.push_back({Family::GenRight, int(i), int(j), -1, E[i].dst * n + E[j].dst, E[i].src * n + E[j].src});
  for (std::size_t i = 0; i < m_; ++i)
    for (int q = 0; q < n; ++q)
      arrows_.push_back({Family::GenLeftY, int(i), -1, q, E[i].src * n + q, E[i].dst * n + q});
  for (std::size_t i = 0; i < m_; ++i)
    for (int p = 0; p < n; ++p)
      arrows_.push_back({Family::GenRightY, int(i), -1, p, p * n + E[i].dst, p * n + E[i].src});
}

int DoubleQuiver::gl(int a, int b, int c, int d) const {
  int i = d_.edge_index(a, b), j = d_.edge_index(c, d);
  return (i < 0 || j < 0) ? -1 : i * int(m_) + j;
}

int DoubleQuiver::gr(int a, int b, int c, int d) const {
  int i = d_.edge_index(a, b), j = d_.edge_index(c, d);
  return (i < 0 || j < 0) ? -1 : int(m_ * m_) + i * int(m_) + j;
}

int DoubleQuiver::gly(int a, int b, int q) const {
  int i = d_.edge_index(a, b);
  return i < 0 ? -1 : int(2 * m_ * m_) + i * int(n_) + q;
}

int DoubleQuiver::gry(int c, int d, int p) const {
  int i = d_.edge_index(c, d);
  return i < 0 ? -1 : int(2 * m_ * m_ + m_ * n_) + i * int(n_) + p;
}

std::string DoubleQuiver::vertex_label(int v) const {
  return "(" + d_.name(first(v)) + "|" + d_.name(second(v)) + ")";
}

std::string DoubleQuiver::arrow_label(int i) const {
  auto const& a = arrows_.at(i);
  auto const& E = d_.edges();
  auto nm = [&](int v) { return d_.name(v); };
  switch (a.fam) {
    case Family::GenLeft:
      return "(" + nm(E[a.e1].src) + " " + nm(E[a.e1].dst) + " <= " + nm(E[a.e2].src) + " " + nm(E[a.e2].dst) + ")";
    case Family::GenRight:
      return "(" + nm(E[a.e1].src) + " " + nm(E[a.e1].dst) + " => " + nm(E[a.e2].src) + " " + nm(E[a.e2].dst) + ")";
    case Family::GenLeftY:
      return "(" + nm(E[a.e1].src) + " " + nm(E[a.e1].dst) + " <=, " + nm(a.point) + ")";
    case Family::GenRightY:
      return "(" + nm(E[a.e1].src) + " " + nm(E[a.e1].dst) + " =>, " + nm(a.point) + ")";
  }
  return "?";
}

DoubleQuiver make_double(const Digraph& d) { return DoubleQuiver(d); }

}  // namespace dhopf
