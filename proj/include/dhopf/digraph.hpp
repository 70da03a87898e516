// Finite digraphs, their length-two paths, triangles and squares, and the
// double quiver built from pairs of edges.

#ifndef DHOPF_DIGRAPH_HPP_
#define DHOPF_DIGRAPH_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dhopf {

enum class DigraphErrorCode { Schema, EmptyVertexId, DuplicateVertex, UnknownVertex, Loop, DuplicateEdge, TwoCycle };

const char* error_code_name(DigraphErrorCode c);

struct DigraphError : std::runtime_error {
  DigraphError(DigraphErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
  DigraphErrorCode code;
};

struct Edge {
  int src = 0;
  int dst = 0;
  auto operator<=>(const Edge&) const = default;
};

struct Path2 {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Path2&) const = default;
};

// Vertices are stored sorted by identifier and referred to by index, so every
// enumeration below is in lexicographic identifier order.
class Digraph {
 public:
  Digraph() = default;
  static Digraph build(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges,
                       bool allow_two_cycles = false);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name(int v) const { return names_.at(v); }
  bool allow_two_cycles() const { return allow_two_cycles_; }

  int vertex(const std::string& id) const;  // throws UnknownVertex
  bool has_edge(int a, int b) const { return edge_index(a, b) >= 0; }
  int  edge_index(int a, int b) const;      // -1 if absent
  const std::vector<int>& out(int v) const { return out_.at(v); }
  const std::vector<int>& in(int v) const { return in_.at(v); }

  std::string edge_name(int e) const;

 private:
  std::vector<std::string>      names_;
  std::vector<Edge>             edges_;
  std::vector<std::vector<int>> out_, in_;  // neighbour vertices, ascending
  std::vector<std::vector<int>> index_;     // dense edge lookup
  bool                          allow_two_cycles_ = false;
};

// Parses {"vertices": [...], "edges": [[s, t], ...], "allow_two_cycles": bool}.
Digraph parse_digraph(const std::string& json_text);

std::vector<Path2> paths2(const Digraph& d);
std::vector<Path2> triangles(const Digraph& d);  // (p,q,r) with p->q, q->r, p->r

struct Square {
  int p = 0, q = 0, q2 = 0, r = 0;  // q < q2
  auto operator<=>(const Square&) const = default;
};
std::vector<Square> squares(const Digraph& d);

// Least b with a->b->c when there is no edge a->c; std::nullopt if no such
// 2-path exists. Throws std::invalid_argument if a->c is an edge.
std::optional<int> distinguished_vertex(const Digraph& d, int a, int c);

enum class Family { GenLeft, GenRight, GenLeftY, GenRightY };
const char* family_name(Family f);

// One arrow of the double quiver. For the pair families e1 and e2 are edge
// indices; for the Y families e1 is the edge and point the extra vertex.
struct DArrow {
  Family fam;
  int    e1    = -1;
  int    e2    = -1;
  int    point = -1;
  int    src   = 0;  // double-vertex index
  int    dst   = 0;
};

// Double quiver on V x V. The double vertex (p,q) has index p*|V| + q.
//   GenLeft(a->b, c->d):   (a,c) -> (b,d)
//   GenRight(a->b, c->d):  (b,d) -> (a,c)
//   GenLeftY(a->b, q):     (a,q) -> (b,q)
//   GenRightY(c->d, p):    (p,d) -> (p,c)
class DoubleQuiver {
 public:
  explicit DoubleQuiver(const Digraph& d);

  const Digraph& digraph() const { return d_; }
  std::size_t num_vertices() const { return n_ * n_; }
  const std::vector<DArrow>& arrows() const { return arrows_; }

  int vertex(int p, int q) const { return p * static_cast<int>(n_) + q; }
  int first(int v) const { return v / static_cast<int>(n_); }
  int second(int v) const { return v % static_cast<int>(n_); }

  // Arrow lookup by vertex indices; -1 when the edges do not exist.
  int gl(int a, int b, int c, int d) const;
  int gr(int a, int b, int c, int d) const;
  int gly(int a, int b, int q) const;
  int gry(int c, int d, int p) const;

  std::string vertex_label(int v) const;
  std::string arrow_label(int i) const;

 private:
  Digraph          d_;
  std::size_t      n_;
  std::size_t      m_;
  std::vector<DArrow> arrows_;
};

DoubleQuiver make_double(const Digraph& d);

}  // namespace dhopf

#endif  // DHOPF_DIGRAPH_HPP_
