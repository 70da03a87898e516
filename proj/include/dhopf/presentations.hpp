// Relation sets over the double quiver of a digraph, and the change of
// generators between the path generators and the "old" generators
// f_p, fbar_q, e(t<-s), ebar(t<-s) in which the algebra was first described.
//
// Path-generator notation used throughout:
//   (p|q)           vertex of the double quiver
//   GL(a,b,c,d)     (a b <= c d)  : (a,c) -> (b,d)
//   GR(a,b,c,d)     (a b => c d)  : (b,d) -> (a,c)
//   GLY(a,b,q)      (a b <=, q)   : (a,q) -> (b,q)
//   GRY(c,d,p)      (c d =>, p)   : (p,d) -> (p,c)

#ifndef DHOPF_PRESENTATIONS_HPP_
#define DHOPF_PRESENTATIONS_HPP_

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dhopf/digraph.hpp"
#include "dhopf/path_algebra.hpp"

namespace dhopf {

// The double quiver together with its path-algebra view and shorthands for
// the generators as algebra elements.
class DoubleAlgebra {
 public:
  explicit DoubleAlgebra(const Digraph& d);

  const Digraph& digraph() const { return dq_.digraph(); }
  const DoubleQuiver& dq() const { return dq_; }
  const Quiver& quiver() const { return q_; }

  // Each throws std::invalid_argument if a named edge does not exist.
  AlgElem v(int p, int q) const;
  AlgElem gl(int a, int b, int c, int d) const;
  AlgElem gr(int a, int b, int c, int d) const;
  AlgElem gly(int a, int b, int q) const;
  AlgElem gry(int c, int d, int p) const;

  AlgElem mul(std::initializer_list<AlgElem> f) const { return dhopf::mul(q_, f); }
  AlgElem unit() const { return dhopf::unit(q_); }
  AlgElem s(int p) const { return source_image(q_, p); }  // sum_q (p|q)
  AlgElem t(int p) const { return target_image(q_, p); }  // sum_q (q|p)

 private:
  DoubleQuiver dq_;
  Quiver       q_;
};

enum class PresentationKind { HX1, DX };
const char* kind_name(PresentationKind k);

struct Presentation {
  DoubleAlgebra    alg;
  RelationSet      relations;
  PresentationKind kind;
};

// Inverse relations between GL and GR (two per ordered pair of edges sharing a
// target, two per ordered pair sharing a source, both for every vertex q) and
// the two relations tying GLY and GRY to them (per edge and vertex).
Presentation hx1_relations(const Digraph& d);

// The combinations P(p,q,r;a,b) and Q(p,q,r;a,b) over a 2-path p->q->r.
// Throws std::invalid_argument if p->q->r is not a 2-path.
AlgElem P_expr(const DoubleAlgebra& A, int p, int q, int r, int a, int b);
AlgElem Q_expr(const DoubleAlgebra& A, int p, int q, int r, int a, int b);

// hx1_relations plus the square and triangle relations.
Presentation dx_relations(const Digraph& d);

// Old generators.
enum class OldKind { F, FBar, E, EBar };

struct OldGen {
  OldKind kind;
  int     index;  // vertex for F/FBar, edge for E/EBar
  auto operator<=>(const OldGen&) const = default;
};

// Linear combination of products of old generators (composition order).
using OldExpr = std::map<std::vector<OldGen>, Rational>;

OldExpr old(OldGen g);
OldExpr operator+(const OldExpr& x, const OldExpr& y);
OldExpr operator-(const OldExpr& x, const OldExpr& y);
OldExpr operator*(const OldExpr& x, const OldExpr& y);
OldExpr operator*(const Rational& c, const OldExpr& x);
// x*y - y*x
OldExpr commutator(const OldExpr& x, const OldExpr& y);

std::string old_label(const Digraph& d, const OldGen& g);
std::string old_expr_label(const Digraph& d, const OldExpr& x);

struct GenChange {
  DoubleAlgebra               alg;
  std::map<OldGen, AlgElem>   forward;          // old generator -> path algebra
  std::vector<OldExpr>        backward_vertex;  // (p|q) -> old generators
  std::vector<OldExpr>        backward_arrow;   // quiver arrow -> old generators

  std::vector<OldGen> old_generators() const;
  AlgElem expand(const OldExpr& x) const;       // forward, extended multiplicatively
  OldExpr pull_back(const AlgElem& x) const;    // backward, extended multiplicatively
};

GenChange gen_change(const Digraph& d);

struct RoundtripReport {
  std::size_t              old_checked = 0;
  std::size_t              path_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// forward(backward(x)) == x on every path generator, and
// forward(backward(forward(g))) == forward(g) on every old generator; all
// comparisons are exact in the path algebra.
RoundtripReport roundtrip_check(const Digraph& d);

// The relations of the algebra in old generators that a correct transcription
// must send into the ideal: two inverse relations per edge and two Hopf
// relations per (edge, vertex), pushed forward into the path algebra.
struct KappaImage {
  std::string label;
  OldExpr     old_form;
  AlgElem     image;
};
std::vector<KappaImage> kappa_images(const GenChange& gc);

}  // namespace dhopf

#endif  // DHOPF_PRESENTATIONS_HPP_
