// Presented Hopf algebroids over a base algebra of functions on finitely many
// points. The total algebra is a quotient of a path algebra; the structure
// maps are tables on generators (vertices and arrows) extended to words:
// the coproduct and counit multiplicatively, the antipode and its inverse
// anti-multiplicatively, and the translation map x -> x+ (x) x- by
// (bb')+ (x) (bb')- = b+ b'+ (x) b'- b-.
//
// Conventions for a left bialgebroid (A, H) with A = K(V): H is an
// A-bimodule through a.h.b = s(a) t(b) h, the coproduct lands in H (x)_A H,
// the counit satisfies s(eps(b1)) b2 = b = t(eps(b2)) b1 and
// eps(b b') = eps(b s(eps(b'))).

#ifndef DHOPF_HOPF_HPP_
#define DHOPF_HOPF_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dhopf/calculus.hpp"
#include "dhopf/path_algebra.hpp"
#include "dhopf/presentations.hpp"

namespace dhopf {

// A table with one entry per quiver vertex and one per quiver arrow.
template <class T>
struct GenTable {
  std::vector<T> vertex, arrow;
  bool empty() const { return vertex.empty() && arrow.empty(); }
};

struct HopfPresentation {
  std::string                name;
  Quiver                     quiver;
  RelationSet                relations;
  Quotient::ExactNormalForm  exact;  // set when the quotient has a closed normal form

  GenTable<Tensor2> delta;        // values in the balanced tensor, normalized
  GenTable<Func>    eps;
  GenTable<AlgElem> antipode;     // empty when absent
  GenTable<AlgElem> antipode_inv;
  GenTable<Tensor2> translation;  // values in H (x) over the opposite base

  std::size_t num_base() const { return quiver.num_base(); }
  Quotient quotient(int max_degree) const { return Quotient(quiver, relations, max_degree, exact); }
};

// Structure maps extended to arbitrary elements.
Tensor2 delta(const HopfPresentation& hp, const AlgElem& x);
Func    eps(const HopfPresentation& hp, const AlgElem& x);
AlgElem antipode(const HopfPresentation& hp, const AlgElem& x);
AlgElem antipode_inv(const HopfPresentation& hp, const AlgElem& x);
Tensor2 translation(const HopfPresentation& hp, const AlgElem& x);

// s(f) and t(f) for a base function f.
AlgElem source_of(const HopfPresentation& hp, const Func& f);
AlgElem target_of(const HopfPresentation& hp, const Func& f);

// Tables for the presentations over a digraph. dx_hopf throws
// std::invalid_argument unless Upsilon is flat on the digraph.
HopfPresentation hx1_hopf(const Digraph& d);
HopfPresentation dx_hopf(const Digraph& d);

enum class CheckStatus { Pass, Unknown, Fail };
const char* status_name(CheckStatus s);

// One instantiated axiom. Checks that hold exactly (with no quotient
// involved) report Pass or Fail; checks modulo the ideal report Pass with the
// least degree at which they certify, or Unknown.
struct CheckInstance {
  std::string        axiom;
  std::string        indices;
  CheckStatus        status = CheckStatus::Pass;
  std::optional<int> minimal_N;
};

struct HopfReport {
  std::vector<CheckInstance> instances;
  std::vector<std::string>   notices;

  std::size_t count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::Pass) == instances.size(); }
  std::optional<int> max_minimal_N() const;
  void append(const HopfReport& o);
};

// Runs the axiom checks against one quotient, sharing the degree-n oracles.
class HopfChecker {
 public:
  HopfChecker(const HopfPresentation& hp, int max_degree);

  // Coassociativity, both counit identities, the images of s and t under the
  // coproduct and the counit, and eps(b s(f_r)) = eps(b t(f_r)).
  HopfReport coring() const;
  // Units, the Takeuchi condition on every coproduct value, and for every
  // ordered pair of generators: Delta(b b') = Delta(b) Delta(b') and
  // eps(b b') = eps(b s(eps(b'))) with b b' reduced first.
  HopfReport bialgebroid() const;
  // S(s(a)) = t(a) exactly; both antipode identities in the balanced tensor;
  // S^-1 S = id = S S^-1 on generators.
  HopfReport antipode() const;
  // Every relation is sent to zero by Delta, eps (also after multiplying by
  // s(f_p) and t(f_p)), S and S^-1.
  HopfReport well_defined() const;
  // sum (x+)1 (x) (x+)2 x- = x (x) 1 on every generator.
  HopfReport translation() const;
  HopfReport all() const;

  const Quotient& quotient() const { return Q_; }

 private:
  CheckInstance exact(std::string axiom, std::string idx, bool ok) const;
  CheckInstance modulo(std::string axiom, std::string idx, const AlgElem& diff) const;
  CheckInstance modulo(std::string axiom, std::string idx, const Tensor2& diff) const;
  CheckInstance modulo(std::string axiom, std::string idx, const Tensor3& diff) const;
  std::vector<std::pair<Word, std::string>> generators() const;

  const HopfPresentation& hp_;
  Quotient                Q_;
};

HopfReport check_coring(const HopfPresentation& hp, int N);
HopfReport check_bialgebroid(const HopfPresentation& hp, int N);
HopfReport check_antipode(const HopfPresentation& hp, int N);
HopfReport check_well_defined(const HopfPresentation& hp, int N);
HopfReport check_translation(const HopfPresentation& hp, int N);

// A finite groupoid given by composition tables. comp[g][f] is g after f
// (defined when src[g] == dst[f], otherwise -1).
struct FiniteGroupoid {
  std::vector<std::string>      objects;
  std::vector<std::string>      arrow_names;
  std::vector<int>              src, dst, inverse;
  std::vector<int>              identity;  // per object
  std::vector<std::vector<int>> comp;

  std::size_t num_objects() const { return objects.size(); }
  std::size_t num_arrows() const { return arrow_names.size(); }

  // Throws std::invalid_argument naming the first violated axiom.
  void validate() const;

  // G x (pair groupoid on k objects): arrows (g; i <- j).
  static FiniteGroupoid connected(const std::vector<std::vector<int>>& group_table, int k,
                                  const std::string& tag = "");
  static FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
};

// Subgroupoid given by an object set and an arrow set (as membership masks).
bool is_subgroupoid(const FiniteGroupoid& g, const std::vector<bool>& objects, const std::vector<bool>& arrows);

// The groupoid ring: vertices are objects, arrows the non-identity arrows,
// products by composition. The function algebra: one vertex per arrow, no
// quiver arrows. Both come with closed normal forms.
HopfPresentation groupoid_ring(const FiniteGroupoid& g);
// The element of groupoid_ring(g) for arrow a: an object idempotent for an
// identity arrow, otherwise the quiver arrow standing for a.
AlgElem groupoid_arrow_elem(const FiniteGroupoid& g, int a);
HopfPresentation function_hopf(const FiniteGroupoid& g);

// The conditions for (J, I) to be a Hopf ideal, where J is generated by base
// functions and I by elements of the total algebra, checked on the quotient
// by the relations together with I at degree N.
struct HopfIdealReport {
  CheckStatus bq1 = CheckStatus::Pass;  // s(J), t(J) inside I
  CheckStatus bq2 = CheckStatus::Pass;  // Delta(I) inside I (x) H + H (x) I
  CheckStatus bq3 = CheckStatus::Pass;  // eps(I) inside J
  CheckStatus lh  = CheckStatus::Pass;  // translation map of I inside I (x) H + H (x) I
  bool passed() const;
};

HopfIdealReport is_hopf_ideal(const HopfPresentation& hp, const std::vector<Func>& J_gens,
                              const std::vector<AlgElem>& I_gens, int N);

}  // namespace dhopf

#endif  // DHOPF_HOPF_HPP_
