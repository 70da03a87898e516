// The isotropy ideal of a presented Hopf algebroid, the isotopy quotient it
// defines, and the digraph cases: the quotient of the first-order algebra
// collapses onto the free groupoid of the digraph and the quotient of the
// differential algebra onto its fundamental groupoid.

#ifndef DHOPF_ISOTOPY_HPP_
#define DHOPF_ISOTOPY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dhopf/groupoid.hpp"
#include "dhopf/hopf.hpp"

namespace dhopf {

// J is generated by the commutators of base elements and I by s(f_p) - t(f_p)
// per base point. The base here is always commutative, so J_gens is empty.
struct IsotopyIdeal {
  std::vector<Func>        J_gens;
  std::vector<AlgElem>     I_gens;  // one per base point, possibly zero
  std::vector<std::string> labels;
};

IsotopyIdeal isotropy_ideal(const HopfPresentation& hp);

// Same quiver and tables, relations extended by the nonzero I_gens. The
// closed normal form survives only when every I_gen is already zero.
HopfPresentation isotopy_quotient(const HopfPresentation& hp);

// One collapse claimed for the quotient: `what` should reduce to zero.
struct CollapseItem {
  std::string        kind;
  std::string        what;
  AlgElem            element;
  CheckStatus        status = CheckStatus::Unknown;
  std::optional<int> minimal_N;
};

struct IsoResult {
  GroupoidPresentation      groupoid;
  std::vector<CollapseItem> collapse;

  CheckStatus status() const;  // worst item status
  std::optional<int> max_minimal_N(const std::string& kind = "") const;
};

// Free groupoid of d together with the collapse in the isotopy quotient of
// hx1_hopf(d): (p|q) for p != q, GL and GR on two different edges, every GLY
// and GRY, the inverse pairs GR(ab,ab) GL(ab,ab) = (a|a) and
// GL(ab,ab) GR(ab,ab) = (b|b), and S(I) inside I. Degrees up to N.
IsoResult digraph_iso_hx1(const Digraph& d, int N);

// Fundamental groupoid of d, with the collapse above taken in the isotopy
// quotient of dx_hopf(d) plus the groupoid relations themselves: per
// triangle GL(qr) GL(pq) = GL(pr), per square GL(qr) GL(pq) = GL(q'r) GL(pq'),
// writing GL(ab) for GL(a,b,a,b).
IsoResult digraph_iso_dx(const Digraph& d, int N);

// A presented groupoid realized as a finite groupoid through the bounded
// arrow enumeration. Throws std::runtime_error unless the enumeration
// reports a finite count.
struct RealizedGroupoid {
  FiniteGroupoid   groupoid;
  std::vector<int> edge_arrow;  // arrow of each digraph edge
};
RealizedGroupoid realize_groupoid(const GroupoidPresentation& pres, std::size_t cap);

// The image of each dx relation in the groupoid ring of a realization of
// the fundamental groupoid: (p|q) -> delta_pq id_p, GL(ab,ab) -> the arrow of
// ab, GR(ab,ab) -> its inverse, every other generator -> 0.
struct ProjectedRelation {
  std::string label;
  AlgElem     image;  // closed normal form in the groupoid ring
};
std::vector<ProjectedRelation> project_dx_relations(const Digraph& d, const RealizedGroupoid& rg);

}  // namespace dhopf

#endif  // DHOPF_ISOTOPY_HPP_
