// JSON views of the library's results and a text syntax for elements of the
// path algebra over a double quiver.
//
// Element syntax. An element is a signed sum of terms, each an optional
// rational coefficient followed by a product of generators joined by "*" in
// composition order (the rightmost factor acts first). A generator is written
// either as it is printed:
//   (p|q)   (a b <= c d)   (a b => c d)   (a b <=, q)   (a b =>, q)
// or in the shorthand GL(a,b,c,d), GR(a,b,c,d), GLY(a,b,q), GRY(c,d,p),
// V(p,q). Example: "GR(a,b,a,b) * GL(a,b,a,b) - (a|a)".

#ifndef DHOPF_JSON_IO_HPP_
#define DHOPF_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dhopf/calculus.hpp"
#include "dhopf/groupoid.hpp"
#include "dhopf/hopf.hpp"
#include "dhopf/isotopy.hpp"
#include "dhopf/presentations.hpp"

namespace dhopf {

using Json = nlohmann::ordered_json;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Throws ParseError on syntax errors and on generators absent from the quiver.
AlgElem parse_element(const DoubleAlgebra& A, const std::string& text);

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const Digraph& d);
Json to_json(const DoubleQuiver& dq);
Json to_json(const Presentation& p);
Json to_json(const CalculusReport& r);
Json to_json(const CheckInstance& c);
Json to_json(const HopfReport& r);
Json to_json(const GroupoidPresentation& p);
Json to_json(const IsoResult& r);
Json to_json(const GroupPresentation& gp);
Json to_json(const Abelianization& ab);
Json to_json(const GroupoidPresentation& p, const RewriteStep& s);
Json to_json(const ArrowEnumeration& en, const Digraph& d);
Json to_json(const Quiver& q, const std::vector<CertificateTerm>& cert, const RelationSet& rels);

// Inverse of to_json(GroupoidPresentation) for presentations over a given
// digraph. Throws ParseError on malformed input.
GroupoidPresentation groupoid_presentation_from_json(const Digraph& d, const Json& j);

}  // namespace dhopf

#endif  // DHOPF_JSON_IO_HPP_
