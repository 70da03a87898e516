// The first-order differential calculus of a digraph, its extension by the
// top-degree quotient of two-forms, and the duality maps between forms and
// vector fields.
//
// Bases: f_p for functions, w(a->b) for one-forms, e(b<-a) for vector fields,
// and for degree two the 2-paths a->b->c left after deleting, for each
// non-adjacent ordered pair (a,c) that has at least one 2-path, the
// distinguished path through b(a,c). A distinguished path is rewritten as
// minus the sum of the other 2-paths from a to c before it is stored.

#ifndef DHOPF_CALCULUS_HPP_
#define DHOPF_CALCULUS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dhopf/digraph.hpp"
#include "dhopf/linalg.hpp"

namespace dhopf {

// Dense coefficient vector; the index set is fixed by the owning calculus
// (vertices for Func, edges for Form1/Vec1, basis 2-paths for Form2/Vec2).
template <class Tag>
struct Coeffs {
  std::vector<Rational> c;

  Coeffs() = default;
  explicit Coeffs(std::size_t n) : c(n) {}

  bool is_zero() const {
    for (auto const& x : c)
      if (x != 0) return false;
    return true;
  }
  Coeffs& operator+=(const Coeffs& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Coeffs& operator-=(const Coeffs& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Coeffs operator+(Coeffs a, const Coeffs& b) { return a += b; }
  friend Coeffs operator-(Coeffs a, const Coeffs& b) { return a -= b; }
  friend Coeffs operator*(const Rational& s, Coeffs a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  bool operator==(const Coeffs&) const = default;
};

struct FuncTag {};
struct Form1Tag {};
struct Vec1Tag {};
struct Form2Tag {};
struct Vec2Tag {};

using Func  = Coeffs<FuncTag>;
using Form1 = Coeffs<Form1Tag>;
using Vec1  = Coeffs<Vec1Tag>;
using Form2 = Coeffs<Form2Tag>;
using Vec2  = Coeffs<Vec2Tag>;

// Pointwise product in the function algebra.
Func operator*(const Func& f, const Func& g);

struct CalculusMismatch {
  std::string what;     // which identity
  std::string element;  // basis element it failed on
};

struct CalculusReport {
  std::size_t                   checked = 0;
  std::vector<CalculusMismatch> mismatches;
  bool passed() const { return mismatches.empty(); }
};

class Calculus {
 public:
  explicit Calculus(const Digraph& d);

  const Digraph& digraph() const { return d_; }
  const std::vector<Path2>& all_paths2() const { return e2_; }
  const std::vector<Path2>& basis2() const { return basis_; }
  int basis2_index(const Path2& p) const;  // -1 if p is distinguished or absent

  Func  func(int p) const;        // f_p
  Func  one() const;              // sum of all f_p
  Form1 omega(int edge) const;    // w(a->b)
  Vec1  vec(int edge) const;      // e(b<-a)
  Form2 omega2(const Path2& p) const;  // w(a->b)^w(b->c), rewritten into the basis
  Vec2  vec2(const Path2& p) const;    // e(a->b->c), rewritten into the basis

  Form1 d0(const Func& f) const;
  Form2 d1(const Form1& w) const;
  Form2 wedge(const Form1& w, const Form1& r) const;

  // Bimodule actions.
  Form1 left(const Func& f, const Form1& w) const;
  Form1 right(const Form1& w, const Func& f) const;
  Vec1  left(const Func& f, const Vec1& x) const;
  Vec1  right(const Vec1& x, const Func& f) const;
  Form2 left(const Func& f, const Form2& w) const;
  Form2 right(const Form2& w, const Func& f) const;
  Vec2  left(const Func& f, const Vec2& x) const;
  Vec2  right(const Vec2& x, const Func& f) const;

  Func ev1(const Vec1& x, const Form1& w) const;
  Func ev1r(const Form1& w, const Vec1& x) const;
  std::vector<std::pair<Form1, Vec1>> coev1() const;
  std::vector<std::pair<Vec1, Form1>> coev1r() const;

  Func ev2(const Vec2& x, const Form2& w) const;
  Func ev2r(const Form2& w, const Vec2& x) const;
  std::vector<std::pair<Form2, Vec2>> coev2() const;
  std::vector<std::pair<Vec2, Form2>> coev2r() const;

  // Upsilon(e(t<-s)) = f_s - f_t, extended linearly.
  Func upsilon(const Vec1& x) const;

  std::string edge_label(int e) const;
  std::string path_label(const Path2& p) const;

 private:
  Digraph            d_;
  std::vector<Path2> e2_;
  std::vector<Path2> basis_;
  std::map<Path2, int> basis_index_;
  // Rewriting of every 2-path into basis coordinates.
  std::map<Path2, std::vector<std::pair<int, Rational>>> rewrite_;

  std::vector<std::pair<int, Rational>> coords(const Path2& p) const;
};

// d1(d0(f_p)) = 0 for every vertex.
CalculusReport check_d_squared(const Calculus& c);
// The two bimodule Leibniz identities for every f_p and every w(a->b).
CalculusReport check_leibniz(const Calculus& c);
// Snake identities for (ev1, coev1), (ev1r, coev1r), (ev2, coev2), (ev2r, coev2r).
CalculusReport check_snakes(const Calculus& c);
// Compatibility of the wedge product with the two dualities on every basis
// element of the degree-two vector fields.
CalculusReport check_pivotal(const Digraph& d);
// Flatness of Upsilon evaluated on every degree-two basis vector field.
CalculusReport check_upsilon_flat(const Digraph& d);
// All of the above.
CalculusReport check_calculus(const Digraph& d);

}  // namespace dhopf

#endif  // DHOPF_CALCULUS_HPP_
