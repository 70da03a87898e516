// Path algebras of finite quivers whose vertices carry a pair of labels in a
// finite set of base points, two-sided ideals given by relation lists, the
// bounded-degree membership oracle, and balanced tensor products over the
// base algebra of functions on the base points.
//
// Products are written in composition order: x*y means "y first, then x", so
// x*y is nonzero only when the source of x equals the target of y.

#ifndef DHOPF_PATH_ALGEBRA_HPP_
#define DHOPF_PATH_ALGEBRA_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dhopf/digraph.hpp"
#include "dhopf/linalg.hpp"

namespace dhopf {

// A quiver over a base set. Each vertex v is an idempotent in the path
// algebra; sigma[v] and tau[v] name the base points it lies over, so that
// s(f_p) is the sum of vertices with sigma = p and t(f_p) the sum of
// vertices with tau = p. Both families are complete sets of orthogonal
// idempotents and commute with each other.
struct Quiver {
  struct Arrow {
    int         src = 0;
    int         dst = 0;
    std::string label;
  };

  std::vector<std::string> base_labels;
  std::vector<std::string> vertex_labels;
  std::vector<int>         sigma, tau;
  std::vector<Arrow>       arrows;

  std::size_t num_base() const { return base_labels.size(); }
  std::size_t num_vertices() const { return vertex_labels.size(); }
  std::size_t num_arrows() const { return arrows.size(); }

  // Arrow indices leaving / entering each vertex; filled by finalize().
  std::vector<std::vector<int>> out_arrows, in_arrows;
  void finalize();
};

Quiver quiver_from_double(const DoubleQuiver& dq);

// A path. Arrows are listed in product order (arrows.front() is applied
// last). A path of length zero is the idempotent of `vertex`; for longer
// paths `vertex` is -1.
struct Word {
  int              vertex = -1;
  std::vector<int> arrows;

  static Word at(int v) { return Word{v, {}}; }
  static Word of(int a) { return Word{-1, {a}}; }

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Word&) const = default;
  // Length first, then lexicographic.
  bool operator<(const Word& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows.empty()) return vertex < o.vertex;
    return arrows < o.arrows;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

int source(const Quiver& q, const Word& w);
int target(const Quiver& q, const Word& w);
std::optional<Word> compose(const Quiver& q, const Word& x, const Word& y);
std::string word_label(const Quiver& q, const Word& w);

// Finite rational combination of paths with no zero coefficients.
struct AlgElem {
  std::map<Word, Rational> terms;

  AlgElem() = default;
  explicit AlgElem(const Word& w, const Rational& c = 1) { add(w, c); }

  void add(const Word& w, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  std::size_t max_length() const;

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const Rational& s, AlgElem a);
  AlgElem operator-() const { return Rational(-1) * *this; }
  bool operator==(const AlgElem&) const = default;
};

AlgElem vertex_elem(int v);
AlgElem arrow_elem(int a);
AlgElem mul(const Quiver& q, const AlgElem& x, const AlgElem& y);
AlgElem mul(const Quiver& q, std::initializer_list<AlgElem> factors);
AlgElem unit(const Quiver& q);
AlgElem source_image(const Quiver& q, int p);  // s(f_p)
AlgElem target_image(const Quiver& q, int p);  // t(f_p)
std::string elem_label(const Quiver& q, const AlgElem& x);

struct RelationSet {
  std::vector<AlgElem>     relations;  // each means "= 0"
  std::vector<std::string> labels;

  void add(AlgElem r, std::string label) {
    relations.push_back(std::move(r));
    labels.push_back(std::move(label));
  }
  std::size_t size() const { return relations.size(); }
};

// All paths of length at most n, ascending in the term order.
std::vector<Word> words_up_to(const Quiver& q, int n);

// One row of an ideal-membership certificate: coeff * u * relations[rel] * v.
struct CertificateTerm {
  Rational    coeff;
  Word        u;
  std::size_t rel;
  Word        v;
};

// The degree-n piece of the two-sided ideal generated by a relation set:
// span{u * r * v : len(u) + len(r) + len(v) <= n}, where len(r) is the
// longest term of r and u, v range over paths including the vertices. Every
// such product lives between two fixed vertices, so the span splits into
// blocks indexed by (target, source) and each block is eliminated on its own.
class IdealOracle {
 public:
  IdealOracle(const Quiver& q, const RelationSet& rels, int n);

  int degree() const { return n_; }
  std::size_t rank() const;
  std::size_t num_generating_rows() const { return generating_rows_; }

  // Normal form: x minus an element of the ideal, with no term that leads a
  // stored row. Paths longer than the degree pass through unchanged.
  AlgElem reduce(const AlgElem& x) const;
  const AlgElem& reduce_word(const Word& w) const;
  bool is_zero(const AlgElem& x) const { return reduce(x).is_zero(); }

  // Echelon basis of the span and the path basis its columns refer to.
  const std::vector<Word>& columns() const { return words_; }
  QMatrix span_matrix() const;

  // Explicit combination of generating rows equal to x, when x is in the span.
  std::optional<std::vector<CertificateTerm>> certificate(const AlgElem& x) const;

 private:
  template <class F>
  void for_each_row(int tgt, int src, F&& f) const;

  Quiver                                q_;
  RelationSet                           rels_;
  int                                   n_;
  std::vector<Word>                     words_;
  std::unordered_map<Word, int, WordHash> col_;
  std::vector<std::vector<int>>         by_src_, by_tgt_;  // column ids
  std::map<std::pair<int, int>, Echelon> blocks_;
  std::size_t                           generating_rows_ = 0;
  mutable std::unordered_map<Word, AlgElem, WordHash> cache_;
};

enum class Membership { Zero, Unknown };

// Sound ideal membership at degree n: Zero only if x lies in the span.
Membership reduces_to_zero(const Quiver& q, const AlgElem& x, const RelationSet& rels, int n);

struct IdealSpan {
  std::vector<Word> columns;
  QMatrix           rows;
};
IdealSpan ideal_span(const Quiver& q, const RelationSet& rels, int n);

// Membership oracles for every degree up to a bound, built lazily. A quotient
// may instead carry an exact normal form, in which case the degree is
// irrelevant and every query is answered at degree 0.
class Quotient {
 public:
  using ExactNormalForm = std::function<AlgElem(const AlgElem&)>;

  Quotient(Quiver q, RelationSet rels, int max_degree, ExactNormalForm exact = nullptr);

  const Quiver& quiver() const { return q_; }
  const RelationSet& relations() const { return rels_; }
  int max_degree() const { return max_degree_; }
  bool exact() const { return static_cast<bool>(exact_); }

  const IdealOracle& oracle(int n) const;
  AlgElem reduce(const AlgElem& x, int n) const;

  // Least n <= max_degree at which the predicate holds after reducing with
  // the degree-n oracle, or nullopt.
  template <class F>
  std::optional<int> minimal_degree(F&& holds_at) const {
    if (exact_) return holds_at(0) ? std::optional<int>(0) : std::nullopt;
    for (int n = 0; n <= max_degree_; ++n)
      if (holds_at(n)) return n;
    return std::nullopt;
  }

 private:
  Quiver                                            q_;
  RelationSet                                       rels_;
  int                                               max_degree_;
  ExactNormalForm                                   exact_;
  mutable std::vector<std::unique_ptr<IdealOracle>> oracles_;
};

// Tensors of paths. For the balanced tensor over the base algebra, t(a)x (x) y
// = x (x) s(a)y, so a pair survives exactly when tau(target x) equals
// sigma(target y); the normal form keeps only those pairs. The tensor over
// the opposite base balances x t(a) (x) y = x (x) t(a)y and keeps pairs with
// tau(source x) = tau(target y).
using Tensor2 = std::map<std::pair<Word, Word>, Rational>;
using Tensor3 = std::map<std::tuple<Word, Word, Word>, Rational>;
using BalancedTensor = Tensor2;

void add_to(Tensor2& t, const Word& x, const Word& y, const Rational& c);
void add_to(Tensor3& t, const Word& x, const Word& y, const Word& z, const Rational& c);
void add_scaled(Tensor2& t, const Rational& c, const Tensor2& o);
void add_scaled(Tensor3& t, const Rational& c, const Tensor3& o);

Tensor2 tensor(const AlgElem& x, const AlgElem& y);
bool matched(const Quiver& q, const Word& x, const Word& y);
bool op_matched(const Quiver& q, const Word& x, const Word& y);
BalancedTensor tensor_normalize(const Quiver& q, const AlgElem& x, const AlgElem& y);
Tensor2 normalize(const Quiver& q, const Tensor2& t);
Tensor2 op_normalize(const Quiver& q, const Tensor2& t);
Tensor3 normalize(const Quiver& q, const Tensor3& t);

// (x (x) y)(x' (x) y') = xx' (x) yy'.
Tensor2 tensor_mul(const Quiver& q, const Tensor2& a, const Tensor2& b);
// Multiplies the second factor: sum x (x) y*z  /  first factor: sum x*z (x) y.
Tensor2 mul_second(const Quiver& q, const Tensor2& a, const AlgElem& z);
Tensor2 mul_first(const Quiver& q, const Tensor2& a, const AlgElem& z);
// Reverses the order of the second factors' product: (x (x) y)(x' (x) y') =
// xx' (x) y'y, as used by the translation map.
Tensor2 tensor_mul_op(const Quiver& q, const Tensor2& a, const Tensor2& b);

// Applies the normal form to every tensor factor (pi (x) pi, pi (x) pi (x) pi).
Tensor2 reduce_tensor(const Quotient& Q, const Tensor2& t, int n);
Tensor3 reduce_tensor(const Quotient& Q, const Tensor3& t, int n);

std::string tensor_label(const Quiver& q, const Tensor2& t);

}  // namespace dhopf

#endif  // DHOPF_PATH_ALGEBRA_HPP_
