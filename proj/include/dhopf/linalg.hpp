// Exact linear algebra over the rationals and the integers.
//
// Everything downstream (ideal membership, axiom certificates, homology of
// presentations) reduces to the handful of routines declared here, so they
// never round: Rational is GMP's mpq_class, which keeps every value in lowest
// terms with a positive denominator.

#ifndef DHOPF_LINALG_HPP_
#define DHOPF_LINALG_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dhopf {

using Rational = mpq_class;
using Integer  = mpz_class;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Sparse vector: column index -> nonzero value.
using QVector = std::map<std::size_t, Rational>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sparse rational matrix stored row by row. Zero entries are never stored.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static QMatrix from_int(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void     set(std::size_t r, std::size_t c, const Rational& v);

  const QVector& row(std::size_t r) const { return rows_.at(r); }
  void           append_row(QVector v);

  std::size_t nonzeros() const;
  std::vector<std::vector<Rational>> to_dense() const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t          cols_ = 0;
  std::vector<QVector> rows_;
};

struct RrefResult {
  QMatrix                  matrix;
  std::size_t              rank = 0;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row-echelon form. The pivot of each row is its first nonzero column;
// zero rows are kept at the bottom so the shape is unchanged.
RrefResult rref(const QMatrix& m);

struct SpanDecision {
  bool    in_span = false;
  QVector coefficients;  // row index of the basis -> coefficient
};

// Decides whether v is a rational combination of the rows of basis, returning
// an explicit combination when it is. Throws DimensionError if v has an index
// outside basis.cols().
SpanDecision in_span(const QVector& v, const QMatrix& basis);

using ZMatrix = std::vector<std::vector<Integer>>;

struct SmithResult {
  std::vector<Integer> invariant_factors;  // min(rows, cols) entries
  std::size_t          rank = 0;
};

SmithResult smith_normal_form(const ZMatrix& m);
// Entries must be integers; throws std::invalid_argument otherwise.
SmithResult smith_normal_form(const QMatrix& m);

// Incremental row echelon structure used by the ideal-membership oracle.
// Columns are integers and a larger column is a larger monomial: every stored
// row leads with its largest column, normalised to coefficient 1, and no two
// rows share a leading column.
class Echelon {
 public:
  using Row     = std::vector<std::pair<int, Rational>>;  // descending columns
  using WorkRow = std::map<int, Rational, std::greater<int>>;

  // Returns true if the row was independent of the stored ones.
  bool insert(WorkRow row);

  // Fully reduces v against the stored rows; afterwards no remaining column of
  // v is a leading column.
  void reduce(WorkRow& v) const;

  std::size_t        rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  bool               is_pivot(int col) const { return pivot_of_.count(col) != 0; }

 private:
  static void axpy(WorkRow& v, const Rational& c, const Row& row);

  std::unordered_map<int, std::size_t> pivot_of_;
  std::vector<Row>                     rows_;
};

}  // namespace dhopf

#endif  // DHOPF_LINALG_HPP_
