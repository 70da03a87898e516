#include "dhopf/linalg.hpp"

#include <algorithm>
#include <utility>

namespace dhopf {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

QMatrix QMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionError("ragged dense matrix");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

QMatrix QMatrix::from_int(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (auto const& row : rows) {
    std::vector<Rational> qr;
    for (long v : row) qr.emplace_back(v);
    q.push_back(std::move(qr));
  }
  return from_dense(q);
}

Rational QMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_) throw DimensionError("QMatrix::at out of range");
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void QMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_.size() || c >= cols_) throw DimensionError("QMatrix::set out of range");
  if (v == 0) {
    rows_[r].erase(c);
  } else {
    rows_[r][c] = v;
  }
}

void QMatrix::append_row(QVector v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->first >= cols_) throw DimensionError("row entry beyond column count");
    it = (it->second == 0) ? v.erase(it) : std::next(it);
  }
  rows_.push_back(std::move(v));
}

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (auto const& r : rows_) n += r.size();
  return n;
}

std::vector<std::vector<Rational>> QMatrix::to_dense() const {
  std::vector<std::vector<Rational>> d(rows_.size(), std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (auto const& [c, v] : rows_[r]) d[r][c] = v;
  return d;
}

namespace {

// v += c * w on sparse vectors, dropping cancellations.
void add_scaled(QVector& v, const Rational& c, const QVector& w) {
  for (auto const& [col, val] : w) {
    auto [it, fresh] = v.try_emplace(col, 0);
    it->second += c * val;
    if (it->second == 0) v.erase(it);
  }
}

}  // namespace

RrefResult rref(const QMatrix& m) {
  std::vector<QVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) rows.push_back(m.row(r));

  RrefResult out;
  std::size_t next = 0;
  // Gauss-Jordan, scanning columns left to right.
  for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && !rows[piv].count(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    Rational inv = 1 / rows[next].at(col);
    for (auto& [c, v] : rows[next]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Rational f = -it->second;
      add_scaled(rows[r], f, rows[next]);
    }
    out.pivot_cols.push_back(col);
    ++next;
  }
  out.rank   = next;
  out.matrix = QMatrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < next; ++r)
    for (auto const& [c, v] : rows[r]) out.matrix.set(r, c, v);
  return out;
}

SpanDecision in_span(const QVector& v, const QMatrix& basis) {
  for (auto const& [c, val] : v)
    if (c >= basis.cols()) throw DimensionError("in_span: vector longer than basis rows");

  // Echelon rows, each paired with its expression in the original rows.
  struct Tracked {
    QVector row;
    QVector combo;
  };
  std::map<std::size_t, Tracked> by_pivot;  // pivot column -> row
  auto reduce = [&](Tracked& t) {
    while (!t.row.empty()) {
      auto lead = t.row.begin();
      auto it   = by_pivot.find(lead->first);
      if (it == by_pivot.end()) return;
      Rational f = -lead->second;  // pivot rows are normalised to 1
      add_scaled(t.row, f, it->second.row);
      add_scaled(t.combo, f, it->second.combo);
    }
  };
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Tracked t{basis.row(r), QVector{{r, Rational(1)}}};
    reduce(t);
    if (t.row.empty()) continue;
    Rational inv = 1 / t.row.begin()->second;
    for (auto& [c, x] : t.row) x *= inv;
    for (auto& [c, x] : t.combo) x *= inv;
    std::size_t p = t.row.begin()->first;
    by_pivot.emplace(p, std::move(t));
  }

  Tracked target{v, {}};
  reduce(target);
  SpanDecision d;
  if (!target.row.empty()) return d;
  d.in_span = true;
  // target.row = v + combo.rows = 0, so v = -combo.
  for (auto& [r, c] : target.combo) d.coefficients[r] = -c;
  return d;
}

SmithResult smith_normal_form(const ZMatrix& m0) {
  ZMatrix m          = m0;
  std::size_t rows   = m.size();
  std::size_t cols   = rows ? m[0].size() : 0;
  for (auto const& r : m)
    if (r.size() != cols) throw DimensionError("ragged integer matrix");
  std::size_t n = std::min(rows, cols);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;  // trailing block is zero
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest of the block; if not, fold the
      // offending row into row t and start over.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }

  SmithResult res;
  for (std::size_t t = 0; t < n; ++t) {
    Integer d = abs(m[t][t]);
    if (d != 0) ++res.rank;
    res.invariant_factors.push_back(d);
  }
  return res;
}

SmithResult smith_normal_form(const QMatrix& m) {
  ZMatrix z(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto const& [c, v] : m.row(r)) {
      if (v.get_den() != 1) throw std::invalid_argument("smith_normal_form: non-integer entry");
      z[r][c] = v.get_num();
    }
  return smith_normal_form(z);
}

void Echelon::axpy(WorkRow& v, const Rational& c, const Row& row) {
  for (auto const& [col, val] : row) {
    auto [it, fresh] = v.try_emplace(col, 0);
    it->second += c * val;
    if (it->second == 0) v.erase(it);
  }
}

bool Echelon::insert(WorkRow row) {
  while (!row.empty()) {
    auto lead = row.begin();
    auto it   = pivot_of_.find(lead->first);
    if (it == pivot_of_.end()) break;
    Rational f = -lead->second;
    axpy(row, f, rows_[it->second]);
  }
  if (row.empty()) return false;
  Rational inv = 1 / row.begin()->second;
  Row stored;
  stored.reserve(row.size());
  for (auto& [c, v] : row) stored.emplace_back(c, v * inv);
  pivot_of_.emplace(stored.front().first, rows_.size());
  rows_.push_back(std::move(stored));
  return true;
}

void Echelon::reduce(WorkRow& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivot_of_.find(it->first);
    if (p == pivot_of_.end()) {
      ++it;
      continue;
    }
    int col    = it->first;
    Rational f = -it->second;
    axpy(v, f, rows_[p->second]);
    // Everything the pivot row touched lies below col.
    it = v.upper_bound(col);
  }
}

}  // namespace dhopf
