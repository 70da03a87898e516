#include "dhopf/path_algebra.hpp"

#include <algorithm>
#include <set>

namespace dhopf {

void Quiver::finalize() {
  out_arrows.assign(num_vertices(), {});
  in_arrows.assign(num_vertices(), {});
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    out_arrows.at(arrows[i].src).push_back(int(i));
    in_arrows.at(arrows[i].dst).push_back(int(i));
  }
}

Quiver quiver_from_double(const DoubleQuiver& dq) {
  Quiver q;
  auto const& d = dq.digraph();
  q.base_labels = d.vertices();
  for (std::size_t v = 0; v < dq.num_vertices(); ++v) {
    q.vertex_labels.push_back(dq.vertex_label(int(v)));
    q.sigma.push_back(dq.first(int(v)));
    q.tau.push_back(dq.second(int(v)));
  }
  for (std::size_t i = 0; i < dq.arrows().size(); ++i) {
    auto const& a = dq.arrows()[i];
    q.arrows.push_back({a.src, a.dst, dq.arrow_label(int(i))});
  }
  q.finalize();
  return q;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = std::hash<int>()(w.vertex) * 0x9e3779b97f4a7c15ULL;
  for (int a : w.arrows) h = (h ^ std::hash<int>()(a)) * 0x100000001b3ULL + 0x7f4a7c15;
  return h;
}

int source(const Quiver& q, const Word& w) {
  return w.arrows.empty() ? w.vertex : q.arrows[w.arrows.back()].src;
}

int target(const Quiver& q, const Word& w) {
  return w.arrows.empty() ? w.vertex : q.arrows[w.arrows.front()].dst;
}

std::optional<Word> compose(const Quiver& q, const Word& x, const Word& y) {
  if (source(q, x) != target(q, y)) return std::nullopt;
  if (x.arrows.empty()) return y;
  if (y.arrows.empty()) return x;
  Word w;
  w.arrows.reserve(x.arrows.size() + y.arrows.size());
  w.arrows = x.arrows;
  w.arrows.insert(w.arrows.end(), y.arrows.begin(), y.arrows.end());
  return w;
}

std::string word_label(const Quiver& q, const Word& w) {
  if (w.arrows.empty()) return q.vertex_labels.at(w.vertex);
  std::string s;
  for (std::size_t i = 0; i < w.arrows.size(); ++i) {
    if (i) s += " * ";
    s += q.arrows.at(w.arrows[i]).label;
  }
  return s;
}

void AlgElem::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace(w, 0);
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

std::size_t AlgElem::max_length() const {
  std::size_t m = 0;
  for (auto const& [w, c] : terms) m = std::max(m, w.length());
  return m;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  for (auto const& [w, c] : o.terms) add(w, c);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  for (auto const& [w, c] : o.terms) add(w, -c);
  return *this;
}

AlgElem operator*(const Rational& s, AlgElem a) {
  if (s == 0) return {};
  for (auto& [w, c] : a.terms) c *= s;
  return a;
}

AlgElem vertex_elem(int v) { return AlgElem(Word::at(v)); }
AlgElem arrow_elem(int a) { return AlgElem(Word::of(a)); }

AlgElem mul(const Quiver& q, const AlgElem& x, const AlgElem& y) {
  AlgElem out;
  for (auto const& [wx, cx] : x.terms)
    for (auto const& [wy, cy] : y.terms)
      if (auto w = compose(q, wx, wy)) out.add(*w, cx * cy);
  return out;
}

AlgElem mul(const Quiver& q, std::initializer_list<AlgElem> factors) {
  if (factors.size() == 0) return unit(q);
  auto it      = factors.begin();
  AlgElem acc  = *it;
  for (++it; it != factors.end(); ++it) acc = mul(q, acc, *it);
  return acc;
}

AlgElem unit(const Quiver& q) {
  AlgElem u;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) u.add(Word::at(int(v)), 1);
  return u;
}

AlgElem source_image(const Quiver& q, int p) {
  AlgElem s;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.sigma[v] == p) s.add(Word::at(int(v)), 1);
  return s;
}

AlgElem target_image(const Quiver& q, int p) {
  AlgElem t;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.tau[v] == p) t.add(Word::at(int(v)), 1);
  return t;
}

namespace {

std::string coeff_prefix(const Rational& c, bool first) {
  std::string s;
  if (c < 0) {
    s = first ? "-" : " - ";
  } else if (!first) {
    s = " + ";
  }
  Rational a = abs(c);
  if (a != 1) s += a.get_str() + " ";
  return s;
}

}  // namespace

std::string elem_label(const Quiver& q, const AlgElem& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto const& [w, c] : x.terms) {
    s += coeff_prefix(c, first) + word_label(q, w);
    first = false;
  }
  return s;
}

std::vector<Word> words_up_to(const Quiver& q, int n) {
  std::vector<Word> all, layer;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) layer.push_back(Word::at(int(v)));
  all = layer;
  for (int len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (auto const& w : layer)
      for (int a : q.out_arrows[target(q, w)]) {
        Word x;
        x.arrows.reserve(w.arrows.size() + 1);
        x.arrows.push_back(a);
        x.arrows.insert(x.arrows.end(), w.arrows.begin(), w.arrows.end());
        next.push_back(std::move(x));
      }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

// Concatenates u * w * v for words already known to be composable.
Word concat3(const Word& u, const Word& w, const Word& v) {
  if (u.arrows.empty() && w.arrows.empty() && v.arrows.empty()) return u;
  Word out;
  out.arrows.reserve(u.arrows.size() + w.arrows.size() + v.arrows.size());
  out.arrows.insert(out.arrows.end(), u.arrows.begin(), u.arrows.end());
  out.arrows.insert(out.arrows.end(), w.arrows.begin(), w.arrows.end());
  out.arrows.insert(out.arrows.end(), v.arrows.begin(), v.arrows.end());
  return out;
}

std::map<std::pair<int, int>, AlgElem> split_blocks(const Quiver& q, const AlgElem& x) {
  std::map<std::pair<int, int>, AlgElem> out;
  for (auto const& [w, c] : x.terms) out[{target(q, w), source(q, w)}].add(w, c);
  return out;
}

}  // namespace

template <class F>
void IdealOracle::for_each_row(int tgt, int src, F&& f) const {
  // Visits every generating row; when tgt >= 0 only rows of that block.
  for (std::size_t i = 0; i < rels_.size(); ++i) {
    int L = int(rels_.relations[i].max_length());
    if (L > n_) continue;
    for (auto const& [blk, comp] : split_blocks(q_, rels_.relations[i])) {
      for (int uc : by_src_[blk.first]) {
        const Word& u = words_[uc];
        int rest      = n_ - L - int(u.length());
        if (rest < 0) break;
        if (tgt >= 0 && target(q_, u) != tgt) continue;
        for (int vc : by_tgt_[blk.second]) {
          const Word& v = words_[vc];
          if (int(v.length()) > rest) break;
          if (tgt >= 0 && source(q_, v) != src) continue;
          f(i, u, comp, v);
        }
      }
    }
  }
}

IdealOracle::IdealOracle(const Quiver& q, const RelationSet& rels, int n) : q_(q), rels_(rels), n_(n) {
  words_ = words_up_to(q_, n_);
  by_src_.assign(q_.num_vertices(), {});
  by_tgt_.assign(q_.num_vertices(), {});
  for (std::size_t i = 0; i < words_.size(); ++i) {
    col_.emplace(words_[i], int(i));
    by_src_[source(q_, words_[i])].push_back(int(i));
    by_tgt_[target(q_, words_[i])].push_back(int(i));
  }
  for_each_row(-1, -1, [&](std::size_t, const Word& u, const AlgElem& comp, const Word& v) {
    Echelon::WorkRow row;
    for (auto const& [w, c] : comp.terms) {
      auto [it, fresh] = row.try_emplace(col_.at(concat3(u, w, v)), 0);
      it->second += c;
      if (it->second == 0) row.erase(it);
    }
    ++generating_rows_;
    if (!row.empty()) blocks_[{target(q_, u), source(q_, v)}].insert(std::move(row));
  });
}

std::size_t IdealOracle::rank() const {
  std::size_t r = 0;
  for (auto const& [k, e] : blocks_) r += e.rank();
  return r;
}

const AlgElem& IdealOracle::reduce_word(const Word& w) const {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  AlgElem out;
  auto c = col_.find(w);
  auto b = blocks_.find({target(q_, w), source(q_, w)});
  if (c == col_.end() || b == blocks_.end() || !b->second.is_pivot(c->second)) {
    out.add(w, 1);
  } else {
    Echelon::WorkRow row{{c->second, Rational(1)}};
    b->second.reduce(row);
    for (auto const& [col, val] : row) out.add(words_[col], val);
  }
  return cache_.emplace(w, std::move(out)).first->second;
}

AlgElem IdealOracle::reduce(const AlgElem& x) const {
  AlgElem out;
  for (auto const& [w, c] : x.terms) {
    const AlgElem& r = reduce_word(w);
    for (auto const& [rw, rc] : r.terms) out.add(rw, c * rc);
  }
  return out;
}

QMatrix IdealOracle::span_matrix() const {
  QMatrix m(0, words_.size());
  for (auto const& [blk, e] : blocks_)
    for (auto const& row : e.rows()) {
      QVector v;
      for (auto const& [c, x] : row) v[std::size_t(c)] = x;
      m.append_row(std::move(v));
    }
  return m;
}

std::optional<std::vector<CertificateTerm>> IdealOracle::certificate(const AlgElem& x) const {
  std::vector<CertificateTerm> cert;
  for (auto const& [blk, part] : split_blocks(q_, x)) {
    std::vector<std::tuple<std::size_t, Word, Word>> gens;
    QMatrix rows(0, words_.size());
    QVector target_vec;
    for (auto const& [w, c] : part.terms) {
      auto it = col_.find(w);
      if (it == col_.end()) return std::nullopt;
      target_vec[std::size_t(it->second)] = c;
    }
    for_each_row(blk.first, blk.second, [&](std::size_t i, const Word& u, const AlgElem& comp, const Word& v) {
      QVector row;
      for (auto const& [w, c] : comp.terms) {
        auto [it, fresh] = row.try_emplace(std::size_t(col_.at(concat3(u, w, v))), 0);
        it->second += c;
        if (it->second == 0) row.erase(it);
      }
      gens.emplace_back(i, u, v);
      rows.append_row(std::move(row));
    });
    SpanDecision d = in_span(target_vec, rows);
    if (!d.in_span) return std::nullopt;
    for (auto const& [r, c] : d.coefficients) {
      auto const& [i, u, v] = gens[r];
      cert.push_back({c, u, i, v});
    }
  }
  return cert;
}

Membership reduces_to_zero(const Quiver& q, const AlgElem& x, const RelationSet& rels, int n) {
  if (x.is_zero()) return Membership::Zero;
  if (int(x.max_length()) > n) return Membership::Unknown;
  IdealOracle o(q, rels, n);
  return o.is_zero(x) ? Membership::Zero : Membership::Unknown;
}

IdealSpan ideal_span(const Quiver& q, const RelationSet& rels, int n) {
  IdealOracle o(q, rels, n);
  return {o.columns(), o.span_matrix()};
}

Quotient::Quotient(Quiver q, RelationSet rels, int max_degree, ExactNormalForm exact)
    : q_(std::move(q)), rels_(std::move(rels)), max_degree_(max_degree), exact_(std::move(exact)) {
  oracles_.resize(std::max(0, max_degree_) + 1);
}

const IdealOracle& Quotient::oracle(int n) const {
  if (n < 0 || n > max_degree_) throw std::out_of_range("degree beyond the quotient's bound");
  if (!oracles_[n]) oracles_[n] = std::make_unique<IdealOracle>(q_, rels_, n);
  return *oracles_[n];
}

AlgElem Quotient::reduce(const AlgElem& x, int n) const {
  if (exact_) return exact_(x);
  return oracle(n).reduce(x);
}

void add_to(Tensor2& t, const Word& x, const Word& y, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t.try_emplace({x, y}, 0);
  it->second += c;
  if (it->second == 0) t.erase(it);
}

void add_to(Tensor3& t, const Word& x, const Word& y, const Word& z, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t.try_emplace({x, y, z}, 0);
  it->second += c;
  if (it->second == 0) t.erase(it);
}

void add_scaled(Tensor2& t, const Rational& c, const Tensor2& o) {
  for (auto const& [k, v] : o) add_to(t, k.first, k.second, c * v);
}

void add_scaled(Tensor3& t, const Rational& c, const Tensor3& o) {
  for (auto const& [k, v] : o) add_to(t, std::get<0>(k), std::get<1>(k), std::get<2>(k), c * v);
}

Tensor2 tensor(const AlgElem& x, const AlgElem& y) {
  Tensor2 t;
  for (auto const& [wx, cx] : x.terms)
    for (auto const& [wy, cy] : y.terms) add_to(t, wx, wy, cx * cy);
  return t;
}

bool matched(const Quiver& q, const Word& x, const Word& y) {
  return q.tau[target(q, x)] == q.sigma[target(q, y)];
}

bool op_matched(const Quiver& q, const Word& x, const Word& y) {
  return q.tau[source(q, x)] == q.tau[target(q, y)];
}

BalancedTensor tensor_normalize(const Quiver& q, const AlgElem& x, const AlgElem& y) {
  return normalize(q, tensor(x, y));
}

Tensor2 normalize(const Quiver& q, const Tensor2& t) {
  Tensor2 out;
  for (auto const& [k, c] : t)
    if (matched(q, k.first, k.second)) out.emplace(k, c);
  return out;
}

Tensor2 op_normalize(const Quiver& q, const Tensor2& t) {
  Tensor2 out;
  for (auto const& [k, c] : t)
    if (op_matched(q, k.first, k.second)) out.emplace(k, c);
  return out;
}

Tensor3 normalize(const Quiver& q, const Tensor3& t) {
  Tensor3 out;
  for (auto const& [k, c] : t)
    if (matched(q, std::get<0>(k), std::get<1>(k)) && matched(q, std::get<1>(k), std::get<2>(k))) out.emplace(k, c);
  return out;
}

Tensor2 tensor_mul(const Quiver& q, const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (auto const& [ka, ca] : a)
    for (auto const& [kb, cb] : b) {
      auto x = compose(q, ka.first, kb.first);
      if (!x) continue;
      auto y = compose(q, ka.second, kb.second);
      if (!y) continue;
      add_to(out, *x, *y, ca * cb);
    }
  return out;
}

Tensor2 tensor_mul_op(const Quiver& q, const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (auto const& [ka, ca] : a)
    for (auto const& [kb, cb] : b) {
      auto x = compose(q, ka.first, kb.first);
      if (!x) continue;
      auto y = compose(q, kb.second, ka.second);
      if (!y) continue;
      add_to(out, *x, *y, ca * cb);
    }
  return out;
}

Tensor2 mul_second(const Quiver& q, const Tensor2& a, const AlgElem& z) {
  Tensor2 out;
  for (auto const& [k, c] : a)
    for (auto const& [w, cw] : z.terms)
      if (auto y = compose(q, k.second, w)) add_to(out, k.first, *y, c * cw);
  return out;
}

Tensor2 mul_first(const Quiver& q, const Tensor2& a, const AlgElem& z) {
  Tensor2 out;
  for (auto const& [k, c] : a)
    for (auto const& [w, cw] : z.terms)
      if (auto x = compose(q, k.first, w)) add_to(out, *x, k.second, c * cw);
  return out;
}

namespace {

// Normal form of a single word, shared by the tensor reductions.
class WordReducer {
 public:
  WordReducer(const Quotient& Q, int n) : Q_(Q), n_(n) {}
  const AlgElem& operator()(const Word& w) {
    if (!Q_.exact()) return Q_.oracle(n_).reduce_word(w);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(w, Q_.reduce(AlgElem(w), n_)).first->second;
  }

 private:
  const Quotient& Q_;
  int n_;
  std::unordered_map<Word, AlgElem, WordHash> memo_;
};

}  // namespace

Tensor2 reduce_tensor(const Quotient& Q, const Tensor2& t, int n) {
  WordReducer nf(Q, n);
  Tensor2 out;
  for (auto const& [k, c] : t) {
    const AlgElem& x = nf(k.first);
    const AlgElem& y = nf(k.second);
    for (auto const& [wx, cx] : x.terms)
      for (auto const& [wy, cy] : y.terms) add_to(out, wx, wy, c * cx * cy);
  }
  return out;
}

Tensor3 reduce_tensor(const Quotient& Q, const Tensor3& t, int n) {
  WordReducer nf(Q, n);
  Tensor3 out;
  for (auto const& [k, c] : t) {
    const AlgElem& x = nf(std::get<0>(k));
    const AlgElem& y = nf(std::get<1>(k));
    const AlgElem& z = nf(std::get<2>(k));
    for (auto const& [wx, cx] : x.terms)
      for (auto const& [wy, cy] : y.terms)
        for (auto const& [wz, cz] : z.terms) add_to(out, wx, wy, wz, c * cx * cy * cz);
  }
  return out;
}

std::string tensor_label(const Quiver& q, const Tensor2& t) {
  if (t.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto const& [k, c] : t) {
    s += coeff_prefix(c, first) + "[" + word_label(q, k.first) + "] (x) [" + word_label(q, k.second) + "]";
    first = false;
  }
  return s;
}

}  // namespace dhopf
