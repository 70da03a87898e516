#include "dhopf/groupoid.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace dhopf {

namespace {

// Vertex reached from v by traversing a letter, or -1 if it does not start at v.
int step(const Digraph& d, int v, const Letter& l) {
  auto const& e = d.edges().at(l.edge);
  if (l.sign > 0) return e.src == v ? e.dst : -1;
  return e.dst == v ? e.src : -1;
}

int tail(const Digraph& d, const Letter& l) {
  auto const& e = d.edges().at(l.edge);
  return l.sign > 0 ? e.src : e.dst;
}

std::vector<Letter> inverse_letters(std::vector<Letter> ls) {
  std::reverse(ls.begin(), ls.end());
  for (auto& l : ls) l.sign = -l.sign;
  return ls;
}

bool cancels(const Letter& a, const Letter& b) { return a.edge == b.edge && a.sign == -b.sign; }

}  // namespace

int word_end(const Digraph& d, const GroupoidWord& w) {
  int v = w.start;
  for (auto const& l : w.letters) {
    v = step(d, v, l);
    if (v < 0) throw WordError("word is not a path");
  }
  return v;
}

bool is_valid(const Digraph& d, const GroupoidWord& w) {
  if (w.start < 0 || std::size_t(w.start) >= d.num_vertices()) return false;
  int v = w.start;
  for (auto const& l : w.letters) {
    if (l.edge < 0 || std::size_t(l.edge) >= d.num_edges() || (l.sign != 1 && l.sign != -1)) return false;
    v = step(d, v, l);
    if (v < 0) return false;
  }
  return true;
}

GroupoidWord identity_word(int v) { return GroupoidWord{v, {}}; }

GroupoidWord letter_word(const Digraph& d, int edge, int sign) {
  Letter l{edge, sign};
  return GroupoidWord{tail(d, l), {l}};
}

GroupoidWord inverse(const Digraph& d, const GroupoidWord& w) {
  return GroupoidWord{word_end(d, w), inverse_letters(w.letters)};
}

GroupoidWord concat(const Digraph& d, const GroupoidWord& w1, const GroupoidWord& w2) {
  if (word_end(d, w1) != w2.start) throw WordError("words are not composable");
  GroupoidWord w = w1;
  w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
  return w;
}

GroupoidWord free_reduce(const GroupoidWord& w) {
  GroupoidWord out{w.start, {}};
  for (auto const& l : w.letters) {
    if (!out.letters.empty() && cancels(out.letters.back(), l)) out.letters.pop_back();
    else out.letters.push_back(l);
  }
  return out;
}

std::string format_word(const Digraph& d, const GroupoidWord& w) {
  if (w.letters.empty()) return "id(" + d.name(w.start) + ")";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    auto const& e = d.edges().at(w.letters[i].edge);
    if (i) s += ".";
    s += "(" + d.name(e.src) + "<" + d.name(e.dst) + ")";
    if (w.letters[i].sign < 0) s += "^-1";
  }
  return s;
}

namespace {

class WordScanner {
 public:
  WordScanner(const Digraph& d, const std::string& t) : d_(d), t_(t) {}

  GroupoidWord parse() {
    skip();
    if (t_.compare(i_, 3, "id(") == 0) {
      i_ += 3;
      int v = vertex(until(")"));
      expect(')');
      finish();
      return identity_word(v);
    }
    GroupoidWord w;
    int cur = -1;
    while (true) {
      expect('(');
      int a = vertex(until("<"));
      expect('<');
      int b = vertex(until(")"));
      expect(')');
      int e = d_.edge_index(a, b);
      if (e < 0) throw WordError("no edge " + d_.name(a) + "->" + d_.name(b));
      Letter l{e, 1};
      skip();
      if (t_.compare(i_, 3, "^-1") == 0) {
        i_ += 3;
        l.sign = -1;
      }
      if (cur < 0) {
        w.start = tail(d_, l);
        cur     = w.start;
      }
      cur = step(d_, cur, l);
      if (cur < 0) throw WordError("letters do not form a path at '" + format_word(d_, letter_word(d_, e, l.sign)) + "'");
      w.letters.push_back(l);
      skip();
      if (i_ < t_.size() && t_[i_] == '.') {
        ++i_;
        skip();
        continue;
      }
      break;
    }
    finish();
    return w;
  }

 private:
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  void expect(char c) {
    skip();
    if (i_ >= t_.size() || t_[i_] != c) throw WordError(std::string("expected '") + c + "' at offset " + std::to_string(i_));
    ++i_;
  }
  void finish() {
    skip();
    if (i_ != t_.size()) throw WordError("trailing input at offset " + std::to_string(i_));
  }
  std::string until(const char* stops) {
    skip();
    std::size_t j = t_.find_first_of(stops, i_);
    if (j == std::string::npos) throw WordError("unterminated letter");
    std::string s = t_.substr(i_, j - i_);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    i_ = j;
    return s;
  }
  int vertex(const std::string& name) {
    try {
      return d_.vertex(name);
    } catch (const DigraphError&) {
      throw WordError("unknown vertex '" + name + "'");
    }
  }

  const Digraph&     d_;
  const std::string& t_;
  std::size_t        i_ = 0;
};

}  // namespace

GroupoidWord parse_word(const Digraph& d, const std::string& text) { return WordScanner(d, text).parse(); }

GroupoidPresentation free_groupoid(const Digraph& d) { return GroupoidPresentation{d, {}, {}}; }

GroupoidPresentation fundamental_groupoid(const Digraph& d) {
  GroupoidPresentation P = free_groupoid(d);
  auto E = [&](int a, int b) { return d.edge_index(a, b); };
  for (auto const& t : triangles(d)) {
    GroupoidWord w{t.a, {{E(t.a, t.b), 1}, {E(t.b, t.c), 1}, {E(t.a, t.c), -1}}};
    P.relators.push_back(w);
    P.labels.push_back("triangle(" + d.name(t.a) + "," + d.name(t.b) + "," + d.name(t.c) + ")");
  }
  for (auto const& s : squares(d)) {
    GroupoidWord w{s.p, {{E(s.p, s.q), 1}, {E(s.q, s.r), 1}, {E(s.q2, s.r), -1}, {E(s.p, s.q2), -1}}};
    P.relators.push_back(w);
    P.labels.push_back("square(" + d.name(s.p) + "," + d.name(s.q) + "," + d.name(s.q2) + "," + d.name(s.r) + ")");
  }
  return P;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

struct Rule {
  RewriteStep         tag;         // position left at 0
  int                 loop_start;  // vertex where A begins
  std::vector<Letter> A, repl;
};

std::vector<Rule> rewrite_rules(const GroupoidPresentation& pres) {
  auto const& d = pres.digraph;
  std::vector<Rule> rules;
  std::set<std::tuple<int, std::vector<Letter>, std::vector<Letter>>> seen;
  for (std::size_t r = 0; r < pres.relators.size(); ++r)
    for (int inv = 0; inv < 2; ++inv) {
      GroupoidWord R = inv ? inverse(d, pres.relators[r]) : pres.relators[r];
      std::size_t k  = R.letters.size();
      std::vector<int> verts{R.start};
      for (auto const& l : R.letters) verts.push_back(step(d, verts.back(), l));
      for (std::size_t rot = 0; rot < std::max<std::size_t>(k, 1); ++rot) {
        std::vector<Letter> C;
        for (std::size_t i = 0; i < k; ++i) C.push_back(R.letters[(rot + i) % k]);
        for (std::size_t j = 0; j <= k; ++j) {
          Rule rule;
          rule.tag.relator  = r;
          rule.tag.inverted = inv;
          rule.tag.rotation = rot;
          rule.tag.split    = j;
          rule.loop_start   = verts[rot];
          rule.A.assign(C.begin(), C.begin() + j);
          rule.repl = inverse_letters(std::vector<Letter>(C.begin() + j, C.end()));
          if (seen.insert({rule.A.empty() ? rule.loop_start : -1, rule.A, rule.repl}).second) rules.push_back(rule);
        }
      }
    }
  return rules;
}

// Vertices visited by w: entry i is the vertex before letter i.
std::vector<int> visits(const Digraph& d, const GroupoidWord& w) {
  std::vector<int> vs{w.start};
  for (auto const& l : w.letters) vs.push_back(step(d, vs.back(), l));
  return vs;
}

std::optional<GroupoidWord> apply_rule(const std::vector<int>& vs, const GroupoidWord& w, const Rule& rule,
                                       std::size_t pos) {
  if (pos > w.letters.size() || rule.A.size() > w.letters.size() - pos) return std::nullopt;
  if (rule.A.empty()) {
    if (vs[pos] != rule.loop_start) return std::nullopt;
  } else if (!std::equal(rule.A.begin(), rule.A.end(), w.letters.begin() + pos)) {
    return std::nullopt;
  }
  GroupoidWord out{w.start, {}};
  out.letters.reserve(w.letters.size() + rule.repl.size());
  out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
  out.letters.insert(out.letters.end(), rule.repl.begin(), rule.repl.end());
  out.letters.insert(out.letters.end(), w.letters.begin() + pos + rule.A.size(), w.letters.end());
  return free_reduce(out);
}

// Calls f(result, rule, position) for every single rewrite of w.
template <class F>
void for_each_rewrite(const GroupoidPresentation& pres, const std::vector<Rule>& rules, const GroupoidWord& w, F&& f) {
  auto vs = visits(pres.digraph, w);
  for (auto const& rule : rules)
    for (std::size_t pos = 0; pos + rule.A.size() <= w.letters.size(); ++pos)
      if (auto r = apply_rule(vs, w, rule, pos)) f(*r, rule, pos);
}

}  // namespace

std::optional<GroupoidWord> apply_step(const GroupoidPresentation& pres, const GroupoidWord& w, const RewriteStep& s) {
  for (auto const& rule : rewrite_rules(pres)) {
    if (rule.tag.relator != s.relator || rule.tag.inverted != s.inverted || rule.tag.rotation != s.rotation ||
        rule.tag.split != s.split)
      continue;
    return apply_rule(visits(pres.digraph, w), w, rule, s.position);
  }
  // The step may name a rule that was deduplicated against an earlier one;
  // rebuild it directly.
  if (s.relator >= pres.relators.size()) return std::nullopt;
  auto const& d  = pres.digraph;
  GroupoidWord R = s.inverted ? inverse(d, pres.relators[s.relator]) : pres.relators[s.relator];
  std::size_t k  = R.letters.size();
  if (s.split > k || (k > 0 && s.rotation >= k)) return std::nullopt;
  Rule rule;
  std::vector<Letter> C;
  for (std::size_t i = 0; i < k; ++i) C.push_back(R.letters[(s.rotation + i) % k]);
  rule.loop_start = visits(d, R)[s.rotation];
  rule.A.assign(C.begin(), C.begin() + s.split);
  rule.repl = inverse_letters(std::vector<Letter>(C.begin() + s.split, C.end()));
  return apply_rule(visits(d, w), w, rule, s.position);
}

std::optional<GroupoidWord> replay(const GroupoidPresentation& pres, const GroupoidWord& w1,
                                   const std::vector<RewriteStep>& steps) {
  GroupoidWord cur = free_reduce(w1);
  for (auto const& s : steps) {
    auto next = apply_step(pres, cur, s);
    if (!next || *next != s.result) return std::nullopt;
    cur = *next;
  }
  return cur;
}

WordEqualResult word_equal(const GroupoidPresentation& pres, const GroupoidWord& w1, const GroupoidWord& w2,
                           std::size_t max_len, std::size_t max_states) {
  auto const& d = pres.digraph;
  if (!is_valid(d, w1) || !is_valid(d, w2)) throw WordError("invalid word");
  if (w1.start != w2.start || word_end(d, w1) != word_end(d, w2)) throw WordError("words have different endpoints");

  GroupoidWord a = free_reduce(w1), b = free_reduce(w2);
  WordEqualResult res;
  if (a == b) {
    res.equal    = true;
    res.explored = 1;
    return res;
  }
  if (a.length() > max_len) return res;

  auto rules = rewrite_rules(pres);
  struct Node {
    GroupoidWord word;
    std::size_t  parent;
    RewriteStep  step;
  };
  std::vector<Node> nodes{{a, std::size_t(-1), {}}};
  std::map<GroupoidWord, std::size_t> seen{{a, 0}};
  for (std::size_t head = 0; head < nodes.size() && nodes.size() < max_states; ++head) {
    GroupoidWord cur = nodes[head].word;
    std::optional<std::size_t> hit;
    for_each_rewrite(pres, rules, cur, [&](const GroupoidWord& r, const Rule& rule, std::size_t pos) {
      if (hit || r.length() > max_len || seen.count(r)) return;
      RewriteStep s = rule.tag;
      s.position    = pos;
      s.result      = r;
      seen.emplace(r, nodes.size());
      nodes.push_back({r, head, s});
      if (r == b) hit = nodes.size() - 1;
    });
    if (hit) {
      res.equal = true;
      for (std::size_t i = *hit; i != 0; i = nodes[i].parent) res.steps.push_back(nodes[i].step);
      std::reverse(res.steps.begin(), res.steps.end());
      break;
    }
  }
  res.explored = nodes.size();
  return res;
}

// ---------------------------------------------------------------------------
// Group presentations

namespace {

using GWord = std::vector<std::pair<int, int>>;

GWord group_reduce(const GWord& w) {
  GWord out;
  for (auto const& x : w) {
    if (!out.empty() && out.back().first == x.first && out.back().second == -x.second) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

GWord cyclic_reduce(GWord w) {
  w = group_reduce(w);
  std::size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i].first == w[j - 1].first && w[i].second == -w[j - 1].second) {
    ++i;
    --j;
  }
  return GWord(w.begin() + i, w.begin() + j);
}

GWord group_inverse(GWord w) {
  std::reverse(w.begin(), w.end());
  for (auto& x : w) x.second = -x.second;
  return w;
}

}  // namespace

std::string format_group_word(const GroupPresentation& gp, const GWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += gp.generators.at(w[i].first);
    if (w[i].second < 0) s += "^-1";
  }
  return s;
}

GroupPresentation pi1_presentation(const GroupoidPresentation& pres, int base) {
  auto const& d = pres.digraph;
  int n         = int(d.num_vertices());
  if (base < 0 || base >= n) throw WordError("base vertex out of range");

  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < d.num_edges(); ++e) {
    incident[d.edges()[e].src].push_back(int(e));
    incident[d.edges()[e].dst].push_back(int(e));
  }
  auto other = [&](int e, int v) { return d.edges()[e].src == v ? d.edges()[e].dst : d.edges()[e].src; };

  // Component of base, then a BFS tree from its least vertex.
  std::vector<bool> in_comp(n, false);
  std::deque<int> queue{base};
  in_comp[base] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : incident[v])
      if (int u = other(e, v); !in_comp[u]) {
        in_comp[u] = true;
        queue.push_back(u);
      }
  }
  int root = base;
  for (int v = 0; v < n; ++v)
    if (in_comp[v]) {
      root = v;
      break;
    }
  std::vector<bool> seen(n, false), tree(d.num_edges(), false);
  seen[root] = true;
  queue      = {root};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int e : incident[v])
      if (int u = other(e, v); !seen[u]) {
        seen[u] = true;
        tree[e] = true;
        queue.push_back(u);
      }
  }

  GroupPresentation gp;
  std::vector<int> gen_of(d.num_edges(), -1);
  for (std::size_t e = 0; e < d.num_edges(); ++e)
    if (in_comp[d.edges()[e].src] && !tree[e]) {
      gen_of[e] = int(gp.generators.size());
      gp.generators.push_back("(" + d.name(d.edges()[e].src) + "<" + d.name(d.edges()[e].dst) + ")");
    }
  for (auto const& r : pres.relators) {
    if (!in_comp[r.start]) continue;
    GWord w;
    for (auto const& l : r.letters)
      if (gen_of[l.edge] >= 0) w.emplace_back(gen_of[l.edge], l.sign);
    w = group_reduce(w);
    if (!w.empty()) gp.relators.push_back(w);
  }
  return gp;
}

GroupPresentation tietze_simplify(const GroupPresentation& input, std::size_t budget) {
  GroupPresentation gp = input;
  std::size_t steps    = 0;
  while (true) {
    std::vector<GWord> rels;
    std::set<GWord> dup;
    for (auto const& r : gp.relators) {
      GWord c = cyclic_reduce(r);
      if (!c.empty() && dup.insert(c).second) rels.push_back(c);
    }
    gp.relators = rels;
    if (steps >= budget) break;

    bool moved = false;
    for (std::size_t ri = 0; ri < gp.relators.size() && !moved; ++ri) {
      const GWord& r = gp.relators[ri];
      std::map<int, int> occurrences;
      for (auto const& x : r) ++occurrences[x.first];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        int g = r[pos].first;
        if (occurrences[g] != 1) continue;
        // Rotate so r = g^s . w, hence g = w^-1 when s = 1 and g = w when s = -1.
        GWord w(r.begin() + pos + 1, r.end());
        w.insert(w.end(), r.begin(), r.begin() + pos);
        GWord image = r[pos].second > 0 ? group_inverse(w) : w;

        GroupPresentation next;
        for (std::size_t k = 0; k < gp.generators.size(); ++k)
          if (int(k) != g) next.generators.push_back(gp.generators[k]);
        auto renumber = [g](int k) { return k > g ? k - 1 : k; };
        for (std::size_t rj = 0; rj < gp.relators.size(); ++rj) {
          if (rj == ri) continue;
          GWord out;
          for (auto const& x : gp.relators[rj]) {
            if (x.first != g) {
              out.emplace_back(renumber(x.first), x.second);
              continue;
            }
            GWord sub = x.second > 0 ? image : group_inverse(image);
            for (auto const& y : sub) out.emplace_back(renumber(y.first), y.second);
          }
          next.relators.push_back(group_reduce(out));
        }
        gp    = std::move(next);
        moved = true;
        ++steps;
        break;
      }
    }
    if (!moved) break;
  }
  return gp;
}

Abelianization abelianization(const GroupPresentation& gp) {
  Abelianization ab;
  std::size_t g = gp.generators.size();
  if (g == 0) return ab;
  if (gp.relators.empty()) {
    ab.free_rank = g;
    return ab;
  }
  ZMatrix m(gp.relators.size(), std::vector<Integer>(g, 0));
  for (std::size_t r = 0; r < gp.relators.size(); ++r)
    for (auto const& x : gp.relators[r]) m[r][x.first] += x.second;
  SmithResult s = smith_normal_form(m);
  for (auto const& f : s.invariant_factors)
    if (abs(f) > 1) ab.torsion.push_back(abs(f));
  ab.free_rank = g - s.rank;
  return ab;
}

// ---------------------------------------------------------------------------
// Arrow enumeration

namespace {

bool shortlex(const GroupoidWord& a, const GroupoidWord& b) {
  return std::forward_as_tuple(a.letters.size(), a.start, a.letters) <
         std::forward_as_tuple(b.letters.size(), b.start, b.letters);
}

}  // namespace

ArrowEnumeration::ArrowEnumeration(const GroupoidPresentation& pres, std::size_t cap) : cap_(cap) {
  auto const& d = pres.digraph;
  std::vector<GroupoidWord> layer;
  for (std::size_t v = 0; v < d.num_vertices(); ++v) layer.push_back(identity_word(int(v)));
  words_ = layer;
  for (std::size_t len = 1; len <= cap_; ++len) {
    std::vector<GroupoidWord> next;
    for (auto const& w : layer) {
      int end = word_end(d, w);
      for (std::size_t e = 0; e < d.num_edges(); ++e)
        for (int s : {1, -1}) {
          Letter l{int(e), s};
          if (step(d, end, l) < 0) continue;
          if (!w.letters.empty() && cancels(w.letters.back(), l)) continue;
          GroupoidWord x = w;
          x.letters.push_back(l);
          next.push_back(std::move(x));
        }
    }
    words_.insert(words_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(words_.begin(), words_.end(), shortlex);
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);

  // Union-find keeping the least word of each class as its root.
  std::vector<std::size_t> parent(words_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto rules = rewrite_rules(pres);
  for (std::size_t i = 0; i < words_.size(); ++i)
    for_each_rewrite(pres, rules, words_[i], [&](const GroupoidWord& r, const Rule&, std::size_t) {
      if (r.length() > cap_) return;
      std::size_t a = find(i), b = find(index_.at(r));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });

  std::vector<std::size_t> roots;
  by_length_.assign(cap_ + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (find(i) == i) {
      roots.push_back(i);
      ++by_length_[words_[i].length()];
    }

  auto root_len = [&](std::size_t i) { return words_[find(i)].length(); };
  for (std::size_t L = 1; 2 * L <= cap_ && !finite_; ++L) {
    if (by_length_[L] != 0) continue;
    std::vector<std::size_t> counted;
    for (std::size_t r : roots)
      if (words_[r].length() < L) counted.push_back(r);
    bool closed = true;
    for (std::size_t f : counted) {
      int end = word_end(d, words_[f]);
      for (std::size_t g : counted) {
        if (words_[g].start != end) continue;
        GroupoidWord c = free_reduce(concat(d, words_[f], words_[g]));
        if (root_len(index_.at(c)) >= L) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) {
      finite_ = true;
      level_  = L;
    }
  }

  std::map<std::size_t, std::size_t> counted_index;
  for (std::size_t r : roots)
    if (!finite_ || words_[r].length() < level_) {
      counted_index.emplace(r, reps_.size());
      reps_.push_back(words_[r]);
    }
  class_of_word_.assign(words_.size(), std::size_t(-1));
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (auto it = counted_index.find(find(i)); it != counted_index.end()) class_of_word_[i] = it->second;
}

std::optional<std::size_t> ArrowEnumeration::classify(const GroupoidWord& w) const {
  auto it = index_.find(free_reduce(w));
  if (it == index_.end() || class_of_word_[it->second] == std::size_t(-1)) return std::nullopt;
  return class_of_word_[it->second];
}

}  // namespace dhopf
