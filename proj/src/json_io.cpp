#include "dhopf/json_io.hpp"

#include <cctype>

namespace dhopf {

// ---------------------------------------------------------------------------
// Element syntax

namespace {

class ElementScanner {
 public:
  ElementScanner(const DoubleAlgebra& A, const std::string& t) : A_(A), t_(t) {}

  AlgElem parse() {
    AlgElem sum;
    skip();
    if (at_end()) fail("empty element");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      sum += sign * term();
      first = false;
      skip();
    }
    return sum;
  }

 private:
  AlgElem term() {
    Rational c = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t j = i_;
      while (j < t_.size() && (std::isdigit(static_cast<unsigned char>(t_[j])) || t_[j] == '/')) ++j;
      try {
        c = Rational(t_.substr(i_, j - i_));
      } catch (const std::invalid_argument&) {
        fail("bad coefficient");
      }
      if (c.get_den() == 0) fail("zero denominator");
      c.canonicalize();
      i_ = j;
      skip();
      if (peek() == '*') {
        ++i_;
        skip();
      }
    }
    AlgElem prod = generator();
    skip();
    while (peek() == '*') {
      ++i_;
      skip();
      prod = A_.mul({prod, generator()});
      skip();
    }
    return c * prod;
  }

  AlgElem generator() {
    std::size_t j = i_;
    while (j < t_.size() && std::isalpha(static_cast<unsigned char>(t_[j]))) ++j;
    std::string head = t_.substr(i_, j - i_);
    i_               = j;
    if (peek() != '(') fail("expected '('");
    std::size_t close = t_.find(')', i_);
    if (close == std::string::npos) fail("unbalanced '('");
    std::string body = t_.substr(i_ + 1, close - i_ - 1);
    i_               = close + 1;

    std::vector<std::string> tok = tokens(body);
    auto v = [&](std::size_t k) {
      try {
        return A_.digraph().vertex(tok.at(k));
      } catch (const DigraphError&) {
        fail("unknown vertex '" + tok.at(k) + "'");
      }
      return -1;
    };
    auto shape = [&](std::initializer_list<const char*> s) {
      if (tok.size() != s.size()) return false;
      std::size_t k = 0;
      // An empty pattern slot stands for a vertex name, never punctuation.
      for (const char* x : s) {
        bool punct = tok[k] == "," || tok[k] == "|" || tok[k] == "<=" || tok[k] == "=>";
        if (*x ? tok[k] != x : punct) return false;
        ++k;
      }
      return true;
    };
    try {
      if (head == "GL" && shape({"", ",", "", ",", "", ",", ""})) return A_.gl(v(0), v(2), v(4), v(6));
      if (head == "GR" && shape({"", ",", "", ",", "", ",", ""})) return A_.gr(v(0), v(2), v(4), v(6));
      if (head == "GLY" && shape({"", ",", "", ",", ""})) return A_.gly(v(0), v(2), v(4));
      if (head == "GRY" && shape({"", ",", "", ",", ""})) return A_.gry(v(0), v(2), v(4));
      if (head == "V" && shape({"", ",", ""})) return A_.v(v(0), v(2));
      if (head.empty()) {
        if (shape({"", "|", ""})) return A_.v(v(0), v(2));
        if (shape({"", "", "<=", "", ""})) return A_.gl(v(0), v(1), v(3), v(4));
        if (shape({"", "", "=>", "", ""})) return A_.gr(v(0), v(1), v(3), v(4));
        if (shape({"", "", "<=", ",", ""})) return A_.gly(v(0), v(1), v(4));
        if (shape({"", "", "=>", ",", ""})) return A_.gry(v(0), v(1), v(4));
      }
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const ParseError*>(&e)) throw;
      fail(e.what());
    }
    fail("unrecognized generator '" + head + "(" + body + ")'");
    return {};
  }

  static std::vector<std::string> tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
      char c = s[k];
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == ',' || c == '|') {
        flush();
        out.emplace_back(1, c);
      } else if ((c == '<' || c == '=') && k + 1 < s.size() && (s.substr(k, 2) == "<=" || s.substr(k, 2) == "=>")) {
        flush();
        out.push_back(s.substr(k, 2));
        ++k;
      } else {
        cur += c;
      }
    }
    flush();
    return out;
  }

  char peek() const { return i_ < t_.size() ? t_[i_] : '\0'; }
  bool at_end() const { return i_ >= t_.size(); }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError("element: " + m + " at offset " + std::to_string(i_));
  }

  const DoubleAlgebra& A_;
  const std::string&   t_;
  std::size_t          i_ = 0;
};

}  // namespace

AlgElem parse_element(const DoubleAlgebra& A, const std::string& text) { return ElementScanner(A, text).parse(); }

// ---------------------------------------------------------------------------
// JSON

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json to_json(const Digraph& d) {
  Json edges = Json::array();
  for (auto const& e : d.edges()) edges.push_back({d.name(e.src), d.name(e.dst)});
  return {{"vertices", d.vertices()}, {"edges", edges}};
}

Json to_json(const DoubleQuiver& dq) {
  Json vs = Json::array(), as = Json::array();
  for (std::size_t v = 0; v < dq.num_vertices(); ++v) vs.push_back(dq.vertex_label(int(v)));
  std::map<std::string, std::size_t> counts;
  for (auto const& f : {Family::GenLeft, Family::GenRight, Family::GenLeftY, Family::GenRightY}) counts[family_name(f)] = 0;
  for (std::size_t i = 0; i < dq.arrows().size(); ++i) {
    auto const& a = dq.arrows()[i];
    ++counts[family_name(a.fam)];
    as.push_back({{"label", dq.arrow_label(int(i))},
                  {"family", family_name(a.fam)},
                  {"src", dq.vertex_label(a.src)},
                  {"dst", dq.vertex_label(a.dst)}});
  }
  Json c = Json::object();
  for (auto const& f : {Family::GenLeft, Family::GenRight, Family::GenLeftY, Family::GenRightY})
    c[family_name(f)] = counts[family_name(f)];
  return {{"digraph", to_json(dq.digraph())}, {"vertices", vs}, {"arrows", as}, {"family_counts", c}};
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  auto const& q = p.alg.quiver();
  for (std::size_t i = 0; i < p.relations.size(); ++i)
    rels.push_back({{"label", p.relations.labels[i]}, {"relation", elem_label(q, p.relations.relations[i])}});
  return {{"kind", kind_name(p.kind)},
          {"quiver", to_json(p.alg.dq())},
          {"num_relations", p.relations.size()},
          {"relations", rels}};
}

Json to_json(const CalculusReport& r) {
  Json ms = Json::array();
  for (auto const& m : r.mismatches) ms.push_back({{"identity", m.what}, {"element", m.element}});
  return {{"checked", r.checked}, {"passed", r.passed()}, {"mismatches", ms}};
}

Json to_json(const CheckInstance& c) {
  Json j = {{"axiom", c.axiom}, {"indices", c.indices}, {"status", status_name(c.status)}};
  j["minimal_N"] = c.minimal_N ? Json(*c.minimal_N) : Json(nullptr);
  return j;
}

Json to_json(const HopfReport& r) {
  Json is = Json::array();
  for (auto const& c : r.instances) is.push_back(to_json(c));
  auto m = r.max_minimal_N();
  return {{"summary",
           {{"instances", r.instances.size()},
            {"pass", r.count(CheckStatus::Pass)},
            {"unknown", r.count(CheckStatus::Unknown)},
            {"fail", r.count(CheckStatus::Fail)},
            {"max_minimal_N", m ? Json(*m) : Json(nullptr)}}},
          {"notices", r.notices},
          {"instances", is}};
}

Json to_json(const GroupoidPresentation& p) {
  auto const& d = p.digraph;
  Json gens = Json::array(), rels = Json::array();
  for (std::size_t e = 0; e < d.num_edges(); ++e)
    gens.push_back({{"name", format_word(d, letter_word(d, int(e)))},
                    {"src", d.name(d.edges()[e].src)},
                    {"dst", d.name(d.edges()[e].dst)}});
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    rels.push_back({{"label", p.labels.at(i)}, {"word", format_word(d, p.relators[i])}});
  return {{"objects", d.vertices()}, {"generators", gens}, {"relators", rels}};
}

Json to_json(const IsoResult& r) {
  Json items = Json::array();
  for (auto const& c : r.collapse) {
    Json j = {{"kind", c.kind}, {"what", c.what}, {"status", status_name(c.status)}};
    j["minimal_N"] = c.minimal_N ? Json(*c.minimal_N) : Json(nullptr);
    items.push_back(j);
  }
  return {{"groupoid", to_json(r.groupoid)}, {"status", status_name(r.status())}, {"collapse", items}};
}

Json to_json(const GroupPresentation& gp) {
  Json rels = Json::array();
  for (auto const& r : gp.relators) rels.push_back(format_group_word(gp, r));
  return {{"generators", gp.generators}, {"relators", rels}};
}

Json to_json(const Abelianization& ab) {
  Json t = Json::array();
  for (auto const& z : ab.torsion) t.push_back(to_json(z));
  return {{"torsion", t}, {"free_rank", ab.free_rank}};
}

Json to_json(const GroupoidPresentation& p, const RewriteStep& s) {
  return {{"relator", p.labels.at(s.relator)}, {"inverted", s.inverted}, {"rotation", s.rotation},
          {"split", s.split},                  {"position", s.position}, {"result", format_word(p.digraph, s.result)}};
}

Json to_json(const ArrowEnumeration& en, const Digraph& d) {
  Json reps = Json::array();
  for (auto const& w : en.representatives()) reps.push_back(format_word(d, w));
  Json j = {{"result", en.finite() ? "finite" : "not_stabilized"}, {"cap", en.cap()}};
  j["count"] = en.finite() ? Json(en.count()) : Json(nullptr);
  j["level"] = en.finite() ? Json(en.level()) : Json(nullptr);
  j["heuristic"]             = true;
  j["new_classes_by_length"] = en.new_classes_by_length();
  j["representatives"]       = reps;
  return j;
}

Json to_json(const Quiver& q, const std::vector<CertificateTerm>& cert, const RelationSet& rels) {
  Json out = Json::array();
  for (auto const& t : cert)
    out.push_back({{"coeff", to_json(t.coeff)},
                   {"left", word_label(q, t.u)},
                   {"relation", rels.labels.at(t.rel)},
                   {"right", word_label(q, t.v)}});
  return out;
}

GroupoidPresentation groupoid_presentation_from_json(const Digraph& d, const Json& j) {
  auto bad = [](const std::string& m) { return ParseError("groupoid presentation: " + m); };
  if (!j.is_object() || !j.contains("relators") || !j["relators"].is_array()) throw bad("'relators' must be an array");
  GroupoidPresentation p = free_groupoid(d);
  for (auto const& r : j["relators"]) {
    if (!r.is_object() || !r.contains("word") || !r["word"].is_string()) throw bad("relator needs a 'word' string");
    GroupoidWord w;
    try {
      w = parse_word(d, r["word"].get<std::string>());
    } catch (const WordError& e) {
      throw bad(e.what());
    }
    if (word_end(d, w) != w.start) throw bad("relator '" + r["word"].get<std::string>() + "' is not closed");
    p.relators.push_back(w);
    p.labels.push_back(r.contains("label") && r["label"].is_string() ? r["label"].get<std::string>()
                                                                     : "r" + std::to_string(p.labels.size()));
  }
  return p;
}

}  // namespace dhopf
