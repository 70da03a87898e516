#include "dhopf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dhopf/json_io.hpp"

namespace dhopf {

namespace {

constexpr const char* kFooter = R"TXT(Words: "(a<b)" is the edge a->b traversed forwards, "(a<b)^-1" backwards;
letters are joined by "." in traversal order; "id(v)" is the empty word at v.
Elements: signed sums of [coefficient] g1 * g2 * ... where a generator is
(p|q), (a b <= c d), (a b => c d), (a b <=, q), (a b =>, q) or GL(a,b,c,d),
GR(a,b,c,d), GLY(a,b,q), GRY(c,d,p), V(p,q). Products are in composition order.
Exit codes: 0 pass, 1 failure, 2 unknown or not stabilized, 3 input error.
HOPF_DEFAULT_DEGREE overrides the default degree 4.)TXT";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_digraph(ss.str());
}

int default_degree() {
  const char* env = std::getenv("HOPF_DEFAULT_DEGREE");
  if (!env || !*env) return 4;
  char* end = nullptr;
  long v    = std::strtol(env, &end, 10);
  if (*end || v < 0 || v > 64) throw InputError(std::string("HOPF_DEFAULT_DEGREE must be an integer in 0..64, got '") + env + "'");
  return int(v);
}

int worst(int a, int b) {
  auto rank = [](int c) { return c == kExitFail ? 2 : c == kExitUnknown ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int exit_for(CheckStatus s) {
  return s == CheckStatus::Pass ? kExitPass : s == CheckStatus::Fail ? kExitFail : kExitUnknown;
}

int exit_for(const HopfReport& r) {
  if (r.count(CheckStatus::Fail)) return kExitFail;
  if (r.count(CheckStatus::Unknown)) return kExitUnknown;
  return kExitPass;
}

// Every command fills `result` and returns an exit code.
struct Context {
  std::ostream& err;
  bool          quiet;
  void summary(const std::string& s) const {
    if (!quiet) err << s << "\n";
  }
};

std::string report_line(const std::string& what, const HopfReport& r) {
  std::ostringstream s;
  auto m = r.max_minimal_N();
  s << what << ": " << r.count(CheckStatus::Pass) << "/" << r.instances.size() << " pass, "
    << r.count(CheckStatus::Unknown) << " unknown, " << r.count(CheckStatus::Fail) << " fail";
  if (m) s << ", max minimal N " << *m;
  return s.str();
}

HopfReport run_suite(const HopfPresentation& hp, const std::string& suite, int degree) {
  HopfChecker C(hp, degree);
  if (suite == "coring") return C.coring();
  if (suite == "bialgebroid") return C.bialgebroid();
  if (suite == "antipode") return C.antipode();
  if (suite == "translation") return C.translation();
  if (suite == "well-defined") return C.well_defined();
  return C.all();
}

int cmd_check(const Context& cx, const Digraph& d, const std::string& suite, int degree, const std::string& which,
              Json& result) {
  int code              = kExitPass;
  result["graph"]       = to_json(d);
  result["suite"]       = suite;
  result["degree"]      = degree;
  Json notices          = Json::array();
  if (suite == "calculus" || suite == "all") {
    CalculusReport r    = check_calculus(d);
    result["calculus"]  = to_json(r);
    if (!r.passed()) code = kExitFail;
    cx.summary("calculus: " + std::to_string(r.checked) + " checked, " + std::to_string(r.mismatches.size()) +
               " mismatches");
  }
  if (suite == "calculus") return code;
  for (auto const& kind : {"hx1", "dx"}) {
    if (which != "both" && which != kind) continue;
    std::optional<HopfPresentation> hp;
    if (std::string(kind) == "hx1") {
      hp = hx1_hopf(d);
    } else {
      try {
        hp = dx_hopf(d);
      } catch (const std::invalid_argument& e) {
        if (which == "dx") throw InputError(e.what());
        notices.push_back(std::string("dx skipped: ") + e.what());
        cx.summary(std::string("dx skipped: ") + e.what());
        continue;
      }
    }
    HopfReport r = run_suite(*hp, suite, degree);
    result[kind] = to_json(r);
    code         = worst(code, exit_for(r));
    cx.summary(report_line(kind, r));
  }
  result["notices"] = notices;
  return code;
}

int cmd_iso(const Context& cx, const Digraph& d, const std::string& kind, int degree, Json& result) {
  IsoResult r;
  if (kind == "hx1") {
    r = digraph_iso_hx1(d, degree);
  } else {
    try {
      r = digraph_iso_dx(d, degree);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  result           = to_json(r);
  result["degree"] = degree;
  std::size_t pass = 0;
  for (auto const& c : r.collapse) pass += c.status == CheckStatus::Pass;
  cx.summary("iso " + kind + ": " + std::to_string(r.groupoid.relators.size()) + " relators, collapse " +
             std::to_string(pass) + "/" + std::to_string(r.collapse.size()) + " certified");
  return exit_for(r.status());
}

int vertex_arg(const Digraph& d, const std::string& name) {
  try {
    return d.vertex(name);
  } catch (const DigraphError&) {
    throw InputError("unknown vertex '" + name + "'");
  }
}

int cmd_pi1(const Context& cx, const Digraph& d, const std::string& base, bool simplify, Json& result) {
  GroupoidPresentation P = fundamental_groupoid(d);
  GroupPresentation gp   = pi1_presentation(P, vertex_arg(d, base));
  result["base"]         = base;
  result["presentation"] = to_json(gp);
  if (simplify) {
    gp                   = tietze_simplify(gp);
    result["simplified"] = to_json(gp);
  }
  Abelianization ab       = abelianization(gp);
  result["abelianization"] = to_json(ab);
  cx.summary("pi1 at " + base + ": " + std::to_string(gp.generators.size()) + " generators, " +
             std::to_string(gp.relators.size()) + " relators");
  return kExitPass;
}

// H1 of the whole presentation complex: the isotropy presentations of all
// components side by side, abelianized together.
int cmd_h1(const Context& cx, const Digraph& d, Json& result) {
  GroupoidPresentation P = fundamental_groupoid(d);
  GroupPresentation all;
  std::vector<bool> covered(d.num_vertices(), false);
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    if (covered[v]) continue;
    GroupPresentation gp = pi1_presentation(P, int(v));
    // Mark the component by a BFS over the underlying graph.
    std::vector<int> stack{int(v)};
    covered[v] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto const& e : d.edges())
        for (auto [a, b] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}})
          if (a == x && !covered[b]) {
            covered[b] = true;
            stack.push_back(b);
          }
    }
    int shift = int(all.generators.size());
    all.generators.insert(all.generators.end(), gp.generators.begin(), gp.generators.end());
    for (auto r : gp.relators) {
      for (auto& x : r) x.first += shift;
      all.relators.push_back(r);
    }
  }
  Abelianization ab = abelianization(all);
  result            = to_json(ab);
  std::string tors;
  for (auto const& z : ab.torsion) tors += " + Z/" + z.get_str();
  cx.summary("H1 = Z^" + std::to_string(ab.free_rank) + tors);
  return kExitPass;
}

GroupoidWord word_arg(const Digraph& d, const std::string& text) {
  try {
    return parse_word(d, text);
  } catch (const WordError& e) {
    throw InputError(std::string("word '") + text + "': " + e.what());
  }
}

int cmd_word_eq(const Context& cx, const Digraph& d, const std::string& a, const std::string& b, std::size_t L,
                Json& result) {
  GroupoidPresentation P = fundamental_groupoid(d);
  GroupoidWord w1 = word_arg(d, a), w2 = word_arg(d, b);
  WordEqualResult r;
  try {
    r = word_equal(P, w1, w2, L);
  } catch (const WordError& e) {
    throw InputError(e.what());
  }
  Json steps = Json::array();
  for (auto const& s : r.steps) steps.push_back(to_json(P, s));
  result = {{"w1", format_word(d, w1)}, {"w2", format_word(d, w2)}, {"max_len", L},
            {"result", r.equal ? "equal" : "unknown"}, {"explored", r.explored}, {"steps", steps}};
  cx.summary(std::string(r.equal ? "Equal" : "Unknown") + " after exploring " + std::to_string(r.explored) +
             " words" + (r.equal ? ", certificate of " + std::to_string(r.steps.size()) + " steps" : ""));
  return r.equal ? kExitPass : kExitUnknown;
}

int cmd_arrows(const Context& cx, const Digraph& d, std::size_t cap, Json& result) {
  ArrowEnumeration en(fundamental_groupoid(d), cap);
  result = to_json(en, d);
  cx.summary(en.finite() ? "Finite(" + std::to_string(en.count()) + ") by the stabilization heuristic at length " +
                               std::to_string(en.level())
                         : "NotStabilized within length " + std::to_string(cap));
  return en.finite() ? kExitPass : kExitUnknown;
}

int cmd_ideal_member(const Context& cx, const Digraph& d, const std::string& kind, const std::string& text, int degree,
                     Json& result) {
  Presentation P = kind == "dx" ? dx_relations(d) : hx1_relations(d);
  AlgElem x;
  try {
    x = parse_element(P.alg, text);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  auto const& q = P.alg.quiver();
  Quotient Q(q, P.relations, degree);
  auto n = x.is_zero() ? std::optional<int>(0)
                       : Q.minimal_degree([&](int k) { return Q.reduce(x, k).is_zero(); });
  result = {{"presentation", kind}, {"element", elem_label(q, x)}, {"degree", degree},
            {"status", n ? "zero" : "unknown"}};
  result["minimal_N"] = n ? Json(*n) : Json(nullptr);
  if (n) {
    auto cert             = Q.oracle(*n).certificate(x);
    result["certificate"] = cert ? to_json(q, *cert, P.relations) : Json(nullptr);
  } else {
    result["normal_form"] = elem_label(q, Q.reduce(x, degree));
  }
  cx.summary(n ? "Zero at degree " + std::to_string(*n) : "Unknown up to degree " + std::to_string(degree));
  return n ? kExitPass : kExitUnknown;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf algebroids and fundamental groupoids of digraphs", "dhopf"};
  app.footer(kFooter);
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress the summary on stderr");

  std::string graph, kind, suite = "all", which = "both", base, w1, w2, element;
  int degree = -1;
  std::size_t max_len = 8, cap = 6;
  bool simplify = false;

  auto* c_double = app.add_subcommand("double", "Emit the double quiver");
  c_double->add_option("graph", graph, "Digraph JSON file")->required();

  auto* c_pres = app.add_subcommand("presentation", "Emit the relations of hx1 or dx");
  c_pres->add_option("kind", kind, "hx1 or dx")->required()->check(CLI::IsMember({"hx1", "dx"}));
  c_pres->add_option("graph", graph, "Digraph JSON file")->required();

  auto* c_check = app.add_subcommand("check", "Run axiom checks");
  c_check->add_option("graph", graph, "Digraph JSON file")->required();
  c_check->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"calculus", "coring", "bialgebroid", "antipode", "translation", "well-defined", "all"}));
  c_check->add_option("--degree", degree, "Degree bound N for ideal membership")->check(CLI::Range(0, 64));
  c_check->add_option("--presentation", which, "hx1, dx or both")->check(CLI::IsMember({"hx1", "dx", "both"}));

  auto* c_iso = app.add_subcommand("iso", "Groupoid presentation of the isotopy quotient");
  c_iso->add_option("kind", kind, "hx1 or dx")->required()->check(CLI::IsMember({"hx1", "dx"}));
  c_iso->add_option("graph", graph, "Digraph JSON file")->required();
  c_iso->add_option("--degree", degree, "Degree bound N")->check(CLI::Range(0, 64));

  auto* c_pi1 = app.add_subcommand("pi1", "Isotropy group presentation of the fundamental groupoid");
  c_pi1->add_option("graph", graph, "Digraph JSON file")->required();
  c_pi1->add_option("--base", base, "Base vertex")->required();
  c_pi1->add_flag("--simplify", simplify, "Apply Tietze simplification");

  auto* c_h1 = app.add_subcommand("h1", "First homology of the fundamental groupoid");
  c_h1->add_option("graph", graph, "Digraph JSON file")->required();

  auto* c_weq = app.add_subcommand("word-eq", "Bounded word problem in the fundamental groupoid");
  c_weq->add_option("graph", graph, "Digraph JSON file")->required();
  c_weq->add_option("w1", w1, "First word")->required();
  c_weq->add_option("w2", w2, "Second word")->required();
  c_weq->add_option("--max-len", max_len, "Length cap for intermediate words");

  auto* c_arrows = app.add_subcommand("arrows", "Bounded enumeration of groupoid arrows");
  c_arrows->add_option("graph", graph, "Digraph JSON file")->required();
  c_arrows->add_option("--cap", cap, "Word length cap")->check(CLI::Range(0, 24));

  auto* c_member = app.add_subcommand("ideal-member", "Ideal membership at bounded degree");
  c_member->add_option("graph", graph, "Digraph JSON file")->required();
  c_member->add_option("--element", element, "Element of the path algebra")->required();
  c_member->add_option("--degree", degree, "Degree bound N")->check(CLI::Range(0, 64));
  c_member->add_option("--presentation", kind, "hx1 or dx")->check(CLI::IsMember({"hx1", "dx"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "dhopf: " << e.what() << "\n";
    return kExitInput;
  }

  Context cx{err, quiet};
  Json result = Json::object();
  int code    = kExitPass;
  try {
    if (degree < 0) degree = default_degree();
    Digraph d = load_graph(graph);
    if (*c_double) {
      DoubleQuiver dq(d);
      result = to_json(dq);
      cx.summary("double quiver: " + std::to_string(dq.num_vertices()) + " vertices, " +
                 std::to_string(dq.arrows().size()) + " arrows");
    } else if (*c_pres) {
      Presentation P = kind == "dx" ? dx_relations(d) : hx1_relations(d);
      result         = to_json(P);
      cx.summary(kind + ": " + std::to_string(P.relations.size()) + " relations");
    } else if (*c_check) {
      code = cmd_check(cx, d, suite, degree, which, result);
    } else if (*c_iso) {
      code = cmd_iso(cx, d, kind, degree, result);
    } else if (*c_pi1) {
      code = cmd_pi1(cx, d, base, simplify, result);
    } else if (*c_h1) {
      code = cmd_h1(cx, d, result);
    } else if (*c_weq) {
      code = cmd_word_eq(cx, d, w1, w2, max_len, result);
    } else if (*c_arrows) {
      code = cmd_arrows(cx, d, cap, result);
    } else if (*c_member) {
      code = cmd_ideal_member(cx, d, kind.empty() ? "hx1" : kind, element, degree, result);
    }
  } catch (const InputError& e) {
    err << "dhopf: " << e.what() << "\n";
    return kExitInput;
  } catch (const DigraphError& e) {
    err << "dhopf: " << error_code_name(e.code) << ": " << e.what() << "\n";
    return kExitInput;
  }
  out << result.dump(2) << "\n";
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace dhopf
