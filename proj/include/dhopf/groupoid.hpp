// The fundamental groupoid of a digraph as a computational object: words in
// the edges and their formal inverses, bounded rewriting with relators,
// spanning-tree presentations of isotropy groups, Tietze simplification,
// abelianization and bounded enumeration of arrows.
//
// Word syntax. A letter "(a<b)" is the edge a->b traversed forwards and
// "(a<b)^-1" the same edge traversed backwards. Letters are joined by "." in
// the order they are traversed, so "(p<q).(q<r)" runs from p to r. The empty
// word at v is written "id(v)". Whitespace around tokens is ignored.

#ifndef DHOPF_GROUPOID_HPP_
#define DHOPF_GROUPOID_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dhopf/digraph.hpp"
#include "dhopf/linalg.hpp"

namespace dhopf {

struct Letter {
  int edge = 0;
  int sign = 1;  // +1 forwards (src -> dst), -1 backwards
  auto operator<=>(const Letter&) const = default;
};

struct GroupoidWord {
  int                 start = 0;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const GroupoidWord&) const = default;
};

struct WordError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int  word_end(const Digraph& d, const GroupoidWord& w);
bool is_valid(const Digraph& d, const GroupoidWord& w);
GroupoidWord identity_word(int v);
GroupoidWord letter_word(const Digraph& d, int edge, int sign = 1);
GroupoidWord inverse(const Digraph& d, const GroupoidWord& w);
// w1 then w2; throws WordError unless w1 ends where w2 starts.
GroupoidWord concat(const Digraph& d, const GroupoidWord& w1, const GroupoidWord& w2);
GroupoidWord free_reduce(const GroupoidWord& w);

std::string  format_word(const Digraph& d, const GroupoidWord& w);
// Throws WordError on syntax errors, unknown edges or broken paths.
GroupoidWord parse_word(const Digraph& d, const std::string& text);

// The free groupoid on the edges modulo a list of closed words.
struct GroupoidPresentation {
  Digraph                   digraph;
  std::vector<GroupoidWord> relators;
  std::vector<std::string>  labels;
};

GroupoidPresentation free_groupoid(const Digraph& d);
// One relator per triangle p->q->r with chord p->r:  (p<q).(q<r).(p<r)^-1.
// One per square (p,q,q',r):  (p<q).(q<r).(q'<r)^-1.(p<q')^-1.
GroupoidPresentation fundamental_groupoid(const Digraph& d);

// A single rewrite: replace the subword A at `position` by B^-1, where A.B is
// a cyclic rotation (at `rotation`, of the relator or of its inverse) split
// after `split` letters, then freely reduce.
struct RewriteStep {
  std::size_t  relator  = 0;
  bool         inverted = false;
  std::size_t  rotation = 0;
  std::size_t  split    = 0;
  std::size_t  position = 0;
  GroupoidWord result;
};

// Applies one step; nullopt if A does not occur at the position.
std::optional<GroupoidWord> apply_step(const GroupoidPresentation& pres, const GroupoidWord& w, const RewriteStep& s);
// Replays a certificate from w1, checking each recorded result.
std::optional<GroupoidWord> replay(const GroupoidPresentation& pres, const GroupoidWord& w1,
                                   const std::vector<RewriteStep>& steps);

struct WordEqualResult {
  bool                     equal = false;
  std::vector<RewriteStep> steps;  // from free_reduce(w1) to free_reduce(w2)
  std::size_t              explored = 0;
};

// Breadth-first search from w1 through freely reduced words of length at
// most max_len. Sound and incomplete. Throws WordError if the endpoints of w1
// and w2 differ.
WordEqualResult word_equal(const GroupoidPresentation& pres, const GroupoidWord& w1, const GroupoidWord& w2,
                           std::size_t max_len, std::size_t max_states = 2'000'000);

// Group presentation: relators are words in (generator, +-1).
struct GroupPresentation {
  std::vector<std::string>                      generators;
  std::vector<std::vector<std::pair<int, int>>> relators;
};

std::string format_group_word(const GroupPresentation& gp, const std::vector<std::pair<int, int>>& w);

// Isotropy group at `base`: generators are the non-tree edges of the BFS tree
// of the underlying undirected graph of base's component, rooted at the
// least vertex of that component. Throws WordError if base is out of range.
GroupPresentation pi1_presentation(const GroupoidPresentation& pres, int base);

// Free and cyclic reduction, removal of empty and repeated relators, and
// elimination of a generator occurring exactly once in some relator, for at
// most `budget` eliminations.
GroupPresentation tietze_simplify(const GroupPresentation& gp, std::size_t budget = 1000);

struct Abelianization {
  std::vector<Integer> torsion;  // invariant factors > 1
  std::size_t          free_rank = 0;
};
Abelianization abelianization(const GroupPresentation& gp);

// Classes of freely reduced words of length <= cap under the relator
// rewrites that stay within the cap. The count is reported as finite when,
// for some L with 2L <= cap, no class first appears at length L and the
// classes reached by length L-1 are closed under composition; this is a
// heuristic certificate, not a proof.
class ArrowEnumeration {
 public:
  ArrowEnumeration(const GroupoidPresentation& pres, std::size_t cap);

  bool        finite() const { return finite_; }
  std::size_t count() const { return reps_.size(); }
  std::size_t level() const { return level_; }  // the L above
  std::size_t cap() const { return cap_; }
  // Classes first reached at each length 0..cap.
  const std::vector<std::size_t>& new_classes_by_length() const { return by_length_; }
  // One shortest representative per counted class (least in shortlex order).
  const std::vector<GroupoidWord>& representatives() const { return reps_; }
  // Counted class of a word, if its reduced form is within the cap and its
  // class is one of the counted ones.
  std::optional<std::size_t> classify(const GroupoidWord& w) const;

 private:
  std::size_t                                 cap_, level_ = 0;
  bool                                        finite_ = false;
  std::vector<GroupoidWord>                   words_;
  std::vector<std::size_t>                    class_of_word_;  // counted index or npos
  std::vector<GroupoidWord>                   reps_;
  std::vector<std::size_t>                    by_length_;
  std::map<GroupoidWord, std::size_t>         index_;
};

}  // namespace dhopf

#endif  // DHOPF_GROUPOID_HPP_
