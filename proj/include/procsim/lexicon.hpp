#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "procsim/literal.hpp"
#include "procsim/paragraph.hpp"

namespace procsim {

// Preposition classes used by pattern slots and by the location heuristics.
// Defaults match the shipped lexicons; a lexicon file may override them with
// "prep-src:" / "prep-dest:" header lines.
struct PrepClasses {
  std::vector<std::string> src{"from", "out of", "off", "out"};
  std::vector<std::string> dest{"to", "into", "onto", "in"};

  bool is_src(const std::string& word) const;
  bool is_dest(const std::string& word) const;
  bool operator==(const PrepClasses&) const = default;
};

// One prepositional slot of a pattern: a literal word ("into" Product) or a
// class (PREP-src Initial_Location).
struct PrepSlot {
  enum class Spec { Word, SrcClass, DestClass };
  Spec spec = Spec::Word;
  std::string word;  // only for Spec::Word
  std::string role;

  bool operator==(const PrepSlot&) const = default;
};

// Subject slot is mandatory; object slot is either a role or the absence
// marker "-" (the tuple must then have no object).
struct SyntacticPattern {
  std::string subject_role;
  std::string verb;
  std::optional<std::string> object_role;  // nullopt == "-"
  std::vector<PrepSlot> prep_slots;

  std::vector<std::string> roles() const;
  bool has_role(const std::string& role) const;
  bool operator==(const SyntacticPattern&) const = default;
};

struct VerbRule {
  std::string verb;      // lemma, lowercased
  std::string class_id;  // optional, opaque
  std::string sense_id;  // optional, opaque
  SyntacticPattern pattern;
  std::vector<Literal> before;
  std::vector<Literal> after;

  bool operator==(const VerbRule&) const = default;
};

class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::vector<VerbRule> rules, PrepClasses preps);

  const std::vector<VerbRule>& rules() const { return rules_; }
  const PrepClasses& preps() const { return preps_; }
  // File-order positions of the entries for a verb; empty if absent.
  const std::vector<size_t>& rules_for(const std::string& verb) const;

  bool operator==(const Lexicon& o) const {
    return rules_ == o.rules_ && preps_ == o.preps_;
  }

 private:
  std::vector<VerbRule> rules_;
  PrepClasses preps_;
  std::map<std::string, std::vector<size_t>> index_;
};

// Parses a whole lexicon file. Any malformed entry rejects the whole file:
// MalformedLine, UnknownPredicate, ArityMismatch, UnboundRole, BadValueDomain,
// each naming the offending line.
Lexicon parse_lexicon(const std::string& source,
                      const std::string& filename = "<string>");
// Inverse of parse_lexicon up to structural equality.
std::string serialize_lexicon(const Lexicon& lex);

using RoleBinding = std::map<std::string, std::string>;

struct PatternMatch {
  RoleBinding binding;            // role -> raw noun phrase
  std::vector<size_t> used_preps;  // tuple prep positions consumed by slots
};

// Structural match of a tuple against one rule's pattern. Verb mismatch,
// missing object, unexpected object or an unsatisfiable prep slot mean
// no-match (not an error). Unmatched tuple preps are ignored.
std::optional<PatternMatch> match_pattern(const EventTuple& tuple,
                                          const VerbRule& rule,
                                          const PrepClasses& preps);

struct Instantiation {
  std::vector<GroundLiteral> before;
  std::vector<GroundLiteral> after;

  bool operator==(const Instantiation&) const = default;
};

// Substitutes bound noun phrases (normalized) into the rule templates.
// Raises IncompleteBinding if a template role is unbound.
Instantiation instantiate(const VerbRule& rule, const RoleBinding& binding);

struct RuleSelection {
  size_t rule_index = 0;
  PatternMatch match;
};

// Picks the matching entry binding the most slots; ties break by file order.
// nullopt when nothing matches.
std::optional<RuleSelection> select_rule(const Lexicon& lex,
                                         const EventTuple& tuple);

// One semantic-frame assertion as found in verb-class frame files.
struct VerbNetAssertion {
  enum class When { Start, End, Result, None };
  std::string predicate;
  When when = When::None;
  bool negated = false;
  std::vector<std::string> args;  // role names / constants, event term removed
};

struct VerbNetImport {
  VerbRule rule;
  // Assertions that could not be carried over, with the reason appended.
  std::vector<std::string> dropped;
};

// Converts frame assertions to a VerbRule: start(E) goes to `before`,
// end(E)/result(E) to `after`; only exists() and location() survive
// (location becomes is-at). Everything else is dropped and reported.
VerbNetImport import_verbnet_frame(const std::string& verb,
                                   const std::string& class_id,
                                   const SyntacticPattern& pattern,
                                   const std::vector<VerbNetAssertion>& asserts);

}  // namespace procsim
