#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "procsim/lexicon.hpp"
#include "procsim/paragraph.hpp"

namespace procsim {

// A participant. Mentions sharing a headword collapse into one node; the
// canonical form (first mention, article- and of-complement-stripped) is the
// string used inside literals and answers.
struct ArgumentNode {
  std::string headword;
  std::string canonical;
  std::vector<std::string> surfaces;  // raw mentions, in appearance order
};

struct EventNode {
  int index = 0;        // 1-based position after stoplist renumbering
  int tuple_index = 0;  // index as written in the paragraph file
  std::string verb;
  EventTuple tuple;
  std::optional<size_t> rule_index;  // into the lexicon used at build time
  std::string rule_class;
  RoleBinding roles;          // canonicalized; overrides already merged
  std::vector<size_t> used_preps;
  std::optional<Instantiation> effects;  // canonicalized direct literals
};

struct RoleEdge {
  int event = 0;     // event index
  std::string role;  // semantic role, or syntactic "subj"/"obj"/"prep:<w>"
  int argument = 0;  // ArgumentNode position
};

enum class EventRel { NextEvent, DependsOn };

struct EventEdge {
  int from = 0;
  EventRel rel = EventRel::NextEvent;
  int to = 0;
  std::string rule;  // for DependsOn: "dependency" or "default-dependency"

  bool operator==(const EventEdge&) const = default;
};

// The default verb stoplist: copular/attributive verbs that do not describe
// state change.
const std::set<std::string>& default_stoplist();

class ProcessGraph {
 public:
  std::vector<EventNode> events;
  std::vector<ArgumentNode> arguments;
  std::vector<RoleEdge> role_edges;
  std::vector<EventEdge> event_edges;
  PrepClasses preps;

  int n_events() const { return static_cast<int>(events.size()); }
  const EventNode& event(int index) const { return events.at(index - 1); }

  // -1 when no node carries the headword.
  int argument_by_headword(const std::string& hw) const;
  // Canonical form for a raw mention; falls back to canonical_np when the
  // mention maps to no node (quoted rule constants).
  std::string canonicalize(const std::string& np) const;

  std::vector<int> events_involving(int argument) const;
  bool has_role_at(int event, int argument,
                   const std::set<std::string>& roles) const;

  // Patient: explicit Patient/Theme/Product/Material binding (that priority),
  // else the object, else the subject of an objectless event. Empty when none.
  std::string patient_of(int event) const;
  // Agent binding, else the subject. Empty when none.
  std::string agent_of(int event) const;

  // Location of the event per role slots first (Initial_Location /
  // Destination), then source/destination-class preps the pattern left
  // unconsumed. Empty when none.
  std::string initial_location_of(int event) const;
  std::string final_location_of(int event) const;
};

// Drops stoplisted verbs (renumbering the rest), selects one rule per event,
// merges arguments by headword, canonicalizes every binding and instantiates
// the direct effects.
ProcessGraph build_graph(const std::vector<EventTuple>& tuples,
                         const Lexicon& lex,
                         const std::set<std::string>& stoplist = default_stoplist());

}  // namespace procsim
