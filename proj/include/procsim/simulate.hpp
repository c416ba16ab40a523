#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "procsim/graph.hpp"
#include "procsim/state.hpp"

namespace procsim {

// Names accepted by --disable-rule, in documentation order.
extern const std::array<const char*, 7> kCommonsenseRuleNames;
bool is_commonsense_rule_name(const std::string& name);

struct SimulateOptions {
  bool basic_inference_only = false;      // direct effects only
  std::set<std::string> disabled_rules;   // subset of kCommonsenseRuleNames
  bool collect_trace = false;
};

struct TraceEntry {
  std::string pass;    // "direct", "location", ..., "projection", "dependency"
  std::string detail;
};

enum class ChangeKind { Produced, Consumed, Moved, Temperature, Size, Phase };
const char* change_kind_name(ChangeKind k);

struct ChangeRecord {
  ChangeKind kind = ChangeKind::Produced;
  std::string participant;  // canonical form
  int event = 0;
  // Produced/Consumed: every location held at the flip side of the event.
  std::vector<std::string> locations;
  // Moved: endpoints. Phase: states. Temperature/Size: direction.
  std::string from;
  std::string to;
  std::string direction;

  bool operator==(const ChangeRecord&) const = default;
};

// Writes every event's instantiated before/after literals at its two time
// points. Raises DirectConflict (naming both facts) if two direct facts clash.
StateDatabase assert_direct(const ProcessGraph& graph);

// One round of all seven commonsense rules over the graph. Location,
// creation, destruction and existence add guarded facts; colocation transfers
// locations across converted pairs; the dependency rules add depends-on edges.
// Mutates both arguments. Returns true if anything was added.
bool apply_commonsense(StateDatabase& db, ProcessGraph& graph,
                       const SimulateOptions& opts = {},
                       std::vector<TraceEntry>* trace = nullptr);

// Bidirectional frame-axiom closure: every fact persists into adjacent time
// points unless a conflicting fact is already there. Size and temperature are
// event-scoped and never projected. Monotone and idempotent.
StateDatabase project(StateDatabase db, std::vector<TraceEntry>* trace = nullptr);

// Change records read off the database: exists flips (produced/consumed, with
// locations at the flip side), is-at flips at one event (moved), phase flips,
// and positive size/temperature markers at after-times.
std::vector<ChangeRecord> derive_changes(const StateDatabase& db,
                                         const ProcessGraph& graph);

struct SimulateResult {
  StateDatabase db;
  ProcessGraph graph;  // with depends-on edges added
  std::vector<ChangeRecord> changes;
  std::vector<TraceEntry> trace;
};

// Full pipeline over a built graph: direct assertion, commonsense rules, then
// alternating projection sweeps and colocation to fixpoint, then dependency
// edges. With basic_inference_only only direct effects are used.
SimulateResult simulate(const ProcessGraph& graph,
                        const SimulateOptions& opts = {});

}  // namespace procsim
