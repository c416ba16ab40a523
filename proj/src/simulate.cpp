#include "procsim/simulate.hpp"

#include <algorithm>
#include <string>

#include "procsim/errors.hpp"
#include "procsim/text.hpp"

namespace procsim {

const std::array<const char*, 7> kCommonsenseRuleNames = {
    "location",   "existence",  "colocation",        "creation",
    "destruction", "dependency", "default-dependency"};

bool is_commonsense_rule_name(const std::string& name) {
  return std::find(kCommonsenseRuleNames.begin(), kCommonsenseRuleNames.end(),
                   name) != kCommonsenseRuleNames.end();
}

const char* change_kind_name(ChangeKind k) {
  switch (k) {
    case ChangeKind::Produced: return "produced";
    case ChangeKind::Consumed: return "consumed";
    case ChangeKind::Moved: return "moved";
    case ChangeKind::Temperature: return "temperature";
    case ChangeKind::Size: return "size";
    case ChangeKind::Phase: return "phase";
  }
  return "?";
}

namespace {

std::string at_time(const GroundLiteral& lit, TimePoint t) {
  return to_string(lit) + " @" + std::to_string(t);
}

void note(std::vector<TraceEntry>* tr, const std::string& pass,
          std::string detail) {
  if (tr) tr->push_back({pass, std::move(detail)});
}

// Guarded insert shared by the commonsense rules: duplicates and conflicts
// are silently tolerated, only genuine additions are traced.
bool add_guarded(StateDatabase& db, const GroundLiteral& lit, TimePoint t,
                 const char* rule, std::vector<TraceEntry>* tr) {
  if (db.add(lit, t, {Origin::Commonsense, rule}) !=
      StateDatabase::AddResult::Added)
    return false;
  note(tr, rule, at_time(lit, t));
  return true;
}

GroundLiteral make_exists(const std::string& x, bool negated) {
  return {Pred::Exists, {x}, negated};
}

GroundLiteral make_is_at(const std::string& x, const std::string& loc) {
  return {Pred::IsAt, {x, loc}, false};
}

// Participants are where the event happens: the patient sits at the initial
// location just before and at the final location just after. A phrase never
// locates itself (headword equality).
bool pass_location(StateDatabase& db, const ProcessGraph& g,
                   std::vector<TraceEntry>* tr) {
  bool any = false;
  for (int i = 1; i <= g.n_events(); ++i) {
    std::string p = g.patient_of(i);
    if (p.empty()) continue;
    std::string il = g.initial_location_of(i);
    if (!il.empty() && headword(il) != headword(p))
      any |= add_guarded(db, make_is_at(p, il), before_time(i), "location", tr);
    std::string fl = g.final_location_of(i);
    if (!fl.empty() && headword(fl) != headword(p))
      any |= add_guarded(db, make_is_at(p, fl), after_time(i), "location", tr);
  }
  return any;
}

// A participant mentioned only once, as the patient, comes into being there.
bool pass_creation(StateDatabase& db, const ProcessGraph& g,
                   std::vector<TraceEntry>* tr) {
  bool any = false;
  for (size_t a = 0; a < g.arguments.size(); ++a) {
    auto evs = g.events_involving(static_cast<int>(a));
    if (evs.size() != 1) continue;
    int i = evs.front();
    const std::string& c = g.arguments[a].canonical;
    if (g.patient_of(i) != c) continue;
    any |= add_guarded(db, make_exists(c, true), before_time(i), "creation", tr);
    any |= add_guarded(db, make_exists(c, false), after_time(i), "creation", tr);
  }
  return any;
}

// A participant of several events that is some event's patient is used up at
// the last event involving it.
bool pass_destruction(StateDatabase& db, const ProcessGraph& g,
                      std::vector<TraceEntry>* tr) {
  bool any = false;
  for (size_t a = 0; a < g.arguments.size(); ++a) {
    auto evs = g.events_involving(static_cast<int>(a));
    if (evs.size() < 2) continue;
    const std::string& c = g.arguments[a].canonical;
    bool patient_somewhere = false;
    for (int i : evs) patient_somewhere |= (g.patient_of(i) == c);
    if (!patient_somewhere) continue;
    int last = evs.back();
    any |= add_guarded(db, make_exists(c, false), before_time(last),
                       "destruction", tr);
    any |= add_guarded(db, make_exists(c, true), after_time(last),
                       "destruction", tr);
  }
  return any;
}

// Agents and patients exist around their events, unless something already
// says otherwise (creation, destruction and direct effects win).
bool pass_existence(StateDatabase& db, const ProcessGraph& g,
                    std::vector<TraceEntry>* tr) {
  bool any = false;
  for (int i = 1; i <= g.n_events(); ++i) {
    for (const std::string& x : {g.agent_of(i), g.patient_of(i)}) {
      if (x.empty()) continue;
      any |= add_guarded(db, make_exists(x, false), before_time(i),
                         "existence", tr);
      any |= add_guarded(db, make_exists(x, false), after_time(i),
                         "existence", tr);
    }
  }
  return any;
}

// Conversion events: at an event that uses X up while bringing Y into being,
// Y inherits X's just-before locations and X inherits Y's just-after ones.
bool colocate_event(StateDatabase& db, int i, std::vector<TraceEntry>* tr) {
  TimePoint tb = before_time(i), ta = after_time(i);
  std::vector<std::string> consumed, produced;
  for (const auto& [lit, prov] : db.at(tb)) {
    if (lit.pred == Pred::Exists && !lit.negated &&
        db.holds(make_exists(lit.args[0], true), ta))
      consumed.push_back(lit.args[0]);
  }
  for (const auto& [lit, prov] : db.at(ta)) {
    if (lit.pred == Pred::Exists && !lit.negated &&
        db.holds(make_exists(lit.args[0], true), tb))
      produced.push_back(lit.args[0]);
  }
  bool any = false;
  for (const std::string& x : consumed) {
    for (const std::string& y : produced) {
      for (const std::string& loc : db.locations_of(x, tb))
        any |= add_guarded(db, make_is_at(y, loc), ta, "colocation", tr);
      for (const std::string& loc : db.locations_of(y, ta))
        any |= add_guarded(db, make_is_at(x, loc), tb, "colocation", tr);
    }
  }
  return any;
}

// Location transfer reads projected states, so the database is projected on
// entry and again after each event that gained facts; later events then see
// what earlier ones established.
bool pass_colocation(StateDatabase& db, const ProcessGraph& g,
                     std::vector<TraceEntry>* tr) {
  db = project(std::move(db), tr);
  bool any = false;
  for (int i = 1; i <= g.n_events(); ++i) {
    if (colocate_event(db, i, tr)) {
      any = true;
      db = project(std::move(db), tr);
    }
  }
  return any;
}

bool has_edge(const ProcessGraph& g, int from, EventRel rel, int to) {
  for (const auto& e : g.event_edges)
    if (e.from == from && e.rel == rel && e.to == to) return true;
  return false;
}

bool add_depends(ProcessGraph& g, int from, int to, const char* rule,
                 const std::string& why, std::vector<TraceEntry>* tr) {
  if (has_edge(g, from, EventRel::DependsOn, to)) return false;
  g.event_edges.push_back({from, EventRel::DependsOn, to, rule});
  note(tr, rule,
       "E" + std::to_string(from) + " depends on E" + std::to_string(to) +
           " (" + why + ")");
  return true;
}

// The first later event acting on X (as agent or patient) depends on the
// first event that involved X at all.
bool pass_dependency(ProcessGraph& g, std::vector<TraceEntry>* tr) {
  bool any = false;
  for (size_t a = 0; a < g.arguments.size(); ++a) {
    auto evs = g.events_involving(static_cast<int>(a));
    if (evs.size() < 2) continue;
    const std::string& c = g.arguments[a].canonical;
    int first = evs.front();
    for (size_t k = 1; k < evs.size(); ++k) {
      int j = evs[k];
      if (g.agent_of(j) == c || g.patient_of(j) == c) {
        any |= add_depends(g, j, first, "dependency", c, tr);
        break;
      }
    }
  }
  return any;
}

// Narrative order is the fallback: an event with no dependency yet leans on
// its predecessor.
bool pass_default_dependency(ProcessGraph& g, std::vector<TraceEntry>* tr) {
  bool any = false;
  for (int i = 2; i <= g.n_events(); ++i) {
    bool has_out = false;
    for (const auto& e : g.event_edges)
      has_out |= (e.from == i && e.rel == EventRel::DependsOn);
    if (!has_out)
      any |= add_depends(g, i, i - 1, "default-dependency", "default", tr);
  }
  return any;
}

}  // namespace

StateDatabase assert_direct(const ProcessGraph& graph) {
  StateDatabase db(graph.n_events());
  for (const auto& ev : graph.events) {
    if (!ev.effects) continue;
    auto put = [&](const GroundLiteral& lit, TimePoint t) {
      auto res = db.add(lit, t, {Origin::Direct, ""});
      if (res == StateDatabase::AddResult::Conflict) {
        const GroundLiteral* other = db.conflict_at(lit, t);
        throw Error(Errc::DirectConflict,
                    "direct effects clash at t=" + std::to_string(t) + ": " +
                        to_string(lit) + " vs " + to_string(*other) +
                        " (event E" + std::to_string(ev.index) + ")");
      }
    };
    for (const auto& lit : ev.effects->before) put(lit, before_time(ev.index));
    for (const auto& lit : ev.effects->after) put(lit, after_time(ev.index));
  }
  return db;
}

bool apply_commonsense(StateDatabase& db, ProcessGraph& graph,
                       const SimulateOptions& opts,
                       std::vector<TraceEntry>* trace) {
  auto on = [&](const char* rule) { return !opts.disabled_rules.count(rule); };
  bool any = false;
  if (on("location")) any |= pass_location(db, graph, trace);
  if (on("creation")) any |= pass_creation(db, graph, trace);
  if (on("destruction")) any |= pass_destruction(db, graph, trace);
  if (on("existence")) any |= pass_existence(db, graph, trace);
  if (on("colocation")) any |= pass_colocation(db, graph, trace);
  if (on("dependency")) any |= pass_dependency(graph, trace);
  if (on("default-dependency")) any |= pass_default_dependency(graph, trace);
  return any;
}

StateDatabase project(StateDatabase db, std::vector<TraceEntry>* trace) {
  auto persists = [](const GroundLiteral& lit) {
    return lit.pred != Pred::Size && lit.pred != Pred::Temperature;
  };
  for (TimePoint t = 2; t <= db.max_time(); ++t) {
    for (const auto& [lit, prov] : db.at(t - 1)) {
      if (!persists(lit)) continue;
      if (db.add(lit, t, {Origin::ProjectedForward, ""}) ==
          StateDatabase::AddResult::Added)
        note(trace, "projection",
             "forward: " + at_time(lit, t - 1) + " -> @" + std::to_string(t));
    }
  }
  for (TimePoint t = db.max_time() - 1; t >= 1; --t) {
    for (const auto& [lit, prov] : db.at(t + 1)) {
      if (!persists(lit)) continue;
      if (db.add(lit, t, {Origin::ProjectedBackward, ""}) ==
          StateDatabase::AddResult::Added)
        note(trace, "projection",
             "backward: " + at_time(lit, t + 1) + " -> @" + std::to_string(t));
    }
  }
  return db;
}

std::vector<ChangeRecord> derive_changes(const StateDatabase& db,
                                         const ProcessGraph& graph) {
  std::vector<ChangeRecord> out;
  for (int i = 1; i <= graph.n_events(); ++i) {
    TimePoint tb = before_time(i), ta = after_time(i);
    for (const auto& [lit, prov] : db.at(ta)) {
      if (lit.pred != Pred::Exists || lit.negated) continue;
      if (!db.holds(make_exists(lit.args[0], true), tb)) continue;
      ChangeRecord r;
      r.kind = ChangeKind::Produced;
      r.participant = lit.args[0];
      r.event = i;
      r.locations = db.locations_of(lit.args[0], ta);
      out.push_back(std::move(r));
    }
    for (const auto& [lit, prov] : db.at(tb)) {
      if (lit.pred != Pred::Exists || lit.negated) continue;
      if (!db.holds(make_exists(lit.args[0], true), ta)) continue;
      ChangeRecord r;
      r.kind = ChangeKind::Consumed;
      r.participant = lit.args[0];
      r.event = i;
      r.locations = db.locations_of(lit.args[0], tb);
      out.push_back(std::move(r));
    }
    for (const auto& [before, bp] : db.at(tb)) {
      if (before.pred != Pred::IsAt || before.negated) continue;
      for (const std::string& dest : db.locations_of(before.args[0], ta)) {
        if (dest == before.args[1]) continue;
        ChangeRecord r;
        r.kind = ChangeKind::Moved;
        r.participant = before.args[0];
        r.event = i;
        r.from = before.args[1];
        r.to = dest;
        out.push_back(std::move(r));
      }
    }
    for (const auto& [lit, prov] : db.at(ta)) {
      if (lit.pred != Pred::Temperature || lit.negated) continue;
      ChangeRecord r;
      r.kind = ChangeKind::Temperature;
      r.participant = lit.args[0];
      r.event = i;
      r.direction = lit.args[1];
      out.push_back(std::move(r));
    }
    for (const auto& [lit, prov] : db.at(ta)) {
      if (lit.pred != Pred::Size || lit.negated) continue;
      ChangeRecord r;
      r.kind = ChangeKind::Size;
      r.participant = lit.args[0];
      r.event = i;
      r.direction = lit.args[1];
      out.push_back(std::move(r));
    }
    for (const auto& [before, bp] : db.at(tb)) {
      if (before.pred != Pred::Phase || before.negated) continue;
      for (const auto& [after, ap] : db.at(ta)) {
        if (after.pred != Pred::Phase || after.negated) continue;
        if (after.args[0] != before.args[0]) continue;
        if (after.args[1] == before.args[1]) continue;
        ChangeRecord r;
        r.kind = ChangeKind::Phase;
        r.participant = before.args[0];
        r.event = i;
        r.from = before.args[1];
        r.to = after.args[1];
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

SimulateResult simulate(const ProcessGraph& graph, const SimulateOptions& opts) {
  SimulateResult result;
  result.graph = graph;
  std::vector<TraceEntry>* tr = opts.collect_trace ? &result.trace : nullptr;

  result.db = assert_direct(result.graph);
  if (tr) {
    for (TimePoint t = 1; t <= result.db.max_time(); ++t)
      for (const auto& [lit, prov] : result.db.at(t))
        note(tr, "direct", at_time(lit, t));
  }

  if (!opts.basic_inference_only) {
    auto on = [&](const char* rule) {
      return !opts.disabled_rules.count(rule);
    };
    if (on("location")) pass_location(result.db, result.graph, tr);
    if (on("creation")) pass_creation(result.db, result.graph, tr);
    if (on("destruction")) pass_destruction(result.db, result.graph, tr);
    if (on("existence")) pass_existence(result.db, result.graph, tr);
    if (on("colocation")) {
      while (pass_colocation(result.db, result.graph, tr)) {
      }
    } else {
      result.db = project(std::move(result.db), tr);
    }
    if (on("dependency")) pass_dependency(result.graph, tr);
    if (on("default-dependency")) pass_default_dependency(result.graph, tr);
  }

  result.changes = derive_changes(result.db, result.graph);
  return result;
}

}  // namespace procsim
