#include "procsim/graph.hpp"

#include <algorithm>
#include <map>

#include "procsim/errors.hpp"
#include "procsim/text.hpp"

namespace procsim {

const std::set<std::string>& default_stoplist() {
  static const std::set<std::string> s{"be", "is", "are", "have",
                                       "seem", "mean", "call"};
  return s;
}

int ProcessGraph::argument_by_headword(const std::string& hw) const {
  for (size_t i = 0; i < arguments.size(); ++i) {
    if (arguments[i].headword == hw) return static_cast<int>(i);
  }
  return -1;
}

std::string ProcessGraph::canonicalize(const std::string& np) const {
  int id = argument_by_headword(headword(np));
  if (id >= 0) return arguments[id].canonical;
  return canonical_np(np);
}

std::vector<int> ProcessGraph::events_involving(int argument) const {
  std::vector<int> out;
  for (const RoleEdge& e : role_edges) {
    if (e.argument == argument &&
        (out.empty() || out.back() != e.event)) {
      out.push_back(e.event);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ProcessGraph::has_role_at(int event, int argument,
                               const std::set<std::string>& roles) const {
  for (const RoleEdge& e : role_edges) {
    if (e.event == event && e.argument == argument && roles.count(e.role))
      return true;
  }
  return false;
}

std::string ProcessGraph::patient_of(int ev) const {
  const EventNode& e = event(ev);
  // Priority order over the explicit roles.
  for (const char* role : {"Patient", "Theme", "Product", "Material"}) {
    auto it = e.roles.find(role);
    if (it != e.roles.end()) return it->second;
  }
  if (e.tuple.object) return canonicalize(*e.tuple.object);
  if (e.tuple.subject && !e.tuple.object) return canonicalize(*e.tuple.subject);
  return {};
}

std::string ProcessGraph::agent_of(int ev) const {
  const EventNode& e = event(ev);
  auto it = e.roles.find("Agent");
  if (it != e.roles.end()) return it->second;
  if (e.tuple.subject) return canonicalize(*e.tuple.subject);
  return {};
}

namespace {

// Location via explicit role slots first, else the first unconsumed tuple
// prep of the wanted class. Preps consumed by the pattern already speak
// through their roles.
std::string location_of(const ProcessGraph& g, int ev, bool initial) {
  const EventNode& e = g.event(ev);
  auto it = e.roles.find(initial ? "Initial_Location" : "Destination");
  if (it != e.roles.end()) return it->second;
  for (size_t i = 0; i < e.tuple.preps.size(); ++i) {
    if (std::find(e.used_preps.begin(), e.used_preps.end(), i) != e.used_preps.end())
      continue;
    const std::string& word = e.tuple.preps[i].first;
    bool wanted = initial ? g.preps.is_src(word) : g.preps.is_dest(word);
    if (wanted) return g.canonicalize(e.tuple.preps[i].second);
  }
  return {};
}

}  // namespace

std::string ProcessGraph::initial_location_of(int ev) const {
  return location_of(*this, ev, true);
}

std::string ProcessGraph::final_location_of(int ev) const {
  return location_of(*this, ev, false);
}

ProcessGraph build_graph(const std::vector<EventTuple>& tuples,
                         const Lexicon& lex,
                         const std::set<std::string>& stoplist) {
  ProcessGraph g;
  g.preps = lex.preps();

  std::map<std::string, int> by_headword;
  auto intern = [&](const std::string& np) -> int {
    std::string hw = headword(np);
    auto it = by_headword.find(hw);
    if (it != by_headword.end()) {
      ArgumentNode& node = g.arguments[it->second];
      if (std::find(node.surfaces.begin(), node.surfaces.end(), np) ==
          node.surfaces.end())
        node.surfaces.push_back(np);
      return it->second;
    }
    ArgumentNode node;
    node.headword = hw;
    node.canonical = canonical_np(np);  // first mention names the participant
    node.surfaces.push_back(np);
    g.arguments.push_back(std::move(node));
    int id = static_cast<int>(g.arguments.size()) - 1;
    by_headword[hw] = id;
    return id;
  };

  int position = 0;
  for (const EventTuple& t : tuples) {
    if (stoplist.count(t.verb)) continue;  // dropped; later events renumber
    ++position;

    EventNode node;
    node.index = position;
    node.tuple_index = t.index;
    node.verb = t.verb;
    node.tuple = t;

    RoleBinding raw;  // raw noun phrases, before canonicalization
    std::optional<RuleSelection> sel = select_rule(lex, t);
    if (sel) {
      node.rule_index = sel->rule_index;
      node.rule_class = lex.rules()[sel->rule_index].class_id;
      node.used_preps = sel->match.used_preps;
      raw = sel->match.binding;
    }
    // Overrides pin or add roles regardless of what the pattern bound.
    for (const auto& [role, np] : t.role_overrides) raw[role] = np;

    // Every noun phrase of the tuple is a participant, bound or not.
    std::vector<std::pair<std::string, std::string>> mentions;  // (role, np)
    for (const auto& [role, np] : raw) mentions.emplace_back(role, np);

    auto covered = [&](const std::string& np) {
      for (const auto& [role, bound] : raw)
        if (bound == np) return true;
      return false;
    };
    if (t.subject && !covered(*t.subject)) mentions.emplace_back("subj", *t.subject);
    if (t.object && !covered(*t.object)) mentions.emplace_back("obj", *t.object);
    for (const auto& [word, np] : t.preps) {
      if (!covered(np)) mentions.emplace_back("prep:" + word, np);
    }

    // Interning in appearance order keeps first-mention canonicals stable:
    // subject, object, preps, then any override-only phrases.
    auto appearance_rank = [&](const std::string& np) {
      if (t.subject && *t.subject == np) return 0;
      if (t.object && *t.object == np) return 1;
      for (size_t i = 0; i < t.preps.size(); ++i)
        if (t.preps[i].second == np) return static_cast<int>(2 + i);
      return static_cast<int>(2 + t.preps.size());
    };
    std::stable_sort(mentions.begin(), mentions.end(),
                     [&](const auto& a, const auto& b) {
                       return appearance_rank(a.second) < appearance_rank(b.second);
                     });

    for (const auto& [role, np] : mentions) {
      int arg = intern(np);
      g.role_edges.push_back(RoleEdge{position, role, arg});
    }

    // Canonicalized binding: literals must name merged participants so that
    // facts about different mentions of one thing line up.
    for (const auto& [role, np] : raw) node.roles[role] = g.canonicalize(np);

    if (node.rule_index) {
      node.effects = instantiate(lex.rules()[*node.rule_index], node.roles);
    }

    if (position > 1) {
      g.event_edges.push_back(
          EventEdge{position - 1, EventRel::NextEvent, position, ""});
    }
    g.events.push_back(std::move(node));
  }
  return g;
}

}  // namespace procsim
