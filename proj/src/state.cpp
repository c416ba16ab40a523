#include "procsim/state.hpp"

namespace procsim {

std::string Provenance::label() const {
  switch (origin) {
    case Origin::Direct: return "direct";
    case Origin::Commonsense: return "commonsense(" + rule + ")";
    case Origin::ProjectedForward: return "projected(forward)";
    case Origin::ProjectedBackward: return "projected(backward)";
  }
  return "?";
}

bool conflicts(const GroundLiteral& a, const GroundLiteral& b) {
  // Strong negation: same literal, opposite polarity.
  if (a.pred == b.pred && a.args == b.args && a.negated != b.negated) return true;

  // Phase is functional: one subject, two different phases clash. Locations
  // are not: a thing can sit at nested places at once (the chloroplasts and
  // the leaf containing them), so coexisting is-at facts are legal state.
  if (a.pred == b.pred && a.pred == Pred::Phase &&
      !a.negated && !b.negated && a.args[0] == b.args[0] && a.args[1] != b.args[1])
    return true;

  // Being somewhere (or in some phase) presupposes existing: a positive
  // is-at/phase fact clashes with strong non-existence of its subject. This
  // keeps destroyed participants from keeping locations and moved ones from
  // being destroyed by default reasoning.
  auto located_vs_gone = [](const GroundLiteral& x, const GroundLiteral& y) {
    return (x.pred == Pred::IsAt || x.pred == Pred::Phase) && !x.negated &&
           y.pred == Pred::Exists && y.negated && y.args[0] == x.args[0];
  };
  if (located_vs_gone(a, b) || located_vs_gone(b, a)) return true;

  return false;
}

StateDatabase::StateDatabase(int n_events) : n_events_(n_events) {
  facts_.resize(static_cast<size_t>(2 * n_events) + 1);
}

StateDatabase::AddResult StateDatabase::add(const GroundLiteral& lit,
                                            TimePoint t,
                                            const Provenance& prov) {
  auto& slot = facts_.at(static_cast<size_t>(t));
  if (slot.count(lit)) return AddResult::Duplicate;
  if (conflict_at(lit, t)) return AddResult::Conflict;
  // Movement guard: a location carried over from an adjacent time never
  // crosses an already-established different location. Only asserted (direct
  // or rule-derived) facts may place one thing at several spots at one time.
  bool projected = prov.origin == Origin::ProjectedForward ||
                   prov.origin == Origin::ProjectedBackward;
  if (projected && lit.pred == Pred::IsAt && !lit.negated) {
    for (const auto& [existing, p] : slot) {
      if (existing.pred == Pred::IsAt && !existing.negated &&
          existing.args[0] == lit.args[0] && existing.args[1] != lit.args[1])
        return AddResult::Conflict;
    }
  }
  slot.emplace(lit, prov);
  return AddResult::Added;
}

bool StateDatabase::holds(const GroundLiteral& lit, TimePoint t) const {
  if (t < 1 || t > max_time()) return false;
  return facts_[static_cast<size_t>(t)].count(lit) > 0;
}

const Provenance* StateDatabase::provenance(const GroundLiteral& lit,
                                            TimePoint t) const {
  if (t < 1 || t > max_time()) return nullptr;
  auto& slot = facts_[static_cast<size_t>(t)];
  auto it = slot.find(lit);
  return it == slot.end() ? nullptr : &it->second;
}

const GroundLiteral* StateDatabase::conflict_at(const GroundLiteral& lit,
                                                TimePoint t) const {
  if (t < 1 || t > max_time()) return nullptr;
  for (const auto& [existing, prov] : facts_[static_cast<size_t>(t)]) {
    if (conflicts(existing, lit)) return &existing;
  }
  return nullptr;
}

const std::map<GroundLiteral, Provenance>& StateDatabase::at(TimePoint t) const {
  return facts_.at(static_cast<size_t>(t));
}

std::vector<std::string> StateDatabase::locations_of(const std::string& x,
                                                     TimePoint t) const {
  std::vector<std::string> out;
  if (t < 1 || t > max_time()) return out;
  for (const auto& [lit, prov] : facts_[static_cast<size_t>(t)]) {
    if (lit.pred == Pred::IsAt && !lit.negated && lit.args[0] == x)
      out.push_back(lit.args[1]);
  }
  return out;
}

size_t StateDatabase::fact_count() const {
  size_t n = 0;
  for (const auto& slot : facts_) n += slot.size();
  return n;
}

}  // namespace procsim
