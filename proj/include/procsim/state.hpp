#pragma once

#include <map>
#include <string>
#include <vector>

#include "procsim/literal.hpp"

namespace procsim {

// Event i spans two time points: 2i-1 (just before) and 2i (just after).
using TimePoint = int;
inline TimePoint before_time(int event) { return 2 * event - 1; }
inline TimePoint after_time(int event) { return 2 * event; }

enum class Origin { Direct, Commonsense, ProjectedForward, ProjectedBackward };

struct Provenance {
  Origin origin = Origin::Direct;
  std::string rule;  // commonsense rule name; empty otherwise

  std::string label() const;
  bool operator==(const Provenance&) const = default;
};

// Two literals clash at one time point iff one strongly negates the other,
// iff phase maps one subject to two values, or iff something is located or
// phased while strongly non-existent. Coexisting locations do not clash
// (nested places); projection alone refuses to carry a location across an
// established different one (see StateDatabase::add).
bool conflicts(const GroundLiteral& a, const GroundLiteral& b);

class StateDatabase {
 public:
  explicit StateDatabase(int n_events = 0);

  int n_events() const { return n_events_; }
  TimePoint max_time() const { return 2 * n_events_; }

  enum class AddResult { Added, Duplicate, Conflict };
  // Inserts unless the pair already exists (first provenance wins), a
  // conflicting fact is present at t, or a projected positive is-at meets an
  // established different location for the same subject at t.
  AddResult add(const GroundLiteral& lit, TimePoint t, const Provenance& prov);

  bool holds(const GroundLiteral& lit, TimePoint t) const;
  const Provenance* provenance(const GroundLiteral& lit, TimePoint t) const;
  // First fact at t conflicting with lit, or nullptr.
  const GroundLiteral* conflict_at(const GroundLiteral& lit, TimePoint t) const;

  const std::map<GroundLiteral, Provenance>& at(TimePoint t) const;
  // Second args of positive is-at(x, _) facts at t, in literal order.
  std::vector<std::string> locations_of(const std::string& x, TimePoint t) const;

  size_t fact_count() const;
  bool operator==(const StateDatabase&) const = default;

 private:
  int n_events_ = 0;
  std::vector<std::map<GroundLiteral, Provenance>> facts_;  // [1 .. 2n]
};

}  // namespace procsim
