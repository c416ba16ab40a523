#pragma once

#include <string>
#include <vector>

#include "procsim/graph.hpp"
#include "procsim/state.hpp"

namespace procsim {

struct GridFact {
  GroundLiteral literal;
  Provenance prov;
};

// Participants (columns, first-appearance order) against time points (rows).
// cell(t, c) holds every fact whose literal's first argument belongs to the
// column's participant.
struct ParticipantGrid {
  std::vector<int> columns;                 // argument node positions
  std::vector<std::string> column_labels;   // canonical forms
  int n_times = 0;
  std::vector<std::vector<std::vector<GridFact>>> cells;  // [time-1][column]

  const std::vector<GridFact>& cell(TimePoint t, size_t column) const {
    return cells.at(t - 1).at(column);
  }
};

ParticipantGrid render_grid(const StateDatabase& db, const ProcessGraph& graph);

// One record per fact: "t=<t> | <participant> | <literal> | <provenance>",
// ordered by time, then column, then literal text. Facts whose subject is not
// a participant get a trailing section of their own.
std::string grid_records(const StateDatabase& db, const ProcessGraph& graph);

// Fixed-width table. Direct facts print bare; inferred facts in parentheses.
std::string grid_table(const StateDatabase& db, const ProcessGraph& graph);

}  // namespace procsim
