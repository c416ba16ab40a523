#include "procsim/grid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace procsim {

namespace {

// Compact cell syntax: "@loc" for is-at, "exists", "phase:liquid", "temp+",
// "size-". "~" marks strong negation.
std::string mark(const GroundLiteral& lit) {
  std::string m;
  switch (lit.pred) {
    case Pred::IsAt: m = "@" + lit.args[1]; break;
    case Pred::Exists: m = "exists"; break;
    case Pred::Phase: m = "phase:" + lit.args[1]; break;
    case Pred::Temperature:
      m = lit.args[1] == "increased" ? "temp+" : "temp-";
      break;
    case Pred::Size:
      m = lit.args[1] == "increased" ? "size+" : "size-";
      break;
  }
  return lit.negated ? "~" + m : m;
}

std::string cell_mark(const GridFact& f) {
  std::string m = mark(f.literal);
  return f.prov.origin == Origin::Direct ? m : "(" + m + ")";
}

// Facts whose subject names no participant column (quoted rule constants).
std::vector<std::pair<TimePoint, GridFact>> stray_facts(
    const StateDatabase& db, const ProcessGraph& graph) {
  std::vector<std::pair<TimePoint, GridFact>> out;
  for (TimePoint t = 1; t <= db.max_time(); ++t) {
    for (const auto& [lit, prov] : db.at(t)) {
      bool known = false;
      for (const auto& arg : graph.arguments)
        known |= (arg.canonical == lit.args[0]);
      if (!known) out.push_back({t, {lit, prov}});
    }
  }
  return out;
}

}  // namespace

ParticipantGrid render_grid(const StateDatabase& db,
                            const ProcessGraph& graph) {
  ParticipantGrid grid;
  grid.n_times = db.max_time();
  for (size_t a = 0; a < graph.arguments.size(); ++a) {
    grid.columns.push_back(static_cast<int>(a));
    grid.column_labels.push_back(graph.arguments[a].canonical);
  }
  grid.cells.assign(static_cast<size_t>(grid.n_times),
                    std::vector<std::vector<GridFact>>(grid.columns.size()));
  for (TimePoint t = 1; t <= grid.n_times; ++t) {
    for (const auto& [lit, prov] : db.at(t)) {
      for (size_t c = 0; c < grid.column_labels.size(); ++c) {
        if (grid.column_labels[c] == lit.args[0])
          grid.cells[static_cast<size_t>(t) - 1][c].push_back({lit, prov});
      }
    }
  }
  return grid;
}

std::string grid_records(const StateDatabase& db, const ProcessGraph& graph) {
  ParticipantGrid grid = render_grid(db, graph);
  std::ostringstream out;
  for (TimePoint t = 1; t <= grid.n_times; ++t) {
    for (size_t c = 0; c < grid.columns.size(); ++c) {
      for (const auto& f : grid.cell(t, c)) {
        out << "t=" << t << " | " << grid.column_labels[c] << " | "
            << to_string(f.literal) << " | " << f.prov.label() << "\n";
      }
    }
  }
  for (const auto& [t, f] : stray_facts(db, graph)) {
    out << "t=" << t << " | " << f.literal.args[0] << " | "
        << to_string(f.literal) << " | " << f.prov.label() << "\n";
  }
  return out.str();
}

std::string grid_table(const StateDatabase& db, const ProcessGraph& graph) {
  ParticipantGrid grid = render_grid(db, graph);
  size_t ncols = grid.columns.size();

  std::vector<std::vector<std::string>> text(
      static_cast<size_t>(grid.n_times), std::vector<std::string>(ncols));
  for (TimePoint t = 1; t <= grid.n_times; ++t) {
    for (size_t c = 0; c < ncols; ++c) {
      std::string joined;
      for (const auto& f : grid.cell(t, c)) {
        if (!joined.empty()) joined += ", ";
        joined += cell_mark(f);
      }
      text[static_cast<size_t>(t) - 1][c] = joined;
    }
  }

  std::string tlabel = "t";
  size_t twidth = std::max<size_t>(
      tlabel.size(), std::to_string(grid.n_times).size());
  std::vector<size_t> width(ncols);
  for (size_t c = 0; c < ncols; ++c) {
    width[c] = grid.column_labels[c].size();
    for (const auto& row : text) width[c] = std::max(width[c], row[c].size());
  }

  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };

  std::ostringstream out;
  out << pad(tlabel, twidth);
  for (size_t c = 0; c < ncols; ++c)
    out << " | " << pad(grid.column_labels[c], width[c]);
  out << "\n";
  out << std::string(twidth, '-');
  for (size_t c = 0; c < ncols; ++c) out << "-+-" << std::string(width[c], '-');
  out << "\n";
  for (TimePoint t = 1; t <= grid.n_times; ++t) {
    out << pad(std::to_string(t), twidth);
    for (size_t c = 0; c < ncols; ++c)
      out << " | " << pad(text[static_cast<size_t>(t) - 1][c], width[c]);
    out << "\n";
  }

  auto strays = stray_facts(db, graph);
  if (!strays.empty()) {
    out << "\n";
    for (const auto& [t, f] : strays)
      out << "t=" << t << ": " << to_string(f.literal) << " [" << f.prov.label()
          << "]\n";
  }
  return out.str();
}

}  // namespace procsim
