#include "procsim/grid.hpp"

#include <string>

#include "doctest.h"
#include "support.hpp"

using namespace procsim;
using namespace testsupport;

namespace {

SimulateResult melt_run() {
  return run_pipeline(
      "verb: melt | pattern: Patient \"melt\" - | before: "
      "phase(Patient,solid) | after: phase(Patient,liquid), "
      "temperature(Patient,increased)\n",
      "E1 | subj: the wax | verb: melt\n");
}

}  // namespace

TEST_CASE("grid columns follow participant appearance order") {
  SimulateResult sim = run_pipeline(
      "verb: enter | pattern: Theme \"enter\" Destination | before: not "
      "is-at(Theme,Destination) | after: is-at(Theme,Destination)\n",
      "E1 | subj: the gas | verb: enter | obj: the flask\n"
      "E2 | subj: the water | verb: enter | obj: the flask\n");
  ParticipantGrid grid = render_grid(sim.db, sim.graph);
  CHECK(grid.column_labels ==
        std::vector<std::string>{"gas", "flask", "water"});
  CHECK(grid.n_times == 4);
  REQUIRE(grid.cells.size() == 4);
  REQUIRE(grid.cells[0].size() == 3);
}

TEST_CASE("cells collect the facts about their participant") {
  SimulateResult sim = melt_run();
  ParticipantGrid grid = render_grid(sim.db, sim.graph);
  REQUIRE(grid.column_labels == std::vector<std::string>{"wax"});
  // t=2 holds the liquid phase, the temperature mark and the existence facts.
  const auto& cell = grid.cell(2, 0);
  bool liquid = false, warm = false;
  for (const GridFact& f : cell) {
    if (f.literal == phase("wax", "liquid")) liquid = true;
    if (f.literal == temp("wax", "increased")) warm = true;
    CHECK(f.literal.args[0] == "wax");
  }
  CHECK(liquid);
  CHECK(warm);
}

TEST_CASE("grid records print one line per fact in fixed order") {
  SimulateResult sim = melt_run();
  std::string records = grid_records(sim.db, sim.graph);
  // Time-major ordering: every t=1 line precedes every t=2 line.
  size_t first_t2 = records.find("t=2");
  REQUIRE(first_t2 != std::string::npos);
  CHECK(records.rfind("t=1") < first_t2);
  CHECK(records.find("t=1 | wax | phase(wax,solid) | direct\n") !=
        std::string::npos);
  CHECK(records.find("t=2 | wax | phase(wax,liquid) | direct\n") !=
        std::string::npos);
  CHECK(records.find("t=2 | wax | temperature(wax,increased) | direct\n") !=
        std::string::npos);
  // Creation claims the after-side existence first; the existence rule then
  // fills the before side (creation's non-existence clashed with the phase).
  CHECK(records.find("t=2 | wax | exists(wax) | commonsense(creation)\n") !=
        std::string::npos);
  CHECK(records.find("t=1 | wax | exists(wax) | commonsense(existence)\n") !=
        std::string::npos);
}

TEST_CASE("grid table marks direct facts bare and inferred in parentheses") {
  SimulateResult sim = melt_run();
  std::string table = grid_table(sim.db, sim.graph);
  CHECK(table.find("t") == 0);
  CHECK(table.find("wax") != std::string::npos);
  CHECK(table.find("-+-") != std::string::npos);
  CHECK(table.find("phase:solid") != std::string::npos);    // direct, bare
  CHECK(table.find("(exists)") != std::string::npos);       // inferred
  CHECK(table.find("temp+") != std::string::npos);
  // Two data rows for one event.
  int rows = 0;
  for (size_t pos = 0; (pos = table.find('\n', pos)) != std::string::npos;
       ++pos)
    ++rows;
  CHECK(rows >= 4);  // header, separator, two time rows
}

TEST_CASE("negated marks carry a tilde") {
  SimulateResult sim = run_pipeline(
      "verb: vanish | pattern: Patient \"vanish\" - | before: "
      "exists(Patient) | after: not exists(Patient)\n",
      "E1 | subj: the ghost | verb: vanish\n");
  std::string table = grid_table(sim.db, sim.graph);
  CHECK(table.find("~exists") != std::string::npos);
}

TEST_CASE("facts about rule constants land in the stray section") {
  SimulateResult sim = run_pipeline(
      "verb: land | pattern: Theme \"land\" - | before: | after: "
      "is-at(Theme,\"the ground\"), exists(\"a thud\")\n",
      "E1 | subj: the plane | verb: land\n");
  std::string records = grid_records(sim.db, sim.graph);
  CHECK(records.find("t=2 | thud | exists(thud) | direct\n") !=
        std::string::npos);
  std::string table = grid_table(sim.db, sim.graph);
  CHECK(table.find("t=2: exists(thud) [direct]") != std::string::npos);
  // "thud" is not a column.
  ParticipantGrid grid = render_grid(sim.db, sim.graph);
  for (const std::string& label : grid.column_labels) CHECK(label != "thud");
}

#ifdef PROCSIM_DATA_DIR

TEST_CASE("photosynthesis grid: twelve rows, eleven participants") {
  SimulateResult sim = run_fixture("photosynthesis.para");
  ParticipantGrid grid = render_grid(sim.db, sim.graph);
  CHECK(grid.n_times == 12);
  CHECK(grid.column_labels ==
        std::vector<std::string>{"leaf", "light", "sun", "roots",
                                 "water and minerals", "soil", "stem",
                                 "carbon dioxide", "mixture", "sugar",
                                 "chloroplasts"});
  std::string table = grid_table(sim.db, sim.graph);
  // Direct arrival of the gas at t=8, and sugar's final nested locations.
  CHECK(table.find("@leaf, (exists)") != std::string::npos);
  CHECK(table.find("(@chloroplasts), (@leaf), exists") != std::string::npos);
}

#endif  // PROCSIM_DATA_DIR
