#pragma once

// Shared helpers for the unit suites: literal builders, pipeline shortcuts
// and access to the shipped data files.

#include <string>
#include <vector>

#include "procsim/graph.hpp"
#include "procsim/io.hpp"
#include "procsim/lexicon.hpp"
#include "procsim/paragraph.hpp"
#include "procsim/simulate.hpp"

namespace testsupport {

inline procsim::GroundLiteral at(const std::string& x, const std::string& l) {
  return {procsim::Pred::IsAt, {x, l}, false};
}
inline procsim::GroundLiteral not_at(const std::string& x,
                                     const std::string& l) {
  return {procsim::Pred::IsAt, {x, l}, true};
}
inline procsim::GroundLiteral exists(const std::string& x) {
  return {procsim::Pred::Exists, {x}, false};
}
inline procsim::GroundLiteral gone(const std::string& x) {
  return {procsim::Pred::Exists, {x}, true};
}
inline procsim::GroundLiteral phase(const std::string& x,
                                    const std::string& v) {
  return {procsim::Pred::Phase, {x, v}, false};
}
inline procsim::GroundLiteral temp(const std::string& x,
                                   const std::string& dir) {
  return {procsim::Pred::Temperature, {x, dir}, false};
}
inline procsim::GroundLiteral size_lit(const std::string& x,
                                       const std::string& dir) {
  return {procsim::Pred::Size, {x, dir}, false};
}

// Full pipeline over in-memory sources.
inline procsim::SimulateResult run_pipeline(
    const std::string& lex_src, const std::string& para_src,
    const procsim::SimulateOptions& opts = {}) {
  procsim::Lexicon lex = procsim::parse_lexicon(lex_src);
  auto tuples = procsim::parse_paragraph(para_src);
  procsim::ProcessGraph graph = procsim::build_graph(tuples, lex);
  return procsim::simulate(graph, opts);
}

#ifdef PROCSIM_DATA_DIR
inline std::string data_path(const std::string& name) {
  return std::string(PROCSIM_DATA_DIR) + "/" + name;
}

// Full pipeline over a shipped .para file with the shipped demo lexicon.
inline procsim::SimulateResult run_fixture(
    const std::string& para_file, const procsim::SimulateOptions& opts = {}) {
  procsim::Lexicon lex =
      procsim::parse_lexicon(procsim::load_file(data_path("demo.lex")));
  auto tuples =
      procsim::parse_paragraph(procsim::load_file(data_path(para_file)));
  procsim::ProcessGraph graph = procsim::build_graph(tuples, lex);
  return procsim::simulate(graph, opts);
}
#endif

}  // namespace testsupport
