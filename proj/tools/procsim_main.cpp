#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "procsim/errors.hpp"
#include "procsim/graph.hpp"
#include "procsim/grid.hpp"
#include "procsim/io.hpp"
#include "procsim/lexicon.hpp"
#include "procsim/paragraph.hpp"
#include "procsim/question.hpp"
#include "procsim/score.hpp"
#include "procsim/simulate.hpp"
#include "procsim/text.hpp"

namespace fs = std::filesystem;
using namespace procsim;

namespace {

struct RunConfig {
  std::string lexicon_path;
  std::string paragraph_path;
  std::string questions_path;
  std::string stoplist_path;
  std::string mode = "answers";
  bool basic = false;
  std::vector<std::string> disabled;
};

std::set<std::string> load_stoplist(const std::string& path) {
  std::set<std::string> out;
  int line_no = 0;
  for (const std::string& raw : split(load_file(path), '\n')) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = lower(trim(line));
    if (!line.empty()) out.insert(line);
  }
  return out;
}

bool mode_needs_questions(const std::string& mode) {
  return mode == "answers" || mode == "score";
}

// The question file for a paragraph: the --questions value itself when it is
// a file, "<stem>.questions" inside it when it is a directory, and the
// paragraph's sibling "<stem>.questions" when the flag is absent.
std::string questions_for(const fs::path& para, const RunConfig& cfg) {
  if (!cfg.questions_path.empty() && !fs::is_directory(cfg.questions_path))
    return cfg.questions_path;
  fs::path dir = cfg.questions_path.empty() ? para.parent_path()
                                            : fs::path(cfg.questions_path);
  return (dir / para.stem()).string() + ".questions";
}

std::string join_answers(const std::vector<std::string>& answers) {
  if (answers.empty()) return "[none]";
  std::string out;
  for (const auto& a : answers) {
    if (!out.empty()) out += "; ";
    out += a;
  }
  return out;
}

struct FileRun {
  std::string name;  // paragraph basename, section header in directory mode
  std::string body;
  std::vector<std::pair<Question, AnswerSet>> scored;  // score mode only
};

FileRun run_one(const Lexicon& lex, const std::set<std::string>& stoplist,
                const fs::path& para_path, const RunConfig& cfg) {
  FileRun out;
  out.name = para_path.filename().string();

  auto tuples = parse_paragraph(load_file(para_path.string()),
                                para_path.string());
  ProcessGraph graph = build_graph(tuples, lex, stoplist);

  SimulateOptions opts;
  opts.basic_inference_only = cfg.basic;
  opts.disabled_rules.insert(cfg.disabled.begin(), cfg.disabled.end());
  opts.collect_trace = cfg.mode == "trace";
  SimulateResult sim = simulate(graph, opts);

  if (cfg.mode == "grid") {
    out.body = grid_table(sim.db, sim.graph);
    return out;
  }
  if (cfg.mode == "trace") {
    std::string body;
    for (const auto& entry : sim.trace)
      body += "[" + entry.pass + "] " + entry.detail + "\n";
    out.body = body;
    return out;
  }

  std::string qpath = questions_for(para_path, cfg);
  auto questions = parse_question_file(load_file(qpath), qpath);

  if (cfg.mode == "answers") {
    std::string body;
    for (const auto& q : questions) {
      AnswerSet a = answer(q, sim);
      body += "Q" + std::to_string(q.id) + " " + q.label() + ": " +
              join_answers(a.answers) + "\n";
    }
    out.body = body;
    return out;
  }

  // score
  for (const auto& q : questions) {
    if (!q.has_gold)
      throw Error(Errc::MissingGold,
                  "Q" + std::to_string(q.id) + " (" + q.label() +
                      ") has no gold answers",
                  qpath);
    out.scored.push_back({q, answer(q, sim)});
  }
  ScoreReport report = score_run(out.scored);
  out.body = report_text(report) + report_json(report) + "\n";
  return out;
}

int run(const RunConfig& cfg) {
  for (const auto& name : cfg.disabled) {
    if (!is_commonsense_rule_name(name)) {
      std::string known;
      for (const char* r : kCommonsenseRuleNames) {
        if (!known.empty()) known += ", ";
        known += r;
      }
      throw Error(Errc::UnknownRuleName,
                  "unknown rule '" + name + "' (expected one of: " + known +
                      ")");
    }
  }

  Lexicon lex = parse_lexicon(load_file(cfg.lexicon_path), cfg.lexicon_path);
  std::set<std::string> stoplist = cfg.stoplist_path.empty()
                                       ? default_stoplist()
                                       : load_stoplist(cfg.stoplist_path);

  if (!fs::is_directory(cfg.paragraph_path)) {
    FileRun result = run_one(lex, stoplist, cfg.paragraph_path, cfg);
    std::cout << result.body;
    return 0;
  }

  if (mode_needs_questions(cfg.mode) && !cfg.questions_path.empty() &&
      !fs::is_directory(cfg.questions_path))
    throw Error(Errc::BadArgument,
                "--questions must be a directory when --paragraph is one");

  std::vector<fs::path> paras;
  for (const auto& entry : fs::directory_iterator(cfg.paragraph_path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".para")
      paras.push_back(entry.path());
  }
  std::sort(paras.begin(), paras.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  std::vector<std::future<FileRun>> futures;
  futures.reserve(paras.size());
  for (const auto& p : paras) {
    futures.push_back(std::async(std::launch::async, [&lex, &stoplist, p,
                                                      &cfg]() {
      return run_one(lex, stoplist, p, cfg);
    }));
  }

  std::vector<FileRun> runs;
  runs.reserve(futures.size());
  for (auto& f : futures) runs.push_back(f.get());

  for (const auto& r : runs) {
    std::cout << "=== " << r.name << " ===\n" << r.body;
  }
  if (cfg.mode == "score" && runs.size() > 1) {
    std::vector<std::pair<Question, AnswerSet>> all;
    for (const auto& r : runs)
      all.insert(all.end(), r.scored.begin(), r.scored.end());
    ScoreReport combined = score_run(all);
    std::cout << "=== combined ===\n";
    std::string text = report_text(combined);
    // Only the two trailing average lines; per-question rows were printed
    // under their own sections already.
    size_t cut = text.rfind("macro (");
    std::cout << (cut == std::string::npos ? text : text.substr(cut));
    std::cout << report_json(combined) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulates annotated process paragraphs against a verb lexicon and "
      "answers templated questions about what changed."};
  RunConfig cfg;
  app.add_option("--lexicon", cfg.lexicon_path, "Verb lexicon file")
      ->required();
  app.add_option("--paragraph", cfg.paragraph_path,
                 "Annotated paragraph file, or a directory of *.para files")
      ->required();
  app.add_option("--questions", cfg.questions_path,
                 "Question file (or directory in directory mode); defaults to "
                 "the paragraph's sibling <stem>.questions");
  app.add_option("--stoplist", cfg.stoplist_path,
                 "Verb stoplist file, one verb per line");
  app.add_option("--mode", cfg.mode, "Output mode")
      ->check(CLI::IsMember({"answers", "grid", "trace", "score"}));
  app.add_flag("--basic-inference-only", cfg.basic,
               "Use only the direct rule effects: no commonsense rules, no "
               "state projection");
  app.add_option("--disable-rule", cfg.disabled,
                 "Disable one commonsense rule by name (repeatable)")
      ->type_size(1);
  CLI11_PARSE(app, argc, argv);

  try {
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << "procsim: error " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "procsim: error [internal] " << e.what() << "\n";
    return 1;
  }
}
