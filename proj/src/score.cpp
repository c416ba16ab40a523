#include "procsim/score.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "procsim/text.hpp"

namespace procsim {

QuestionScore score_question(const AnswerSet& predicted,
                             const std::vector<std::string>& gold) {
  if (predicted.answers.empty() && gold.empty()) return {1.0, 1.0, 1.0};
  if (predicted.answers.empty() || gold.empty()) return {0.0, 0.0, 0.0};

  // Greedy headword matching; a gold item can satisfy only one prediction.
  std::vector<bool> used(gold.size(), false);
  int hits = 0;
  for (const std::string& p : predicted.answers) {
    std::string ph = headword(p);
    for (size_t gi = 0; gi < gold.size(); ++gi) {
      if (used[gi]) continue;
      if (headword(gold[gi]) == ph) {
        used[gi] = true;
        ++hits;
        break;
      }
    }
  }

  QuestionScore s;
  s.precision = static_cast<double>(hits) / predicted.answers.size();
  s.recall = static_cast<double>(hits) / gold.size();
  s.f1 = (s.precision + s.recall) == 0.0
             ? 0.0
             : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

ScoreReport score_run(
    const std::vector<std::pair<Question, AnswerSet>>& results) {
  ScoreReport report;
  for (const auto& [q, predicted] : results) {
    ScoredRow row{q, predicted, score_question(predicted, q.gold)};
    report.rows.push_back(std::move(row));
  }

  auto accumulate = [](Averages& avg, const QuestionScore& s) {
    ++avg.count;
    avg.precision += s.precision;
    avg.recall += s.recall;
    avg.f1 += s.f1;
  };
  for (const auto& row : report.rows) {
    accumulate(report.all, row.score);
    if (row.question.gold.size() == 1)
      accumulate(report.single_answer, row.score);
  }
  auto finish = [](Averages& avg) {
    if (avg.count == 0) return;
    avg.precision /= avg.count;
    avg.recall /= avg.count;
    avg.f1 /= avg.count;
  };
  finish(report.all);
  finish(report.single_answer);
  return report;
}

namespace {

std::string fixed4(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << v;
  return out.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out.empty() ? "[none]" : out;
}

void append_averages(std::ostringstream& out, const char* name,
                     const Averages& avg) {
  out << name << " (" << avg.count << " questions): ";
  if (avg.count == 0) {
    out << "P=n/a R=n/a F1=n/a\n";
    return;
  }
  out << "P=" << fixed4(avg.precision) << " R=" << fixed4(avg.recall)
      << " F1=" << fixed4(avg.f1) << "\n";
}

}  // namespace

std::string report_text(const ScoreReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << "Q" << row.question.id << " " << row.question.label() << ": P="
        << fixed4(row.score.precision) << " R=" << fixed4(row.score.recall)
        << " F1=" << fixed4(row.score.f1) << " | predicted: "
        << join(row.predicted.answers) << " | gold: " << join(row.question.gold)
        << "\n";
  }
  append_averages(out, "macro", report.all);
  append_averages(out, "single-answer", report.single_answer);
  return out.str();
}

std::string report_json(const ScoreReport& report) {
  nlohmann::json j;
  auto avg_json = [](const Averages& avg) {
    nlohmann::json a;
    a["count"] = avg.count;
    if (avg.count == 0) {
      a["precision"] = nullptr;
      a["recall"] = nullptr;
      a["f1"] = nullptr;
    } else {
      a["precision"] = avg.precision;
      a["recall"] = avg.recall;
      a["f1"] = avg.f1;
    }
    return a;
  };
  j["macro"] = avg_json(report.all);
  j["single_answer"] = avg_json(report.single_answer);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["id"] = row.question.id;
    r["label"] = row.question.label();
    r["predicted"] = row.predicted.answers;
    r["gold"] = row.question.gold;
    r["precision"] = row.score.precision;
    r["recall"] = row.score.recall;
    r["f1"] = row.score.f1;
    rows.push_back(std::move(r));
  }
  j["questions"] = std::move(rows);
  return j.dump();
}

}  // namespace procsim
