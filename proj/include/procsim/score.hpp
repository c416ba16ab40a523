#pragma once

#include <string>
#include <utility>
#include <vector>

#include "procsim/question.hpp"

namespace procsim {

struct QuestionScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const QuestionScore&) const = default;
};

// Headword-overlap scoring. Each gold answer is matched at most once. Both
// sides empty scores (1,1,1); exactly one side empty scores (0,0,0). F1 is 0
// when P+R is 0.
QuestionScore score_question(const AnswerSet& predicted,
                             const std::vector<std::string>& gold);

struct ScoredRow {
  Question question;
  AnswerSet predicted;
  QuestionScore score;
};

struct Averages {
  int count = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;  // undefined when count == 0
};

struct ScoreReport {
  std::vector<ScoredRow> rows;
  Averages all;
  Averages single_answer;  // questions with exactly one gold answer
};

ScoreReport score_run(const std::vector<std::pair<Question, AnswerSet>>& results);

// Per-question rows plus the two macro averages.
std::string report_text(const ScoreReport& report);
// One-line JSON summary record.
std::string report_json(const ScoreReport& report);

}  // namespace procsim
