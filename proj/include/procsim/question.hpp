#pragma once

#include <string>
#include <vector>

#include "procsim/graph.hpp"
#include "procsim/simulate.hpp"

namespace procsim {

// The closed set of question templates. The file-level class names are the
// enum names in kebab-case (see question_class_name).
enum class QuestionClass {
  WhatProduced,
  WhatConsumed,
  WhatMoved,
  WhereProduced,   // X
  WhereConsumed,   // X
  MoveFrom,        // X
  MoveTo,          // X
  TempIncreased,
  TempDecreased,
  SizeIncreased,
  SizeDecreased,
  PhaseChange,     // from, to
  StepDependencies,  // step
};

const char* question_class_name(QuestionClass c);
bool question_class_from_name(const std::string& name, QuestionClass* out);

struct Question {
  int id = 0;
  QuestionClass cls = QuestionClass::WhatProduced;
  std::string x;
  std::string from_state;
  std::string to_state;
  int step = 0;
  bool has_gold = false;
  std::vector<std::string> gold;

  std::string label() const;  // e.g. where-produced(sugar)
};

// Parses one "Q<k> | class: ... | X: ... | from: ... | to: ... | step: ... |
// gold: a; b" line. Raises UnknownClass, MissingSlot, MalformedLine,
// BadValueDomain.
Question parse_question(const std::string& line,
                        const std::string& filename = "<string>",
                        int line_no = 0);
std::vector<Question> parse_question_file(const std::string& source,
                                          const std::string& filename = "<string>");

struct AnswerSet {
  std::vector<std::string> answers;  // deduplicated by headword, ordered

  bool operator==(const AnswerSet&) const = default;
};

// Answers one question from the simulation output. Answers are participant or
// location canonical forms (or "E<i>:<verb>" step labels), ordered by event
// index then headword. An empty set is a valid answer; UnknownParticipant is
// raised only when an X slot names no participant.
AnswerSet answer(const Question& q, const SimulateResult& sim);

}  // namespace procsim
