#include "procsim/question.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "procsim/errors.hpp"
#include "procsim/text.hpp"

namespace procsim {

namespace {

const std::map<std::string, QuestionClass>& class_table() {
  static const std::map<std::string, QuestionClass> table = {
      {"what-produced", QuestionClass::WhatProduced},
      {"what-consumed", QuestionClass::WhatConsumed},
      {"what-moved", QuestionClass::WhatMoved},
      {"where-produced", QuestionClass::WhereProduced},
      {"where-consumed", QuestionClass::WhereConsumed},
      {"move-from", QuestionClass::MoveFrom},
      {"move-to", QuestionClass::MoveTo},
      {"temp-increased", QuestionClass::TempIncreased},
      {"temp-decreased", QuestionClass::TempDecreased},
      {"size-increased", QuestionClass::SizeIncreased},
      {"size-decreased", QuestionClass::SizeDecreased},
      {"phase-change", QuestionClass::PhaseChange},
      {"step-dependencies", QuestionClass::StepDependencies},
  };
  return table;
}

bool needs_x(QuestionClass c) {
  return c == QuestionClass::WhereProduced ||
         c == QuestionClass::WhereConsumed || c == QuestionClass::MoveFrom ||
         c == QuestionClass::MoveTo;
}

}  // namespace

const char* question_class_name(QuestionClass c) {
  for (const auto& [name, cls] : class_table())
    if (cls == c) return name.c_str();
  return "?";
}

bool question_class_from_name(const std::string& name, QuestionClass* out) {
  auto it = class_table().find(name);
  if (it == class_table().end()) return false;
  *out = it->second;
  return true;
}

std::string Question::label() const {
  std::string s = question_class_name(cls);
  if (needs_x(cls)) return s + "(" + x + ")";
  if (cls == QuestionClass::PhaseChange)
    return s + "(" + from_state + "->" + to_state + ")";
  if (cls == QuestionClass::StepDependencies)
    return s + "(E" + std::to_string(step) + ")";
  return s;
}

Question parse_question(const std::string& line, const std::string& filename,
                        int line_no) {
  auto fail = [&](Errc code, const std::string& msg) -> void {
    throw Error(code, msg, filename, line_no);
  };

  std::vector<std::string> fields = split_fields(line, "|");
  for (auto& f : fields) f = trim(f);
  if (fields.empty() || fields.front().empty())
    fail(Errc::MalformedLine, "empty question line");

  Question q;
  const std::string& head = fields.front();
  if (head.size() < 2 || head[0] != 'Q' ||
      head.find_first_not_of("0123456789", 1) != std::string::npos)
    fail(Errc::MalformedLine, "expected question label 'Q<k>', found '" +
                                  head + "'");
  q.id = std::stoi(head.substr(1));

  std::string cls_value;
  bool saw_class = false;
  std::set<std::string> seen;
  for (size_t i = 1; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    if (f.empty()) fail(Errc::MalformedLine, "empty field");
    size_t colon = f.find(':');
    if (colon == std::string::npos)
      fail(Errc::MalformedLine, "expected 'slot: value', found '" + f + "'");
    std::string key = trim(f.substr(0, colon));
    std::string value = trim(f.substr(colon + 1));
    if (!seen.insert(key).second)
      fail(Errc::MalformedLine, "slot '" + key + "' given twice");
    if (key == "class") {
      cls_value = value;
      saw_class = true;
    } else if (key == "X") {
      q.x = value;
    } else if (key == "from") {
      q.from_state = value;
    } else if (key == "to") {
      q.to_state = value;
    } else if (key == "step") {
      if (value.empty() ||
          value.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::MalformedLine, "step must be a positive integer, found '" +
                                      value + "'");
      q.step = std::stoi(value);
    } else if (key == "gold") {
      q.has_gold = true;
      for (const std::string& item : split(value, ';')) {
        std::string g = trim(item);
        if (!g.empty()) q.gold.push_back(g);
      }
    } else {
      fail(Errc::MalformedLine, "unknown slot '" + key + "'");
    }
  }

  if (!saw_class) fail(Errc::MissingSlot, "question needs a 'class' slot");
  if (!question_class_from_name(cls_value, &q.cls))
    fail(Errc::UnknownClass, "unknown question class '" + cls_value + "'");

  if (needs_x(q.cls) && q.x.empty())
    fail(Errc::MissingSlot,
         std::string(question_class_name(q.cls)) + " needs an 'X' slot");
  if (q.cls == QuestionClass::PhaseChange) {
    if (q.from_state.empty() || q.to_state.empty())
      fail(Errc::MissingSlot, "phase-change needs 'from' and 'to' slots");
    const auto& domain = pred_value_domain(Pred::Phase);
    for (const std::string& v : {q.from_state, q.to_state}) {
      if (std::find(domain.begin(), domain.end(), v) == domain.end())
        fail(Errc::BadValueDomain, "'" + v + "' is not a phase");
    }
  }
  if (q.cls == QuestionClass::StepDependencies && q.step == 0)
    fail(Errc::MissingSlot, "step-dependencies needs a 'step' slot");

  return q;
}

std::vector<Question> parse_question_file(const std::string& source,
                                          const std::string& filename) {
  std::vector<Question> out;
  int line_no = 0;
  for (const std::string& raw : split(source, '\n')) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    out.push_back(parse_question(line, filename, line_no));
  }
  return out;
}

namespace {

// Answers accumulate as (event, value) pairs, then sort by event and value
// headword and collapse headword duplicates, keeping the earliest.
class Collector {
 public:
  void add(int event, const std::string& value) {
    items_.push_back({event, value});
  }

  std::vector<std::string> finish() const {
    std::vector<std::pair<int, std::string>> sorted = items_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first < b.first;
                       return headword(a.second) < headword(b.second);
                     });
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto& [event, value] : sorted) {
      if (seen.insert(headword(value)).second) out.push_back(value);
    }
    return out;
  }

 private:
  std::vector<std::pair<int, std::string>> items_;
};

std::string resolve_x(const Question& q, const ProcessGraph& g) {
  int a = g.argument_by_headword(headword(q.x));
  if (a < 0)
    throw Error(Errc::UnknownParticipant,
                "no participant named '" + q.x + "' in " + q.label());
  return g.arguments[static_cast<size_t>(a)].canonical;
}

}  // namespace

AnswerSet answer(const Question& q, const SimulateResult& sim) {
  Collector col;
  switch (q.cls) {
    case QuestionClass::WhatProduced:
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Produced) col.add(r.event, r.participant);
      break;
    case QuestionClass::WhatConsumed:
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Consumed) col.add(r.event, r.participant);
      break;
    case QuestionClass::WhatMoved:
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Moved) col.add(r.event, r.participant);
      break;
    case QuestionClass::WhereProduced: {
      std::string x = resolve_x(q, sim.graph);
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Produced && r.participant == x)
          for (const auto& loc : r.locations) col.add(r.event, loc);
      break;
    }
    case QuestionClass::WhereConsumed: {
      std::string x = resolve_x(q, sim.graph);
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Consumed && r.participant == x)
          for (const auto& loc : r.locations) col.add(r.event, loc);
      break;
    }
    case QuestionClass::MoveFrom: {
      std::string x = resolve_x(q, sim.graph);
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Moved && r.participant == x)
          col.add(r.event, r.from);
      break;
    }
    case QuestionClass::MoveTo: {
      std::string x = resolve_x(q, sim.graph);
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Moved && r.participant == x)
          col.add(r.event, r.to);
      break;
    }
    case QuestionClass::TempIncreased:
    case QuestionClass::TempDecreased: {
      std::string want =
          q.cls == QuestionClass::TempIncreased ? "increased" : "decreased";
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Temperature && r.direction == want)
          col.add(r.event, r.participant);
      break;
    }
    case QuestionClass::SizeIncreased:
    case QuestionClass::SizeDecreased: {
      std::string want =
          q.cls == QuestionClass::SizeIncreased ? "increased" : "decreased";
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Size && r.direction == want)
          col.add(r.event, r.participant);
      break;
    }
    case QuestionClass::PhaseChange:
      for (const auto& r : sim.changes)
        if (r.kind == ChangeKind::Phase && r.from == q.from_state &&
            r.to == q.to_state)
          col.add(r.event, r.participant);
      break;
    case QuestionClass::StepDependencies: {
      if (q.step < 1 || q.step > sim.graph.n_events())
        throw Error(Errc::InvalidStep,
                    "step E" + std::to_string(q.step) + " is out of range (1.." +
                        std::to_string(sim.graph.n_events()) + ")");
      std::vector<int> targets;
      for (const auto& e : sim.graph.event_edges)
        if (e.rel == EventRel::DependsOn && e.from == q.step)
          targets.push_back(e.to);
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()),
                    targets.end());
      AnswerSet s;
      for (int t : targets)
        s.answers.push_back("E" + std::to_string(t) + ":" +
                            sim.graph.event(t).verb);
      return s;
    }
  }
  return {col.finish()};
}

}  // namespace procsim
