#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace procsim {

// One annotated event: a flat (subject, verb, object, prepositions) tuple plus
// optional role pins. Noun phrases are stored raw; normalization happens when
// they are used.
struct EventTuple {
  int index = 0;  // 1-based, consecutive in file order
  std::optional<std::string> subject;
  std::string verb;  // lemma, lowercased
  std::optional<std::string> object;
  std::vector<std::pair<std::string, std::string>> preps;  // (word, np) in order
  std::map<std::string, std::string> role_overrides;

  bool operator==(const EventTuple&) const = default;
};

// Parses the "E<i> | subj: ... | verb: ... | obj: ... | prep: w = np | roles:
// R=np, ..." format. '#' starts a comment line. Raises MalformedLine,
// DuplicateIndex or NonConsecutiveIndex with the offending line number.
std::vector<EventTuple> parse_paragraph(const std::string& source,
                                        const std::string& filename = "<string>");

}  // namespace procsim
