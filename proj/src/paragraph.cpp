#include "procsim/paragraph.hpp"

#include "procsim/errors.hpp"
#include "procsim/text.hpp"

namespace procsim {

namespace {

// "key: value" with a known key; returns false when the field has a
// different key.
bool take_field(const std::string& field, const std::string& key,
                std::string* value) {
  if (!starts_with(field, key + ":")) return false;
  *value = trim(field.substr(key.size() + 1));
  return true;
}

}  // namespace

std::vector<EventTuple> parse_paragraph(const std::string& source,
                                        const std::string& filename) {
  std::vector<EventTuple> tuples;
  int line_no = 0;
  for (const std::string& raw : split(source, '\n')) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields = split_fields(line, "|");
    for (std::string& f : fields) f = trim(f);
    // The event label: E<i>.
    if (fields.empty() || fields[0].size() < 2 || fields[0][0] != 'E') {
      throw Error(Errc::MalformedLine, "expected 'E<i>' event label in '" + line + "'",
                  filename, line_no);
    }
    EventTuple t;
    try {
      size_t used = 0;
      t.index = std::stoi(fields[0].substr(1), &used);
      if (used + 1 != fields[0].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::MalformedLine, "bad event index '" + fields[0] + "'",
                  filename, line_no);
    }

    for (size_t i = 1; i < fields.size(); ++i) {
      const std::string& f = fields[i];
      if (f.empty()) continue;
      std::string v;
      if (take_field(f, "subj", &v)) {
        t.subject = v;
      } else if (take_field(f, "verb", &v)) {
        t.verb = lower(collapse_ws(v));
      } else if (take_field(f, "obj", &v)) {
        t.object = v;
      } else if (take_field(f, "prep", &v)) {
        size_t eq = v.find('=');
        if (eq == std::string::npos) {
          throw Error(Errc::MalformedLine, "prep field needs '<word> = <np>' in '" + f + "'",
                      filename, line_no);
        }
        std::string word = lower(collapse_ws(trim(v.substr(0, eq))));
        std::string np = trim(v.substr(eq + 1));
        if (word.empty() || np.empty()) {
          throw Error(Errc::MalformedLine, "empty prep word or phrase in '" + f + "'",
                      filename, line_no);
        }
        t.preps.emplace_back(word, np);
      } else if (take_field(f, "roles", &v)) {
        for (const std::string& pair : split(v, ',')) {
          std::string p = trim(pair);
          if (p.empty()) continue;
          size_t eq = p.find('=');
          if (eq == std::string::npos) {
            throw Error(Errc::MalformedLine, "roles field needs '<Role>=<np>' in '" + p + "'",
                        filename, line_no);
          }
          std::string role = trim(p.substr(0, eq));
          std::string np = trim(p.substr(eq + 1));
          if (role.empty() || np.empty()) {
            throw Error(Errc::MalformedLine, "empty role or phrase in '" + p + "'",
                        filename, line_no);
          }
          t.role_overrides[role] = np;
        }
      } else {
        throw Error(Errc::MalformedLine, "unknown field '" + f + "'", filename,
                    line_no);
      }
    }
    if (t.verb.empty()) {
      throw Error(Errc::MalformedLine, "event E" + std::to_string(t.index) + " has no verb",
                  filename, line_no);
    }

    int expected = static_cast<int>(tuples.size()) + 1;
    if (t.index < expected) {
      // Re-used index: every earlier index already appeared.
      throw Error(Errc::DuplicateIndex, "event index E" + std::to_string(t.index) + " appears twice",
                  filename, line_no);
    }
    if (t.index != expected) {
      throw Error(Errc::NonConsecutiveIndex,
                  "expected E" + std::to_string(expected) + ", found E" + std::to_string(t.index),
                  filename, line_no);
    }
    tuples.push_back(std::move(t));
  }
  return tuples;
}

}  // namespace procsim
