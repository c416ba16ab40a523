#include "procsim/text.hpp"

#include <cctype>

#include "procsim/errors.hpp"

namespace procsim {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string collapse_ws(const std::string& s) {
  std::string out;
  bool in_ws = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_ws = true;
      continue;
    }
    if (in_ws && !out.empty()) out += ' ';
    in_ws = false;
    out += c;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& s,
                                      const std::string& sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + sep.size();
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

namespace {

std::string strip_trailing_punct(std::string s) {
  while (!s.empty()) {
    char c = s.back();
    if (c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?') {
      s.pop_back();
    } else {
      break;
    }
  }
  return trim(s);
}

std::string strip_leading_articles(std::string s) {
  for (;;) {
    size_t sp = s.find(' ');
    std::string first = sp == std::string::npos ? s : s.substr(0, sp);
    if (first == "a" || first == "an" || first == "the") {
      if (sp == std::string::npos) return "";
      s = s.substr(sp + 1);
    } else {
      return s;
    }
  }
}

// " of "-complements hang off the head noun; cutting them exposes it.
std::string strip_of_complement(const std::string& s) {
  size_t pos = s.find(" of ");
  if (pos == std::string::npos) return s;
  return trim(s.substr(0, pos));
}

bool has_conjunction(const std::string& s) {
  return s.find(" and ") != std::string::npos ||
         s.find(',') != std::string::npos;
}

// "another"/"other" mark a discourse-new entity; merging it with the bare
// head would conflate two participants.
bool is_distinct_marked(const std::string& s) {
  return starts_with(s, "another ") || starts_with(s, "other ");
}

}  // namespace

std::string normalize_np(const std::string& np) {
  std::string s = strip_trailing_punct(collapse_ws(lower(np)));
  return strip_leading_articles(s);
}

std::string canonical_np(const std::string& np) {
  return strip_of_complement(normalize_np(np));
}

std::string headword(const std::string& np) {
  std::string s = canonical_np(np);
  if (s.empty()) {
    throw Error(Errc::EmptyPhrase, "no headword in '" + np + "'");
  }
  if (has_conjunction(s) || is_distinct_marked(s)) return s;
  size_t sp = s.rfind(' ');
  return sp == std::string::npos ? s : s.substr(sp + 1);
}

}  // namespace procsim
