#pragma once

#include <string>
#include <vector>

namespace procsim {

std::string trim(const std::string& s);
std::string lower(std::string s);
std::string collapse_ws(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
// Splits on a multi-char separator; used for " | " field separation.
std::vector<std::string> split_fields(const std::string& s,
                                      const std::string& sep);
bool starts_with(const std::string& s, const std::string& prefix);

// Lowercase, collapse whitespace, strip leading articles (a/an/the) and
// trailing punctuation. This is the form noun phrases take inside literals.
std::string normalize_np(const std::string& np);

// normalize_np plus of-complement stripping: "the leaf of the plant" -> "leaf".
// Conjoined phrases stay whole. This names one participant.
std::string canonical_np(const std::string& np);

// Head token used to merge coreferent mentions: canonical_np reduced to its
// last token. Conjunctions ("water and minerals") and explicitly non-anaphoric
// phrases ("another facility") are kept whole so they never merge away.
// Raises EmptyPhrase on blank input.
std::string headword(const std::string& np);

}  // namespace procsim
