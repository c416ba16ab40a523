#pragma once

#include <stdexcept>
#include <string>

namespace procsim {

// Every failure surfaced to callers carries one of these categories. The CLI
// prints the category name verbatim, so tests can grep for it.
enum class Errc {
  FileNotFound,
  MalformedLine,
  UnknownPredicate,
  ArityMismatch,
  UnboundRole,
  BadValueDomain,
  DuplicateIndex,
  NonConsecutiveIndex,
  EmptyPhrase,
  IncompleteBinding,
  DirectConflict,
  UnknownClass,
  MissingSlot,
  UnknownParticipant,
  InvalidStep,
  MissingGold,
  UnknownRuleName,
  BadArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, const std::string& file = {},
        int line = 0);

  Errc code() const { return code_; }
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  static std::string format(Errc code, const std::string& message,
                            const std::string& file, int line);

  Errc code_;
  std::string file_;
  int line_;
};

}  // namespace procsim
