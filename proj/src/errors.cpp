#include "procsim/errors.hpp"

namespace procsim {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FileNotFound: return "file-not-found";
    case Errc::MalformedLine: return "malformed-line";
    case Errc::UnknownPredicate: return "unknown-predicate";
    case Errc::ArityMismatch: return "arity-mismatch";
    case Errc::UnboundRole: return "unbound-role";
    case Errc::BadValueDomain: return "bad-value-domain";
    case Errc::DuplicateIndex: return "duplicate-index";
    case Errc::NonConsecutiveIndex: return "non-consecutive-index";
    case Errc::EmptyPhrase: return "empty-phrase";
    case Errc::IncompleteBinding: return "incomplete-binding";
    case Errc::DirectConflict: return "direct-conflict";
    case Errc::UnknownClass: return "unknown-class";
    case Errc::MissingSlot: return "missing-slot";
    case Errc::UnknownParticipant: return "unknown-participant";
    case Errc::InvalidStep: return "invalid-step";
    case Errc::MissingGold: return "missing-gold";
    case Errc::UnknownRuleName: return "unknown-rule-name";
    case Errc::BadArgument: return "bad-argument";
  }
  return "unknown";
}

std::string Error::format(Errc code, const std::string& message,
                          const std::string& file, int line) {
  std::string out = "[";
  out += errc_name(code);
  out += "] ";
  out += message;
  if (!file.empty()) {
    out += " (";
    out += file;
    if (line > 0) {
      out += ":";
      out += std::to_string(line);
    }
    out += ")";
  }
  return out;
}

Error::Error(Errc code, const std::string& message, const std::string& file,
             int line)
    : std::runtime_error(format(code, message, file, line)),
      code_(code),
      file_(file),
      line_(line) {}

}  // namespace procsim
