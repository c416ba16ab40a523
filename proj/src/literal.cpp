#include "procsim/literal.hpp"

namespace procsim {

const char* pred_name(Pred p) {
  switch (p) {
    case Pred::IsAt: return "is-at";
    case Pred::Exists: return "exists";
    case Pred::Size: return "size";
    case Pred::Temperature: return "temperature";
    case Pred::Phase: return "phase";
  }
  return "?";
}

int pred_arity(Pred p) { return p == Pred::Exists ? 1 : 2; }

bool pred_from_name(const std::string& name, Pred* out) {
  if (name == "is-at") *out = Pred::IsAt;
  else if (name == "exists") *out = Pred::Exists;
  else if (name == "size") *out = Pred::Size;
  else if (name == "temperature") *out = Pred::Temperature;
  else if (name == "phase") *out = Pred::Phase;
  else return false;
  return true;
}

const std::vector<std::string>& pred_value_domain(Pred p) {
  static const std::vector<std::string> directions{"increased", "decreased"};
  static const std::vector<std::string> phases{"solid", "liquid", "gas"};
  static const std::vector<std::string> none{};
  switch (p) {
    case Pred::Size:
    case Pred::Temperature:
      return directions;
    case Pred::Phase:
      return phases;
    default:
      return none;
  }
}

std::string to_string(const Term& t) {
  return t.is_variable ? t.text : "\"" + t.text + "\"";
}

namespace {

template <typename ArgT, typename Fn>
std::string literal_string(Pred pred, bool negated,
                           const std::vector<ArgT>& args, Fn arg_str) {
  std::string out;
  if (negated) out += "not ";
  out += pred_name(pred);
  out += '(';
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += arg_str(args[i]);
  }
  out += ')';
  return out;
}

}  // namespace

std::string to_string(const Literal& l) {
  return literal_string(l.pred, l.negated, l.args, [](const Term& t) {
    return t.is_variable ? t.text : "\"" + t.text + "\"";
  });
}

std::string to_string(const GroundLiteral& l) {
  return literal_string(l.pred, l.negated, l.args,
                        [](const std::string& s) { return s; });
}

}  // namespace procsim
