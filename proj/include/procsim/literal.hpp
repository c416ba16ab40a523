#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace procsim {

// The closed predicate vocabulary. phase is functional in its first argument
// (is-at is not: nested locations coexist); size and temperature are
// event-scoped markers; exists is unary.
enum class Pred { IsAt, Exists, Size, Temperature, Phase };

const char* pred_name(Pred p);
int pred_arity(Pred p);
// Parses a predicate name, returns false on unknown names.
bool pred_from_name(const std::string& name, Pred* out);
// Returns the allowed second-argument constants for size/temperature/phase,
// empty for predicates whose arguments are open-class noun phrases.
const std::vector<std::string>& pred_value_domain(Pred p);

// Argument of a rule template: either a role variable resolved at match time
// or a constant string.
struct Term {
  bool is_variable = false;
  std::string text;

  bool operator==(const Term&) const = default;
};

// Template literal as written in a lexicon entry. `negated` is strong
// negation, not negation-as-failure.
struct Literal {
  Pred pred = Pred::Exists;
  std::vector<Term> args;
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

// Fully instantiated literal; all arguments are normalized noun phrases or
// domain constants.
struct GroundLiteral {
  Pred pred = Pred::Exists;
  std::vector<std::string> args;
  bool negated = false;

  bool operator==(const GroundLiteral&) const = default;
  bool operator<(const GroundLiteral& o) const {
    return std::tie(pred, negated, args) < std::tie(o.pred, o.negated, o.args);
  }
};

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const GroundLiteral& l);

}  // namespace procsim
