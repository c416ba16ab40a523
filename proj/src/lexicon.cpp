#include "procsim/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include "procsim/errors.hpp"
#include "procsim/text.hpp"

namespace procsim {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

bool PrepClasses::is_src(const std::string& word) const {
  return contains(src, word);
}

bool PrepClasses::is_dest(const std::string& word) const {
  return contains(dest, word);
}

std::vector<std::string> SyntacticPattern::roles() const {
  std::vector<std::string> out{subject_role};
  if (object_role) out.push_back(*object_role);
  for (const PrepSlot& p : prep_slots) out.push_back(p.role);
  return out;
}

bool SyntacticPattern::has_role(const std::string& role) const {
  const std::vector<std::string> rs = roles();
  return contains(rs, role);
}

Lexicon::Lexicon(std::vector<VerbRule> rules, PrepClasses preps)
    : rules_(std::move(rules)), preps_(std::move(preps)) {
  for (size_t i = 0; i < rules_.size(); ++i) index_[rules_[i].verb].push_back(i);
}

const std::vector<size_t>& Lexicon::rules_for(const std::string& verb) const {
  static const std::vector<size_t> none;
  auto it = index_.find(verb);
  return it == index_.end() ? none : it->second;
}

namespace {

struct LineContext {
  const std::string& filename;
  int line_no;

  [[noreturn]] void fail(Errc code, const std::string& msg) const {
    throw Error(code, msg, filename, line_no);
  }
};

// Comma-separated word list for the prep-class headers.
std::vector<std::string> parse_word_list(const std::string& v,
                                         const LineContext& ctx) {
  std::vector<std::string> out;
  for (const std::string& w : split(v, ',')) {
    std::string word = lower(collapse_ws(trim(w)));
    if (word.empty()) ctx.fail(Errc::MalformedLine, "empty word in preposition list");
    out.push_back(word);
  }
  if (out.empty()) ctx.fail(Errc::MalformedLine, "empty preposition list");
  return out;
}

// Tokenizes a pattern: bare words, quoted verbs, '-', '(' and ')'.
std::vector<std::string> pattern_tokens(const std::string& s,
                                        const LineContext& ctx) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      toks.push_back(std::string(1, c));
      ++i;
    } else if (c == '"') {
      size_t end = s.find('"', i + 1);
      if (end == std::string::npos) ctx.fail(Errc::MalformedLine, "unterminated quote in pattern");
      toks.push_back(s.substr(i, end - i + 1));
      i = end + 1;
    } else {
      size_t end = i;
      while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end])) &&
             s[end] != '(' && s[end] != ')')
        ++end;
      toks.push_back(s.substr(i, end - i));
      i = end;
    }
  }
  return toks;
}

// Grammar: ROLE "verb" (ROLE | -) ( "(" PREP ROLE ")" )*
// PREP is a quoted word, PREP-src or PREP-dest. Multi-word quoted preps are
// allowed: ("out of" Source).
SyntacticPattern parse_pattern(const std::string& s, const LineContext& ctx) {
  std::vector<std::string> toks = pattern_tokens(s, ctx);
  size_t i = 0;
  auto need = [&](const char* what) -> const std::string& {
    if (i >= toks.size()) ctx.fail(Errc::MalformedLine, std::string("pattern ended early, expected ") + what);
    return toks[i];
  };

  SyntacticPattern p;
  const std::string& subj = need("subject role");
  if (subj == "-" || subj == "(" || subj == ")" || subj[0] == '"')
    ctx.fail(Errc::MalformedLine, "pattern must start with a subject role");
  p.subject_role = subj;
  ++i;

  const std::string& verb = need("quoted verb");
  if (verb.size() < 3 || verb.front() != '"' || verb.back() != '"')
    ctx.fail(Errc::MalformedLine, "pattern verb must be quoted");
  p.verb = lower(collapse_ws(verb.substr(1, verb.size() - 2)));
  ++i;

  const std::string& obj = need("object role or '-'");
  if (obj == "-") {
    p.object_role = std::nullopt;
  } else if (obj == "(" || obj == ")" || obj[0] == '"') {
    ctx.fail(Errc::MalformedLine, "object slot must be a role or '-'");
  } else {
    p.object_role = obj;
  }
  ++i;

  while (i < toks.size()) {
    if (toks[i] != "(") ctx.fail(Errc::MalformedLine, "expected '(' before prep slot, found '" + toks[i] + "'");
    ++i;
    PrepSlot slot;
    const std::string& prep = need("preposition");
    if (prep == "PREP-src") {
      slot.spec = PrepSlot::Spec::SrcClass;
    } else if (prep == "PREP-dest") {
      slot.spec = PrepSlot::Spec::DestClass;
    } else if (prep.size() >= 3 && prep.front() == '"' && prep.back() == '"') {
      slot.spec = PrepSlot::Spec::Word;
      slot.word = lower(collapse_ws(prep.substr(1, prep.size() - 2)));
    } else {
      ctx.fail(Errc::MalformedLine, "prep slot needs a quoted word, PREP-src or PREP-dest");
    }
    ++i;
    const std::string& role = need("prep role");
    if (role == "-" || role == "(" || role == ")" || role[0] == '"')
      ctx.fail(Errc::MalformedLine, "prep slot role missing");
    slot.role = role;
    ++i;
    if (need("')'") != ")") ctx.fail(Errc::MalformedLine, "expected ')' after prep slot");
    ++i;
    p.prep_slots.push_back(std::move(slot));
  }

  // Duplicate role names would make bindings ambiguous.
  std::vector<std::string> rs = p.roles();
  std::sort(rs.begin(), rs.end());
  if (std::adjacent_find(rs.begin(), rs.end()) != rs.end())
    ctx.fail(Errc::MalformedLine, "pattern binds a role twice");
  return p;
}

// One "pred(arg,...)" with optional "not " prefix. Bare arguments are pattern
// roles or closed-domain constants; quoted arguments are constants.
Literal parse_literal(const std::string& s, const SyntacticPattern& pattern,
                      const LineContext& ctx) {
  std::string body = trim(s);
  Literal lit;
  if (starts_with(body, "not ")) {
    lit.negated = true;
    body = trim(body.substr(4));
  } else if (!body.empty() && body[0] == '~') {
    lit.negated = true;
    body = trim(body.substr(1));
  }
  size_t open = body.find('(');
  if (open == std::string::npos || body.back() != ')')
    ctx.fail(Errc::MalformedLine, "literal needs 'pred(args)' shape: '" + s + "'");
  std::string name = trim(body.substr(0, open));
  if (!pred_from_name(name, &lit.pred))
    ctx.fail(Errc::UnknownPredicate, "unknown predicate '" + name + "'");

  std::string argstr = body.substr(open + 1, body.size() - open - 2);
  std::vector<std::string> parts;
  if (!trim(argstr).empty()) {
    for (const std::string& a : split(argstr, ',')) parts.push_back(trim(a));
  }
  if (static_cast<int>(parts.size()) != pred_arity(lit.pred))
    ctx.fail(Errc::ArityMismatch,
             std::string(pred_name(lit.pred)) + " takes " + std::to_string(pred_arity(lit.pred)) +
                 " argument(s), got " + std::to_string(parts.size()));

  for (size_t pos = 0; pos < parts.size(); ++pos) {
    const std::string& a = parts[pos];
    if (a.empty()) ctx.fail(Errc::MalformedLine, "empty literal argument");
    Term t;
    if (a.front() == '"' && a.back() == '"' && a.size() >= 2) {
      t.is_variable = false;
      t.text = a.substr(1, a.size() - 2);
    } else if (pattern.has_role(a)) {
      t.is_variable = true;
      t.text = a;
    } else {
      // Bare non-role tokens are only legal as closed-domain values in the
      // final position of size/temperature/phase.
      const std::vector<std::string>& domain = pred_value_domain(lit.pred);
      if (pos == 1 && contains(domain, a)) {
        t.is_variable = false;
        t.text = a;
      } else {
        ctx.fail(Errc::UnboundRole, "'" + a + "' is not a pattern role of this entry");
      }
    }
    lit.args.push_back(std::move(t));
  }

  // Closed value domains are enforced even for quoted constants.
  const std::vector<std::string>& domain = pred_value_domain(lit.pred);
  if (!domain.empty()) {
    const Term& v = lit.args[1];
    if (!v.is_variable && !contains(domain, v.text))
      ctx.fail(Errc::BadValueDomain,
               "'" + v.text + "' is not a legal value for " + pred_name(lit.pred));
  }
  return lit;
}

std::vector<Literal> parse_literal_list(const std::string& s,
                                        const SyntacticPattern& pattern,
                                        const LineContext& ctx) {
  std::vector<Literal> out;
  std::string body = trim(s);
  if (body.empty()) return out;
  // Split on commas that sit outside parentheses.
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      std::string piece = trim(body.substr(start, i - start));
      if (!piece.empty()) out.push_back(parse_literal(piece, pattern, ctx));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

Lexicon parse_lexicon(const std::string& source, const std::string& filename) {
  std::vector<VerbRule> rules;
  PrepClasses preps;
  int line_no = 0;
  for (const std::string& raw : split(source, '\n')) {
    ++line_no;
    LineContext ctx{filename, line_no};
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (starts_with(line, "prep-src:")) {
      preps.src = parse_word_list(line.substr(9), ctx);
      continue;
    }
    if (starts_with(line, "prep-dest:")) {
      preps.dest = parse_word_list(line.substr(10), ctx);
      continue;
    }

    VerbRule rule;
    bool have_pattern = false, have_before = false, have_after = false;
    std::string before_src, after_src;
    for (const std::string& field_raw : split_fields(line, "|")) {
      std::string field = trim(field_raw);
      if (field.empty()) continue;
      size_t colon = field.find(':');
      if (colon == std::string::npos)
        ctx.fail(Errc::MalformedLine, "field without ':' in '" + field + "'");
      std::string key = trim(field.substr(0, colon));
      std::string value = trim(field.substr(colon + 1));
      if (key == "verb") {
        rule.verb = lower(collapse_ws(value));
      } else if (key == "class") {
        rule.class_id = value;
      } else if (key == "sense") {
        rule.sense_id = value;
      } else if (key == "pattern") {
        rule.pattern = parse_pattern(value, ctx);
        have_pattern = true;
      } else if (key == "before") {
        before_src = value;
        have_before = true;
      } else if (key == "after") {
        after_src = value;
        have_after = true;
      } else {
        ctx.fail(Errc::MalformedLine, "unknown field '" + key + "'");
      }
    }
    if (rule.verb.empty()) ctx.fail(Errc::MalformedLine, "entry has no verb field");
    if (!have_pattern) ctx.fail(Errc::MalformedLine, "entry has no pattern field");
    if (!have_before || !have_after)
      ctx.fail(Errc::MalformedLine, "entry needs before and after fields");
    if (rule.pattern.verb != rule.verb)
      ctx.fail(Errc::MalformedLine, "pattern verb '" + rule.pattern.verb +
                                        "' does not match entry verb '" + rule.verb + "'");
    rule.before = parse_literal_list(before_src, rule.pattern, ctx);
    rule.after = parse_literal_list(after_src, rule.pattern, ctx);
    rules.push_back(std::move(rule));
  }
  return Lexicon(std::move(rules), std::move(preps));
}

namespace {

std::string serialize_pattern(const SyntacticPattern& p) {
  std::string out = p.subject_role + " \"" + p.verb + "\" ";
  out += p.object_role ? *p.object_role : std::string("-");
  for (const PrepSlot& s : p.prep_slots) {
    out += " (";
    switch (s.spec) {
      case PrepSlot::Spec::Word: out += "\"" + s.word + "\""; break;
      case PrepSlot::Spec::SrcClass: out += "PREP-src"; break;
      case PrepSlot::Spec::DestClass: out += "PREP-dest"; break;
    }
    out += " " + s.role + ")";
  }
  return out;
}

std::string serialize_literals(const std::vector<Literal>& ls) {
  std::string out;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ", ";
    const Literal& l = ls[i];
    if (l.negated) out += "not ";
    out += pred_name(l.pred);
    out += '(';
    for (size_t j = 0; j < l.args.size(); ++j) {
      if (j) out += ',';
      const Term& t = l.args[j];
      out += t.is_variable ? t.text : "\"" + t.text + "\"";
    }
    out += ')';
  }
  return out;
}

std::string join_words(const std::vector<std::string>& ws) {
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += ws[i];
  }
  return out;
}

}  // namespace

std::string serialize_lexicon(const Lexicon& lex) {
  std::string out;
  out += "prep-src: " + join_words(lex.preps().src) + "\n";
  out += "prep-dest: " + join_words(lex.preps().dest) + "\n";
  for (const VerbRule& r : lex.rules()) {
    out += "verb: " + r.verb;
    if (!r.class_id.empty()) out += " | class: " + r.class_id;
    if (!r.sense_id.empty()) out += " | sense: " + r.sense_id;
    out += " | pattern: " + serialize_pattern(r.pattern);
    out += " | before: " + serialize_literals(r.before);
    out += " | after: " + serialize_literals(r.after);
    out += "\n";
  }
  return out;
}

std::optional<PatternMatch> match_pattern(const EventTuple& tuple,
                                          const VerbRule& rule,
                                          const PrepClasses& preps) {
  const SyntacticPattern& p = rule.pattern;
  if (tuple.verb != p.verb) return std::nullopt;
  if (!tuple.subject) return std::nullopt;
  if (p.object_role && !tuple.object) return std::nullopt;
  if (!p.object_role && tuple.object) return std::nullopt;

  PatternMatch m;
  m.binding[p.subject_role] = *tuple.subject;
  if (p.object_role) m.binding[*p.object_role] = *tuple.object;

  // Each slot takes the first unconsumed tuple prep it accepts, in order.
  std::vector<bool> used(tuple.preps.size(), false);
  for (const PrepSlot& slot : p.prep_slots) {
    bool satisfied = false;
    for (size_t i = 0; i < tuple.preps.size(); ++i) {
      if (used[i]) continue;
      const std::string& word = tuple.preps[i].first;
      bool ok = false;
      switch (slot.spec) {
        case PrepSlot::Spec::Word: ok = (word == slot.word); break;
        case PrepSlot::Spec::SrcClass: ok = preps.is_src(word); break;
        case PrepSlot::Spec::DestClass: ok = preps.is_dest(word); break;
      }
      if (ok) {
        used[i] = true;
        m.binding[slot.role] = tuple.preps[i].second;
        m.used_preps.push_back(i);
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return std::nullopt;
  }
  return m;
}

Instantiation instantiate(const VerbRule& rule, const RoleBinding& binding) {
  auto ground = [&](const std::vector<Literal>& templ) {
    std::vector<GroundLiteral> out;
    for (const Literal& l : templ) {
      GroundLiteral g;
      g.pred = l.pred;
      g.negated = l.negated;
      for (const Term& t : l.args) {
        if (t.is_variable) {
          auto it = binding.find(t.text);
          if (it == binding.end())
            throw Error(Errc::IncompleteBinding,
                        "role '" + t.text + "' unbound for verb '" + rule.verb + "'");
          g.args.push_back(normalize_np(it->second));
        } else {
          g.args.push_back(normalize_np(t.text));
        }
      }
      out.push_back(std::move(g));
    }
    return out;
  };
  Instantiation inst;
  inst.before = ground(rule.before);
  inst.after = ground(rule.after);
  return inst;
}

std::optional<RuleSelection> select_rule(const Lexicon& lex,
                                         const EventTuple& tuple) {
  std::optional<RuleSelection> best;
  size_t best_slots = 0;
  for (size_t idx : lex.rules_for(tuple.verb)) {
    std::optional<PatternMatch> m = match_pattern(tuple, lex.rules()[idx], lex.preps());
    if (!m) continue;
    size_t slots = m->binding.size();
    // Strictly-more-specific wins; equal specificity keeps the earlier entry.
    if (!best || slots > best_slots) {
      best = RuleSelection{idx, std::move(*m)};
      best_slots = slots;
    }
  }
  return best;
}

VerbNetImport import_verbnet_frame(const std::string& verb,
                                   const std::string& class_id,
                                   const SyntacticPattern& pattern,
                                   const std::vector<VerbNetAssertion>& asserts) {
  VerbNetImport out;
  out.rule.verb = lower(collapse_ws(verb));
  out.rule.class_id = class_id;
  out.rule.pattern = pattern;

  for (const VerbNetAssertion& a : asserts) {
    std::string name = lower(trim(a.predicate));
    Pred pred;
    if (name == "exists") {
      pred = Pred::Exists;
    } else if (name == "location") {
      pred = Pred::IsAt;
    } else {
      out.dropped.push_back(a.predicate + " (unsupported predicate)");
      continue;
    }
    if (a.when == VerbNetAssertion::When::None) {
      out.dropped.push_back(a.predicate + " (no time anchor)");
      continue;
    }
    if (static_cast<int>(a.args.size()) != pred_arity(pred)) {
      out.dropped.push_back(a.predicate + " (arity mismatch)");
      continue;
    }
    Literal lit;
    lit.pred = pred;
    lit.negated = a.negated;
    for (const std::string& arg : a.args) {
      Term t;
      t.is_variable = pattern.has_role(arg);
      t.text = arg;
      lit.args.push_back(std::move(t));
    }
    if (a.when == VerbNetAssertion::When::Start) {
      out.rule.before.push_back(std::move(lit));
    } else {
      out.rule.after.push_back(std::move(lit));
    }
  }
  return out;
}

}  // namespace procsim
