#include "procsim/lexicon.hpp"

#include <string>

#include "doctest.h"
#include "procsim/errors.hpp"
#include "support.hpp"

using namespace procsim;

namespace {

const char* kHeader = "prep-src: from, out of\nprep-dest: to, into, onto, in\n";

Lexicon parse_one(const std::string& entry) {
  return parse_lexicon(std::string(kHeader) + entry + "\n");
}

Errc code_of(const std::string& source) {
  try {
    parse_lexicon(source, "t.lex");
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return Errc::MalformedLine;
}

EventTuple tuple(const std::string& subj, const std::string& verb,
                 std::optional<std::string> obj = std::nullopt,
                 std::vector<std::pair<std::string, std::string>> preps = {}) {
  EventTuple t;
  t.index = 1;
  t.subject = subj;
  t.verb = verb;
  t.object = std::move(obj);
  t.preps = std::move(preps);
  return t;
}

}  // namespace

TEST_CASE("transitive motion entry parses into pattern and literals") {
  Lexicon lex = parse_one(
      "verb: enter | class: escape-51.1-2 | pattern: Theme \"enter\" "
      "Destination | before: not is-at(Theme,Destination) | after: "
      "is-at(Theme,Destination)");
  REQUIRE(lex.rules().size() == 1);
  const VerbRule& r = lex.rules()[0];
  CHECK(r.verb == "enter");
  CHECK(r.class_id == "escape-51.1-2");
  CHECK(r.pattern.subject_role == "Theme");
  CHECK(r.pattern.object_role == "Destination");
  CHECK(r.pattern.prep_slots.empty());
  REQUIRE(r.before.size() == 1);
  CHECK(r.before[0].negated);
  CHECK(r.before[0].pred == Pred::IsAt);
  REQUIRE(r.before[0].args.size() == 2);
  CHECK(r.before[0].args[0].is_variable);
  CHECK(r.before[0].args[0].text == "Theme");
  REQUIRE(r.after.size() == 1);
  CHECK_FALSE(r.after[0].negated);
}

TEST_CASE("creation entries parse; the material variant keeps its material") {
  Lexicon lex = parse_lexicon(
      std::string(kHeader) +
      "verb: assemble | class: build-26.1 | pattern: Agent \"assemble\" "
      "Product | before: not exists(Product) | after: exists(Product)\n"
      "verb: assemble | class: build-26.1 | pattern: Agent \"assemble\" "
      "Material (\"into\" Product) | before: not exists(Product) | after: "
      "exists(Product)\n");
  REQUIRE(lex.rules().size() == 2);
  const VerbRule& two = lex.rules()[1];
  REQUIRE(two.pattern.prep_slots.size() == 1);
  CHECK(two.pattern.prep_slots[0].spec == PrepSlot::Spec::Word);
  CHECK(two.pattern.prep_slots[0].word == "into");
  CHECK(two.pattern.prep_slots[0].role == "Product");
  // No consumption literal: the material survives assembly.
  for (const Literal& l : two.after) CHECK_FALSE(l.negated);
  CHECK(two.before == lex.rules()[0].before);
  CHECK(two.after == lex.rules()[0].after);
}

TEST_CASE("empty before and after lists are legal") {
  Lexicon lex = parse_one(
      "verb: sleep | pattern: Agent \"sleep\" - | before: | after:");
  CHECK(lex.rules()[0].before.empty());
  CHECK(lex.rules()[0].after.empty());
}

TEST_CASE("prep headers override the default classes") {
  Lexicon lex = parse_lexicon(
      "prep-src: offof\nprep-dest: towards\n"
      "verb: go | pattern: Theme \"go\" - (PREP-dest Destination) | "
      "before: | after: is-at(Theme,Destination)\n");
  CHECK(lex.preps().is_dest("towards"));
  CHECK_FALSE(lex.preps().is_dest("to"));
  CHECK(lex.preps().is_src("offof"));
}

TEST_CASE("default prep classes hold when no header is given") {
  Lexicon lex = parse_lexicon("");
  CHECK(lex.preps().is_src("from"));
  CHECK(lex.preps().is_src("out of"));
  CHECK(lex.preps().is_dest("into"));
  CHECK_FALSE(lex.preps().is_src("with"));
}

TEST_CASE("closed-domain values are accepted bare or quoted in position two") {
  Lexicon lex = parse_one(
      "verb: melt | pattern: Patient \"melt\" - | before: "
      "phase(Patient,solid) | after: phase(Patient,\"liquid\"), "
      "temperature(Patient,increased)");
  const VerbRule& r = lex.rules()[0];
  CHECK_FALSE(r.before[0].args[1].is_variable);
  CHECK(r.before[0].args[1].text == "solid");
  CHECK(r.after[0].args[1].text == "liquid");
  CHECK(r.after[1].pred == Pred::Temperature);
}

TEST_CASE("parse errors name their category") {
  CHECK(code_of("just some text") == Errc::MalformedLine);
  CHECK(code_of("verb: x | pattern: A \"x\" - | before: | after: "
                "sparkles(A)") == Errc::UnknownPredicate);
  CHECK(code_of("verb: x | pattern: A \"x\" - | before: | after: "
                "exists(A,A)") == Errc::ArityMismatch);
  CHECK(code_of("verb: x | pattern: A \"x\" - | before: | after: "
                "exists(B)") == Errc::UnboundRole);
  // A bare out-of-domain token reads as a role reference, not a value.
  CHECK(code_of("verb: x | pattern: A \"x\" - | before: | after: "
                "phase(A,jelly)") == Errc::UnboundRole);
  CHECK(code_of("verb: x | pattern: A \"x\" - | before: | after: "
                "phase(A,\"jelly\")") == Errc::BadValueDomain);
  CHECK(code_of("verb: x | pattern: A \"y\" - | before: | after:") ==
        Errc::MalformedLine);  // pattern verb mismatch
  CHECK(code_of("verb: x | pattern: A \"x\" A | before: | after:") ==
        Errc::MalformedLine);  // duplicate role
  CHECK(code_of("verb: x | pattern: A \"x\" - | before:") ==
        Errc::MalformedLine);  // missing after
}

TEST_CASE("serialize then parse reproduces the lexicon") {
  std::string src =
      std::string(kHeader) +
      "verb: enter | class: escape-51.1-2 | pattern: Theme \"enter\" "
      "Destination | before: not is-at(Theme,Destination) | after: "
      "is-at(Theme,Destination)\n"
      "verb: flow | class: run-51.3.2 | pattern: Theme \"flow\" - "
      "(PREP-src Initial_Location) (PREP-dest Destination) | before: "
      "is-at(Theme,Initial_Location) | after: is-at(Theme,Destination), "
      "not is-at(Theme,Initial_Location)\n"
      "verb: melt | sense: 1 | pattern: Patient \"melt\" - | before: "
      "phase(Patient,solid) | after: phase(Patient,liquid)\n"
      "verb: land | pattern: Theme \"land\" - (\"on\" Destination) | "
      "before: | after: is-at(Theme,\"the ground\")\n";
  Lexicon first = parse_lexicon(src);
  Lexicon second = parse_lexicon(serialize_lexicon(first));
  CHECK(first == second);
  // And serialization is a fixpoint from then on.
  CHECK(serialize_lexicon(first) == serialize_lexicon(second));
}

TEST_CASE("match_pattern binds raw phrases and consumes preps") {
  Lexicon lex = parse_one(
      "verb: evaporate | pattern: Patient \"evaporate\" - "
      "(PREP-src Initial_Location) | before: is-at(Patient,Initial_Location) "
      "| after: not is-at(Patient,Initial_Location)");
  EventTuple t = tuple("The water", "evaporate", std::nullopt,
                       {{"slowly", "x"}, {"from", "the lake"}});
  auto m = match_pattern(t, lex.rules()[0], lex.preps());
  REQUIRE(m.has_value());
  CHECK(m->binding.at("Patient") == "The water");  // raw, not normalized
  CHECK(m->binding.at("Initial_Location") == "the lake");
  CHECK(m->used_preps == std::vector<size_t>{1});
}

TEST_CASE("match_pattern rejects structural mismatches") {
  Lexicon lex = parse_one(
      "verb: enter | pattern: Theme \"enter\" Destination | before: | "
      "after: is-at(Theme,Destination)");
  const VerbRule& r = lex.rules()[0];
  CHECK_FALSE(match_pattern(tuple("x", "exit", "y"), r, lex.preps()));
  CHECK_FALSE(match_pattern(tuple("x", "enter"), r, lex.preps()));  // no obj
  EventTuple no_subj = tuple("x", "enter", "y");
  no_subj.subject.reset();
  CHECK_FALSE(match_pattern(no_subj, r, lex.preps()));

  Lexicon intrans = parse_one(
      "verb: sleep | pattern: Agent \"sleep\" - | before: | after:");
  CHECK_FALSE(match_pattern(tuple("x", "sleep", "y"), intrans.rules()[0],
                            intrans.preps()));  // unexpected object
  CHECK(match_pattern(tuple("x", "sleep"), intrans.rules()[0],
                      intrans.preps()));
}

TEST_CASE("each prep slot takes the first unconsumed accepting prep") {
  Lexicon lex = parse_one(
      "verb: flow | pattern: Theme \"flow\" - (PREP-dest Destination) "
      "(PREP-dest Second) | before: | after: is-at(Theme,Destination), "
      "is-at(Theme,Second)");
  EventTuple t = tuple("water", "flow", std::nullopt,
                       {{"into", "the pipe"}, {"onto", "the field"}});
  auto m = match_pattern(t, lex.rules()[0], lex.preps());
  REQUIRE(m.has_value());
  CHECK(m->binding.at("Destination") == "the pipe");
  CHECK(m->binding.at("Second") == "the field");
  CHECK(m->used_preps == std::vector<size_t>{0, 1});

  // One candidate prep cannot satisfy two slots.
  EventTuple short_t = tuple("water", "flow", std::nullopt,
                             {{"into", "the pipe"}});
  CHECK_FALSE(match_pattern(short_t, lex.rules()[0], lex.preps()));
}

TEST_CASE("instantiate normalizes phrases and keeps constants") {
  Lexicon lex = parse_one(
      "verb: land | pattern: Theme \"land\" - | before: | after: "
      "is-at(Theme,\"the ground\")");
  Instantiation inst =
      instantiate(lex.rules()[0], RoleBinding{{"Theme", "The  Plane."}});
  REQUIRE(inst.after.size() == 1);
  CHECK(inst.after[0] == testsupport::at("plane", "ground"));
}

TEST_CASE("instantiate raises IncompleteBinding on a missing role") {
  Lexicon lex = parse_one(
      "verb: enter | pattern: Theme \"enter\" Destination | before: | "
      "after: is-at(Theme,Destination)");
  CHECK_THROWS_AS(instantiate(lex.rules()[0], RoleBinding{{"Theme", "x"}}),
                  Error);
}

TEST_CASE("select_rule prefers the most specific match, then file order") {
  Lexicon lex = parse_lexicon(
      std::string(kHeader) +
      "verb: form | pattern: Material \"form\" - | before: | after: "
      "exists(Material)\n"
      "verb: form | pattern: Material \"form\" - (\"into\" Product) | "
      "before: not exists(Product) | after: exists(Product)\n");
  EventTuple with_prep =
      tuple("clay", "form", std::nullopt, {{"into", "a bowl"}});
  auto sel = select_rule(lex, with_prep);
  REQUIRE(sel.has_value());
  CHECK(sel->rule_index == 1);  // binds two roles, beats the one-role entry

  auto bare = select_rule(lex, tuple("clay", "form"));
  REQUIRE(bare.has_value());
  CHECK(bare->rule_index == 0);

  // Equal specificity: earlier entry wins.
  Lexicon tie = parse_lexicon(
      std::string(kHeader) +
      "verb: melt | class: a | pattern: Patient \"melt\" - | before: | "
      "after: phase(Patient,liquid)\n"
      "verb: melt | class: b | pattern: Patient \"melt\" - | before: | "
      "after: phase(Patient,gas)\n");
  auto t = select_rule(tie, tuple("wax", "melt"));
  REQUIRE(t.has_value());
  CHECK(t->rule_index == 0);

  CHECK_FALSE(select_rule(lex, tuple("wax", "melt")).has_value());
}

TEST_CASE("verb frame import keeps exists and location assertions") {
  SyntacticPattern p;
  p.subject_role = "Agent";
  p.verb = "carve";
  p.object_role = "Product";
  using When = VerbNetAssertion::When;
  VerbNetImport imp = import_verbnet_frame(
      " Carve ", "21.2-2", p,
      {
          {"exists", When::Start, true, {"Product"}},
          {"location", When::End, false, {"Product", "Agent"}},
          {"exists", When::Result, false, {"Product"}},
          {"motion", When::End, false, {"Agent"}},
          {"exists", When::None, false, {"Agent"}},
          {"location", When::End, false, {"Product"}},
      });
  CHECK(imp.rule.verb == "carve");
  CHECK(imp.rule.class_id == "21.2-2");
  REQUIRE(imp.rule.before.size() == 1);
  CHECK(imp.rule.before[0].pred == Pred::Exists);
  CHECK(imp.rule.before[0].negated);
  REQUIRE(imp.rule.after.size() == 2);
  CHECK(imp.rule.after[0].pred == Pred::IsAt);  // location -> is-at
  CHECK(imp.rule.after[0].args[0].is_variable);
  CHECK(imp.rule.after[1].pred == Pred::Exists);
  REQUIRE(imp.dropped.size() == 3);
  CHECK(imp.dropped[0] == "motion (unsupported predicate)");
  CHECK(imp.dropped[1] == "exists (no time anchor)");
  CHECK(imp.dropped[2] == "location (arity mismatch)");
}
