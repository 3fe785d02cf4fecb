#include "normcheck/rules.hpp"

#include "doctest.h"
#include "normcheck/error.hpp"

using namespace normcheck;

namespace {

Document doc_of(const std::string& text) {
  Document doc;
  doc.doc_id = "doc";
  doc.standard_ref = "ISO 0-0";
  doc.title = "t";
  doc.text = text;
  return doc;
}

const char* kReferencePhase = R"(
phase references;
// ISO document references
rule iso_ref priority 10:
  ({Word=="ISO"} ("/" {Word})? {Number} ("-" {Number})?)#ref
  -> Reference{standard_ref=$ref};
)";

}  // namespace

TEST_CASE("reference rule matches plain and part-qualified references") {
  Phase phase = parse_phase(kReferencePhase);
  Document doc = doc_of("see ISO 15531-44 and ISO/TS 16668 or ISO 10303.");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  auto refs = result.of_type("Reference");
  REQUIRE(refs.size() == 3);
  CHECK(refs[0]->features.at("standard_ref") == "ISO 15531-44");
  CHECK(doc.covered(refs[0]->span) == "ISO 15531-44");
  CHECK(refs[1]->features.at("standard_ref") == "ISO/TS 16668");
  CHECK(refs[2]->features.at("standard_ref") == "ISO 10303");
  CHECK(refs[0]->source == AnnotationSource::rule("iso_ref"));
}

TEST_CASE("a phase with no matching rules is the identity") {
  Phase phase = parse_phase("phase p; rule r priority 1: {Word==\"zzz\"} -> X{};");
  Document doc = doc_of("nothing matches here");
  AnnotationSet existing;
  Annotation seed;
  seed.span = {0, 7};
  seed.ann_type = "Seed";
  existing.add(seed);
  AnnotationSet result = run_phase(phase, doc, existing);
  REQUIRE(result.size() == existing.size());
  CHECK(result.annotations()[0].ann_type == "Seed");
  CHECK(result.annotations()[0].ann_id == existing.annotations()[0].ann_id);
}

TEST_CASE("priority breaks ties on match length") {
  const char* source = R"(
phase p;
rule low priority 5: {Word=="alpha"} {Word=="beta"} -> Low{};
rule high priority 10: {Word=="alpha"} {Word=="beta"} -> High{};
)";
  Phase phase = parse_phase(source);
  Document doc = doc_of("alpha beta");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(result.annotations()[0].ann_type == "High");
}

TEST_CASE("longest match wins over priority") {
  const char* source = R"(
phase p;
rule short priority 100: {Word=="alpha"} -> Short{};
rule long priority 1: {Word=="alpha"} {Word=="beta"} -> Long{};
)";
  Phase phase = parse_phase(source);
  Document doc = doc_of("alpha beta");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(result.annotations()[0].ann_type == "Long");
}

TEST_CASE("scan resumes after the matched region") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: {Word==\"aa\"} {Word==\"aa\"} -> Pair{};");
  Document doc = doc_of("aa aa aa");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  // Tokens 1+2 pair up, token 3 has no partner.
  CHECK(result.size() == 1);
}

TEST_CASE("star and plus quantifiers") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: {Word==\"very\"}+ {Word==\"good\"} -> Praise{};");
  Document doc = doc_of("very very very good and good");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(doc.covered(result.annotations()[0].span) == "very very very good");
}

TEST_CASE("kind and orth constraints") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: {kind==Word, orth==Upper} {kind==Number} -> Code{};");
  Document doc = doc_of("ABC 17 and abc 18");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(doc.covered(result.annotations()[0].span) == "ABC 17");
}

TEST_CASE("annotation constraints consume existing annotations") {
  Document doc = doc_of("resource status: availability");
  AnnotationSet existing;
  Annotation mention;
  mention.span = {0, 15};  // "resource status"
  mention.ann_type = "Mention";
  existing.add(mention);

  Phase phase = parse_phase(
      "phase p; rule lead priority 1: ({ann:Mention})#m \":\" -> LeadIn{head=$m};");
  AnnotationSet result = run_phase(phase, doc, existing);
  auto leads = result.of_type("LeadIn");
  REQUIRE(leads.size() == 1);
  CHECK(leads[0]->features.at("head") == "resource status");
  CHECK(doc.covered(leads[0]->span) == "resource status:");
}

TEST_CASE("bindings capture optional groups as empty when absent") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: {Word==\"ISO\"} {Number} (\"-\" {Number})#part? "
      "-> Ref{part=$part};");
  Document doc = doc_of("ISO 10303 cited");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(result.annotations()[0].features.at("part").empty());
}

TEST_CASE("unbound labels fail at load time") {
  const char* bad =
      "phase p; rule r priority 1: {Word==\"a\"} -> X{value=$missing};";
  try {
    parse_phase(bad);
    FAIL("expected RuleError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RuleError);
  }
}

TEST_CASE("malformed rule files raise ParseError") {
  CHECK_THROWS_AS(parse_phase("rule r priority 1: {Word} -> X{};"), Error);
  CHECK_THROWS_AS(parse_phase("phase p; rule r priority: -> X{};"), Error);
  CHECK_THROWS_AS(parse_phase("phase p; rule r priority 1: -> X{};"), Error);
  CHECK_THROWS_AS(
      parse_phase("phase p; rule r priority 1: {Word==\"a\"} -> X{}; rule r "
                  "priority 2: {Word==\"b\"} -> Y{};"),
      Error);
}

TEST_CASE("literal feature values") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: {Word==\"x\"} -> T{kind=\"fixed\", flag=on};");
  Document doc = doc_of("x");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(result.annotations()[0].features.at("kind") == "fixed");
  CHECK(result.annotations()[0].features.at("flag") == "on");
}

TEST_CASE("multiple actions per rule") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: ({Word==\"x\"})#w -> A{v=$w}, B{};");
  Document doc = doc_of("x");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  CHECK(result.size() == 2);
}

TEST_CASE("nested quantified groups take the longest parse") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: (({Word==\"a\"})+ {Word==\"b\"})+ -> T{};");
  Document doc = doc_of("a a b a b c");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(doc.covered(result.annotations()[0].span) == "a a b a b");
}

TEST_CASE("star over a multi-token group") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: ({Word==\"x\"} {Word==\"y\"})* {Word==\"z\"} -> T{};");
  Document doc = doc_of("x y x y z");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(doc.covered(result.annotations()[0].span) == "x y x y z");
}

TEST_CASE("binding inside a repetition records the last iteration") {
  Phase phase = parse_phase(
      "phase p; rule r priority 1: (({kind==Word})#w)+ -> T{v=$w};");
  Document doc = doc_of("alpha beta gamma");
  AnnotationSet result = run_phase(phase, doc, AnnotationSet{});
  REQUIRE(result.size() == 1);
  CHECK(doc.covered(result.annotations()[0].span) == "alpha beta gamma");
  CHECK(result.annotations()[0].features.at("v") == "gamma");
}

TEST_CASE("annotation constraints require token-aligned ends") {
  Document doc = doc_of("resource status here");
  AnnotationSet existing;
  Annotation misaligned;
  misaligned.span = {0, 10};  // "resource s" — ends inside a token
  misaligned.ann_type = "Mention";
  existing.add(misaligned);
  Phase phase = parse_phase(
      "phase p; rule r priority 1: {ann:Mention} -> Hit{};");
  AnnotationSet result = run_phase(phase, doc, existing);
  CHECK(result.of_type("Hit").empty());
}
