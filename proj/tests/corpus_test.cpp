#include "normcheck/corpus.hpp"

#include <random>
#include <sstream>

#include "doctest.h"
#include "normcheck/error.hpp"

using namespace normcheck;

namespace {

Document make_doc(const std::string& text) {
  return ingest_document(text, {"doc", "ISO 99999-1", "Test document"});
}

void check_nesting(const std::vector<Clause>& clauses, const Span& outer) {
  std::size_t prev_end = 0;
  bool first = true;
  for (const Clause& c : clauses) {
    CHECK(c.span.start < c.span.end);
    CHECK(outer.contains(c.span));
    if (!first) CHECK(c.span.start >= prev_end);  // siblings disjoint, ascending
    prev_end = c.span.end;
    first = false;
    check_nesting(c.children, c.span);
  }
}

}  // namespace

TEST_CASE("ingest rejects whitespace-only input") {
  CHECK_THROWS_AS(make_doc("   \n\t  \n"), Error);
  try {
    make_doc(" \n ");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDocument);
  }
}

TEST_CASE("ingest rejects invalid UTF-8") {
  std::string raw = "\xFF\xFE some bytes";
  CHECK_THROWS_AS(make_doc(raw), Error);
  try {
    make_doc(raw);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DecodeError);
  }
}

TEST_CASE("ingest normalizes line endings and strips the BOM") {
  Document doc = make_doc("\xEF\xBB\xBF" "1 Scope\r\nline one\rline two\n");
  CHECK(doc.text == "1 Scope\nline one\nline two\n");
}

TEST_CASE("ingest requires nonempty metadata") {
  CHECK_THROWS_AS(ingest_document("text", {"", "ref", "title"}), Error);
}

TEST_CASE("clause tree from heading lines") {
  Document doc = make_doc(
      "1 Scope\n"
      "This part specifies things.\n"
      "3 Terms and definitions\n"
      "3.1 flow control\n"
      "control exercised over a manufacturing flow\n"
      "4 Requirements\n"
      "Body text.\n");
  REQUIRE(doc.clauses.size() == 3);
  CHECK(doc.clauses[0].number == "1");
  CHECK(doc.clauses[0].kind == ClauseKind::Scope);
  CHECK(doc.clauses[1].number == "3");
  CHECK(doc.clauses[1].kind == ClauseKind::TermsAndDefinitions);
  REQUIRE(doc.clauses[1].children.size() == 1);
  CHECK(doc.clauses[1].children[0].number == "3.1");
  CHECK(doc.clauses[1].children[0].heading == "flow control");
  CHECK(doc.clauses[2].kind == ClauseKind::Body);

  check_nesting(doc.clauses, Span{0, doc.text.size()});
}

TEST_CASE("text without headings becomes a single Unknown clause") {
  Document doc = make_doc("just prose\nno numbering anywhere\n");
  REQUIRE(doc.clauses.size() == 1);
  CHECK(doc.clauses[0].kind == ClauseKind::Unknown);
  CHECK(doc.clauses[0].span.start == 0);
  CHECK(doc.clauses[0].span.end == doc.text.size());
}

TEST_CASE("annex heading lines") {
  Document doc = make_doc(
      "1 Scope\ntext\n"
      "Annex A Data acquisition models\n"
      "A.1 Overview\nannex body\n");
  REQUIRE(doc.clauses.size() == 2);
  CHECK(doc.clauses[1].number == "A");
  CHECK(doc.clauses[1].kind == ClauseKind::Annex);
  REQUIRE(doc.clauses[1].children.size() == 1);
  CHECK(doc.clauses[1].children[0].number == "A.1");
}

TEST_CASE("prose starting with a capital letter never opens a clause") {
  Document doc = make_doc("1 Scope\nA resource is not a clause heading.\n");
  REQUIRE(doc.clauses.size() == 1);
  CHECK(doc.clauses[0].children.empty());
}

TEST_CASE("clause spans begin with their heading line") {
  Document doc = make_doc(
      "1 Scope\ntext\n"
      "2 Normative references\nmore\n"
      "2.1 General\neven more\n");
  std::vector<const Clause*> all;
  for (const Clause& c : doc.clauses) {
    all.push_back(&c);
    for (const Clause& child : c.children) all.push_back(&child);
  }
  for (const Clause* c : all) {
    std::string_view covered = doc.covered(c->span);
    std::string expect = c->number;
    CHECK(covered.substr(0, expect.size()) == expect);
    std::string_view first_line = covered.substr(0, covered.find('\n'));
    CHECK(first_line.find(c->heading) != std::string_view::npos);
  }
}

TEST_CASE("term entries from a terms clause") {
  Document doc = make_doc(
      "3 Terms and definitions\n"
      "3.1 flow control\n"
      "control exercised over a manufacturing flow\n"
      "3.2 basic semantic register\n"
      "register of semantic units\n[adapted from ISO/TS 16668]\n");
  auto entries = extract_term_entries(doc);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].term == "flow control");
  CHECK(entries[0].definition == "control exercised over a manufacturing flow");
  CHECK(entries[0].clause_number == "3.1");
  CHECK_FALSE(entries[0].adapted_from.has_value());
  REQUIRE(entries[1].adapted_from.has_value());
  CHECK(*entries[1].adapted_from == "ISO/TS 16668");
}

TEST_CASE("adapted-from without brackets") {
  Document doc = make_doc(
      "3 Terms and definitions\n"
      "3.1 widget\n"
      "a small device, adapted from ISO 12345. More text follows.\n");
  auto entries = extract_term_entries(doc);
  REQUIRE(entries.size() == 1);
  REQUIRE(entries[0].adapted_from.has_value());
  CHECK(*entries[0].adapted_from == "ISO 12345");
}

TEST_CASE("documents without a terms clause yield no entries") {
  Document doc = make_doc("1 Scope\ntext\n4 Requirements\nbody\n");
  CHECK(extract_term_entries(doc).empty());
}

TEST_CASE("nested term groups only take leaves") {
  Document doc = make_doc(
      "3 Terms and definitions\n"
      "3.1 resources\n"
      "3.1.1 generic resource\n"
      "resource describing a family of resources\n"
      "3.1.2 individual resource\n"
      "a resource that is identified as one single unit\n");
  auto entries = extract_term_entries(doc);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].term == "generic resource");
  CHECK(entries[1].term == "individual resource");
}

TEST_CASE("extract_term_entries is pure and stable") {
  Document doc = make_doc(
      "3 Terms and definitions\n3.1 alpha\nfirst\n3.2 beta\nsecond\n");
  auto a = extract_term_entries(doc);
  auto b = extract_term_entries(doc);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].term == b[i].term);
    CHECK(a[i].span.start == b[i].span.start);
  }
}

TEST_CASE("clause invariants hold on generated documents") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 50; ++round) {
    std::ostringstream text;
    int top = 1 + static_cast<int>(rng() % 5);
    for (int c = 1; c <= top; ++c) {
      text << c << " Heading " << c << "\nbody line " << rng() % 100 << "\n";
      int subs = static_cast<int>(rng() % 4);
      for (int s = 1; s <= subs; ++s) {
        text << c << "." << s << " Sub heading\nmore body\n";
      }
    }
    Document doc = make_doc(text.str());
    check_nesting(doc.clauses, Span{0, doc.text.size()});
  }
}

TEST_CASE("clause_number_at finds the deepest clause") {
  Document doc = make_doc(
      "3 Terms and definitions\n3.1 widget\na device\n4 Requirements\nbody\n");
  std::size_t def_pos = doc.text.find("a device");
  CHECK(doc.clause_number_at(def_pos) == "3.1");
  std::size_t body_pos = doc.text.find("body");
  CHECK(doc.clause_number_at(body_pos) == "4");
}
