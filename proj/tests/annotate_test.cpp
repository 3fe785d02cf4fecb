#include "normcheck/annotate.hpp"

#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "normcheck/corpus.hpp"
#include "oracle.hpp"

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

OntologyModel model_with(std::string id,
                         std::vector<std::pair<std::string, std::string>> labels,
                         bool fold = false) {
  OntologyModel m;
  m.ontology_id = id;
  m.iri_base = "http://example.org/" + id + "#";
  m.fold_plural = fold;
  for (auto& [iri, label] : labels) {
    m.classes.push_back({m.iri_base + iri, label, {}, {}, {}});
  }
  return m;
}

std::vector<testing::MentionTuple> mentions_of(const AnnotationSet& set) {
  std::vector<testing::MentionTuple> out;
  for (const Annotation& ann : set.annotations()) {
    if (ann.ann_type != "Mention") continue;
    out.emplace_back(ann.span.start, ann.span.end, ann.features.at("class_iri"),
                     ann.features.at("ontology_id"),
                     ann.features.at("matched_label"));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("tokenize splits character classes") {
  auto tokens = tokenize("ISO 15531-44");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::Word);
  CHECK(tokens[0].surface == "ISO");
  CHECK(tokens[0].orth == Orth::Upper);
  CHECK(tokens[1].kind == TokenKind::Space);
  CHECK(tokens[2].kind == TokenKind::Number);
  CHECK(tokens[2].surface == "15531");
  CHECK(tokens[3].kind == TokenKind::Punct);
  CHECK(tokens[3].surface == "-");
  CHECK(tokens[4].surface == "44");
}

TEST_CASE("tokenize of empty text") { CHECK(tokenize("").empty()); }

TEST_CASE("orth distinguishes is from IS") {
  auto lower = tokenize("is");
  auto upper = tokenize("IS");
  CHECK(lower[0].orth == Orth::Lower);
  CHECK(upper[0].orth == Orth::Upper);
  CHECK(tokenize("Is")[0].orth == Orth::Capitalized);
  CHECK(tokenize("iSo")[0].orth == Orth::Mixed);
}

TEST_CASE("tokens tile the text") {
  std::mt19937 rng(77);
  const std::string pool =
      "abc XYZ 0123  .,;:-()\n\t resource ISO 15531 \xC3\xA9 \xE2\x82\xAC";
  for (int round = 0; round < 200; ++round) {
    std::string text;
    int pieces = static_cast<int>(rng() % 40);
    for (int i = 0; i < pieces; ++i) {
      std::size_t at = rng() % pool.size();
      // Snap to UTF-8 boundaries.
      while (at > 0 && (static_cast<unsigned char>(pool[at]) & 0xC0) == 0x80) --at;
      std::size_t len = 1 + rng() % 6;
      std::size_t end = std::min(pool.size(), at + len);
      while (end < pool.size() &&
             (static_cast<unsigned char>(pool[end]) & 0xC0) == 0x80) ++end;
      text += pool.substr(at, end - at);
    }
    auto tokens = tokenize(text);
    std::string rebuilt;
    std::size_t cursor = 0;
    for (const Token& t : tokens) {
      CHECK(t.span.start == cursor);
      CHECK(t.span.end > t.span.start);
      CHECK(text.substr(t.span.start, t.span.length()) == t.surface);
      rebuilt += t.surface;
      cursor = t.span.end;
    }
    CHECK(rebuilt == text);
  }
}

TEST_CASE("gazetteer prefers the longest match") {
  auto model = model_with("demo", {{"R", "resource"}, {"RS", "resource status"}});
  LabelIndex index = LabelIndex::build({model});
  Document doc = doc_of("the resource status field");
  AnnotationSet set = gazetteer_annotate(doc, index);
  REQUIRE(set.size() == 1);
  const Annotation& ann = set.annotations()[0];
  CHECK(doc.covered(ann.span) == "resource status");
  CHECK(ann.features.at("class_iri") == "http://example.org/demo#RS");
  CHECK(ann.source.kind == AnnotationSourceKind::Gazetteer);
}

TEST_CASE("acronym labels require exact surface form") {
  auto model = model_with("acr", {{"IS", "IS"}});
  LabelIndex index = LabelIndex::build({model});
  Document doc = doc_of("This is an International Standard. The IS applies.");
  AnnotationSet set = gazetteer_annotate(doc, index);
  REQUIRE(set.size() == 1);
  CHECK(doc.covered(set.annotations()[0].span) == "IS");
}

TEST_CASE("empty index annotates nothing") {
  LabelIndex index;
  Document doc = doc_of("resource status everywhere");
  CHECK(gazetteer_annotate(doc, index).empty());
}

TEST_CASE("matches from different ontologies coexist on overlapping spans") {
  auto a = model_with("a", {{"RS", "resource status"}});
  auto b = model_with("b", {{"S", "status"}});
  LabelIndex index = LabelIndex::build({a, b});
  Document doc = doc_of("resource status");
  AnnotationSet set = gazetteer_annotate(doc, index);
  REQUIRE(set.size() == 2);
  std::set<std::string> ids;
  for (const Annotation& ann : set.annotations()) {
    ids.insert(ann.features.at("ontology_id"));
  }
  CHECK(ids == std::set<std::string>{"a", "b"});
}

TEST_CASE("plural fold matches trailing-s forms when enabled") {
  auto folded = model_with("f", {{"R", "resource"}}, true);
  LabelIndex index = LabelIndex::build({folded});
  Document doc = doc_of("many resources here");
  AnnotationSet set = gazetteer_annotate(doc, index);
  REQUIRE(set.size() == 1);
  CHECK(doc.covered(set.annotations()[0].span) == "resources");
  CHECK(set.annotations()[0].features.at("matched_label") == "resource");

  auto unfolded = model_with("u", {{"R", "resource"}});
  LabelIndex plain = LabelIndex::build({unfolded});
  CHECK(gazetteer_annotate(doc, plain).empty());
}

TEST_CASE("offset soundness of mentions") {
  auto model = model_with("demo", {{"FC", "flow control"}, {"R", "resource"}});
  LabelIndex index = LabelIndex::build({model});
  Document doc = doc_of("flow control of a resource; flow control again");
  AnnotationSet set = gazetteer_annotate(doc, index);
  REQUIRE(set.size() == 3);
  for (const Annotation& ann : set.annotations()) {
    std::string covered(doc.covered(ann.span));
    CHECK(fold_case(covered) == fold_case(ann.features.at("matched_label")));
  }
}

TEST_CASE("gazetteer equals the brute-force oracle on random corpora") {
  std::mt19937 rng(20240812);
  const std::vector<std::string> vocab = {
      "resource", "status",  "flow",  "control", "time",   "model",
      "data",     "process", "shop",  "floor",   "unit",   "view",
      "IS",       "ISO",     "STEP",  "part",    "value",  "set"};

  for (int round = 0; round < 40; ++round) {
    // Random label set over the vocabulary, split across two ontologies.
    std::vector<OntologyModel> models;
    for (int m = 0; m < 2; ++m) {
      OntologyModel model;
      model.ontology_id = "ont" + std::to_string(m);
      model.iri_base = "http://example.org/" + model.ontology_id + "#";
      model.fold_plural = (rng() % 2) == 0;
      int classes = 1 + static_cast<int>(rng() % 6);
      for (int c = 0; c < classes; ++c) {
        std::string label = vocab[rng() % vocab.size()];
        if (rng() % 2) label += " " + vocab[rng() % vocab.size()];
        ClassEntry entry;
        entry.iri = model.iri_base + "C" + std::to_string(c);
        entry.primary_label = label;
        if (rng() % 3 == 0) {
          entry.alt_labels.push_back(vocab[rng() % vocab.size()]);
        }
        model.classes.push_back(std::move(entry));
      }
      models.push_back(std::move(model));
    }

    // Random document from the same vocabulary, mixed separators.
    std::string text;
    int words = 20 + static_cast<int>(rng() % 120);
    for (int w = 0; w < words; ++w) {
      switch (rng() % 8) {
        case 0: text += "\n"; break;
        case 1: text += ", "; break;
        case 2: text += "  "; break;
        default: text += " "; break;
      }
      std::string word = vocab[rng() % vocab.size()];
      if (rng() % 5 == 0) {
        for (char& ch : word) ch = static_cast<char>(std::toupper(ch));
      }
      if (rng() % 7 == 0) word += "s";
      text += word;
    }

    Document doc = doc_of(text);
    LabelIndex index = LabelIndex::build(models);
    AnnotationSet set = gazetteer_annotate(doc, index);
    auto got = mentions_of(set);
    auto want = testing::oracle_gazetteer(text, models);
    CHECK(got == want);
  }
}

TEST_CASE("annotation sets keep sorted order and unique ids") {
  AnnotationSet set;
  Annotation late;
  late.span = {10, 14};
  late.ann_type = "B";
  Annotation early;
  early.span = {2, 6};
  early.ann_type = "A";
  std::int64_t id1 = set.add(late);
  std::int64_t id2 = set.add(early);
  CHECK(id1 != id2);
  REQUIRE(set.size() == 2);
  CHECK(set.annotations()[0].span.start == 2);
  CHECK(set.annotations()[1].span.start == 10);
  CHECK(set.find(id1)->ann_type == "B");
}
