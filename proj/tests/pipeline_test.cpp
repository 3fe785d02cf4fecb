#include "normcheck/pipeline.hpp"

#include "doctest.h"
#include "normcheck/report.hpp"

using namespace normcheck;

namespace {

Corpus two_doc_corpus() {
  Corpus corpus;
  corpus.corpus_id = "c";
  for (int i = 1; i <= 2; ++i) {
    Document doc;
    doc.doc_id = "d" + std::to_string(i);
    doc.standard_ref = "ISO 1-" + std::to_string(i);
    doc.title = "part";
    doc.text = "1 Scope\nresource data and ISO 15531-44 cited, resource again\n";
    doc.clauses = parse_clauses(doc.text);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

Pipeline demo_pipeline() {
  OntologyModel m;
  m.ontology_id = "demo";
  m.iri_base = "http://e/#";
  m.classes = {{"http://e/#R", "resource", {}, {}, {}}};
  Phase phase = parse_phase(R"(
phase references;
rule iso_ref priority 10:
  ({Word=="ISO"} ("/" {Word})? {Number} ("-" {Number})?)#ref
  -> Reference{standard_ref=$ref};
)");
  return make_pipeline({m}, {phase});
}

}  // namespace

TEST_CASE("pipeline annotates every document") {
  Corpus corpus = two_doc_corpus();
  Pipeline pipeline = demo_pipeline();
  PipelineResult result = run_pipeline(pipeline, corpus);
  CHECK(result.errors.empty());
  REQUIRE(result.by_doc.size() == 2);
  for (const auto& [doc_id, set] : result.by_doc) {
    CHECK(set.of_type("Mention").size() == 2);
    CHECK(set.of_type("Reference").size() == 1);
  }
}

TEST_CASE("empty corpus maps to an empty result") {
  Corpus corpus;
  Pipeline pipeline = demo_pipeline();
  PipelineResult result = run_pipeline(pipeline, corpus);
  CHECK(result.by_doc.empty());
  CHECK(result.errors.empty());
}

TEST_CASE("results are identical for any worker count") {
  Corpus corpus = two_doc_corpus();
  Pipeline pipeline = demo_pipeline();
  PipelineResult serial = run_pipeline(pipeline, corpus, 1);
  PipelineResult parallel = run_pipeline(pipeline, corpus, 8);
  REQUIRE(serial.by_doc.size() == parallel.by_doc.size());
  for (const auto& [doc_id, set] : serial.by_doc) {
    std::string a = annotations_to_json(doc_id, set);
    std::string b = annotations_to_json(doc_id, parallel.by_doc.at(doc_id));
    CHECK(a == b);
  }
}

TEST_CASE("two runs serialize byte-identically") {
  Corpus corpus = two_doc_corpus();
  Pipeline pipeline = demo_pipeline();
  PipelineResult r1 = run_pipeline(pipeline, corpus, 4);
  PipelineResult r2 = run_pipeline(pipeline, corpus, 4);
  for (const auto& [doc_id, set] : r1.by_doc) {
    CHECK(annotations_to_json(doc_id, set) ==
          annotations_to_json(doc_id, r2.by_doc.at(doc_id)));
  }
}
