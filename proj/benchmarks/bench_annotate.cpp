#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "normcheck/annotate.hpp"
#include "normcheck/consistency.hpp"
#include "normcheck/rules.hpp"

using namespace normcheck;

namespace {

std::string synthetic_text(std::size_t target_bytes) {
  static const std::vector<std::string> words = {
      "the",      "resource", "status",   "of",    "each",   "manufacturing",
      "process",  "is",       "recorded", "with",  "a",      "time",
      "interval", "and",      "shop",     "floor", "data",   "from",
      "ISO",      "15531",    "flow",     "control"};
  std::string text;
  std::size_t i = 0;
  while (text.size() < target_bytes) {
    text += words[i++ % words.size()];
    text.push_back(i % 19 == 0 ? '\n' : ' ');
  }
  return text;
}

OntologyModel bench_model() {
  OntologyModel m;
  m.ontology_id = "bench";
  m.iri_base = "http://example.org/bench#";
  const char* labels[] = {"resource",      "status", "manufacturing process",
                          "time interval", "shop floor data", "flow control"};
  int i = 0;
  for (const char* label : labels) {
    m.classes.push_back({m.iri_base + "C" + std::to_string(i++), label, {}, {}, {}});
  }
  return m;
}

}  // namespace

static void BM_tokenize(benchmark::State& state) {
  std::string text = synthetic_text(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tokenize(text));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_tokenize)->Range(1 << 12, 1 << 18);

static void BM_gazetteer(benchmark::State& state) {
  std::string text = synthetic_text(static_cast<std::size_t>(state.range(0)));
  Document doc;
  doc.doc_id = "bench";
  doc.standard_ref = "b";
  doc.title = "b";
  doc.text = text;
  LabelIndex index = LabelIndex::build({bench_model()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(gazetteer_annotate(doc, index));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_gazetteer)->Range(1 << 12, 1 << 16);

static void BM_reference_phase(benchmark::State& state) {
  std::string text = synthetic_text(static_cast<std::size_t>(state.range(0)));
  Document doc;
  doc.doc_id = "bench";
  doc.standard_ref = "b";
  doc.title = "b";
  doc.text = text;
  Phase phase = parse_phase(R"(
phase references;
rule iso_ref priority 10:
  ({Word=="ISO"} ("/" {Word})? {Number} ("-" {Number})?)#ref
  -> Reference{standard_ref=$ref};
)");
  AnnotationSet empty;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_phase(phase, doc, empty));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_reference_phase)->Range(1 << 12, 1 << 16);

static void BM_definition_similarity(benchmark::State& state) {
  std::string a = synthetic_text(256);
  std::string b = synthetic_text(300);
  for (auto _ : state) {
    benchmark::DoNotOptimize(definition_similarity(a, b));
  }
}
BENCHMARK(BM_definition_similarity);

BENCHMARK_MAIN();
