#include "normcheck/pipeline.hpp"

#include <atomic>
#include <thread>

namespace normcheck {

Pipeline make_pipeline(std::vector<OntologyModel> ontologies,
                       std::vector<Phase> phases) {
  Pipeline pipeline;
  pipeline.ontologies = std::move(ontologies);
  pipeline.index = LabelIndex::build(pipeline.ontologies);
  pipeline.phases = std::move(phases);
  return pipeline;
}

namespace {

AnnotationSet annotate_document(const Pipeline& pipeline, const Document& doc) {
  std::vector<Token> tokens = tokenize(doc.text);
  AnnotationSet set;
  gazetteer_annotate(tokens, pipeline.index, set);
  for (const Phase& phase : pipeline.phases) {
    set = run_phase(phase, doc, tokens, set);
  }
  return set;
}

}  // namespace

PipelineResult run_pipeline(const Pipeline& pipeline, const Corpus& corpus,
                            unsigned jobs) {
  const std::size_t n = corpus.documents.size();
  std::vector<AnnotationSet> sets(n);
  std::vector<std::string> errors(n);

  if (jobs == 0) jobs = 1;
  jobs = std::min<unsigned>(jobs, n == 0 ? 1 : static_cast<unsigned>(n));

  auto work = [&](std::size_t i) {
    const Document& doc = corpus.documents[i];
    try {
      sets[i] = annotate_document(pipeline, doc);
    } catch (const std::exception& e) {
      errors[i] = doc.doc_id + ": " + e.what();
    }
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          work(i);
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }

  PipelineResult result;
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      result.errors.push_back(std::move(errors[i]));
    } else {
      result.by_doc.emplace(corpus.documents[i].doc_id, std::move(sets[i]));
    }
  }
  return result;
}

}  // namespace normcheck
