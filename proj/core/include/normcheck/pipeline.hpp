#ifndef NORMCHECK_PIPELINE_HPP
#define NORMCHECK_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "normcheck/annotate.hpp"
#include "normcheck/corpus.hpp"
#include "normcheck/ontology.hpp"
#include "normcheck/rules.hpp"

namespace normcheck {

// Fixed stage order: tokenize, ontology gazetteer, then rule phases.
// Extraction over the resulting annotation sets lives in extract.hpp.
struct Pipeline {
  std::vector<OntologyModel> ontologies;
  LabelIndex index;  // built over `ontologies`
  std::vector<Phase> phases;
};

Pipeline make_pipeline(std::vector<OntologyModel> ontologies,
                       std::vector<Phase> phases);

struct PipelineResult {
  std::map<std::string, AnnotationSet> by_doc;
  std::vector<std::string> errors;  // "<doc_id>: <message>", document order
};

// Annotates every document. Documents are independent; `jobs` only caps
// worker threads and never changes the result. Per-document failures are
// collected in `errors` without aborting the rest.
PipelineResult run_pipeline(const Pipeline& pipeline, const Corpus& corpus,
                            unsigned jobs = 1);

}  // namespace normcheck

#endif  // NORMCHECK_PIPELINE_HPP
