#ifndef NORMCHECK_CONSISTENCY_HPP
#define NORMCHECK_CONSISTENCY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcheck/annotate.hpp"
#include "normcheck/corpus.hpp"
#include "normcheck/extract.hpp"
#include "normcheck/ontology.hpp"
#include "normcheck/populate.hpp"

namespace normcheck {

enum class FindingKind {
  DuplicateDefinition,   // same term defined in several clauses, near-identical
  DivergentDefinition,   // same term, definitions drift apart
  AdaptedDefinition,     // definition adapted from another source
  DanglingReference,     // cited standard not in corpus or registry
  CaseAmbiguity,         // acronym label collides with a lowercase word
  TitleContentMismatch,  // clause heading differs from the definition lead-in
  MultiParentWarning,    // ambiguous candidate placement
};

enum class Severity { Info, Warning, Error };

const char* to_string(FindingKind kind);
const char* to_string(Severity severity);

struct FindingLocation {
  std::string doc_id;
  std::string clause_number;
  Span span;
};

struct ConsistencyFinding {
  FindingKind kind;
  Severity severity = Severity::Info;
  std::vector<FindingLocation> locations;  // never empty
  std::string detail;
  std::optional<double> similarity;
};

struct CheckerConfig {
  // A term group counts as a near-identical duplicate at or above this
  // minimum pairwise Jaccard similarity; below it the group diverges.
  double duplicate_similarity_threshold = 0.95;
  int case_ambiguity_min_count = 1;
};

// Token-level Jaccard over case-folded Word/Number tokens, punctuation
// excluded. Symmetric, reflexive (=1); defined as 0 against an empty token
// set unless both are empty (then 1).
double definition_similarity(std::string_view a, std::string_view b);

// Terms defined in two or more clauses: Warning when every definition pair
// stays at or above the threshold, Error otherwise. The recorded similarity
// is the group's minimum pairwise value.
std::vector<ConsistencyFinding> check_duplicate_definitions(
    const std::vector<TermEntry>& entries, const CheckerConfig& config);

std::vector<ConsistencyFinding> check_adapted_definitions(
    const std::vector<TermEntry>& entries);

// For every AcronymExact label whose lowercase form occurs as a standalone
// word: one Info finding listing the annotated acronym mentions and the
// lowercase occurrences.
std::vector<ConsistencyFinding> check_case_ambiguity(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations,
    const LabelIndex& index, const CheckerConfig& config);

// Definition lead-ins of the form "<words>:" that do not restate the clause
// heading term.
std::vector<ConsistencyFinding> check_title_content_mismatch(
    const std::vector<TermEntry>& entries);

std::vector<ConsistencyFinding> check_dangling_references(
    const std::vector<ReferenceLink>& links);

// Union of all checks plus one MultiParentWarning per Ambiguous candidate,
// sorted by (doc_id, span start, kind).
std::vector<ConsistencyFinding> run_all_checks(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations,
    const std::vector<TermEntry>& entries,
    const std::vector<ReferenceLink>& links,
    const std::vector<CandidateClass>& candidates, const LabelIndex& index,
    const CheckerConfig& config);

}  // namespace normcheck

#endif  // NORMCHECK_CONSISTENCY_HPP
