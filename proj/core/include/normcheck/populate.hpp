#ifndef NORMCHECK_POPULATE_HPP
#define NORMCHECK_POPULATE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normcheck/corpus.hpp"
#include "normcheck/ontology.hpp"

namespace normcheck {

enum class CandidateStatus { New, MatchesExisting, Ambiguous };

const char* to_string(CandidateStatus status);

// A proposed ontology class. Candidates are review output only; source
// models are never mutated. New candidates with no parents go under the
// designated "CandidateConcept" root at review time.
struct CandidateClass {
  std::string term;
  std::vector<std::string> proposed_parents;  // class IRIs, sorted
  std::string doc_id;                         // evidence term entry
  std::string clause_number;
  Span span;
  std::optional<std::string> genus;
  CandidateStatus status = CandidateStatus::New;
};

// Head noun phrase of a definition: leading determiners and a
// "<term> is/means" lead-in are skipped, then the word prefix up to the
// first of that/which/of/for, comma or period is taken, lowercased.
std::optional<std::string> extract_genus(std::string_view definition);

// Places each extracted term against the loaded ontologies: an existing
// label match wins; otherwise the genus decides the parent. Two or more
// candidate parents (a term like "part" labeled by several ontologies) make
// the placement Ambiguous, and every placement is kept.
std::vector<CandidateClass> propose_candidates(
    const std::vector<TermEntry>& entries, const LabelIndex& index);

}  // namespace normcheck

#endif  // NORMCHECK_POPULATE_HPP
