#ifndef NORMCHECK_EXTRACT_HPP
#define NORMCHECK_EXTRACT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "normcheck/annotate.hpp"
#include "normcheck/corpus.hpp"
#include "normcheck/ontology.hpp"

namespace normcheck {

// Surface-identity co-reference: one entity per (class IRI, canonical term).
struct Entity {
  std::string entity_id;
  std::string canonical_term;
  std::string class_iri;
  std::vector<std::pair<std::string, std::int64_t>> mentions;  // (doc_id, ann_id)
};

struct ReferenceLink {
  std::string from_doc;
  Span span;
  std::string target_ref;  // normalized "ORG NUMBER[-PART]"
  bool resolved = false;
  std::optional<std::string> target_doc;  // set when the target is in the corpus
};

struct RegistryEntry {
  std::string standard_ref;
  std::string title;
};

// Local mirror of the standards database: [{standard_ref, title}].
std::vector<RegistryEntry> load_registry(const std::string& path);

// Groups Mention annotations by (class_iri, canonical term). The canonical
// term is the covered text folded under the matched label's case policy.
std::vector<Entity> link_mentions(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations);

// "ISO 15531 - 44" and "ISO  15531-44" both normalize to "ISO 15531-44".
std::string normalize_standard_ref(std::string_view text);

// Lifts Reference annotations to links, resolving each target against the
// corpus documents' standard_refs and then the registry.
std::vector<ReferenceLink> extract_references(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations,
    const std::vector<RegistryEntry>& registry);

// Knowledge-domain category of an annotation: ontology-derived annotations
// take their ontology's category; rule annotations come from the
// standards-database reference phases. Throws Error{UnknownSource} for
// annotations with neither provenance.
DomainCategory classify_provenance(const Annotation& annotation,
                                   const std::vector<OntologyModel>& ontologies);

}  // namespace normcheck

#endif  // NORMCHECK_EXTRACT_HPP
