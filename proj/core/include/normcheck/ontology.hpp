#ifndef NORMCHECK_ONTOLOGY_HPP
#define NORMCHECK_ONTOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace normcheck {

enum class DomainCategory {
  GenericStandards,
  StandardsDatabase,
  ExternalTechnical,
  DomainSpecific,
};

const char* to_string(DomainCategory category);
std::optional<DomainCategory> parse_domain_category(std::string_view name);

struct ClassEntry {
  std::string iri;
  std::string primary_label;
  std::vector<std::string> alt_labels;
  std::optional<std::string> definition;
  std::optional<std::string> source_ref;
};

using SubclassEdge = std::pair<std::string, std::string>;  // (child, parent)

struct OntologyModel {
  std::string ontology_id;
  std::string iri_base;
  DomainCategory domain_category = DomainCategory::DomainSpecific;
  std::vector<ClassEntry> classes;
  std::vector<SubclassEdge> subclass_edges;
  std::vector<std::string> object_properties;
  std::vector<std::string> datatype_properties;
  bool fold_plural = false;  // enables the naive trailing-"s" label fold

  const ClassEntry* find_class(std::string_view iri) const;
};

// Loaders return the model together with non-fatal notes (skipped RDF
// constructs, multiple inheritance, subclass cycles).
struct OntologyLoad {
  OntologyModel model;
  std::vector<std::string> warnings;
};

// Native JSON ontology format. Throws Error{ParseError, DuplicateIri,
// DanglingEdge, IoError}.
OntologyLoad load_ontology_native(const std::string& path);

// Constrained RDF/XML import: owl:Class, rdfs:label, skos:altLabel,
// rdfs:subClassOf with rdf:resource, owl:ObjectProperty,
// owl:DatatypeProperty, rdfs:comment (-> definition). Anything else is
// skipped with a warning. ontology_id defaults to the file stem; metadata
// not expressible in RDF/XML (domain category, plural fold) comes from the
// arguments.
OntologyLoad load_ontology_rdfxml_subset(
    const std::string& path, std::string ontology_id = {},
    DomainCategory category = DomainCategory::DomainSpecific);

// Content comparison used by the dual-format loader tests: classes (iri,
// labels, definition), subclass edge set and property sets. Ontology ids and
// domain categories are carrier metadata and not compared.
bool structurally_equal(const OntologyModel& a, const OntologyModel& b);

struct OntologyStats {
  std::size_t classes = 0;
  std::size_t object_properties = 0;
  std::size_t datatype_properties = 0;
  std::size_t subclass_edges = 0;
  std::size_t roots = 0;  // classes with no outgoing subclass edge
};

OntologyStats ontology_stats(const OntologyModel& model);

// Subclass edges with cycles broken: per cycle, the lexicographically
// smallest (child, parent) pair is dropped. Identity on acyclic inputs.
std::vector<SubclassEdge> acyclic_edges(const OntologyModel& model);

enum class CasePolicy { CaseInsensitive, AcronymExact };
enum class LabelKind { Primary, Alternate };

const char* to_string(CasePolicy policy);

struct LabelIndexEntry {
  std::string class_iri;
  std::string ontology_id;
  std::string label;                        // original surface form
  std::vector<std::string> surface_tokens;  // label tokens, original case
  LabelKind kind = LabelKind::Primary;
  CasePolicy policy = CasePolicy::CaseInsensitive;
  bool plural_variant = false;  // key carries a trailing-"s" fold
};

// All-uppercase labels of at most six characters are matched exactly; this
// keeps "is" (the verb) from matching the "IS" acronym.
CasePolicy case_policy_for(std::string_view label);

// Immutable token-sequence lookup over every primary and alternate label of
// a set of ontologies.
class LabelIndex {
 public:
  LabelIndex() = default;

  static LabelIndex build(const std::vector<OntologyModel>& models);

  // Key for a case-folded token sequence (Space tokens excluded).
  static std::string key_of(const std::vector<std::string>& folded_tokens);

  // Entries under a key; empty list for unindexed sequences.
  const std::vector<LabelIndexEntry>& lookup(const std::string& key) const;

  // Tokenizes a phrase, folds it and returns the entries whose case policy
  // accepts the phrase's surface form.
  std::vector<LabelIndexEntry> lookup_phrase(std::string_view phrase) const;

  // Longest indexed label, in non-space tokens.
  std::size_t max_key_tokens() const { return max_key_tokens_; }

  bool empty() const { return entries_.empty(); }

  // Distinct AcronymExact labels, for the case-ambiguity check.
  std::vector<std::string> acronym_labels() const;

  const std::unordered_map<std::string, std::vector<LabelIndexEntry>>&
  entries() const {
    return entries_;
  }

 private:
  std::unordered_map<std::string, std::vector<LabelIndexEntry>> entries_;
  std::size_t max_key_tokens_ = 0;
};

}  // namespace normcheck

#endif  // NORMCHECK_ONTOLOGY_HPP
