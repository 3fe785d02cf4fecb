#ifndef NORMCHECK_ANNOTATE_HPP
#define NORMCHECK_ANNOTATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "normcheck/corpus.hpp"
#include "normcheck/ontology.hpp"
#include "normcheck/token.hpp"

namespace normcheck {

enum class AnnotationSourceKind { Gazetteer, Rule, Extractor };

struct AnnotationSource {
  AnnotationSourceKind kind = AnnotationSourceKind::Gazetteer;
  std::string rule_name;  // set for Rule sources

  static AnnotationSource gazetteer() { return {AnnotationSourceKind::Gazetteer, {}}; }
  static AnnotationSource rule(std::string name) {
    return {AnnotationSourceKind::Rule, std::move(name)};
  }
  static AnnotationSource extractor() { return {AnnotationSourceKind::Extractor, {}}; }

  std::string to_string() const;
  friend bool operator==(const AnnotationSource&, const AnnotationSource&) = default;
};

// Stand-off annotation: the document text is never touched, spans reference
// it by byte offsets. Ontology-derived annotations always carry `class_iri`
// and `ontology_id` features.
struct Annotation {
  std::int64_t ann_id = -1;
  Span span;
  std::string ann_type;  // "Mention", "Reference", ...
  std::map<std::string, std::string> features;
  AnnotationSource source;
};

// Sort key used throughout: (start, end, type), with deterministic
// tie-breaks on features and source so that runs are byte-reproducible.
bool annotation_order(const Annotation& a, const Annotation& b);

class AnnotationSet {
 public:
  explicit AnnotationSet(std::string set_name = "default")
      : set_name_(std::move(set_name)) {}

  // Assigns the next ann_id and inserts at the sorted position. Existing
  // annotations are never moved or rewritten, only displaced in the list.
  std::int64_t add(Annotation annotation);

  const std::vector<Annotation>& annotations() const { return annotations_; }
  const std::string& set_name() const { return set_name_; }
  std::size_t size() const { return annotations_.size(); }
  bool empty() const { return annotations_.empty(); }

  const Annotation* find(std::int64_t ann_id) const;
  std::vector<const Annotation*> of_type(std::string_view type) const;

 private:
  std::string set_name_;
  std::vector<Annotation> annotations_;
  std::int64_t next_id_ = 0;
};

// Ontology gazetteer over the token stream: every non-space token
// subsequence equal to an indexed label (under the label's case policy)
// becomes a "Mention". Overlaps are resolved longest-match-leftmost within
// each ontology; matches from different ontologies may coexist.
AnnotationSet gazetteer_annotate(const Document& doc, const LabelIndex& index);

// Same, reusing an existing token stream and appending into `out`.
void gazetteer_annotate(const std::vector<Token>& tokens,
                        const LabelIndex& index, AnnotationSet& out);

}  // namespace normcheck

#endif  // NORMCHECK_ANNOTATE_HPP
