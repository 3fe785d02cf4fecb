#include "normcheck/annotate.hpp"

#include <algorithm>
#include <set>

namespace normcheck {

std::string AnnotationSource::to_string() const {
  switch (kind) {
    case AnnotationSourceKind::Gazetteer: return "Gazetteer";
    case AnnotationSourceKind::Rule: return "Rule:" + rule_name;
    case AnnotationSourceKind::Extractor: return "Extractor";
  }
  return "Gazetteer";
}

bool annotation_order(const Annotation& a, const Annotation& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.span.end != b.span.end) return a.span.end < b.span.end;
  if (a.ann_type != b.ann_type) return a.ann_type < b.ann_type;
  if (a.features != b.features) return a.features < b.features;
  return a.source.to_string() < b.source.to_string();
}

std::int64_t AnnotationSet::add(Annotation annotation) {
  annotation.ann_id = next_id_++;
  auto pos = std::upper_bound(annotations_.begin(), annotations_.end(),
                              annotation, annotation_order);
  std::int64_t id = annotation.ann_id;
  annotations_.insert(pos, std::move(annotation));
  return id;
}

const Annotation* AnnotationSet::find(std::int64_t ann_id) const {
  for (const Annotation& a : annotations_) {
    if (a.ann_id == ann_id) return &a;
  }
  return nullptr;
}

std::vector<const Annotation*> AnnotationSet::of_type(std::string_view type) const {
  std::vector<const Annotation*> out;
  for (const Annotation& a : annotations_) {
    if (a.ann_type == type) out.push_back(&a);
  }
  return out;
}

namespace {

struct Match {
  std::size_t first_token;  // index into the non-space token view
  std::size_t token_count;
  const LabelIndexEntry* entry;
};

// Surface tokens must equal the label's tokens exactly for acronym labels;
// folded equality was already established by the index key.
bool policy_accepts(const LabelIndexEntry& entry,
                    const std::vector<const Token*>& view, std::size_t first,
                    std::size_t count) {
  if (entry.policy != CasePolicy::AcronymExact) return true;
  if (entry.surface_tokens.size() != count) return false;
  for (std::size_t i = 0; i < count; ++i) {
    if (view[first + i]->surface != entry.surface_tokens[i]) return false;
  }
  return true;
}

}  // namespace

void gazetteer_annotate(const std::vector<Token>& tokens,
                        const LabelIndex& index, AnnotationSet& out) {
  if (index.empty()) return;

  std::vector<const Token*> view;
  view.reserve(tokens.size());
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Space) view.push_back(&t);
  }

  // Ontology ids in deterministic order; the longest-match-leftmost scan
  // runs independently per ontology so cross-ontology overlaps survive.
  std::set<std::string> ontology_ids;
  for (const auto& [key, entries] : index.entries()) {
    for (const LabelIndexEntry& e : entries) ontology_ids.insert(e.ontology_id);
  }

  const std::size_t max_len = index.max_key_tokens();
  for (const std::string& ontology_id : ontology_ids) {
    std::size_t i = 0;
    while (i < view.size()) {
      Match best{0, 0, nullptr};
      std::string key;
      for (std::size_t len = 1; len <= max_len && i + len <= view.size(); ++len) {
        if (len > 1) key.push_back('\x1f');
        key += fold_case(view[i + len - 1]->surface);
        for (const LabelIndexEntry& entry : index.lookup(key)) {
          if (entry.ontology_id != ontology_id) continue;
          if (!policy_accepts(entry, view, i, len)) continue;
          if (len > best.token_count) best = Match{i, len, &entry};
        }
      }
      if (!best.entry) {
        ++i;
        continue;
      }
      // All entries of the winning length are emitted (one label can name
      // several classes within one ontology).
      std::string best_key;
      for (std::size_t k = 0; k < best.token_count; ++k) {
        if (k) best_key.push_back('\x1f');
        best_key += fold_case(view[i + k]->surface);
      }
      Span span{view[i]->span.start, view[i + best.token_count - 1]->span.end};
      for (const LabelIndexEntry& entry : index.lookup(best_key)) {
        if (entry.ontology_id != ontology_id) continue;
        if (!policy_accepts(entry, view, i, best.token_count)) continue;
        Annotation ann;
        ann.span = span;
        ann.ann_type = "Mention";
        ann.features["class_iri"] = entry.class_iri;
        ann.features["ontology_id"] = entry.ontology_id;
        ann.features["matched_label"] = entry.label;
        ann.source = AnnotationSource::gazetteer();
        out.add(std::move(ann));
      }
      i += best.token_count;
    }
  }
}

AnnotationSet gazetteer_annotate(const Document& doc, const LabelIndex& index) {
  AnnotationSet out;
  gazetteer_annotate(tokenize(doc.text), index, out);
  return out;
}

}  // namespace normcheck
