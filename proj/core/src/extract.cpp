#include "normcheck/extract.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

#include "normcheck/error.hpp"
#include "normcheck/token.hpp"

namespace normcheck {

std::vector<RegistryEntry> load_registry(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open registry " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "registry " + path + ": " + e.what());
  }
  std::vector<RegistryEntry> out;
  try {
    for (const auto& item : j) {
      out.push_back({item.at("standard_ref").get<std::string>(),
                     item.value("title", std::string())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "registry " + path + ": " + e.what());
  }
  return out;
}

std::vector<Entity> link_mentions(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations) {
  // (class_iri, canonical_term) -> mentions in corpus order
  std::map<std::pair<std::string, std::string>,
           std::vector<std::pair<std::string, std::int64_t>>>
      groups;

  for (const Document& doc : corpus.documents) {
    auto it = annotations.find(doc.doc_id);
    if (it == annotations.end()) continue;
    for (const Annotation& ann : it->second.annotations()) {
      if (ann.ann_type != "Mention") continue;
      auto class_it = ann.features.find("class_iri");
      if (class_it == ann.features.end()) continue;

      std::string covered(doc.covered(ann.span));
      auto label_it = ann.features.find("matched_label");
      CasePolicy policy = label_it != ann.features.end()
                              ? case_policy_for(label_it->second)
                              : CasePolicy::CaseInsensitive;
      std::string canonical =
          policy == CasePolicy::AcronymExact ? covered : fold_case(covered);
      groups[{class_it->second, canonical}].emplace_back(doc.doc_id, ann.ann_id);
    }
  }

  std::vector<Entity> entities;
  std::size_t counter = 0;
  for (auto& [key, mentions] : groups) {
    Entity entity;
    std::ostringstream id;
    id << 'e' << std::setw(4) << std::setfill('0') << counter++;
    entity.entity_id = id.str();
    entity.class_iri = key.first;
    entity.canonical_term = key.second;
    entity.mentions = std::move(mentions);
    entities.push_back(std::move(entity));
  }
  return entities;
}

std::string normalize_standard_ref(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  std::vector<const Token*> view;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Space) view.push_back(&t);
  }
  // ORG ("/" SUB)? NUMBER ("-" NUMBER)?
  std::size_t i = 0;
  std::string org;
  if (i < view.size() && view[i]->kind == TokenKind::Word) {
    org = view[i++]->surface;
    if (i + 1 < view.size() && view[i]->surface == "/" &&
        view[i + 1]->kind == TokenKind::Word) {
      org += "/" + view[i + 1]->surface;
      i += 2;
    }
  }
  if (!org.empty() && i < view.size() && view[i]->kind == TokenKind::Number) {
    std::string ref = org + " " + view[i]->surface;
    ++i;
    if (i + 1 < view.size() && view[i]->surface == "-" &&
        view[i + 1]->kind == TokenKind::Number) {
      ref += "-" + view[i + 1]->surface;
    }
    return ref;
  }
  // Unrecognized shape: collapse whitespace runs.
  std::string out;
  for (const Token& t : tokens) {
    if (t.kind == TokenKind::Space) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out += t.surface;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<ReferenceLink> extract_references(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations,
    const std::vector<RegistryEntry>& registry) {
  std::vector<ReferenceLink> links;
  for (const Document& doc : corpus.documents) {
    auto it = annotations.find(doc.doc_id);
    if (it == annotations.end()) continue;
    for (const Annotation& ann : it->second.annotations()) {
      if (ann.ann_type != "Reference") continue;
      auto feature = ann.features.find("standard_ref");
      std::string raw = feature != ann.features.end() && !feature->second.empty()
                            ? feature->second
                            : std::string(doc.covered(ann.span));
      ReferenceLink link;
      link.from_doc = doc.doc_id;
      link.span = ann.span;
      link.target_ref = normalize_standard_ref(raw);
      for (const Document& target : corpus.documents) {
        if (target.standard_ref == link.target_ref) {
          link.resolved = true;
          link.target_doc = target.doc_id;
          break;
        }
      }
      if (!link.resolved) {
        for (const RegistryEntry& entry : registry) {
          if (entry.standard_ref == link.target_ref) {
            link.resolved = true;
            break;
          }
        }
      }
      links.push_back(std::move(link));
    }
  }
  return links;
}

DomainCategory classify_provenance(const Annotation& annotation,
                                   const std::vector<OntologyModel>& ontologies) {
  auto it = annotation.features.find("ontology_id");
  if (it != annotation.features.end()) {
    for (const OntologyModel& model : ontologies) {
      if (model.ontology_id == it->second) return model.domain_category;
    }
    throw Error(ErrorCode::UnknownSource,
                "annotation references unknown ontology '" + it->second + "'");
  }
  if (annotation.source.kind == AnnotationSourceKind::Rule) {
    return DomainCategory::StandardsDatabase;
  }
  throw Error(ErrorCode::UnknownSource,
              "annotation has neither an ontology nor a rule source");
}

}  // namespace normcheck
