#include "normcheck/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "json.hpp"

#include "normcheck/error.hpp"
#include "normcheck/token.hpp"

namespace normcheck {

const char* to_string(DomainCategory category) {
  switch (category) {
    case DomainCategory::GenericStandards: return "GenericStandards";
    case DomainCategory::StandardsDatabase: return "StandardsDatabase";
    case DomainCategory::ExternalTechnical: return "ExternalTechnical";
    case DomainCategory::DomainSpecific: return "DomainSpecific";
  }
  return "DomainSpecific";
}

std::optional<DomainCategory> parse_domain_category(std::string_view name) {
  if (name == "GenericStandards") return DomainCategory::GenericStandards;
  if (name == "StandardsDatabase") return DomainCategory::StandardsDatabase;
  if (name == "ExternalTechnical") return DomainCategory::ExternalTechnical;
  if (name == "DomainSpecific") return DomainCategory::DomainSpecific;
  return std::nullopt;
}

const char* to_string(CasePolicy policy) {
  switch (policy) {
    case CasePolicy::CaseInsensitive: return "CaseInsensitive";
    case CasePolicy::AcronymExact: return "AcronymExact";
  }
  return "CaseInsensitive";
}

const ClassEntry* OntologyModel::find_class(std::string_view iri) const {
  for (const ClassEntry& entry : classes) {
    if (entry.iri == iri) return &entry;
  }
  return nullptr;
}

CasePolicy case_policy_for(std::string_view label) {
  if (label.empty() || label.size() > 6) return CasePolicy::CaseInsensitive;
  bool has_letter = false;
  for (char c : label) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc)) {
      has_letter = true;
      if (!std::isupper(uc)) return CasePolicy::CaseInsensitive;
    }
  }
  return has_letter ? CasePolicy::AcronymExact : CasePolicy::CaseInsensitive;
}

namespace {

std::string trimmed(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// Shared validation: DuplicateIri, DanglingEdge, then multiple-inheritance
// and cycle notes.
void validate_model(const OntologyModel& model, std::vector<std::string>& warnings) {
  std::set<std::string_view> iris;
  for (const ClassEntry& entry : model.classes) {
    if (!iris.insert(entry.iri).second) {
      throw Error(ErrorCode::DuplicateIri,
                  "class '" + entry.iri + "' declared twice in ontology '" +
                      model.ontology_id + "'");
    }
    if (trimmed(entry.primary_label) != entry.primary_label ||
        entry.primary_label.empty()) {
      throw Error(ErrorCode::ParseError,
                  "class '" + entry.iri + "' has an empty or unpadded label");
    }
  }
  std::map<std::string_view, int> parent_count;
  for (const auto& [child, parent] : model.subclass_edges) {
    if (!iris.count(child)) {
      throw Error(ErrorCode::DanglingEdge,
                  "subclass edge child '" + child + "' is not a declared class");
    }
    if (!iris.count(parent)) {
      throw Error(ErrorCode::DanglingEdge,
                  "subclass edge parent '" + parent + "' is not a declared class");
    }
    ++parent_count[child];
  }
  for (const auto& [child, count] : parent_count) {
    if (count >= 2) {
      warnings.push_back("MultiParent: class '" + std::string(child) + "' has " +
                         std::to_string(count) + " parents");
    }
  }
  if (acyclic_edges(model).size() != model.subclass_edges.size()) {
    warnings.push_back("SubclassCycle: ontology '" + model.ontology_id +
                       "' contains a subclass cycle");
  }
}

std::string label_from_json(const nlohmann::json& j) {
  std::string label = j.get<std::string>();
  if (label != trimmed(label)) {
    throw Error(ErrorCode::ParseError, "label '" + label + "' has padding whitespace");
  }
  return label;
}

}  // namespace

OntologyLoad load_ontology_native(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open ontology " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "ontology " + path + ": " + e.what());
  }

  OntologyLoad load;
  OntologyModel& model = load.model;
  try {
    model.ontology_id = j.at("ontology_id").get<std::string>();
    model.iri_base = j.at("iri_base").get<std::string>();
    auto category = parse_domain_category(j.at("domain_category").get<std::string>());
    if (!category) {
      throw Error(ErrorCode::ParseError,
                  "ontology " + path + ": unknown domain_category");
    }
    model.domain_category = *category;
    model.fold_plural = j.value("fold_plural", false);

    for (const auto& c : j.at("classes")) {
      ClassEntry entry;
      entry.iri = c.at("iri").get<std::string>();
      entry.primary_label = label_from_json(c.at("primary_label"));
      if (c.contains("alt_labels")) {
        for (const auto& alt : c.at("alt_labels")) {
          entry.alt_labels.push_back(label_from_json(alt));
        }
      }
      if (c.contains("definition")) {
        entry.definition = c.at("definition").get<std::string>();
      }
      if (c.contains("source_ref")) {
        entry.source_ref = c.at("source_ref").get<std::string>();
      }
      model.classes.push_back(std::move(entry));
    }
    for (const auto& e : j.at("subclass_edges")) {
      model.subclass_edges.emplace_back(e.at(0).get<std::string>(),
                                        e.at(1).get<std::string>());
    }
    for (const auto& p : j.at("object_properties")) {
      model.object_properties.push_back(p.get<std::string>());
    }
    for (const auto& p : j.at("datatype_properties")) {
      model.datatype_properties.push_back(p.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "ontology " + path + ": " + e.what());
  }

  validate_model(model, load.warnings);
  return load;
}

// ---------------------------------------------------------------------------
// RDF/XML subset import
// ---------------------------------------------------------------------------

namespace {

using boost::property_tree::ptree;

struct XmlNamespaces {
  // prefix -> namespace URI
  std::map<std::string, std::string> prefixes;

  void collect(const ptree& node) {
    if (auto attrs = node.get_child_optional("<xmlattr>")) {
      for (const auto& [name, value] : *attrs) {
        if (name.rfind("xmlns:", 0) == 0) {
          prefixes[name.substr(6)] = value.get_value<std::string>();
        } else if (name == "xmlns") {
          prefixes[""] = value.get_value<std::string>();
        }
      }
    }
  }

  // Resolves "owl:Class" to {namespace URI, "Class"}.
  std::pair<std::string, std::string> resolve(const std::string& qname) const {
    std::size_t colon = qname.find(':');
    std::string prefix = colon == std::string::npos ? "" : qname.substr(0, colon);
    std::string local = colon == std::string::npos ? qname : qname.substr(colon + 1);
    auto it = prefixes.find(prefix);
    return {it == prefixes.end() ? prefix : it->second, local};
  }
};

constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kSkosNs = "http://www.w3.org/2004/02/skos/core#";

std::optional<std::string> attr_in_ns(const ptree& node, const XmlNamespaces& ns,
                                      std::string_view want_ns,
                                      std::string_view want_local) {
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    for (const auto& [name, value] : *attrs) {
      auto [uri, local] = ns.resolve(name);
      if (uri == want_ns && local == want_local) {
        return value.get_value<std::string>();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> node_subject(const ptree& node, const XmlNamespaces& ns) {
  if (auto about = attr_in_ns(node, ns, kRdfNs, "about")) return about;
  if (auto id = attr_in_ns(node, ns, kRdfNs, "ID")) return id;
  return std::nullopt;
}

void parse_class_node(const ptree& node, const XmlNamespaces& ns,
                      const std::string& iri, OntologyModel& model,
                      std::vector<std::string>& warnings) {
  ClassEntry entry;
  entry.iri = iri;
  std::vector<std::string> labels;
  for (const auto& [qname, child] : node) {
    if (qname == "<xmlattr>" || qname == "<xmlcomment>") continue;
    auto [uri, local] = ns.resolve(qname);
    if (uri == kRdfsNs && local == "label") {
      labels.push_back(trimmed(child.get_value<std::string>()));
    } else if (uri == kSkosNs && local == "altLabel") {
      entry.alt_labels.push_back(trimmed(child.get_value<std::string>()));
    } else if (uri == kRdfsNs && local == "subClassOf") {
      if (auto parent = attr_in_ns(child, ns, kRdfNs, "resource")) {
        model.subclass_edges.emplace_back(iri, *parent);
      } else {
        warnings.push_back("skipped rdfs:subClassOf without rdf:resource on '" +
                           iri + "' (anonymous superclass)");
      }
    } else if (uri == kRdfsNs && local == "comment") {
      entry.definition = trimmed(child.get_value<std::string>());
    } else {
      warnings.push_back("skipped unsupported construct '" + qname +
                         "' inside class '" + iri + "'");
    }
  }
  if (labels.empty()) {
    // Fallback label from the IRI fragment.
    std::size_t hash = iri.find_last_of("#/");
    labels.push_back(hash == std::string::npos ? iri : iri.substr(hash + 1));
  }
  entry.primary_label = labels.front();
  for (std::size_t i = 1; i < labels.size(); ++i) {
    entry.alt_labels.push_back(labels[i]);  // second rdfs:label is an alternate
  }
  model.classes.push_back(std::move(entry));
}

}  // namespace

OntologyLoad load_ontology_rdfxml_subset(const std::string& path,
                                         std::string ontology_id,
                                         DomainCategory category) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open ontology " + path);
  }
  ptree doc;
  try {
    boost::property_tree::read_xml(in, doc,
                                   boost::property_tree::xml_parser::no_comments);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw Error(ErrorCode::ParseError, "ontology " + path + ": " + e.what());
  }

  OntologyLoad load;
  OntologyModel& model = load.model;
  model.ontology_id = ontology_id.empty()
                          ? std::filesystem::path(path).stem().string()
                          : std::move(ontology_id);
  model.domain_category = category;

  // Locate the rdf:RDF root.
  const ptree* root = nullptr;
  XmlNamespaces ns;
  for (const auto& [qname, child] : doc) {
    if (qname == "<xmlcomment>") continue;
    XmlNamespaces candidate;
    candidate.collect(child);
    auto [uri, local] = candidate.resolve(qname);
    if (local == "RDF") {
      root = &child;
      ns = std::move(candidate);
      break;
    }
  }
  if (!root) {
    throw Error(ErrorCode::ParseError, "ontology " + path + ": no rdf:RDF root");
  }
  if (auto base = attr_in_ns(*root, ns, "http://www.w3.org/XML/1998/namespace", "base")) {
    model.iri_base = *base;
  } else if (auto raw_base = root->get_optional<std::string>("<xmlattr>.xml:base")) {
    model.iri_base = *raw_base;
  }

  for (const auto& [qname, child] : *root) {
    if (qname == "<xmlattr>" || qname == "<xmlcomment>") continue;
    auto [uri, local] = ns.resolve(qname);
    auto subject = node_subject(child, ns);
    if (uri == kOwlNs && local == "Class") {
      if (!subject) {
        load.warnings.push_back("skipped owl:Class without rdf:about");
        continue;
      }
      parse_class_node(child, ns, *subject, model, load.warnings);
    } else if (uri == kOwlNs && local == "ObjectProperty") {
      if (subject) model.object_properties.push_back(*subject);
    } else if (uri == kOwlNs && local == "DatatypeProperty") {
      if (subject) model.datatype_properties.push_back(*subject);
    } else if (uri == kOwlNs && local == "Ontology") {
      if (subject && model.iri_base.empty()) model.iri_base = *subject;
    } else {
      load.warnings.push_back("skipped unsupported top-level construct '" +
                              qname + "'");
    }
  }

  validate_model(model, load.warnings);
  return load;
}

bool structurally_equal(const OntologyModel& a, const OntologyModel& b) {
  auto class_key = [](const ClassEntry& c) {
    std::vector<std::string> alts = c.alt_labels;
    std::sort(alts.begin(), alts.end());
    std::ostringstream os;
    os << c.iri << '\x1f' << c.primary_label << '\x1f';
    for (const auto& alt : alts) os << alt << '\x1e';
    os << '\x1f' << c.definition.value_or("");
    return os.str();
  };
  auto sorted_keys = [&](const OntologyModel& m) {
    std::vector<std::string> keys;
    for (const ClassEntry& c : m.classes) keys.push_back(class_key(c));
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  auto sorted_edges = [](const OntologyModel& m) {
    auto edges = m.subclass_edges;
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  auto sorted_props = [](std::vector<std::string> props) {
    std::sort(props.begin(), props.end());
    return props;
  };
  return sorted_keys(a) == sorted_keys(b) &&
         sorted_edges(a) == sorted_edges(b) &&
         sorted_props(a.object_properties) == sorted_props(b.object_properties) &&
         sorted_props(a.datatype_properties) == sorted_props(b.datatype_properties);
}

OntologyStats ontology_stats(const OntologyModel& model) {
  OntologyStats stats;
  stats.classes = model.classes.size();
  stats.object_properties = model.object_properties.size();
  stats.datatype_properties = model.datatype_properties.size();
  stats.subclass_edges = model.subclass_edges.size();
  std::set<std::string_view> with_parent;
  for (const auto& [child, parent] : model.subclass_edges) {
    with_parent.insert(child);
  }
  for (const ClassEntry& entry : model.classes) {
    if (!with_parent.count(entry.iri)) ++stats.roots;
  }
  return stats;
}

std::vector<SubclassEdge> acyclic_edges(const OntologyModel& model) {
  std::vector<SubclassEdge> edges = model.subclass_edges;

  // Walk child->parent links; on finding a cycle drop its smallest edge and
  // retry until no cycle remains.
  while (true) {
    std::map<std::string, std::vector<std::string>> parents;
    for (const auto& [child, parent] : edges) parents[child].push_back(parent);

    std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<SubclassEdge> cycle;

    std::function<bool(const std::string&, std::vector<std::string>&)> dfs =
        [&](const std::string& node, std::vector<std::string>& stack) {
          state[node] = 1;
          stack.push_back(node);
          for (const std::string& parent : parents[node]) {
            int s = state.count(parent) ? state[parent] : 0;
            if (s == 0) {
              if (dfs(parent, stack)) return true;
            } else if (s == 1) {
              // Collect the cycle edges from the stack.
              auto it = std::find(stack.begin(), stack.end(), parent);
              for (auto p = it; p + 1 != stack.end(); ++p) {
                cycle.emplace_back(*p, *(p + 1));
              }
              cycle.emplace_back(stack.back(), parent);
              return true;
            }
          }
          stack.pop_back();
          state[node] = 2;
          return false;
        };

    bool found = false;
    for (const auto& [child, unused] : parents) {
      if ((state.count(child) ? state[child] : 0) == 0) {
        std::vector<std::string> stack;
        if (dfs(child, stack)) {
          found = true;
          break;
        }
      }
    }
    if (!found) break;

    SubclassEdge drop = *std::min_element(cycle.begin(), cycle.end());
    edges.erase(std::find(edges.begin(), edges.end(), drop));
  }
  return edges;
}

// ---------------------------------------------------------------------------
// Label index
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> surface_tokens_of(std::string_view label) {
  std::vector<std::string> out;
  for (const Token& token : tokenize(label)) {
    if (token.kind != TokenKind::Space) out.push_back(token.surface);
  }
  return out;
}

std::vector<std::string> fold_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(fold_case(t));
  return out;
}

}  // namespace

std::string LabelIndex::key_of(const std::vector<std::string>& folded_tokens) {
  std::string key;
  for (std::size_t i = 0; i < folded_tokens.size(); ++i) {
    if (i) key.push_back('\x1f');
    key += folded_tokens[i];
  }
  return key;
}

LabelIndex LabelIndex::build(const std::vector<OntologyModel>& models) {
  LabelIndex index;
  for (const OntologyModel& model : models) {
    auto add = [&](const ClassEntry& entry, const std::string& label,
                   LabelKind kind) {
      std::vector<std::string> surface = surface_tokens_of(label);
      if (surface.empty()) return;
      LabelIndexEntry e;
      e.class_iri = entry.iri;
      e.ontology_id = model.ontology_id;
      e.label = label;
      e.surface_tokens = surface;
      e.kind = kind;
      e.policy = case_policy_for(label);

      std::vector<std::string> folded = fold_tokens(surface);
      auto& bucket = index.entries_[key_of(folded)];
      // A class listing the same label twice indexes once.
      for (const LabelIndexEntry& existing : bucket) {
        if (existing.class_iri == e.class_iri &&
            existing.ontology_id == e.ontology_id && existing.label == e.label &&
            !existing.plural_variant) {
          return;
        }
      }
      bucket.push_back(e);
      index.max_key_tokens_ = std::max(index.max_key_tokens_, folded.size());

      // Naive trailing-"s" fold, per-ontology opt-in. Acronyms never fold.
      if (model.fold_plural && e.policy == CasePolicy::CaseInsensitive) {
        std::vector<std::string> plural = folded;
        plural.back() += 's';
        LabelIndexEntry variant = e;
        variant.plural_variant = true;
        index.entries_[key_of(plural)].push_back(std::move(variant));
      }
    };
    for (const ClassEntry& entry : model.classes) {
      add(entry, entry.primary_label, LabelKind::Primary);
      for (const std::string& alt : entry.alt_labels) {
        add(entry, alt, LabelKind::Alternate);
      }
    }
  }
  return index;
}

const std::vector<LabelIndexEntry>& LabelIndex::lookup(const std::string& key) const {
  static const std::vector<LabelIndexEntry> kEmpty;
  auto it = entries_.find(key);
  return it == entries_.end() ? kEmpty : it->second;
}

std::vector<LabelIndexEntry> LabelIndex::lookup_phrase(std::string_view phrase) const {
  std::vector<std::string> surface = surface_tokens_of(phrase);
  if (surface.empty()) return {};
  std::vector<LabelIndexEntry> out;
  for (const LabelIndexEntry& entry : lookup(key_of(fold_tokens(surface)))) {
    if (entry.policy == CasePolicy::AcronymExact &&
        entry.surface_tokens != surface) {
      continue;
    }
    out.push_back(entry);
  }
  return out;
}

std::vector<std::string> LabelIndex::acronym_labels() const {
  std::set<std::string> seen;
  for (const auto& [key, entries] : entries_) {
    for (const LabelIndexEntry& entry : entries) {
      if (entry.policy == CasePolicy::AcronymExact && !entry.plural_variant) {
        seen.insert(entry.label);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace normcheck
