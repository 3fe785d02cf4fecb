#include "normcheck/consistency.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "normcheck/token.hpp"

namespace normcheck {

const char* to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::DuplicateDefinition: return "DuplicateDefinition";
    case FindingKind::DivergentDefinition: return "DivergentDefinition";
    case FindingKind::AdaptedDefinition: return "AdaptedDefinition";
    case FindingKind::DanglingReference: return "DanglingReference";
    case FindingKind::CaseAmbiguity: return "CaseAmbiguity";
    case FindingKind::TitleContentMismatch: return "TitleContentMismatch";
    case FindingKind::MultiParentWarning: return "MultiParentWarning";
  }
  return "DuplicateDefinition";
}

const char* to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "Info";
    case Severity::Warning: return "Warning";
    case Severity::Error: return "Error";
  }
  return "Info";
}

double definition_similarity(std::string_view a, std::string_view b) {
  auto token_set = [](std::string_view text) {
    std::set<std::string> out;
    for (const Token& token : tokenize(text)) {
      if (token.kind == TokenKind::Word || token.kind == TokenKind::Number) {
        out.insert(fold_case(token.surface));
      }
    }
    return out;
  };
  std::set<std::string> sa = token_set(a);
  std::set<std::string> sb = token_set(b);
  if (sa.empty() && sb.empty()) return 1.0;
  if (sa.empty() || sb.empty()) return 0.0;

  std::size_t intersection = 0;
  for (const std::string& t : sa) {
    if (sb.count(t)) ++intersection;
  }
  std::size_t union_size = sa.size() + sb.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(union_size);
}

namespace {

FindingLocation location_of(const TermEntry& entry) {
  return {entry.doc_id, entry.clause_number, entry.span};
}

}  // namespace

std::vector<ConsistencyFinding> check_duplicate_definitions(
    const std::vector<TermEntry>& entries, const CheckerConfig& config) {
  // Case-folded term -> entries, preserving document order.
  std::map<std::string, std::vector<const TermEntry*>> groups;
  std::vector<std::string> order;
  for (const TermEntry& entry : entries) {
    std::string key = fold_case(entry.term);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&entry);
  }

  std::vector<ConsistencyFinding> findings;
  for (const std::string& key : order) {
    const auto& group = groups[key];
    if (group.size() < 2) continue;

    double min_similarity = 1.0;
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        min_similarity = std::min(
            min_similarity,
            definition_similarity(group[i]->definition, group[j]->definition));
      }
    }

    ConsistencyFinding finding;
    bool duplicate = min_similarity >= config.duplicate_similarity_threshold;
    finding.kind = duplicate ? FindingKind::DuplicateDefinition
                             : FindingKind::DivergentDefinition;
    finding.severity = duplicate ? Severity::Warning : Severity::Error;
    finding.similarity = min_similarity;
    for (const TermEntry* entry : group) {
      finding.locations.push_back(location_of(*entry));
    }
    std::ostringstream detail;
    detail << "term \"" << group.front()->term << "\" is defined in "
           << group.size() << " clauses with "
           << (duplicate ? "near-identical" : "diverging") << " definitions";
    finding.detail = detail.str();
    findings.push_back(std::move(finding));
  }
  return findings;
}

std::vector<ConsistencyFinding> check_adapted_definitions(
    const std::vector<TermEntry>& entries) {
  std::vector<ConsistencyFinding> findings;
  for (const TermEntry& entry : entries) {
    if (!entry.adapted_from) continue;
    ConsistencyFinding finding;
    finding.kind = FindingKind::AdaptedDefinition;
    finding.severity = Severity::Info;
    finding.locations.push_back(location_of(entry));
    finding.detail = "definition of \"" + entry.term + "\" is adapted from " +
                     *entry.adapted_from;
    findings.push_back(std::move(finding));
  }
  return findings;
}

std::vector<ConsistencyFinding> check_case_ambiguity(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations,
    const LabelIndex& index, const CheckerConfig& config) {
  std::vector<ConsistencyFinding> findings;
  for (const std::string& label : index.acronym_labels()) {
    // Only single-token alphabetic acronyms can collide with a word.
    bool alpha = !label.empty() &&
                 std::all_of(label.begin(), label.end(), [](unsigned char c) {
                   return std::isalpha(c) != 0;
                 });
    if (!alpha) continue;
    std::string lower = fold_case(label);

    std::vector<FindingLocation> mention_locations;
    std::vector<FindingLocation> word_locations;
    for (const Document& doc : corpus.documents) {
      auto set_it = annotations.find(doc.doc_id);
      if (set_it != annotations.end()) {
        for (const Annotation& ann : set_it->second.annotations()) {
          if (ann.ann_type != "Mention") continue;
          auto feature = ann.features.find("matched_label");
          if (feature == ann.features.end() || feature->second != label) continue;
          mention_locations.push_back(
              {doc.doc_id, doc.clause_number_at(ann.span.start), ann.span});
        }
      }
      for (const Token& token : tokenize(doc.text)) {
        if (token.kind == TokenKind::Word && token.surface == lower) {
          word_locations.push_back(
              {doc.doc_id, doc.clause_number_at(token.span.start), token.span});
        }
      }
    }
    if (word_locations.size() <
        static_cast<std::size_t>(std::max(config.case_ambiguity_min_count, 0))) {
      continue;
    }
    if (word_locations.empty()) continue;

    ConsistencyFinding finding;
    finding.kind = FindingKind::CaseAmbiguity;
    finding.severity = Severity::Info;
    std::ostringstream detail;
    detail << "acronym \"" << label << "\" coexists with lowercase \"" << lower
           << "\" (" << mention_locations.size() << " annotated mentions, "
           << word_locations.size() << " word occurrences)";
    finding.detail = detail.str();
    finding.locations = std::move(mention_locations);
    finding.locations.insert(finding.locations.end(), word_locations.begin(),
                             word_locations.end());
    std::sort(finding.locations.begin(), finding.locations.end(),
              [](const FindingLocation& a, const FindingLocation& b) {
                if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
                return a.span.start < b.span.start;
              });
    findings.push_back(std::move(finding));
  }
  return findings;
}

std::vector<ConsistencyFinding> check_title_content_mismatch(
    const std::vector<TermEntry>& entries) {
  std::vector<ConsistencyFinding> findings;
  for (const TermEntry& entry : entries) {
    // Lead-in pattern: one or more words, then a colon, at the very start.
    std::vector<std::string> words;
    bool matched = false;
    for (const Token& token : tokenize(entry.definition)) {
      if (token.kind == TokenKind::Space) continue;
      if (token.kind == TokenKind::Word) {
        words.push_back(token.surface);
        continue;
      }
      matched = !words.empty() && token.surface == ":";
      break;
    }
    if (!matched) continue;

    std::string lead;
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (k) lead.push_back(' ');
      lead += words[k];
    }
    if (fold_case(lead) == fold_case(entry.term)) continue;

    ConsistencyFinding finding;
    finding.kind = FindingKind::TitleContentMismatch;
    finding.severity = Severity::Error;
    finding.locations.push_back(location_of(entry));
    finding.detail = "clause heading \"" + entry.term +
                     "\" but the definition leads with \"" + lead + ":\"";
    findings.push_back(std::move(finding));
  }
  return findings;
}

std::vector<ConsistencyFinding> check_dangling_references(
    const std::vector<ReferenceLink>& links) {
  std::vector<ConsistencyFinding> findings;
  for (const ReferenceLink& link : links) {
    if (link.resolved) continue;
    ConsistencyFinding finding;
    finding.kind = FindingKind::DanglingReference;
    finding.severity = Severity::Warning;
    finding.locations.push_back({link.from_doc, "", link.span});
    finding.detail = "reference \"" + link.target_ref +
                     "\" resolves against neither the corpus nor the registry";
    findings.push_back(std::move(finding));
  }
  return findings;
}

std::vector<ConsistencyFinding> run_all_checks(
    const Corpus& corpus,
    const std::map<std::string, AnnotationSet>& annotations,
    const std::vector<TermEntry>& entries,
    const std::vector<ReferenceLink>& links,
    const std::vector<CandidateClass>& candidates, const LabelIndex& index,
    const CheckerConfig& config) {
  std::vector<ConsistencyFinding> findings;

  auto append = [&](std::vector<ConsistencyFinding> more) {
    for (ConsistencyFinding& f : more) findings.push_back(std::move(f));
  };
  append(check_duplicate_definitions(entries, config));
  append(check_adapted_definitions(entries));
  append(check_case_ambiguity(corpus, annotations, index, config));
  append(check_title_content_mismatch(entries));
  append(check_dangling_references(links));

  for (const CandidateClass& candidate : candidates) {
    if (candidate.status != CandidateStatus::Ambiguous) continue;
    ConsistencyFinding finding;
    finding.kind = FindingKind::MultiParentWarning;
    finding.severity = Severity::Warning;
    finding.locations.push_back(
        {candidate.doc_id, candidate.clause_number, candidate.span});
    std::ostringstream detail;
    detail << "term \"" << candidate.term << "\" could be placed under "
           << candidate.proposed_parents.size() << " parents:";
    for (const std::string& parent : candidate.proposed_parents) {
      detail << ' ' << parent;
    }
    finding.detail = detail.str();
    findings.push_back(std::move(finding));
  }

  // Fill any missing clause numbers from the documents.
  for (ConsistencyFinding& finding : findings) {
    for (FindingLocation& loc : finding.locations) {
      if (!loc.clause_number.empty()) continue;
      if (const Document* doc = corpus.find(loc.doc_id)) {
        loc.clause_number = doc->clause_number_at(loc.span.start);
      }
    }
  }

  std::sort(findings.begin(), findings.end(),
            [](const ConsistencyFinding& a, const ConsistencyFinding& b) {
              const FindingLocation& la = a.locations.front();
              const FindingLocation& lb = b.locations.front();
              if (la.doc_id != lb.doc_id) return la.doc_id < lb.doc_id;
              if (la.span.start != lb.span.start) {
                return la.span.start < lb.span.start;
              }
              if (a.kind != b.kind) return a.kind < b.kind;
              return a.detail < b.detail;
            });
  return findings;
}

}  // namespace normcheck
