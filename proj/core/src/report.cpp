#include "normcheck/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "normcheck/error.hpp"

namespace normcheck {

using nlohmann::json;

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

std::string format_similarity(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

json location_json(const FindingLocation& loc) {
  return json{{"doc_id", loc.doc_id},
              {"clause", loc.clause_number},
              {"start", loc.span.start},
              {"end", loc.span.end}};
}

std::string csv_field(const std::string& value) {
  bool quote = value.find_first_of(",\"\n") != std::string::npos;
  if (!quote) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::size_t count_clauses(const std::vector<Clause>& clauses) {
  std::size_t n = clauses.size();
  for (const Clause& c : clauses) n += count_clauses(c.children);
  return n;
}

}  // namespace

std::string annotations_to_json(const std::string& doc_id,
                                const AnnotationSet& set) {
  json anns = json::array();
  for (const Annotation& ann : set.annotations()) {
    anns.push_back(json{{"ann_id", ann.ann_id},
                        {"start", ann.span.start},
                        {"end", ann.span.end},
                        {"type", ann.ann_type},
                        {"features", ann.features},
                        {"source", ann.source.to_string()}});
  }
  json j{{"doc_id", doc_id}, {"annotations", std::move(anns)}};
  return j.dump(2) + "\n";
}

std::string findings_to_json(const std::vector<ConsistencyFinding>& findings) {
  json out = json::array();
  for (const ConsistencyFinding& f : findings) {
    json locations = json::array();
    for (const FindingLocation& loc : f.locations) {
      locations.push_back(location_json(loc));
    }
    json item{{"kind", to_string(f.kind)},
              {"severity", to_string(f.severity)},
              {"locations", std::move(locations)},
              {"detail", f.detail}};
    if (f.similarity) item["similarity"] = *f.similarity;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string findings_to_csv(const std::vector<ConsistencyFinding>& findings) {
  std::ostringstream out;
  out << "kind,severity,doc_id,clause,start,end,similarity,detail\n";
  for (const ConsistencyFinding& f : findings) {
    const FindingLocation& loc = f.locations.front();
    out << to_string(f.kind) << ',' << to_string(f.severity) << ','
        << csv_field(loc.doc_id) << ',' << csv_field(loc.clause_number) << ','
        << loc.span.start << ',' << loc.span.end << ','
        << (f.similarity ? format_similarity(*f.similarity) : std::string())
        << ',' << csv_field(f.detail) << '\n';
  }
  return out.str();
}

std::string entities_to_json(const std::vector<Entity>& entities) {
  json out = json::array();
  for (const Entity& e : entities) {
    json mentions = json::array();
    for (const auto& [doc_id, ann_id] : e.mentions) {
      mentions.push_back(json{{"doc_id", doc_id}, {"ann_id", ann_id}});
    }
    out.push_back(json{{"entity_id", e.entity_id},
                       {"canonical_term", e.canonical_term},
                       {"class_iri", e.class_iri},
                       {"mentions", std::move(mentions)}});
  }
  return out.dump(2) + "\n";
}

std::string candidates_to_json(const std::vector<CandidateClass>& candidates) {
  json out = json::array();
  for (const CandidateClass& c : candidates) {
    json item{{"term", c.term},
              {"status", to_string(c.status)},
              {"proposed_parents", c.proposed_parents},
              {"evidence",
               json{{"doc_id", c.doc_id},
                    {"clause", c.clause_number},
                    {"start", c.span.start},
                    {"end", c.span.end}}}};
    if (c.genus) item["genus"] = *c.genus;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string summary_markdown(const ReportBundle& bundle) {
  std::ostringstream md;
  const Corpus& corpus = *bundle.corpus;
  md << "# Consistency report\n\n";
  md << "Corpus `" << corpus.corpus_id << "`, " << corpus.documents.size()
     << " document" << (corpus.documents.size() == 1 ? "" : "s") << ".\n\n";

  md << "| doc_id | standard_ref | title | clauses | terms | annotations |\n";
  md << "|---|---|---|---:|---:|---:|\n";
  for (const Document& doc : corpus.documents) {
    std::size_t terms = 0;
    if (bundle.terms) {
      for (const TermEntry& t : *bundle.terms) {
        if (t.doc_id == doc.doc_id) ++terms;
      }
    }
    std::size_t anns = 0;
    if (bundle.annotations) {
      auto it = bundle.annotations->find(doc.doc_id);
      if (it != bundle.annotations->end()) anns = it->second.size();
    }
    md << "| " << doc.doc_id << " | " << doc.standard_ref << " | " << doc.title
       << " | " << count_clauses(doc.clauses) << " | " << terms << " | "
       << anns << " |\n";
  }

  const std::vector<ConsistencyFinding>* findings = bundle.findings;
  md << "\n## Findings";
  if (!findings || findings->empty()) {
    md << "\n\nNo findings.\n";
    return md.str();
  }
  md << " (" << findings->size() << ")\n";

  constexpr FindingKind kKinds[] = {
      FindingKind::DuplicateDefinition, FindingKind::DivergentDefinition,
      FindingKind::AdaptedDefinition,   FindingKind::DanglingReference,
      FindingKind::CaseAmbiguity,       FindingKind::TitleContentMismatch,
      FindingKind::MultiParentWarning,
  };
  for (FindingKind kind : kKinds) {
    std::vector<const ConsistencyFinding*> of_kind;
    for (const ConsistencyFinding& f : *findings) {
      if (f.kind == kind) of_kind.push_back(&f);
    }
    if (of_kind.empty()) continue;
    md << "\n### " << to_string(kind) << " (" << of_kind.size() << ")\n\n";
    for (const ConsistencyFinding* f : of_kind) {
      const FindingLocation& loc = f->locations.front();
      md << "- **" << to_string(f->severity) << "** `" << loc.doc_id;
      if (!loc.clause_number.empty()) md << " " << loc.clause_number;
      md << "`: " << f->detail;
      if (f->similarity) {
        md << " (similarity " << format_similarity(*f->similarity) << ")";
      }
      md << "\n";
    }
  }
  return md.str();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content,
                BundleManifest& manifest, const std::string& rel) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << content;
  out.close();
  if (!out) {
    throw Error(ErrorCode::IoError, "short write to " + path.string());
  }
  manifest.files.push_back({rel, content.size(), fnv1a64_hex(content)});
}

}  // namespace

BundleManifest emit_bundle(const ReportBundle& bundle,
                           const std::string& out_dir,
                           const EmitOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "annotations", ec);
  if (ec) {
    throw Error(ErrorCode::IoError,
                "cannot create " + out_dir + ": " + ec.message());
  }

  BundleManifest manifest;
  fs::path base(out_dir);

  write_file(base / "summary.md", summary_markdown(bundle), manifest,
             "summary.md");
  write_file(base / "findings.json",
             findings_to_json(bundle.findings ? *bundle.findings
                                              : std::vector<ConsistencyFinding>{}),
             manifest, "findings.json");
  write_file(base / "findings.csv",
             findings_to_csv(bundle.findings ? *bundle.findings
                                             : std::vector<ConsistencyFinding>{}),
             manifest, "findings.csv");
  write_file(base / "entities.json",
             entities_to_json(bundle.entities ? *bundle.entities
                                              : std::vector<Entity>{}),
             manifest, "entities.json");
  write_file(base / "candidates.json",
             candidates_to_json(bundle.candidates ? *bundle.candidates
                                                  : std::vector<CandidateClass>{}),
             manifest, "candidates.json");

  if (bundle.corpus && bundle.annotations) {
    for (const Document& doc : bundle.corpus->documents) {
      auto it = bundle.annotations->find(doc.doc_id);
      if (it == bundle.annotations->end()) continue;
      std::string rel = "annotations/" + doc.doc_id + ".json";
      write_file(base / rel, annotations_to_json(doc.doc_id, it->second),
                 manifest, rel);
    }
  }

  std::sort(manifest.files.begin(), manifest.files.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });

  json files = json::array();
  for (const auto& file : manifest.files) {
    files.push_back(json{{"path", file.path},
                         {"bytes", file.bytes},
                         {"digest", file.digest}});
  }
  json mj{{"files", std::move(files)}};
  if (options.stamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    mj["generated_at_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  std::string manifest_text = mj.dump(2) + "\n";
  std::ofstream mf(base / "manifest.json", std::ios::binary);
  if (!mf) {
    throw Error(ErrorCode::IoError, "cannot write manifest.json");
  }
  mf << manifest_text;
  return manifest;
}

}  // namespace normcheck
