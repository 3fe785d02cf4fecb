#ifndef NORMCHECK_REPORT_HPP
#define NORMCHECK_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "normcheck/annotate.hpp"
#include "normcheck/consistency.hpp"
#include "normcheck/corpus.hpp"
#include "normcheck/extract.hpp"
#include "normcheck/populate.hpp"

namespace normcheck {

// Everything a full run produces, ready for serialization.
struct ReportBundle {
  const Corpus* corpus = nullptr;
  const std::map<std::string, AnnotationSet>* annotations = nullptr;
  const std::vector<TermEntry>* terms = nullptr;
  const std::vector<Entity>* entities = nullptr;
  const std::vector<CandidateClass>* candidates = nullptr;
  const std::vector<ConsistencyFinding>* findings = nullptr;
};

struct EmitOptions {
  // Timestamps are opt-in and live only in the manifest, so that reruns on
  // identical inputs produce identical bytes.
  bool stamp = false;
};

struct BundleManifest {
  struct FileEntry {
    std::string path;  // relative to out_dir
    std::uint64_t bytes = 0;
    std::string digest;  // fnv1a-64 content fingerprint, hex
  };
  std::vector<FileEntry> files;
};

// Writes summary.md, findings.json, findings.csv, annotations/<doc_id>.json,
// entities.json, candidates.json and manifest.json under out_dir. Throws
// Error{IoError} when out_dir cannot be written.
BundleManifest emit_bundle(const ReportBundle& bundle,
                           const std::string& out_dir,
                           const EmitOptions& options = {});

// Serializations, exposed for tests and the CLI.
std::string annotations_to_json(const std::string& doc_id,
                                const AnnotationSet& set);
std::string findings_to_json(const std::vector<ConsistencyFinding>& findings);
std::string findings_to_csv(const std::vector<ConsistencyFinding>& findings);
std::string entities_to_json(const std::vector<Entity>& entities);
std::string candidates_to_json(const std::vector<CandidateClass>& candidates);
std::string summary_markdown(const ReportBundle& bundle);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace normcheck

#endif  // NORMCHECK_REPORT_HPP
