// normcheck — ontology-based annotation and consistency checking for
// multi-part normative documents.
//
//   normcheck report --manifest fixtures/mandate6/manifest.json
//     --ontology fixtures/ontologies/isto_fixture.json
//     --ontology fixtures/ontologies/iso15531_fixture.json
//     --rules fixtures/rules/references.rules
//     --registry fixtures/registry.json --out out/

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "normcheck/consistency.hpp"
#include "normcheck/error.hpp"
#include "normcheck/ontology.hpp"
#include "normcheck/pipeline.hpp"
#include "normcheck/populate.hpp"
#include "normcheck/report.hpp"

namespace {

using namespace normcheck;

struct Options {
  std::string manifest;
  std::vector<std::string> ontologies;
  std::vector<std::string> rules;
  std::string registry;
  std::string out_dir = "out";
  double threshold = 0.95;
  bool strict = false;
  unsigned jobs = 1;
  bool stamp = false;
};

bool color_enabled() {
  if (std::getenv("NORMCHECK_NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

const char* severity_color(Severity severity) {
  switch (severity) {
    case Severity::Info: return "\x1b[36m";     // cyan
    case Severity::Warning: return "\x1b[33m";  // yellow
    case Severity::Error: return "\x1b[31m";    // red
  }
  return "";
}

void print_finding(const ConsistencyFinding& finding, bool color) {
  const FindingLocation& loc = finding.locations.front();
  if (color) {
    std::cout << severity_color(finding.severity) << to_string(finding.severity)
              << "\x1b[0m";
  } else {
    std::cout << to_string(finding.severity);
  }
  std::cout << "  " << to_string(finding.kind) << "  " << loc.doc_id;
  if (!loc.clause_number.empty()) std::cout << " " << loc.clause_number;
  std::cout << "  " << finding.detail << "\n";
}

// Everything a full run produces; commands pick the slices they emit.
struct RunState {
  Corpus corpus;
  Pipeline pipeline;
  PipelineResult annotations;
  std::vector<TermEntry> terms;
  std::vector<Entity> entities;
  std::vector<ReferenceLink> links;
  std::vector<CandidateClass> candidates;
  std::vector<ConsistencyFinding> findings;
};

void validate_paths(const Options& opt, bool need_manifest) {
  namespace fs = std::filesystem;
  auto require = [](const std::string& path, const char* what) {
    if (path.empty()) {
      throw Error(ErrorCode::IoError, std::string(what) + " path not given");
    }
    if (!fs::exists(path)) {
      throw Error(ErrorCode::IoError,
                  std::string(what) + " not found: " + path);
    }
  };
  if (need_manifest) require(opt.manifest, "manifest");
  for (const std::string& path : opt.ontologies) require(path, "ontology");
  for (const std::string& path : opt.rules) require(path, "rule file");
  if (!opt.registry.empty()) require(opt.registry, "registry");
}

OntologyLoad load_any_ontology(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".rdf" || ext == ".owl" || ext == ".xml" || ext == ".rdfxml") {
    return load_ontology_rdfxml_subset(path);
  }
  return load_ontology_native(path);
}

RunState run_full(const Options& opt) {
  RunState state;
  state.corpus = load_corpus_manifest(opt.manifest);

  std::vector<OntologyModel> models;
  for (const std::string& path : opt.ontologies) {
    OntologyLoad load = load_any_ontology(path);
    for (const std::string& warning : load.warnings) {
      std::cerr << "warning: " << path << ": " << warning << "\n";
    }
    models.push_back(std::move(load.model));
  }
  std::vector<Phase> phases;
  for (const std::string& path : opt.rules) {
    phases.push_back(load_phase_file(path));
  }

  state.pipeline = make_pipeline(std::move(models), std::move(phases));
  state.annotations = run_pipeline(state.pipeline, state.corpus, opt.jobs);

  for (const Document& doc : state.corpus.documents) {
    for (TermEntry& entry : extract_term_entries(doc)) {
      state.terms.push_back(std::move(entry));
    }
  }
  state.entities = link_mentions(state.corpus, state.annotations.by_doc);

  std::vector<RegistryEntry> registry;
  if (!opt.registry.empty()) registry = load_registry(opt.registry);
  state.links =
      extract_references(state.corpus, state.annotations.by_doc, registry);
  state.candidates = propose_candidates(state.terms, state.pipeline.index);

  CheckerConfig config;
  config.duplicate_similarity_threshold = opt.threshold;
  state.findings =
      run_all_checks(state.corpus, state.annotations.by_doc, state.terms,
                     state.links, state.candidates, state.pipeline.index, config);
  return state;
}

int finish(const Options& opt, const RunState& state) {
  for (const std::string& error : state.annotations.errors) {
    std::cerr << "error: " << error << "\n";
  }
  if (!state.annotations.errors.empty()) return 2;
  if (opt.strict) {
    for (const ConsistencyFinding& finding : state.findings) {
      if (finding.severity == Severity::Error) return 1;
    }
  }
  return 0;
}

nlohmann::json clause_json(const Clause& clause) {
  nlohmann::json children = nlohmann::json::array();
  for (const Clause& child : clause.children) {
    children.push_back(clause_json(child));
  }
  return nlohmann::json{{"number", clause.number},
                        {"heading", clause.heading},
                        {"kind", to_string(clause.kind)},
                        {"start", clause.span.start},
                        {"end", clause.span.end},
                        {"children", std::move(children)}};
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  out << content;
}

int cmd_ingest(const Options& opt) {
  validate_paths(opt, true);
  Corpus corpus = load_corpus_manifest(opt.manifest);
  nlohmann::json docs = nlohmann::json::array();
  for (const Document& doc : corpus.documents) {
    nlohmann::json clauses = nlohmann::json::array();
    for (const Clause& clause : doc.clauses) clauses.push_back(clause_json(clause));
    docs.push_back(nlohmann::json{{"doc_id", doc.doc_id},
                                  {"standard_ref", doc.standard_ref},
                                  {"title", doc.title},
                                  {"text_bytes", doc.text.size()},
                                  {"term_count", extract_term_entries(doc).size()},
                                  {"clauses", std::move(clauses)}});
  }
  nlohmann::json cache{{"corpus_id", corpus.corpus_id}, {"documents", std::move(docs)}};
  write_text(std::filesystem::path(opt.out_dir) / "corpus.json",
             cache.dump(2) + "\n");
  std::cout << "ingested " << corpus.documents.size() << " documents into "
            << opt.out_dir << "/corpus.json\n";
  return 0;
}

int cmd_annotate(const Options& opt) {
  validate_paths(opt, true);
  RunState state = run_full(opt);
  for (const auto& [doc_id, set] : state.annotations.by_doc) {
    write_text(std::filesystem::path(opt.out_dir) / "annotations" /
                   (doc_id + ".json"),
               annotations_to_json(doc_id, set));
  }
  std::cout << "annotated " << state.annotations.by_doc.size() << " documents\n";
  return finish(opt, state);
}

int cmd_check(const Options& opt) {
  validate_paths(opt, true);
  RunState state = run_full(opt);
  write_text(std::filesystem::path(opt.out_dir) / "findings.json",
             findings_to_json(state.findings));
  write_text(std::filesystem::path(opt.out_dir) / "findings.csv",
             findings_to_csv(state.findings));
  bool color = color_enabled();
  for (const ConsistencyFinding& finding : state.findings) {
    print_finding(finding, color);
  }
  std::cout << state.findings.size() << " finding"
            << (state.findings.size() == 1 ? "" : "s") << "\n";
  return finish(opt, state);
}

int cmd_populate(const Options& opt) {
  validate_paths(opt, true);
  RunState state = run_full(opt);
  write_text(std::filesystem::path(opt.out_dir) / "candidates.json",
             candidates_to_json(state.candidates));
  std::cout << state.candidates.size() << " candidate classes written\n";
  return finish(opt, state);
}

int cmd_report(const Options& opt) {
  validate_paths(opt, true);
  RunState state = run_full(opt);
  ReportBundle bundle;
  bundle.corpus = &state.corpus;
  bundle.annotations = &state.annotations.by_doc;
  bundle.terms = &state.terms;
  bundle.entities = &state.entities;
  bundle.candidates = &state.candidates;
  bundle.findings = &state.findings;
  EmitOptions emit;
  emit.stamp = opt.stamp;
  emit_bundle(bundle, opt.out_dir, emit);
  std::cout << "report bundle written to " << opt.out_dir << " ("
            << state.findings.size() << " findings)\n";
  return finish(opt, state);
}

int cmd_stats(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::IoError, "ontology not found: " + path);
  }
  OntologyLoad load = load_any_ontology(path);
  OntologyStats stats = ontology_stats(load.model);
  std::cout << "classes=" << stats.classes
            << " object_properties=" << stats.object_properties
            << " datatype_properties=" << stats.datatype_properties << "\n";
  std::cout << "subclass_edges=" << stats.subclass_edges
            << " roots=" << stats.roots << "\n";
  for (const std::string& warning : load.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_pipeline) {
  cmd->add_option("--manifest", opt.manifest, "Corpus manifest JSON");
  if (with_pipeline) {
    cmd->add_option("--ontology", opt.ontologies,
                    "Ontology file (repeatable; .json native, .rdf subset)");
    cmd->add_option("--rules", opt.rules, "Rule phase file (repeatable)");
    cmd->add_option("--registry", opt.registry, "Known-standards registry JSON");
    cmd->add_option("--threshold", opt.threshold,
                    "Duplicate similarity threshold (default 0.95)");
    cmd->add_option("--jobs", opt.jobs, "Worker threads (default 1)");
    cmd->add_flag("--strict", opt.strict,
                  "Exit nonzero when Error findings are present");
  }
  cmd->add_option("--out", opt.out_dir, "Output directory (default out/)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology-based annotation and consistency checks for "
               "normative documents"};
  app.require_subcommand(1);

  Options opt;
  std::string stats_path;

  CLI::App* ingest = app.add_subcommand("ingest", "Parse the corpus into a cache");
  add_common(ingest, opt, false);
  CLI::App* annotate =
      app.add_subcommand("annotate", "Run the annotation pipeline");
  add_common(annotate, opt, true);
  CLI::App* check = app.add_subcommand("check", "Run consistency checks");
  add_common(check, opt, true);
  CLI::App* populate =
      app.add_subcommand("populate", "Propose candidate ontology classes");
  add_common(populate, opt, true);
  CLI::App* report = app.add_subcommand("report", "Full pipeline and bundle");
  add_common(report, opt, true);
  report->add_flag("--stamp", opt.stamp, "Timestamp the bundle manifest");
  CLI::App* stats = app.add_subcommand("stats", "Print ontology statistics");
  stats->add_option("ontology", stats_path, "Ontology file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return cmd_ingest(opt);
    if (annotate->parsed()) return cmd_annotate(opt);
    if (check->parsed()) return cmd_check(opt);
    if (populate->parsed()) return cmd_populate(opt);
    if (report->parsed()) return cmd_report(opt);
    if (stats->parsed()) return cmd_stats(stats_path);
  } catch (const Error& e) {
    std::cerr << "normcheck: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "normcheck: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
