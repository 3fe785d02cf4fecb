#ifndef NORMCHECK_CORPUS_HPP
#define NORMCHECK_CORPUS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normcheck {

// Half-open byte range [start, end) into a document's text. Offsets always
// fall on UTF-8 sequence boundaries.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class ClauseKind {
  Scope,
  TermsAndDefinitions,
  Body,
  Annex,
  Bibliography,
  Unknown,
};

const char* to_string(ClauseKind kind);

// One clause of a normative document. `number` is dotted-decimal ("3.1.5")
// or an annex letter form ("A", "A.1"). The span starts at the heading line
// and runs to the start of the next clause at the same or shallower depth.
struct Clause {
  std::string number;
  std::string heading;
  Span span;
  ClauseKind kind = ClauseKind::Body;
  std::vector<Clause> children;

  bool is_leaf() const { return children.empty(); }
};

struct Document {
  std::string doc_id;
  std::string standard_ref;  // e.g. "ISO 15531-44"
  std::string title;
  std::string text;          // UTF-8, LF line endings
  std::vector<Clause> clauses;
  std::optional<int> page_count_hint;

  std::string_view covered(const Span& span) const {
    return std::string_view(text).substr(span.start, span.length());
  }

  // Dotted number of the deepest clause containing `offset`, or "" when the
  // offset falls outside every clause.
  std::string clause_number_at(std::size_t offset) const;
};

// A defined term lifted from a leaf clause under "Terms and definitions".
struct TermEntry {
  std::string term;
  std::string definition;
  std::string clause_number;
  std::string doc_id;
  std::optional<std::string> adapted_from;
  Span span;
};

struct Corpus {
  std::string corpus_id;
  std::vector<Document> documents;

  const Document* find(std::string_view doc_id) const;
};

struct DocumentMetadata {
  std::string doc_id;
  std::string standard_ref;
  std::string title;
};

// Decodes raw bytes (UTF-8, optional BOM), normalizes line endings to LF and
// parses the clause tree. Throws Error{DecodeError} on invalid UTF-8 and
// Error{EmptyDocument} when nothing but whitespace remains.
Document ingest_document(std::string_view raw, const DocumentMetadata& metadata);

// Clause recovery over normalized text. A line of the form
// "<number> <heading>" opens a clause; "Annex X" opens an annex clause.
// Unparseable lines fall into the enclosing clause body.
std::vector<Clause> parse_clauses(std::string_view text);

// One TermEntry per leaf clause under a TermsAndDefinitions clause, in
// document order. Leaves with empty bodies are skipped.
std::vector<TermEntry> extract_term_entries(const Document& doc);

// Loads a corpus manifest ({corpus_id, documents:[{doc_id, standard_ref,
// title, path}]}) and ingests every listed file. Paths are resolved relative
// to the manifest's directory. Throws Error{IoError} or Error{ParseError}.
Corpus load_corpus_manifest(const std::string& manifest_path);

bool is_valid_utf8(std::string_view bytes);

}  // namespace normcheck

#endif  // NORMCHECK_CORPUS_HPP
