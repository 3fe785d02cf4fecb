#include "normcheck/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "normcheck/error.hpp"

namespace normcheck {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::DuplicateIri: return "DuplicateIri";
    case ErrorCode::RuleError: return "RuleError";
    case ErrorCode::UnknownSource: return "UnknownSource";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

const char* to_string(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::Scope: return "Scope";
    case ClauseKind::TermsAndDefinitions: return "TermsAndDefinitions";
    case ClauseKind::Body: return "Body";
    case ClauseKind::Annex: return "Annex";
    case ClauseKind::Bibliography: return "Bibliography";
    case ClauseKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    std::size_t len;
    unsigned code;
    if (c < 0x80) {
      i += 1;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      code = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      code = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      code = c & 0x07;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      code = (code << 6) | (cc & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range code points.
    if (len == 2 && code < 0x80) return false;
    if (len == 3 && code < 0x800) return false;
    if (len == 4 && code < 0x10000) return false;
    if (code > 0x10FFFF) return false;
    if (code >= 0xD800 && code <= 0xDFFF) return false;
    i += len;
  }
  return true;
}

namespace {

std::string normalize_line_endings(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

bool all_whitespace(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

// "3", "3.1.5", "A.1" — dotted numbering; letter forms require at least one
// dotted segment here so that prose lines like "A resource ..." never open a
// clause. Bare annex letters come from "Annex X" lines instead.
bool is_clause_number(std::string_view s) {
  if (s.empty()) return false;
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t dot = s.find('.', pos);
    if (dot == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, dot - pos));
    pos = dot + 1;
  }
  const std::string_view head = parts[0];
  bool annex = head.size() == 1 && std::isupper(static_cast<unsigned char>(head[0]));
  if (!annex && !is_digits(head)) return false;
  if (annex && parts.size() == 1) return false;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (!is_digits(parts[i])) return false;
  }
  return true;
}

std::size_t clause_depth(std::string_view number) {
  return static_cast<std::size_t>(std::count(number.begin(), number.end(), '.')) + 1;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

ClauseKind classify_heading(std::string_view number, std::string_view heading) {
  if (!number.empty() && std::isupper(static_cast<unsigned char>(number[0]))) {
    return ClauseKind::Annex;
  }
  std::string h = lowercase(heading);
  if (h == "scope") return ClauseKind::Scope;
  if (h == "terms and definitions" ||
      h == "terms, definitions and abbreviated terms") {
    return ClauseKind::TermsAndDefinitions;
  }
  if (h == "bibliography") return ClauseKind::Bibliography;
  return ClauseKind::Body;
}

struct HeadingLine {
  std::string number;
  std::string heading;
  std::size_t line_start;
  std::size_t depth;
  ClauseKind kind;
};

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::optional<HeadingLine> parse_heading_line(std::string_view line,
                                              std::size_t line_start) {
  // Indented lines never open clauses.
  if (line.empty() || std::isspace(static_cast<unsigned char>(line[0]))) {
    return std::nullopt;
  }
  std::string_view body = trim(line);

  // "Annex A" or "Annex A <title>"
  constexpr std::string_view kAnnex = "Annex ";
  if (body.size() > kAnnex.size() && body.substr(0, kAnnex.size()) == kAnnex) {
    std::string_view rest = body.substr(kAnnex.size());
    if (!rest.empty() && std::isupper(static_cast<unsigned char>(rest[0])) &&
        (rest.size() == 1 || rest[1] == ' ')) {
      HeadingLine h;
      h.number = std::string(1, rest[0]);
      h.heading = std::string(trim(rest.substr(1)));
      h.line_start = line_start;
      h.depth = 1;
      h.kind = ClauseKind::Annex;
      return h;
    }
  }

  std::size_t space = body.find_first_of(" \t");
  if (space == std::string_view::npos) return std::nullopt;
  std::string_view number = body.substr(0, space);
  std::string_view heading = trim(body.substr(space));
  if (heading.empty()) return std::nullopt;
  if (!is_clause_number(number)) return std::nullopt;

  HeadingLine h;
  h.number = std::string(number);
  h.heading = std::string(heading);
  h.line_start = line_start;
  h.depth = clause_depth(number);
  h.kind = classify_heading(number, heading);
  return h;
}

void attach(std::vector<Clause>& roots, std::vector<Clause*>& stack,
            Clause clause, std::size_t depth) {
  while (stack.size() >= depth) stack.pop_back();
  Clause* slot;
  if (stack.empty()) {
    roots.push_back(std::move(clause));
    slot = &roots.back();
  } else {
    stack.back()->children.push_back(std::move(clause));
    slot = &stack.back()->children.back();
  }
  stack.push_back(slot);
}

const Clause* deepest_containing(const std::vector<Clause>& clauses,
                                 std::size_t offset) {
  for (const Clause& c : clauses) {
    if (offset >= c.span.start && offset < c.span.end) {
      const Clause* child = deepest_containing(c.children, offset);
      return child ? child : &c;
    }
  }
  return nullptr;
}

}  // namespace

std::vector<Clause> parse_clauses(std::string_view text) {
  std::vector<HeadingLine> headings;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::size_t end = (eol == std::string_view::npos) ? text.size() : eol;
    if (auto h = parse_heading_line(text.substr(pos, end - pos), pos)) {
      headings.push_back(std::move(*h));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (headings.empty()) {
    Clause whole;
    whole.number = "0";
    whole.heading = "";
    whole.span = {0, text.size()};
    whole.kind = ClauseKind::Unknown;
    return {whole};
  }

  std::vector<Clause> roots;
  std::vector<Clause*> stack;
  for (std::size_t i = 0; i < headings.size(); ++i) {
    Clause c;
    c.number = headings[i].number;
    c.heading = headings[i].heading;
    c.kind = headings[i].kind;
    std::size_t end = text.size();
    for (std::size_t j = i + 1; j < headings.size(); ++j) {
      if (headings[j].depth <= headings[i].depth) {
        end = headings[j].line_start;
        break;
      }
    }
    c.span = {headings[i].line_start, end};
    attach(roots, stack, std::move(c), headings[i].depth);
  }
  return roots;
}

Document ingest_document(std::string_view raw, const DocumentMetadata& metadata) {
  if (metadata.doc_id.empty() || metadata.standard_ref.empty() ||
      metadata.title.empty()) {
    throw Error(ErrorCode::ParseError, "document metadata fields must be nonempty");
  }
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (raw.size() >= kBom.size() && raw.substr(0, kBom.size()) == kBom) {
    raw.remove_prefix(kBom.size());
  }
  if (!is_valid_utf8(raw)) {
    throw Error(ErrorCode::DecodeError,
                "document '" + metadata.doc_id + "' is not valid UTF-8");
  }
  std::string text = normalize_line_endings(raw);
  if (all_whitespace(text)) {
    throw Error(ErrorCode::EmptyDocument,
                "document '" + metadata.doc_id + "' has no content");
  }

  Document doc;
  doc.doc_id = metadata.doc_id;
  doc.standard_ref = metadata.standard_ref;
  doc.title = metadata.title;
  doc.text = std::move(text);
  doc.clauses = parse_clauses(doc.text);
  return doc;
}

std::string Document::clause_number_at(std::size_t offset) const {
  const Clause* c = deepest_containing(clauses, offset);
  return c ? c->number : std::string();
}

namespace {

std::optional<std::string> find_adapted_from(std::string_view body) {
  std::string low = lowercase(body);
  constexpr std::string_view kKey = "adapted from ";
  std::size_t at = low.find(kKey);
  if (at == std::string::npos) return std::nullopt;
  std::size_t ref_begin = at + kKey.size();
  std::size_t ref_end = body.size();
  bool bracketed = at > 0 && body[at - 1] == '[';
  for (std::size_t i = ref_begin; i < body.size(); ++i) {
    char c = body[i];
    if (c == ']' || c == '\n' || (!bracketed && (c == '.' || c == ','))) {
      ref_end = i;
      break;
    }
  }
  std::string ref(trim(body.substr(ref_begin, ref_end - ref_begin)));
  if (ref.empty()) return std::nullopt;
  return ref;
}

void collect_term_leaves(const Document& doc, const Clause& clause,
                         std::vector<TermEntry>& out) {
  if (!clause.is_leaf()) {
    for (const Clause& child : clause.children) {
      collect_term_leaves(doc, child, out);
    }
    return;
  }
  std::string_view covered = doc.covered(clause.span);
  std::size_t first_eol = covered.find('\n');
  std::string_view body =
      first_eol == std::string_view::npos ? std::string_view() : covered.substr(first_eol + 1);
  std::string definition(trim(body));
  if (clause.heading.empty() || definition.empty()) return;

  TermEntry entry;
  entry.term = clause.heading;
  entry.definition = definition;
  entry.clause_number = clause.number;
  entry.doc_id = doc.doc_id;
  entry.adapted_from = find_adapted_from(definition);
  entry.span = clause.span;
  out.push_back(std::move(entry));
}

void visit_terms_clauses(const Document& doc, const Clause& clause,
                         std::vector<TermEntry>& out) {
  if (clause.kind == ClauseKind::TermsAndDefinitions) {
    for (const Clause& child : clause.children) {
      collect_term_leaves(doc, child, out);
    }
    return;
  }
  for (const Clause& child : clause.children) {
    visit_terms_clauses(doc, child, out);
  }
}

}  // namespace

std::vector<TermEntry> extract_term_entries(const Document& doc) {
  std::vector<TermEntry> out;
  for (const Clause& clause : doc.clauses) {
    visit_terms_clauses(doc, clause, out);
  }
  return out;
}

const Document* Corpus::find(std::string_view doc_id) const {
  for (const Document& doc : documents) {
    if (doc.doc_id == doc_id) return &doc;
  }
  return nullptr;
}

Corpus load_corpus_manifest(const std::string& manifest_path) {
  std::ifstream in(manifest_path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open manifest " + manifest_path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError,
                "manifest " + manifest_path + ": " + e.what());
  }

  Corpus corpus;
  try {
    corpus.corpus_id = j.at("corpus_id").get<std::string>();
    std::filesystem::path base =
        std::filesystem::path(manifest_path).parent_path();
    for (const auto& d : j.at("documents")) {
      DocumentMetadata meta;
      meta.doc_id = d.at("doc_id").get<std::string>();
      meta.standard_ref = d.at("standard_ref").get<std::string>();
      meta.title = d.at("title").get<std::string>();
      std::filesystem::path path = base / d.at("path").get<std::string>();

      std::ifstream file(path, std::ios::binary);
      if (!file) {
        throw Error(ErrorCode::IoError, "cannot open document " + path.string());
      }
      std::ostringstream buf;
      buf << file.rdbuf();
      Document doc = ingest_document(buf.str(), meta);
      if (d.contains("page_count_hint")) {
        doc.page_count_hint = d.at("page_count_hint").get<int>();
      }
      for (const Document& existing : corpus.documents) {
        if (existing.doc_id == doc.doc_id) {
          throw Error(ErrorCode::ParseError,
                      "duplicate doc_id '" + doc.doc_id + "' in manifest");
        }
      }
      corpus.documents.push_back(std::move(doc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError,
                "manifest " + manifest_path + ": " + e.what());
  }
  return corpus;
}

}  // namespace normcheck
