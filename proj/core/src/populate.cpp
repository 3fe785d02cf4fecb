#include "normcheck/populate.hpp"

#include <algorithm>
#include <set>

#include "normcheck/token.hpp"

namespace normcheck {

const char* to_string(CandidateStatus status) {
  switch (status) {
    case CandidateStatus::New: return "New";
    case CandidateStatus::MatchesExisting: return "MatchesExisting";
    case CandidateStatus::Ambiguous: return "Ambiguous";
  }
  return "New";
}

namespace {

bool is_determiner(std::string_view word) {
  return word == "a" || word == "an" || word == "the";
}

bool is_stop_word(std::string_view word) {
  return word == "that" || word == "which" || word == "of" || word == "for";
}

bool is_copula(std::string_view word) { return word == "is" || word == "means"; }

// Clause numbers compare segment-wise so "3.10" follows "3.9".
std::vector<int> number_segments(std::string_view number) {
  std::vector<int> out;
  int current = 0;
  bool any = false;
  for (char c : number) {
    if (c >= '0' && c <= '9') {
      current = current * 10 + (c - '0');
      any = true;
    } else if (c == '.') {
      out.push_back(any ? current : -1);
      current = 0;
      any = false;
    } else {
      out.push_back(c);  // annex letters sort by char value
    }
  }
  out.push_back(any ? current : -1);
  return out;
}

}  // namespace

std::optional<std::string> extract_genus(std::string_view definition) {
  std::vector<bool> is_word_token;
  std::vector<std::string> folded;
  for (const Token& token : tokenize(definition)) {
    if (token.kind == TokenKind::Space) continue;
    folded.push_back(fold_case(token.surface));
    is_word_token.push_back(token.kind == TokenKind::Word);
  }

  std::size_t i = 0;
  auto skip_determiners = [&] {
    while (i < folded.size() && is_word_token[i] && is_determiner(folded[i])) ++i;
  };
  skip_determiners();

  // A copula inside the initial word run restarts extraction after it:
  // "flow control means control ..." yields the phrase after "means".
  for (std::size_t j = i; j < folded.size(); ++j) {
    if (!is_word_token[j] || is_stop_word(folded[j])) break;
    if (is_copula(folded[j])) {
      i = j + 1;
      skip_determiners();
      break;
    }
  }

  std::vector<std::string> head;
  for (; i < folded.size(); ++i) {
    if (!is_word_token[i] || is_stop_word(folded[i])) break;
    head.push_back(folded[i]);
  }
  if (head.empty()) return std::nullopt;

  std::string out;
  for (std::size_t k = 0; k < head.size(); ++k) {
    if (k) out.push_back(' ');
    out += head[k];
  }
  return out;
}

std::vector<CandidateClass> propose_candidates(
    const std::vector<TermEntry>& entries, const LabelIndex& index) {
  std::vector<CandidateClass> out;
  for (const TermEntry& entry : entries) {
    CandidateClass candidate;
    candidate.term = entry.term;
    candidate.doc_id = entry.doc_id;
    candidate.clause_number = entry.clause_number;
    candidate.span = entry.span;

    auto distinct_iris = [](const std::vector<LabelIndexEntry>& hits) {
      std::set<std::string> iris;
      for (const LabelIndexEntry& hit : hits) iris.insert(hit.class_iri);
      return std::vector<std::string>(iris.begin(), iris.end());
    };

    std::vector<std::string> term_hits = distinct_iris(index.lookup_phrase(entry.term));
    if (!term_hits.empty()) {
      candidate.proposed_parents = std::move(term_hits);
      candidate.status = candidate.proposed_parents.size() >= 2
                             ? CandidateStatus::Ambiguous
                             : CandidateStatus::MatchesExisting;
    } else {
      candidate.genus = extract_genus(entry.definition);
      std::vector<std::string> genus_hits =
          candidate.genus ? distinct_iris(index.lookup_phrase(*candidate.genus))
                          : std::vector<std::string>();
      candidate.proposed_parents = std::move(genus_hits);
      candidate.status = candidate.proposed_parents.size() >= 2
                             ? CandidateStatus::Ambiguous
                             : CandidateStatus::New;
    }
    out.push_back(std::move(candidate));
  }

  std::sort(out.begin(), out.end(),
            [](const CandidateClass& a, const CandidateClass& b) {
              if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
              auto sa = number_segments(a.clause_number);
              auto sb = number_segments(b.clause_number);
              if (sa != sb) return sa < sb;
              return a.term < b.term;
            });
  return out;
}

}  // namespace normcheck
