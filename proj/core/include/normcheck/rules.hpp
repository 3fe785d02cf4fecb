#ifndef NORMCHECK_RULES_HPP
#define NORMCHECK_RULES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "normcheck/annotate.hpp"

namespace normcheck {

// Pattern rules in a small declarative text format, one phase per file:
//
//   phase references;
//   // ISO document references, e.g. "ISO 15531-44" or "ISO/TS 16668".
//   rule iso_ref priority 10:
//     ({Word=="ISO"} ("/" {Word})? {Number} ("-" {Number})?)#ref
//     -> Reference{standard_ref=$ref};
//
// Token constraints test kind, orth or the exact surface form; a bare quoted
// string is shorthand for a surface test. {ann:Type} consumes the tokens
// covered by an existing annotation of that type. Patterns match over the
// non-whitespace token stream.

enum class Quantifier { One, Optional, Star, Plus };

struct TokenConstraint {
  std::optional<TokenKind> kind;
  std::optional<Orth> orth;
  std::optional<std::string> surface;  // exact, case-sensitive
};

struct AnnotationConstraint {
  std::string ann_type;
};

struct PatternElement;

struct PatternGroup {
  std::vector<PatternElement> sequence;
};

struct PatternElement {
  std::variant<TokenConstraint, AnnotationConstraint, PatternGroup> value;
  Quantifier quant = Quantifier::One;
  std::string binding;  // set only on groups, "" when unbound
};

struct FeatureValue {
  bool is_binding = false;
  std::string text;  // literal text, or the binding name
};

struct RuleAction {
  std::string ann_type;
  std::vector<std::pair<std::string, FeatureValue>> features;
};

struct Rule {
  std::string name;
  int priority = 0;
  PatternGroup lhs;
  std::vector<RuleAction> actions;
};

// Matching control is always longest match: at each position the longest
// match over all rules wins, ties broken by priority then rule order.
struct Phase {
  std::string name;
  std::vector<Rule> rules;
};

// Parses one phase. Throws Error{ParseError} on malformed input and
// Error{RuleError} when an action references an unbound label.
Phase parse_phase(std::string_view source, std::string_view origin = "<string>");
Phase load_phase_file(const std::string& path);

// Runs one phase over a document: scan left to right, longest match first,
// resume after each match. Matching sees only `existing` annotations; the
// result is existing plus everything the fired actions created.
AnnotationSet run_phase(const Phase& phase, const Document& doc,
                        const AnnotationSet& existing);
AnnotationSet run_phase(const Phase& phase, const Document& doc,
                        const std::vector<Token>& tokens,
                        const AnnotationSet& existing);

}  // namespace normcheck

#endif  // NORMCHECK_RULES_HPP
