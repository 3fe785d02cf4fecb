#include "normcheck/rules.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "normcheck/error.hpp"

namespace normcheck {

// ---------------------------------------------------------------------------
// Rule file parser
// ---------------------------------------------------------------------------

namespace {

struct RuleLexer {
  std::string_view src;
  std::string origin;
  std::size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::ParseError,
                origin + ":" + std::to_string(line) + ": " + message);
  }

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '\n') {
        ++line;
        ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        while (pos < src.size() && src[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool try_consume(std::string_view symbol) {
    skip_ws();
    if (src.substr(pos, symbol.size()) == symbol) {
      pos += symbol.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view symbol) {
    if (!try_consume(symbol)) {
      fail("expected '" + std::string(symbol) + "'");
    }
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) ||
            src[pos] == '_')) {
      ++pos;
    }
    if (start == pos) fail("expected identifier");
    return std::string(src.substr(start, pos - start));
  }

  int integer() {
    skip_ws();
    bool neg = pos < src.size() && src[pos] == '-';
    if (neg) ++pos;
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      ++pos;
    }
    if (start == pos) fail("expected integer");
    int value = std::stoi(std::string(src.substr(start, pos - start)));
    return neg ? -value : value;
  }

  std::string string_literal() {
    skip_ws();
    if (pos >= src.size() || src[pos] != '"') fail("expected string literal");
    ++pos;
    std::string out;
    while (pos < src.size() && src[pos] != '"') {
      if (src[pos] == '\\' && pos + 1 < src.size()) ++pos;
      if (src[pos] == '\n') fail("unterminated string literal");
      out.push_back(src[pos++]);
    }
    if (pos >= src.size()) fail("unterminated string literal");
    ++pos;
    return out;
  }
};

std::optional<TokenKind> parse_token_kind(std::string_view name) {
  if (name == "Word") return TokenKind::Word;
  if (name == "Number") return TokenKind::Number;
  if (name == "Punct") return TokenKind::Punct;
  if (name == "Space") return TokenKind::Space;
  return std::nullopt;
}

std::optional<Orth> parse_orth(std::string_view name) {
  if (name == "Lower") return Orth::Lower;
  if (name == "Upper") return Orth::Upper;
  if (name == "Capitalized") return Orth::Capitalized;
  if (name == "Mixed") return Orth::Mixed;
  if (name == "NA") return Orth::NA;
  return std::nullopt;
}

struct PatternParser {
  RuleLexer& lex;

  PatternElement parse_element() {
    PatternElement element;
    char c = lex.peek();
    if (c == '(') {
      lex.expect("(");
      PatternGroup group;
      while (lex.peek() != ')') group.sequence.push_back(parse_element());
      lex.expect(")");
      if (group.sequence.empty()) lex.fail("empty group");
      element.value = std::move(group);
    } else if (c == '{') {
      element.value = parse_constraint();
    } else if (c == '"') {
      TokenConstraint tc;
      tc.surface = lex.string_literal();
      element.value = tc;
    } else {
      lex.fail("expected '(', '{' or a string literal");
    }

    // Quantifier and binding may come in either order.
    bool quantified = false;
    while (true) {
      if (!quantified && lex.try_consume("?")) {
        element.quant = Quantifier::Optional;
        quantified = true;
      } else if (!quantified && lex.try_consume("*")) {
        element.quant = Quantifier::Star;
        quantified = true;
      } else if (!quantified && lex.try_consume("+")) {
        element.quant = Quantifier::Plus;
        quantified = true;
      } else if (element.binding.empty() && lex.try_consume("#")) {
        if (!std::holds_alternative<PatternGroup>(element.value)) {
          lex.fail("bindings attach to groups only");
        }
        element.binding = lex.ident();
      } else {
        break;
      }
    }
    return element;
  }

  std::variant<TokenConstraint, AnnotationConstraint, PatternGroup>
  parse_constraint() {
    lex.expect("{");
    std::string first = lex.ident();
    if (first == "ann" && lex.try_consume(":")) {
      AnnotationConstraint ac;
      ac.ann_type = lex.ident();
      lex.expect("}");
      return ac;
    }

    TokenConstraint tc;
    std::string lhs = first;
    while (true) {
      if (lex.try_consume("==")) {
        if (lhs == "kind") {
          auto kind = parse_token_kind(lex.ident());
          if (!kind) lex.fail("unknown token kind");
          tc.kind = *kind;
        } else if (lhs == "orth") {
          auto orth = parse_orth(lex.ident());
          if (!orth) lex.fail("unknown orth value");
          tc.orth = *orth;
        } else if (lhs == "surface") {
          tc.surface = lex.string_literal();
        } else if (auto kind = parse_token_kind(lhs)) {
          // {Word=="ISO"} — kind plus surface in one test.
          tc.kind = *kind;
          tc.surface = lex.string_literal();
        } else {
          lex.fail("unknown constraint attribute '" + lhs + "'");
        }
      } else if (auto kind = parse_token_kind(lhs)) {
        tc.kind = *kind;  // bare shorthand: {Number}
      } else {
        lex.fail("unknown constraint attribute '" + lhs + "'");
      }
      if (!lex.try_consume(",")) break;
      lhs = lex.ident();
    }
    lex.expect("}");
    return tc;
  }
};

void collect_bindings(const PatternGroup& group, std::set<std::string>& out) {
  for (const PatternElement& element : group.sequence) {
    if (!element.binding.empty()) out.insert(element.binding);
    if (const auto* nested = std::get_if<PatternGroup>(&element.value)) {
      collect_bindings(*nested, out);
    }
  }
}

}  // namespace

Phase parse_phase(std::string_view source, std::string_view origin) {
  RuleLexer lex{source, std::string(origin)};
  Phase phase;

  lex.expect("phase");
  phase.name = lex.ident();
  lex.expect(";");

  std::set<std::string> rule_names;
  while (!lex.at_end()) {
    lex.expect("rule");
    Rule rule;
    rule.name = lex.ident();
    if (!rule_names.insert(rule.name).second) {
      lex.fail("duplicate rule name '" + rule.name + "'");
    }
    lex.expect("priority");
    rule.priority = lex.integer();
    lex.expect(":");

    PatternParser parser{lex};
    while (lex.peek() != '-') {
      rule.lhs.sequence.push_back(parser.parse_element());
    }
    if (rule.lhs.sequence.empty()) lex.fail("rule has an empty pattern");
    lex.expect("->");

    while (true) {
      RuleAction action;
      action.ann_type = lex.ident();
      lex.expect("{");
      if (lex.peek() != '}') {
        while (true) {
          std::string key = lex.ident();
          lex.expect("=");
          FeatureValue value;
          if (lex.try_consume("$")) {
            value.is_binding = true;
            value.text = lex.ident();
          } else if (lex.peek() == '"') {
            value.text = lex.string_literal();
          } else {
            value.text = lex.ident();
          }
          action.features.emplace_back(std::move(key), std::move(value));
          if (!lex.try_consume(",")) break;
        }
      }
      lex.expect("}");
      rule.actions.push_back(std::move(action));
      if (!lex.try_consume(",")) break;
    }
    lex.expect(";");

    // Unbound labels are a load-time error, never a runtime one.
    std::set<std::string> bindings;
    collect_bindings(rule.lhs, bindings);
    for (const RuleAction& action : rule.actions) {
      for (const auto& [key, value] : action.features) {
        if (value.is_binding && !bindings.count(value.text)) {
          throw Error(ErrorCode::RuleError,
                      "rule '" + rule.name + "' references unbound label '$" +
                          value.text + "'");
        }
      }
    }
    phase.rules.push_back(std::move(rule));
  }
  return phase;
}

Phase load_phase_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open rule file " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_phase(buf.str(), path);
}

// ---------------------------------------------------------------------------
// Matcher
// ---------------------------------------------------------------------------

namespace {

// Matching works on the non-space token view. End positions are view
// indices; sets of reachable ends are memoized per (element, position).
struct MatchContext {
  const std::vector<const Token*>& view;
  // char start offset -> annotations starting there
  const std::map<std::size_t, std::vector<const Annotation*>>& ann_starts;
  // view index end (exclusive) for a char end offset, npos when unaligned
  const std::map<std::size_t, std::size_t>& char_end_to_view;

  std::map<std::pair<const void*, std::size_t>, std::set<std::size_t>> memo;
};

std::set<std::size_t> ends_of_sequence(const std::vector<PatternElement>& seq,
                                       std::size_t index, std::size_t pos,
                                       MatchContext& ctx);

bool token_matches(const TokenConstraint& tc, const Token& token) {
  if (tc.kind && token.kind != *tc.kind) return false;
  if (tc.orth && token.orth != *tc.orth) return false;
  if (tc.surface && token.surface != *tc.surface) return false;
  return true;
}

std::set<std::size_t> ends_of_base(const PatternElement& element,
                                   std::size_t pos, MatchContext& ctx) {
  std::set<std::size_t> out;
  if (const auto* tc = std::get_if<TokenConstraint>(&element.value)) {
    if (pos < ctx.view.size() && token_matches(*tc, *ctx.view[pos])) {
      out.insert(pos + 1);
    }
  } else if (const auto* ac = std::get_if<AnnotationConstraint>(&element.value)) {
    if (pos < ctx.view.size()) {
      auto it = ctx.ann_starts.find(ctx.view[pos]->span.start);
      if (it != ctx.ann_starts.end()) {
        for (const Annotation* ann : it->second) {
          if (ann->ann_type != ac->ann_type) continue;
          auto end_it = ctx.char_end_to_view.find(ann->span.end);
          if (end_it != ctx.char_end_to_view.end()) out.insert(end_it->second);
        }
      }
    }
  } else {
    const auto& group = std::get<PatternGroup>(element.value);
    out = ends_of_sequence(group.sequence, 0, pos, ctx);
  }
  return out;
}

std::set<std::size_t> ends_of_element(const PatternElement& element,
                                      std::size_t pos, MatchContext& ctx) {
  auto key = std::make_pair(static_cast<const void*>(&element), pos);
  auto memo_it = ctx.memo.find(key);
  if (memo_it != ctx.memo.end()) return memo_it->second;

  std::set<std::size_t> out;
  switch (element.quant) {
    case Quantifier::One:
      out = ends_of_base(element, pos, ctx);
      break;
    case Quantifier::Optional:
      out = ends_of_base(element, pos, ctx);
      out.insert(pos);
      break;
    case Quantifier::Star:
    case Quantifier::Plus: {
      std::set<std::size_t> reached;
      std::vector<std::size_t> worklist;
      if (element.quant == Quantifier::Star) {
        reached.insert(pos);
        worklist.push_back(pos);
      } else {
        for (std::size_t e : ends_of_base(element, pos, ctx)) {
          if (reached.insert(e).second) worklist.push_back(e);
        }
      }
      while (!worklist.empty()) {
        std::size_t p = worklist.back();
        worklist.pop_back();
        for (std::size_t e : ends_of_base(element, p, ctx)) {
          if (e != p && reached.insert(e).second) worklist.push_back(e);
        }
      }
      out = std::move(reached);
      break;
    }
  }
  ctx.memo.emplace(key, out);
  return out;
}

std::set<std::size_t> ends_of_sequence(const std::vector<PatternElement>& seq,
                                       std::size_t index, std::size_t pos,
                                       MatchContext& ctx) {
  if (index == seq.size()) return {pos};
  std::set<std::size_t> out;
  for (std::size_t mid : ends_of_element(seq[index], pos, ctx)) {
    auto rest = ends_of_sequence(seq, index + 1, mid, ctx);
    out.insert(rest.begin(), rest.end());
  }
  return out;
}

// Positions reachable from `pos` by zero or more full group matches.
std::set<std::size_t> star_reach(const PatternGroup& group, std::size_t pos,
                                 MatchContext& ctx) {
  std::set<std::size_t> reached{pos};
  std::vector<std::size_t> worklist{pos};
  while (!worklist.empty()) {
    std::size_t p = worklist.back();
    worklist.pop_back();
    for (std::size_t e : ends_of_sequence(group.sequence, 0, p, ctx)) {
      if (e != p && reached.insert(e).second) worklist.push_back(e);
    }
  }
  return reached;
}

// Greedy capture assignment once the overall match end is fixed: each
// element takes the largest feasible extent that still lets the remainder
// reach the target.
struct CaptureWalker {
  MatchContext& ctx;
  std::map<std::string, Span>& bindings;

  bool walk_sequence(const std::vector<PatternElement>& seq, std::size_t index,
                     std::size_t pos, std::size_t target) {
    if (index == seq.size()) return pos == target;
    const PatternElement& element = seq[index];
    std::set<std::size_t> ends = ends_of_element(element, pos, ctx);
    for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
      std::size_t mid = *it;
      if (mid > target) continue;
      if (!ends_of_sequence(seq, index + 1, mid, ctx).count(target)) continue;
      if (!walk_element(element, pos, mid)) continue;
      if (!walk_sequence(seq, index + 1, mid, target)) continue;
      return true;
    }
    return false;
  }

  bool walk_element(const PatternElement& element, std::size_t pos,
                    std::size_t end) {
    if (!element.binding.empty()) {
      Span span{0, 0};
      if (end > pos) {
        span = {ctx.view[pos]->span.start, ctx.view[end - 1]->span.end};
      } else if (pos < ctx.view.size()) {
        span = {ctx.view[pos]->span.start, ctx.view[pos]->span.start};
      }
      bindings[element.binding] = span;
    }
    const auto* group = std::get_if<PatternGroup>(&element.value);
    if (!group) return true;

    switch (element.quant) {
      case Quantifier::One:
        return walk_sequence(group->sequence, 0, pos, end);
      case Quantifier::Optional:
        if (pos == end &&
            !ends_of_sequence(group->sequence, 0, pos, ctx).count(end)) {
          return true;  // skipped
        }
        return walk_sequence(group->sequence, 0, pos, end);
      case Quantifier::Star:
      case Quantifier::Plus: {
        // Decompose the extent into greedy iterations.
        std::size_t p = pos;
        if (element.quant == Quantifier::Star && p == end) return true;
        while (p < end) {
          std::set<std::size_t> ends = ends_of_sequence(group->sequence, 0, p, ctx);
          bool stepped = false;
          for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
            std::size_t mid = *it;
            if (mid > end || mid == p) continue;
            // Remaining extent must be coverable by further iterations.
            if (mid != end && !star_reach(*group, mid, ctx).count(end)) continue;
            if (!walk_sequence(group->sequence, 0, p, mid)) continue;
            p = mid;
            stepped = true;
            break;
          }
          if (!stepped) return false;
        }
        return true;
      }
    }
    return false;
  }
};

}  // namespace

AnnotationSet run_phase(const Phase& phase, const Document& doc,
                        const std::vector<Token>& tokens,
                        const AnnotationSet& existing) {
  std::vector<const Token*> view;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::Space) view.push_back(&t);
  }

  std::map<std::size_t, std::vector<const Annotation*>> ann_starts;
  for (const Annotation& ann : existing.annotations()) {
    ann_starts[ann.span.start].push_back(&ann);
  }
  std::map<std::size_t, std::size_t> char_end_to_view;
  for (std::size_t i = 0; i < view.size(); ++i) {
    char_end_to_view[view[i]->span.end] = i + 1;
  }

  MatchContext ctx{view, ann_starts, char_end_to_view, {}};
  AnnotationSet result = existing;

  std::size_t pos = 0;
  while (pos < view.size()) {
    const Rule* winner = nullptr;
    std::size_t winner_end = pos;
    for (const Rule& rule : phase.rules) {
      std::set<std::size_t> ends = ends_of_sequence(rule.lhs.sequence, 0, pos, ctx);
      if (ends.empty()) continue;
      std::size_t end = *ends.rbegin();
      // Empty matches never fire.
      if (end <= pos) continue;
      if (!winner || end > winner_end ||
          (end == winner_end && rule.priority > winner->priority)) {
        winner = &rule;
        winner_end = end;
      }
    }
    if (!winner) {
      ++pos;
      continue;
    }

    std::map<std::string, Span> bindings;
    CaptureWalker walker{ctx, bindings};
    PatternElement whole{winner->lhs, Quantifier::One, ""};
    walker.walk_element(whole, pos, winner_end);

    Span match_span{view[pos]->span.start, view[winner_end - 1]->span.end};
    for (const RuleAction& action : winner->actions) {
      Annotation ann;
      ann.span = match_span;
      ann.ann_type = action.ann_type;
      for (const auto& [key, value] : action.features) {
        if (value.is_binding) {
          auto bound = bindings.find(value.text);
          ann.features[key] =
              bound == bindings.end()
                  ? std::string()
                  : std::string(doc.covered(bound->second));
        } else {
          ann.features[key] = value.text;
        }
      }
      ann.source = AnnotationSource::rule(winner->name);
      result.add(std::move(ann));
    }
    pos = winner_end;
  }
  return result;
}

AnnotationSet run_phase(const Phase& phase, const Document& doc,
                        const AnnotationSet& existing) {
  return run_phase(phase, doc, tokenize(doc.text), existing);
}

}  // namespace normcheck
