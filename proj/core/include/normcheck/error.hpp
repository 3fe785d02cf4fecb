#ifndef NORMCHECK_ERROR_HPP
#define NORMCHECK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace normcheck {

enum class ErrorCode {
  DecodeError,     // input bytes are not valid UTF-8
  EmptyDocument,   // document has no non-whitespace content
  ParseError,      // malformed manifest, ontology, rule file or XML
  DanglingEdge,    // subclass edge endpoint not declared
  DuplicateIri,    // class IRI declared twice
  RuleError,       // rule RHS references an unbound label
  UnknownSource,   // annotation has neither ontology nor rule provenance
  IoError,         // file could not be read or written
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace normcheck

#endif  // NORMCHECK_ERROR_HPP
