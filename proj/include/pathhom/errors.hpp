#pragma once

#include <stdexcept>
#include <string>

namespace pathhom {

// Malformed textual input (edge lists, ring specs). Carries a 1-based line
// number when the source is line oriented, 0 otherwise.
struct parse_error : std::runtime_error {
  size_t line;
  parse_error(const std::string& msg, size_t line_no = 0)
      : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

// Structurally well-formed input that violates a domain rule
// (loop edges, composite modulus, bad family parameters, ...).
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated by the caller.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Vector not expressible over the requested basis / coefficient ring.
struct not_in_span_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search exceeded its configured node budget; the query is undetermined.
struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pathhom
