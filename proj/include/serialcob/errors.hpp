#pragma once

#include <stdexcept>
#include <string>

namespace serialcob {

// Bad user input: malformed JSON, alphabet mismatches, ill-formed diagrams.
// The CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Kleene plus applied to a series with nonzero constant term.
struct ImproperKleene : ValidationError {
  explicit ImproperKleene(const std::string& msg) : ValidationError(msg) {}
};

// Composition of morphisms whose boundaries do not match.
struct BoundaryMismatch : ValidationError {
  explicit BoundaryMismatch(const std::string& msg) : ValidationError(msg) {}
};

}  // namespace serialcob
