#pragma once

#include <stdexcept>
#include <string>

namespace bigrams {

// Malformed UTF-8 in an input stream. Message names the byte offset.
struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally invalid input record or index file. Message names the
// offending line or field.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index file with an unsupported format_version.
struct VersionError : FormatError {
  using FormatError::FormatError;
};

// Attempt to merge indexes with different window or tokenizer settings.
struct IncompatibleIndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Association measure undefined for the given contingency table.
struct UndefinedScoreError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bigrams
