#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bigrams {

struct TokenizerConfig {
  bool lowercase = true;
  bool strip_edge_punctuation = false;

  // Stable textual id of the settings, stored in index files so that a
  // query-time mismatch can be detected.
  std::string fingerprint() const;
};

// One short text as an ordered token sequence. Positions are 0-based.
struct Document {
  std::string id;  // empty when the source carries none
  std::vector<std::string> tokens;

  std::size_t length() const { return tokens.size(); }

  bool operator==(const Document&) const = default;
};

enum class CorpusFormat { lines, jsonl };

// Splits `text` into maximal whitespace-free runs (Unicode whitespace),
// applying lowercasing and optional edge-punctuation stripping. Empty
// input yields an empty document. Throws DecodeError on malformed UTF-8.
Document tokenize(std::string_view text, const TokenizerConfig& config);

using DocumentSink = std::function<void(Document&&)>;

// Streams documents out of `in` in input order, one call to `sink` per
// record. Blank lines are skipped. LF and CRLF both accepted.
// Throws DecodeError / FormatError with the byte offset or line number.
void for_each_document(std::istream& in, CorpusFormat format,
                       const TokenizerConfig& config, const DocumentSink& sink);

std::vector<Document> read_corpus(std::istream& in, CorpusFormat format,
                                  const TokenizerConfig& config);

}  // namespace bigrams
