#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigrams/corpus.hpp"

namespace bigrams {

using Count = std::uint64_t;

using WordFrequencyTable = std::unordered_map<std::string, Count>;

// bigram_fd[w1][w2] = number of window-limited position pairs (i, i+d)
// with tokens[i] = w1, tokens[i+d] = w2, 1 <= d <= window-1.
using BigramFrequencyTable =
    std::unordered_map<std::string, std::unordered_map<std::string, Count>>;

// word -> histogram over offending index values. Slot d holds the number
// of occurrences of the word at offending index d, d in [0, window-2].
// Logically this is the paper-style multiset of indices; the histogram
// keeps per-word storage bounded by window-1. Words with no deficits are
// absent (no all-zero histograms are stored).
using BoundaryDeficitTable = std::unordered_map<std::string, std::vector<Count>>;

// The four count structures for one fixed window, plus corpus totals.
// Immutable once built; safe for concurrent readers.
struct FrequencyIndex {
  int window = 2;
  std::string tokenizer_fingerprint;
  WordFrequencyTable word_fd;
  BigramFrequencyTable bigram_fd;
  BoundaryDeficitTable tfl;  // occurrences too close to the left edge
  BoundaryDeficitTable tfr;  // too close to the right edge, indices g-transformed
  Count doc_count = 0;
  Count token_count = 0;
  Count bigram_total = 0;  // sum of all bigram_fd counts

  Count word_count(const std::string& word) const;
  Count bigram_count(const std::string& w1, const std::string& w2) const;

  bool operator==(const FrequencyIndex&) const = default;
};

// The g transform: mirrors a position so that distance-to-right-edge
// reads like a left index. Returns length - idx - 1.
// Throws std::out_of_range unless 0 <= idx < length.
std::size_t transform_right_index(std::size_t idx, std::size_t length);

// Streaming construction: one pass per document, O(length * window) work.
class IndexBuilder {
 public:
  // Throws std::invalid_argument if window < 2.
  explicit IndexBuilder(int window, std::string tokenizer_fingerprint = "");

  void add(const Document& doc);

  const FrequencyIndex& index() const { return index_; }
  FrequencyIndex take() { return std::move(index_); }

 private:
  FrequencyIndex index_;
};

FrequencyIndex build_index(const std::vector<Document>& docs, int window,
                           const std::string& tokenizer_fingerprint = "");

// Pointwise sum of all tables; equivalent to building over the
// concatenated corpora. Throws IncompatibleIndexError if window or
// tokenizer fingerprints differ.
FrequencyIndex merge(const FrequencyIndex& a, const FrequencyIndex& b);

// Canonical versioned JSON format, byte-deterministic for a given index.
void save_index(const FrequencyIndex& index, std::ostream& out);

// Throws VersionError on unknown format_version, FormatError on any
// schema violation (message names the field).
FrequencyIndex load_index(std::istream& in);

}  // namespace bigrams
