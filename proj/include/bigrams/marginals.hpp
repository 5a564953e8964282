#pragma once

#include <cstdint>
#include <string>

#include "bigrams/index.hpp"

namespace bigrams {

enum class MarginalMode { exact, approximate };

// 2x2 joint/complement table for an ordered word pair. Cells are signed:
// approximate mode can drive n00 (and in degenerate corpora other cells)
// negative, which is precisely the defect the exact method removes. The
// mode tag records which marginals produced the table.
struct ContingencyTable {
  std::int64_t n11 = 0;  // (word1, word2)
  std::int64_t n10 = 0;  // (word1, ~word2)
  std::int64_t n01 = 0;  // (~word1, word2)
  std::int64_t n00 = 0;  // (~word1, ~word2)
  std::int64_t total = 0;
  MarginalMode mode = MarginalMode::exact;

  bool operator==(const ContingencyTable&) const = default;
};

// freq(*, word): exact count of window bigrams ending in word.
// (w-1)*word_fd[word] minus the left-edge deficits. Unknown words give 0.
// O(window) per query.
Count exact_left_marginal(const FrequencyIndex& index, const std::string& word);

// freq(word, *): exact count of window bigrams starting with word.
Count exact_right_marginal(const FrequencyIndex& index, const std::string& word);

// The popular approximation generalized to windows: (w-1)*word_fd[word].
// At w=2 this is the literal freq(word).
Count approx_marginal(const FrequencyIndex& index, const std::string& word);

// Exact total number of window bigrams in the corpus.
Count total_bigram_count(const FrequencyIndex& index);

ContingencyTable contingency(const FrequencyIndex& index,
                             const std::string& word1, const std::string& word2,
                             MarginalMode mode);

}  // namespace bigrams
