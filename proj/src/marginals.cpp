#include "bigrams/marginals.hpp"

namespace bigrams {
namespace {

// Sum over an occurrence multiset of (w - idx - 1), folded over the
// histogram: slot d holds how many occurrences sit at offending index d.
Count deficit_sum(const BoundaryDeficitTable& table, const std::string& word,
                  int window) {
  const auto it = table.find(word);
  if (it == table.end()) return 0;
  Count sum = 0;
  const auto& hist = it->second;
  for (std::size_t d = 0; d < hist.size(); ++d) {
    sum += hist[d] * (static_cast<Count>(window) - d - 1);
  }
  return sum;
}

Count exact_marginal(const FrequencyIndex& index, const std::string& word,
                     const BoundaryDeficitTable& deficits) {
  const Count leading =
      static_cast<Count>(index.window - 1) * index.word_count(word);
  return leading - deficit_sum(deficits, word, index.window);
}

}  // namespace

Count exact_left_marginal(const FrequencyIndex& index,
                          const std::string& word) {
  return exact_marginal(index, word, index.tfl);
}

Count exact_right_marginal(const FrequencyIndex& index,
                           const std::string& word) {
  return exact_marginal(index, word, index.tfr);
}

Count approx_marginal(const FrequencyIndex& index, const std::string& word) {
  return static_cast<Count>(index.window - 1) * index.word_count(word);
}

Count total_bigram_count(const FrequencyIndex& index) {
  return index.bigram_total;
}

ContingencyTable contingency(const FrequencyIndex& index,
                             const std::string& word1,
                             const std::string& word2, MarginalMode mode) {
  ContingencyTable table;
  table.mode = mode;
  table.n11 = static_cast<std::int64_t>(index.bigram_count(word1, word2));
  const bool exact = mode == MarginalMode::exact;
  const auto left = static_cast<std::int64_t>(
      exact ? exact_left_marginal(index, word2) : approx_marginal(index, word2));
  const auto right = static_cast<std::int64_t>(
      exact ? exact_right_marginal(index, word1)
            : approx_marginal(index, word1));
  table.n01 = left - table.n11;
  table.n10 = right - table.n11;
  table.total = static_cast<std::int64_t>(
      exact ? total_bigram_count(index)
            : static_cast<Count>(index.window - 1) * index.token_count);
  table.n00 = table.total - table.n11 - table.n01 - table.n10;
  return table;
}

}  // namespace bigrams
