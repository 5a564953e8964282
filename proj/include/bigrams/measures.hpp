#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigrams/marginals.hpp"

namespace bigrams {

enum class MeasureId { pmi, chi_square, log_likelihood, t_score, dice };

std::optional<MeasureId> parse_measure(std::string_view name);
std::string_view measure_name(MeasureId measure);

// Standard contingency-based association scores, double precision.
// Throws UndefinedScoreError for pmi with n11 = 0 and for total = 0.
// Zero expected cells contribute zero to the log-likelihood sum.
double score(const ContingencyTable& table, MeasureId measure);

struct ScoredBigram {
  std::string word1;
  std::string word2;
  double score = 0.0;
  Count n11 = 0;
};

// Scores every bigram with n11 >= max(min_count, 1) and returns the k
// best, descending by score, ties broken by ascending (word1, word2).
std::vector<ScoredBigram> top_k(const FrequencyIndex& index, MeasureId measure,
                                std::size_t k, Count min_count,
                                MarginalMode mode);

}  // namespace bigrams
