#include "bigrams/measures.hpp"

#include <algorithm>
#include <cmath>

#include "bigrams/errors.hpp"

namespace bigrams {
namespace {

double safe_ll_term(double observed, double expected) {
  if (observed <= 0.0 || expected <= 0.0) return 0.0;
  return observed * std::log(observed / expected);
}

double score_impl(const ContingencyTable& t, MeasureId measure) {
  const double n11 = static_cast<double>(t.n11);
  const double n10 = static_cast<double>(t.n10);
  const double n01 = static_cast<double>(t.n01);
  const double n00 = static_cast<double>(t.n00);
  const double n = static_cast<double>(t.total);
  const double r1 = n11 + n10;  // row/column marginals
  const double r0 = n01 + n00;
  const double c1 = n11 + n01;
  const double c0 = n10 + n00;
  switch (measure) {
    case MeasureId::pmi:
      if (t.n11 == 0) {
        throw UndefinedScoreError("pmi is undefined for n11 = 0");
      }
      return std::log2(n11 * n / (r1 * c1));
    case MeasureId::chi_square: {
      const double denom = r1 * r0 * c1 * c0;
      if (denom == 0.0) return 0.0;
      const double diff = n11 * n00 - n10 * n01;
      return n * diff * diff / denom;
    }
    case MeasureId::log_likelihood:
      return 2.0 * (safe_ll_term(n11, r1 * c1 / n) +
                    safe_ll_term(n10, r1 * c0 / n) +
                    safe_ll_term(n01, r0 * c1 / n) +
                    safe_ll_term(n00, r0 * c0 / n));
    case MeasureId::t_score:
      if (t.n11 == 0) return 0.0;
      return (n11 - r1 * c1 / n) / std::sqrt(n11);
    case MeasureId::dice: {
      const double denom = 2.0 * n11 + n10 + n01;
      return denom == 0.0 ? 0.0 : 2.0 * n11 / denom;
    }
  }
  return 0.0;
}

}  // namespace

std::optional<MeasureId> parse_measure(std::string_view name) {
  if (name == "pmi") return MeasureId::pmi;
  if (name == "chi_square") return MeasureId::chi_square;
  if (name == "log_likelihood") return MeasureId::log_likelihood;
  if (name == "t_score") return MeasureId::t_score;
  if (name == "dice") return MeasureId::dice;
  return std::nullopt;
}

std::string_view measure_name(MeasureId measure) {
  switch (measure) {
    case MeasureId::pmi: return "pmi";
    case MeasureId::chi_square: return "chi_square";
    case MeasureId::log_likelihood: return "log_likelihood";
    case MeasureId::t_score: return "t_score";
    case MeasureId::dice: return "dice";
  }
  return "";
}

double score(const ContingencyTable& table, MeasureId measure) {
  if (table.total == 0) {
    throw UndefinedScoreError("score is undefined for an empty table");
  }
  return score_impl(table, measure);
}

std::vector<ScoredBigram> top_k(const FrequencyIndex& index, MeasureId measure,
                                std::size_t k, Count min_count,
                                MarginalMode mode) {
  const Count threshold = std::max<Count>(min_count, 1);
  std::vector<ScoredBigram> scored;
  for (const auto& [w1, row] : index.bigram_fd) {
    for (const auto& [w2, n11] : row) {
      if (n11 < threshold) continue;
      const ContingencyTable table = contingency(index, w1, w2, mode);
      scored.push_back({w1, w2, score(table, measure), n11});
    }
  }
  std::sort(scored.begin(), scored.end(),
            [](const ScoredBigram& a, const ScoredBigram& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.word1 != b.word1) return a.word1 < b.word1;
              return a.word2 < b.word2;
            });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

}  // namespace bigrams
