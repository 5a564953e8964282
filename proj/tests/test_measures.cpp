#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bigrams/errors.hpp"
#include "bigrams/measures.hpp"
#include "bigrams/oracle.hpp"
#include "test_util.hpp"

using namespace bigrams;
using bigrams::testing::doc;
using bigrams::testing::random_corpus;

namespace {

ContingencyTable table(std::int64_t n11, std::int64_t n10, std::int64_t n01,
                       std::int64_t n00) {
  return {n11, n10, n01, n00, n11 + n10 + n01 + n00, MarginalMode::exact};
}

}  // namespace

TEST_CASE("pmi of a perfectly associated pair") {
  CHECK(score(table(1, 0, 0, 3), MeasureId::pmi) == doctest::Approx(2.0));
}

TEST_CASE("pmi is zero at independence") {
  CHECK(score(table(1, 1, 1, 1), MeasureId::pmi) == doctest::Approx(0.0));
}

TEST_CASE("dice of a pair with empty off-cells") {
  CHECK(score(table(1, 0, 0, 3), MeasureId::dice) == doctest::Approx(1.0));
}

TEST_CASE("chi-square and log-likelihood vanish at independence") {
  CHECK(score(table(1, 1, 1, 1), MeasureId::chi_square) ==
        doctest::Approx(0.0));
  CHECK(score(table(1, 1, 1, 1), MeasureId::log_likelihood) ==
        doctest::Approx(0.0));
  CHECK(score(table(2, 2, 2, 2), MeasureId::t_score) == doctest::Approx(0.0));
}

TEST_CASE("log-likelihood treats zero expected cells as zero terms") {
  // second column empty: expected n10/n00 are zero
  const auto t = table(2, 0, 3, 0);
  CHECK(std::isfinite(score(t, MeasureId::log_likelihood)));
}

TEST_CASE("pmi with zero joint count is undefined") {
  CHECK_THROWS_AS(score(table(0, 1, 1, 1), MeasureId::pmi),
                  UndefinedScoreError);
}

TEST_CASE("empty table is undefined for every measure") {
  for (auto m : {MeasureId::pmi, MeasureId::chi_square,
                 MeasureId::log_likelihood, MeasureId::t_score,
                 MeasureId::dice}) {
    CHECK_THROWS_AS(score(table(0, 0, 0, 0), m), UndefinedScoreError);
  }
}

TEST_CASE("measure names round trip") {
  for (auto m : {MeasureId::pmi, MeasureId::chi_square,
                 MeasureId::log_likelihood, MeasureId::t_score,
                 MeasureId::dice}) {
    CHECK(parse_measure(measure_name(m)) == m);
  }
  CHECK(!parse_measure("mutual_info").has_value());
}

TEST_CASE("top_k on the window-2 example scores every pair at 2.0") {
  const auto index = build_index({doc("i like kitties and doggies")}, 2);
  const auto results =
      top_k(index, MeasureId::pmi, 10, 1, MarginalMode::exact);
  REQUIRE(results.size() == 4);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& r : results) {
    CHECK(r.score == doctest::Approx(2.0));
    CHECK(r.n11 == 1);
    pairs.emplace_back(r.word1, r.word2);
  }
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"and", "doggies"}, {"i", "like"}, {"kitties", "and"},
      {"like", "kitties"}};
  CHECK(pairs == expected);
}

TEST_CASE("top_k on an empty index is empty") {
  const auto index = build_index({}, 2);
  CHECK(top_k(index, MeasureId::pmi, 1, 1, MarginalMode::exact).empty());
}

TEST_CASE("min_count filters out rare pairs") {
  const auto index = build_index({doc("i like kitties and doggies")}, 2);
  CHECK(top_k(index, MeasureId::pmi, 10, 2, MarginalMode::exact).empty());
}

TEST_CASE("pmi is invariant under corpus reversal") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 4);
    auto docs = random_corpus(rng, 5, 8, 4);
    auto reversed = docs;
    for (auto& d : reversed) std::reverse(d.tokens.begin(), d.tokens.end());
    const auto fwd = build_index(docs, w);
    const auto bwd = build_index(reversed, w);
    for (const auto& [w1, row] : fwd.bigram_fd) {
      for (const auto& [w2, n11] : row) {
        const double a =
            score(contingency(fwd, w1, w2, MarginalMode::exact), MeasureId::pmi);
        const double b =
            score(contingency(bwd, w2, w1, MarginalMode::exact), MeasureId::pmi);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("top_k is deterministic") {
  std::mt19937 rng(43);
  const auto index = build_index(random_corpus(rng, 10, 10, 4), 3);
  const auto a = top_k(index, MeasureId::log_likelihood, 20, 1,
                       MarginalMode::exact);
  const auto b = top_k(index, MeasureId::log_likelihood, 20, 1,
                       MarginalMode::exact);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].word1 == b[i].word1);
    CHECK(a[i].word2 == b[i].word2);
    CHECK(a[i].score == b[i].score);
  }
  // descending scores with lexicographic tie-break
  for (std::size_t i = 1; i < a.size(); ++i) {
    const bool ordered =
        a[i - 1].score > a[i].score ||
        (a[i - 1].score == a[i].score &&
         std::pair(a[i - 1].word1, a[i - 1].word2) <
             std::pair(a[i].word1, a[i].word2));
    CHECK(ordered);
  }
}

TEST_CASE("exact-mode scores agree with oracle-derived tables") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 4);
    const auto docs = random_corpus(rng, 6, 9, 4);
    const auto index = build_index(docs, w);
    if (index.bigram_total == 0) continue;
    const auto results =
        top_k(index, MeasureId::pmi, 50, 1, MarginalMode::exact);
    for (const auto& r : results) {
      // rebuild the table purely from enumeration
      BigramMultiset all;
      Count total = 0;
      for (const auto& d : docs) {
        for (const auto& [pair, count] : enumerate_bigrams(d, w)) {
          all[pair] += count;
          total += count;
        }
      }
      const auto [left2, right2] = oracle_marginals(docs, w, r.word2);
      const auto [left1, right1] = oracle_marginals(docs, w, r.word1);
      ContingencyTable t;
      t.n11 = static_cast<std::int64_t>(all[{r.word1, r.word2}]);
      t.n01 = static_cast<std::int64_t>(left2) - t.n11;
      t.n10 = static_cast<std::int64_t>(right1) - t.n11;
      t.total = static_cast<std::int64_t>(total);
      t.n00 = t.total - t.n11 - t.n01 - t.n10;
      const double expected = score(t, MeasureId::pmi);
      CHECK(r.score == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}
