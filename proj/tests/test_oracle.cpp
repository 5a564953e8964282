#include <doctest.h>

#include <random>

#include "bigrams/oracle.hpp"
#include "test_util.hpp"

using namespace bigrams;
using bigrams::testing::doc;
using bigrams::testing::random_corpus;

TEST_CASE("enumeration reproduces the framed window-2 example") {
  const auto pairs = enumerate_bigrams(doc("i like kitties and doggies"), 2);
  const BigramMultiset expected = {{{"i", "like"}, 1},
                                   {{"like", "kitties"}, 1},
                                   {{"kitties", "and"}, 1},
                                   {{"and", "doggies"}, 1}};
  CHECK(pairs == expected);
}

TEST_CASE("enumeration reproduces the framed window-4 example") {
  const auto pairs = enumerate_bigrams(doc("i like kitties and doggies"), 4);
  const BigramMultiset expected = {
      {{"i", "like"}, 1},       {{"i", "kitties"}, 1},
      {{"i", "and"}, 1},        {{"like", "kitties"}, 1},
      {{"like", "and"}, 1},     {{"like", "doggies"}, 1},
      {{"kitties", "and"}, 1},  {{"kitties", "doggies"}, 1},
      {{"and", "doggies"}, 1}};
  CHECK(pairs == expected);
}

TEST_CASE("single-token documents have no bigrams") {
  for (int w : {2, 3, 10}) {
    CHECK(enumerate_bigrams(doc("alone"), w).empty());
  }
}

TEST_CASE("repeated words accumulate multiplicities") {
  const auto pairs = enumerate_bigrams(doc("b a a"), 3);
  CHECK(pairs.at({"b", "a"}) == 2);
  CHECK(pairs.at({"a", "a"}) == 1);
}

TEST_CASE("pair count formula holds on random documents") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 5);
    const auto docs = random_corpus(rng, 1, 12, 5);
    Count expected = 0;
    const std::size_t len = docs[0].length();
    for (std::size_t i = 0; i < len; ++i) {
      expected += std::min<std::size_t>(w - 1, len - 1 - i);
    }
    Count actual = 0;
    for (const auto& [pair, count] : enumerate_bigrams(docs[0], w)) {
      actual += count;
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("oracle marginals on the framed examples") {
  const std::vector<Document> corpus = {doc("i like kitties and doggies")};
  CHECK(oracle_marginals(corpus, 4, "doggies") == std::pair<Count, Count>{3, 0});
  CHECK(oracle_marginals(corpus, 4, "kitties") == std::pair<Count, Count>{2, 2});
  CHECK(oracle_marginals({}, 4, "anything") == std::pair<Count, Count>{0, 0});
}

TEST_CASE("verify_index passes on its own corpus") {
  const std::vector<Document> corpus = {doc("i like kitties and doggies")};
  const auto index = build_index(corpus, 4);
  const auto report = verify_index(index, corpus);
  CHECK(report.ok);
  CHECK(report.detail.empty());
}

TEST_CASE("verify_index names a corrupted bigram count") {
  const std::vector<Document> corpus = {doc("i like kitties and doggies")};
  auto index = build_index(corpus, 4);
  index.bigram_fd["like"]["doggies"] = 7;
  const auto report = verify_index(index, corpus);
  CHECK(!report.ok);
  CHECK(report.detail.find("like") != std::string::npos);
  CHECK(report.detail.find("doggies") != std::string::npos);
}

TEST_CASE("verify_index catches corrupted deficit tables") {
  const std::vector<Document> corpus = {doc("eight mice eat eight cheese sticks")};
  auto index = build_index(corpus, 5);
  index.tfl["eight"][0] = 0;
  const auto report = verify_index(index, corpus);
  CHECK(!report.ok);
  CHECK(report.detail.find("eight") != std::string::npos);
}

TEST_CASE("verify_index passes on random corpora") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const int w = 2 + static_cast<int>(rng() % 5);
    const auto docs = random_corpus(rng, 1 + rng() % 8, 10, 5);
    const auto index = build_index(docs, w);
    CHECK(verify_index(index, docs).ok);
  }
}
