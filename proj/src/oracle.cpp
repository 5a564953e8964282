#include "bigrams/oracle.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "bigrams/marginals.hpp"

namespace bigrams {

BigramMultiset enumerate_bigrams(const Document& doc, int window) {
  if (window < 2) {
    throw std::invalid_argument("window must be at least 2");
  }
  BigramMultiset pairs;
  const std::size_t len = doc.length();
  const auto w = static_cast<std::size_t>(window);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t d = 1; d < w && i + d < len; ++d) {
      pairs[{doc.tokens[i], doc.tokens[i + d]}] += 1;
    }
  }
  return pairs;
}

std::pair<Count, Count> oracle_marginals(const std::vector<Document>& docs,
                                         int window, const std::string& word) {
  Count left = 0, right = 0;
  for (const Document& doc : docs) {
    for (const auto& [pair, count] : enumerate_bigrams(doc, window)) {
      if (pair.second == word) left += count;
      if (pair.first == word) right += count;
    }
  }
  return {left, right};
}

VerificationReport verify_index(const FrequencyIndex& index,
                                const std::vector<Document>& docs) {
  BigramMultiset expected;
  Count expected_total = 0;
  for (const Document& doc : docs) {
    for (const auto& [pair, count] : enumerate_bigrams(doc, index.window)) {
      expected[pair] += count;
      expected_total += count;
    }
  }

  const auto fail = [](std::string detail) {
    return VerificationReport{false, std::move(detail)};
  };
  std::ostringstream msg;

  for (const auto& [pair, count] : expected) {
    const Count stored = index.bigram_count(pair.first, pair.second);
    if (stored != count) {
      msg << "bigram (" << pair.first << ", " << pair.second
          << "): index has " << stored << ", enumeration has " << count;
      return fail(msg.str());
    }
  }
  for (const auto& [w1, row] : index.bigram_fd) {
    for (const auto& [w2, stored] : row) {
      if (!expected.contains({w1, w2})) {
        msg << "bigram (" << w1 << ", " << w2 << "): index has " << stored
            << ", enumeration has 0";
        return fail(msg.str());
      }
    }
  }

  if (index.bigram_total != expected_total) {
    msg << "total bigram count: index has " << index.bigram_total
        << ", enumeration has " << expected_total;
    return fail(msg.str());
  }

  // Vocabulary from both sides, so spurious index entries get caught too.
  std::set<std::string> vocabulary;
  for (const Document& doc : docs) {
    vocabulary.insert(doc.tokens.begin(), doc.tokens.end());
  }
  for (const auto& [word, count] : index.word_fd) vocabulary.insert(word);

  for (const std::string& word : vocabulary) {
    const auto [left, right] = oracle_marginals(docs, index.window, word);
    const Count exact_left = exact_left_marginal(index, word);
    const Count exact_right = exact_right_marginal(index, word);
    if (exact_left != left) {
      msg << "left marginal of \"" << word << "\": index has " << exact_left
          << ", enumeration has " << left;
      return fail(msg.str());
    }
    if (exact_right != right) {
      msg << "right marginal of \"" << word << "\": index has " << exact_right
          << ", enumeration has " << right;
      return fail(msg.str());
    }
  }
  return {};
}

}  // namespace bigrams
