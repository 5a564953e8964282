#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bigrams/index.hpp"

namespace bigrams {

// Ordered so that test diffs are stable.
using BigramMultiset = std::map<std::pair<std::string, std::string>, Count>;

// Materializes every (tokens[i], tokens[i+d]) with 1 <= d <= window-1.
// Deliberately naive: this is the window semantics stated as enumeration,
// independent of the deficit arithmetic it is used to check.
BigramMultiset enumerate_bigrams(const Document& doc, int window);

// (left, right) = total multiplicity of enumerated pairs ending in /
// starting with `word` across all documents.
std::pair<Count, Count> oracle_marginals(const std::vector<Document>& docs,
                                         int window, const std::string& word);

struct VerificationReport {
  bool ok = true;
  std::string detail;  // first divergent quantity, with both values
};

// Recomputes the bigram table, both marginals for every vocabulary word,
// and the total by enumeration, and compares against the index.
VerificationReport verify_index(const FrequencyIndex& index,
                                const std::vector<Document>& docs);

}  // namespace bigrams
