#include "bigrams/index.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bigrams/errors.hpp"

namespace bigrams {
namespace {

// std::map-backed objects, so dumped keys come out lexicographically.
using json = nlohmann::json;

void add_deficit(BoundaryDeficitTable& table, const std::string& word,
                 std::size_t offending_index, int window) {
  auto& hist = table[word];
  if (hist.empty()) hist.assign(static_cast<std::size_t>(window - 1), 0);
  hist[offending_index] += 1;
}

void merge_deficits(BoundaryDeficitTable& into,
                    const BoundaryDeficitTable& from) {
  for (const auto& [word, hist] : from) {
    auto& dst = into[word];
    if (dst.empty()) {
      dst = hist;
    } else {
      for (std::size_t i = 0; i < hist.size(); ++i) dst[i] += hist[i];
    }
  }
}

Count require_count(const json& value, const std::string& field) {
  if (!value.is_number_unsigned()) {
    throw FormatError("index field \"" + field +
                      "\" must be a nonnegative integer");
  }
  return value.get<Count>();
}

}  // namespace

Count FrequencyIndex::word_count(const std::string& word) const {
  const auto it = word_fd.find(word);
  return it == word_fd.end() ? 0 : it->second;
}

Count FrequencyIndex::bigram_count(const std::string& w1,
                                   const std::string& w2) const {
  const auto it1 = bigram_fd.find(w1);
  if (it1 == bigram_fd.end()) return 0;
  const auto it2 = it1->second.find(w2);
  return it2 == it1->second.end() ? 0 : it2->second;
}

std::size_t transform_right_index(std::size_t idx, std::size_t length) {
  if (idx >= length) {
    throw std::out_of_range("transform_right_index: idx " +
                            std::to_string(idx) + " not in [0, " +
                            std::to_string(length) + ")");
  }
  return length - idx - 1;
}

IndexBuilder::IndexBuilder(int window, std::string tokenizer_fingerprint) {
  if (window < 2) {
    throw std::invalid_argument("window must be at least 2, got " +
                                std::to_string(window));
  }
  index_.window = window;
  index_.tokenizer_fingerprint = std::move(tokenizer_fingerprint);
}

void IndexBuilder::add(const Document& doc) {
  const std::size_t len = doc.length();
  if (len == 0) return;
  const auto w = static_cast<std::size_t>(index_.window);
  for (std::size_t idx = 0; idx < len; ++idx) {
    const std::string& token = doc.tokens[idx];
    index_.word_fd[token] += 1;
    auto& row = index_.bigram_fd[token];
    for (std::size_t d = 1; d < w && idx + d < len; ++d) {
      row[doc.tokens[idx + d]] += 1;
      index_.bigram_total += 1;
    }
    if (idx < w - 1) add_deficit(index_.tfl, token, idx, index_.window);
    const std::size_t mirrored = transform_right_index(idx, len);
    if (mirrored < w - 1) add_deficit(index_.tfr, token, mirrored, index_.window);
    // A token never pairs with itself at distance 0, so a row created
    // above can stay empty; drop it to keep bigram_fd minimal.
    if (row.empty()) index_.bigram_fd.erase(token);
  }
  index_.doc_count += 1;
  index_.token_count += len;
}

FrequencyIndex build_index(const std::vector<Document>& docs, int window,
                           const std::string& tokenizer_fingerprint) {
  IndexBuilder builder(window, tokenizer_fingerprint);
  for (const Document& doc : docs) builder.add(doc);
  return builder.take();
}

FrequencyIndex merge(const FrequencyIndex& a, const FrequencyIndex& b) {
  if (a.window != b.window) {
    throw IncompatibleIndexError(
        "cannot merge indexes with windows " + std::to_string(a.window) +
        " and " + std::to_string(b.window));
  }
  if (a.tokenizer_fingerprint != b.tokenizer_fingerprint) {
    throw IncompatibleIndexError(
        "cannot merge indexes with tokenizer fingerprints \"" +
        a.tokenizer_fingerprint + "\" and \"" + b.tokenizer_fingerprint +
        "\"");
  }
  FrequencyIndex out = a;
  for (const auto& [word, count] : b.word_fd) out.word_fd[word] += count;
  for (const auto& [w1, row] : b.bigram_fd) {
    auto& dst = out.bigram_fd[w1];
    for (const auto& [w2, count] : row) dst[w2] += count;
  }
  merge_deficits(out.tfl, b.tfl);
  merge_deficits(out.tfr, b.tfr);
  out.doc_count += b.doc_count;
  out.token_count += b.token_count;
  out.bigram_total += b.bigram_total;
  return out;
}

void save_index(const FrequencyIndex& index, std::ostream& out) {
  json root;
  root["format_version"] = 1;
  root["window"] = index.window;
  root["tokenizer"] = index.tokenizer_fingerprint;
  root["doc_count"] = index.doc_count;
  root["token_count"] = index.token_count;

  json word_fd = json::object();
  for (const auto& [word, count] : index.word_fd) word_fd[word] = count;
  root["word_fd"] = std::move(word_fd);

  std::vector<std::pair<const std::string*, const std::string*>> pairs;
  for (const auto& [w1, row] : index.bigram_fd) {
    for (const auto& [w2, count] : row) pairs.emplace_back(&w1, &w2);
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (*a.first != *b.first) return *a.first < *b.first;
    return *a.second < *b.second;
  });
  json bigram_fd = json::array();
  for (const auto& [w1, w2] : pairs) {
    bigram_fd.push_back(json::array(
        {*w1, *w2, index.bigram_fd.at(*w1).at(*w2)}));
  }
  root["bigram_fd"] = std::move(bigram_fd);

  const auto deficit_json = [](const BoundaryDeficitTable& table) {
    json obj = json::object();
    for (const auto& [word, hist] : table) obj[word] = hist;
    return obj;
  };
  root["tfl"] = deficit_json(index.tfl);
  root["tfr"] = deficit_json(index.tfr);

  out << root.dump() << '\n';
  if (!out) throw FormatError("failed to write index");
}

FrequencyIndex load_index(std::istream& in) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("index file is not valid JSON: ") +
                      e.what());
  }
  if (!root.is_object()) throw FormatError("index file root must be an object");

  const auto field = [&](const char* name) -> const json& {
    const auto it = root.find(name);
    if (it == root.end()) {
      throw FormatError(std::string("index missing field \"") + name + "\"");
    }
    return *it;
  };

  const Count version = require_count(field("format_version"), "format_version");
  if (version != 1) {
    throw VersionError("unsupported index format_version " +
                       std::to_string(version));
  }

  FrequencyIndex index;
  const json& window = field("window");
  if (!window.is_number_unsigned() || window.get<Count>() < 2 ||
      window.get<Count>() > 1'000'000) {
    throw FormatError("index field \"window\" must be an integer >= 2");
  }
  index.window = window.get<int>();
  const json& tokenizer = field("tokenizer");
  if (!tokenizer.is_string()) {
    throw FormatError("index field \"tokenizer\" must be a string");
  }
  index.tokenizer_fingerprint = tokenizer.get<std::string>();
  index.doc_count = require_count(field("doc_count"), "doc_count");
  index.token_count = require_count(field("token_count"), "token_count");

  const json& word_fd = field("word_fd");
  if (!word_fd.is_object()) {
    throw FormatError("index field \"word_fd\" must be an object");
  }
  for (const auto& [word, count] : word_fd.items()) {
    const Count c = require_count(count, "word_fd[\"" + word + "\"]");
    if (c == 0) throw FormatError("word_fd[\"" + word + "\"] must be >= 1");
    index.word_fd[word] = c;
  }

  const json& bigram_fd = field("bigram_fd");
  if (!bigram_fd.is_array()) {
    throw FormatError("index field \"bigram_fd\" must be an array");
  }
  for (const json& entry : bigram_fd) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      throw FormatError("bigram_fd entries must be [word1, word2, count]");
    }
    const Count c = require_count(entry[2], "bigram_fd count");
    if (c == 0) throw FormatError("bigram_fd counts must be >= 1");
    index.bigram_fd[entry[0].get<std::string>()]
                   [entry[1].get<std::string>()] = c;
    index.bigram_total += c;
  }

  const auto load_deficits = [&](const char* name) {
    BoundaryDeficitTable table;
    const json& obj = field(name);
    if (!obj.is_object()) {
      throw FormatError(std::string("index field \"") + name +
                        "\" must be an object");
    }
    const auto hist_len = static_cast<std::size_t>(index.window - 1);
    for (const auto& [word, hist] : obj.items()) {
      if (!hist.is_array() || hist.size() != hist_len) {
        throw FormatError(std::string(name) + "[\"" + word +
                          "\"] must be an array of length window-1");
      }
      std::vector<Count> counts;
      counts.reserve(hist_len);
      Count total = 0;
      for (const json& slot : hist) {
        const Count c =
            require_count(slot, std::string(name) + "[\"" + word + "\"]");
        counts.push_back(c);
        total += c;
      }
      if (total == 0) continue;  // tolerate explicit all-zero rows
      if (total > index.word_count(word)) {
        throw FormatError(std::string(name) + "[\"" + word +
                          "\"] exceeds the word's frequency");
      }
      table[word] = std::move(counts);
    }
    return table;
  };
  index.tfl = load_deficits("tfl");
  index.tfr = load_deficits("tfr");
  return index;
}

}  // namespace bigrams
