// bigrams: build, query, and verify exact windowed bigram statistics.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error,
// 3 verification failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bigrams/corpus.hpp"
#include "bigrams/errors.hpp"
#include "bigrams/index.hpp"
#include "bigrams/marginals.hpp"
#include "bigrams/measures.hpp"
#include "bigrams/oracle.hpp"

namespace {

using json = nlohmann::json;
using namespace bigrams;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerification = 3;

struct CorpusArgs {
  int window = 2;
  std::string format = "lines";
  bool lowercase = true;
  bool strip_punct = false;
  std::vector<std::string> inputs;
};

void add_corpus_options(CLI::App& cmd, CorpusArgs& args) {
  cmd.add_option("--window", args.window, "Window size (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1'000'000));
  cmd.add_option("--format", args.format, "Corpus format")
      ->check(CLI::IsMember({"lines", "jsonl"}));
  cmd.add_option("--lowercase", args.lowercase, "Lowercase tokens");
  cmd.add_option("--strip-punct", args.strip_punct,
                 "Strip leading/trailing punctuation from tokens");
  cmd.add_option("INPUT", args.inputs, "Corpus file(s)")->required();
}

CorpusFormat parse_format(const std::string& name) {
  return name == "jsonl" ? CorpusFormat::jsonl : CorpusFormat::lines;
}

std::vector<Document> load_docs(const CorpusArgs& args) {
  TokenizerConfig config{args.lowercase, args.strip_punct};
  std::vector<Document> docs;
  for (const std::string& path : args.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open corpus file: " + path);
    for_each_document(in, parse_format(args.format), config,
                      [&](Document&& doc) { docs.push_back(std::move(doc)); });
  }
  return docs;
}

FrequencyIndex load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open index file: " + path);
  return load_index(in);
}

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

int cmd_index(const CorpusArgs& args, const std::string& out_path) {
  TokenizerConfig config{args.lowercase, args.strip_punct};
  IndexBuilder builder(args.window, config.fingerprint());
  for (const std::string& path : args.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open corpus file: " + path);
    for_each_document(in, parse_format(args.format), config,
                      [&](Document&& doc) { builder.add(doc); });
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw FormatError("cannot open output file: " + out_path);
  save_index(builder.index(), out);
  return kExitOk;
}

int cmd_marginals(const std::string& index_path,
                  const std::vector<std::string>& words,
                  const std::string& output) {
  const FrequencyIndex index = load_index_file(index_path);
  if (output == "json") {
    json rows = json::array();
    for (const std::string& word : words) {
      rows.push_back({{"word", word},
                      {"count", index.word_count(word)},
                      {"approx", approx_marginal(index, word)},
                      {"exact_left", exact_left_marginal(index, word)},
                      {"exact_right", exact_right_marginal(index, word)}});
    }
    std::cout << rows.dump() << '\n';
    return kExitOk;
  }
  std::cout << "word\tcount\tapprox\texact_left\texact_right\n";
  for (const std::string& word : words) {
    std::cout << word << '\t' << index.word_count(word) << '\t'
              << approx_marginal(index, word) << '\t'
              << exact_left_marginal(index, word) << '\t'
              << exact_right_marginal(index, word) << '\n';
  }
  return kExitOk;
}

int cmd_top(const std::string& index_path, const std::string& measure_str,
            std::size_t k, Count min_count, const std::string& mode_str,
            const std::string& output) {
  const FrequencyIndex index = load_index_file(index_path);
  const auto measure = parse_measure(measure_str);
  const MarginalMode mode = mode_str == "approx" ? MarginalMode::approximate
                                                 : MarginalMode::exact;
  const auto results = top_k(index, *measure, k, min_count, mode);
  if (output == "json") {
    json rows = json::array();
    for (const ScoredBigram& row : results) {
      rows.push_back({{"word1", row.word1},
                      {"word2", row.word2},
                      {"n11", row.n11},
                      {"score", row.score}});
    }
    std::cout << rows.dump() << '\n';
    return kExitOk;
  }
  std::cout << "word1\tword2\tn11\tscore\n";
  for (const ScoredBigram& row : results) {
    std::cout << row.word1 << '\t' << row.word2 << '\t' << row.n11 << '\t'
              << format_score(row.score) << '\n';
  }
  return kExitOk;
}

int cmd_compare(const CorpusArgs& args, const std::string& output) {
  TokenizerConfig config{args.lowercase, args.strip_punct};
  const std::vector<Document> docs = load_docs(args);
  const FrequencyIndex index =
      build_index(docs, args.window, config.fingerprint());

  std::map<std::string, Count> vocabulary(index.word_fd.begin(),
                                          index.word_fd.end());
  const Count total_exact = total_bigram_count(index);
  const Count total_approx =
      static_cast<Count>(index.window - 1) * index.token_count;

  double error_sum = 0.0, error_max = 0.0;
  Count words_with_error = 0;
  struct Row {
    std::string word;
    Count approx, exact_left, exact_right, err_left, err_right;
  };
  std::vector<Row> rows;
  rows.reserve(vocabulary.size());
  for (const auto& [word, freq] : vocabulary) {
    const Count approx = approx_marginal(index, word);
    const Count left = exact_left_marginal(index, word);
    const Count right = exact_right_marginal(index, word);
    const Count err_left = approx - left;
    const Count err_right = approx - right;
    rows.push_back({word, approx, left, right, err_left, err_right});
    if (err_left + err_right > 0) ++words_with_error;
    // Per-word relative error: lost partner slots over the approximate
    // count of both sides.
    const double rel = approx == 0
                           ? 0.0
                           : static_cast<double>(err_left + err_right) /
                                 (2.0 * static_cast<double>(approx));
    error_sum += rel;
    error_max = std::max(error_max, rel);
  }
  const double error_mean =
      rows.empty() ? 0.0 : error_sum / static_cast<double>(rows.size());

  if (output == "json") {
    json out;
    json row_array = json::array();
    for (const Row& r : rows) {
      row_array.push_back({{"word", r.word},
                           {"approx", r.approx},
                           {"exact_left", r.exact_left},
                           {"exact_right", r.exact_right},
                           {"abs_error_left", r.err_left},
                           {"abs_error_right", r.err_right}});
    }
    out["rows"] = std::move(row_array);
    out["total_approx_n"] = total_approx;
    out["total_exact_n"] = total_exact;
    out["mean_relative_error"] = error_mean;
    out["max_relative_error"] = error_max;
    out["words_with_error"] = words_with_error;
    std::cout << out.dump() << '\n';
    return kExitOk;
  }

  std::cout
      << "word\tapprox\texact_left\texact_right\tabs_error_left\tabs_error_right\n";
  for (const Row& r : rows) {
    std::cout << r.word << '\t' << r.approx << '\t' << r.exact_left << '\t'
              << r.exact_right << '\t' << r.err_left << '\t' << r.err_right
              << '\n';
  }
  std::cout << "# total_approx_n\t" << total_approx << '\n'
            << "# total_exact_n\t" << total_exact << '\n'
            << "# mean_relative_error\t" << format_score(error_mean) << '\n'
            << "# max_relative_error\t" << format_score(error_max) << '\n'
            << "# words_with_error\t" << words_with_error << '\n';
  return kExitOk;
}

int cmd_verify(const CorpusArgs& args, const std::string& index_path) {
  TokenizerConfig config{args.lowercase, args.strip_punct};
  const std::vector<Document> docs = load_docs(args);
  FrequencyIndex index;
  if (index_path.empty()) {
    index = build_index(docs, args.window, config.fingerprint());
  } else {
    index = load_index_file(index_path);
    if (index.window != args.window) {
      throw IncompatibleIndexError("index window " +
                                   std::to_string(index.window) +
                                   " does not match --window " +
                                   std::to_string(args.window));
    }
  }
  const VerificationReport report = verify_index(index, docs);
  if (report.ok) {
    std::cout << "OK\n";
    return kExitOk;
  }
  std::cout << "DIVERGENCE: " << report.detail << '\n';
  return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact windowed bigram statistics for short-text corpora"};
  app.require_subcommand(1);

  CorpusArgs index_args;
  std::string index_out;
  CLI::App* index_cmd =
      app.add_subcommand("index", "Build an index and save it to a file");
  add_corpus_options(*index_cmd, index_args);
  index_cmd->add_option("--out", index_out, "Output index file")->required();

  std::string marg_index, marg_output = "tsv";
  std::vector<std::string> marg_words;
  CLI::App* marg_cmd = app.add_subcommand(
      "marginals", "Print exact and approximate marginal frequencies");
  marg_cmd->add_option("--index", marg_index, "Index file")->required();
  marg_cmd->add_option("--output", marg_output, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  marg_cmd->add_option("WORD", marg_words, "Words to query")->required();

  std::string top_index, top_measure, top_mode = "exact", top_output = "tsv";
  std::size_t top_count = 10;
  Count top_min_count = 1;
  CLI::App* top_cmd = app.add_subcommand("top", "Print ranked collocations");
  top_cmd->add_option("--index", top_index, "Index file")->required();
  top_cmd->add_option("--measure", top_measure, "Association measure")
      ->required()
      ->check(CLI::IsMember(
          {"pmi", "chi_square", "log_likelihood", "t_score", "dice"}));
  top_cmd->add_option("--k", top_count, "Number of results")
      ->check(CLI::PositiveNumber);
  top_cmd->add_option("--min-count", top_min_count, "Minimum joint count");
  top_cmd->add_option("--mode", top_mode, "Marginal mode")
      ->check(CLI::IsMember({"exact", "approx"}));
  top_cmd->add_option("--output", top_output, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  CorpusArgs compare_args;
  std::string compare_output = "tsv";
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Per-word approximate vs exact marginal report");
  add_corpus_options(*compare_cmd, compare_args);
  compare_cmd->add_option("--output", compare_output, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  CorpusArgs verify_args;
  std::string verify_index_path;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check index contents against brute-force enumeration");
  add_corpus_options(*verify_cmd, verify_args);
  verify_cmd->add_option("--index", verify_index_path,
                         "Verify this saved index instead of a fresh build");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (index_cmd->parsed()) return cmd_index(index_args, index_out);
    if (marg_cmd->parsed())
      return cmd_marginals(marg_index, marg_words, marg_output);
    if (top_cmd->parsed())
      return cmd_top(top_index, top_measure, top_count, top_min_count,
                     top_mode, top_output);
    if (compare_cmd->parsed()) return cmd_compare(compare_args, compare_output);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, verify_index_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
