#include "bigrams/corpus.hpp"

#include <cstdint>
#include <istream>

#include <nlohmann/json.hpp>

#include "bigrams/errors.hpp"

namespace bigrams {
namespace {

using json = nlohmann::json;

// Decodes the codepoint starting at data[pos]. Returns (codepoint, byte
// length). Rejects truncated sequences, bad continuations, overlong
// encodings, surrogates, and values past U+10FFFF.
std::pair<char32_t, std::size_t> decode_utf8(std::string_view data,
                                             std::size_t pos,
                                             std::size_t base_offset) {
  auto fail = [&](std::size_t at) -> std::pair<char32_t, std::size_t> {
    throw DecodeError("malformed UTF-8 at byte offset " +
                      std::to_string(base_offset + at));
  };
  const auto byte = [&](std::size_t i) {
    return static_cast<std::uint8_t>(data[i]);
  };
  const std::uint8_t b0 = byte(pos);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return fail(pos);
  }
  if (pos + len > data.size()) return fail(pos);
  for (std::size_t i = 1; i < len; ++i) {
    const std::uint8_t b = byte(pos + i);
    if ((b & 0xC0) != 0x80) return fail(pos + i);
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMinByLen[len] || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return fail(pos);
  }
  return {cp, len};
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Punctuation test for edge stripping: ASCII punctuation plus the common
// Unicode punctuation blocks. Not the full Unicode P* category tables.
bool is_punct(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
    case 0xBF:
      return true;
    default:
      return (cp >= 0x2010 && cp <= 0x2027) ||  // dashes, quotes, daggers
             (cp >= 0x2030 && cp <= 0x205E) ||  // permille .. vertical ellipsis
             (cp >= 0x3001 && cp <= 0x3003) ||  // CJK comma, stop, ditto
             (cp >= 0x300C && cp <= 0x3011) ||  // CJK brackets
             (cp >= 0xFF01 && cp <= 0xFF0F) ||  // fullwidth ASCII punct
             (cp >= 0xFF1A && cp <= 0xFF20) ||
             (cp >= 0xFF3B && cp <= 0xFF40) ||
             (cp >= 0xFF5B && cp <= 0xFF65);
  }
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Strips leading/trailing punctuation codepoints; internal punctuation
// stays. May strip a token down to nothing.
std::string strip_edges(const std::vector<char32_t>& cps) {
  std::size_t lo = 0, hi = cps.size();
  while (lo < hi && is_punct(cps[lo])) ++lo;
  while (hi > lo && is_punct(cps[hi - 1])) --hi;
  std::string out;
  for (std::size_t i = lo; i < hi; ++i) append_utf8(out, cps[i]);
  return out;
}

Document tokenize_at(std::string_view text, const TokenizerConfig& config,
                     std::size_t base_offset) {
  Document doc;
  std::vector<char32_t> run;
  auto flush = [&] {
    if (run.empty()) return;
    std::string tok;
    if (config.strip_edge_punctuation) {
      tok = strip_edges(run);
    } else {
      for (char32_t cp : run) append_utf8(tok, cp);
    }
    if (!tok.empty()) doc.tokens.push_back(std::move(tok));
    run.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto [cp, len] = decode_utf8(text, pos, base_offset);
    pos += len;
    if (is_unicode_space(cp)) {
      flush();
      continue;
    }
    // ASCII-only lowercasing; the corpora this targets are case-folded
    // at this level. See README for the limitation.
    if (config.lowercase && cp >= 'A' && cp <= 'Z') cp += 0x20;
    run.push_back(cp);
  }
  flush();
  return doc;
}

void emit_jsonl_record(const std::string& line, std::size_t line_no,
                       const TokenizerConfig& config,
                       const DocumentSink& sink) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error&) {
    throw FormatError("jsonl line " + std::to_string(line_no) +
                      ": invalid JSON");
  }
  if (!record.is_object()) {
    throw FormatError("jsonl line " + std::to_string(line_no) +
                      ": record is not an object");
  }
  const auto text_it = record.find("text");
  if (text_it == record.end() || !text_it->is_string()) {
    throw FormatError("jsonl line " + std::to_string(line_no) +
                      ": missing string field \"text\"");
  }
  Document doc = tokenize(text_it->get<std::string>(), config);
  if (const auto id_it = record.find("id");
      id_it != record.end() && id_it->is_string()) {
    doc.id = id_it->get<std::string>();
  }
  sink(std::move(doc));
}

}  // namespace

std::string TokenizerConfig::fingerprint() const {
  std::string fp = "v1;lowercase=";
  fp += lowercase ? '1' : '0';
  fp += ";strip_edge_punctuation=";
  fp += strip_edge_punctuation ? '1' : '0';
  return fp;
}

Document tokenize(std::string_view text, const TokenizerConfig& config) {
  return tokenize_at(text, config, 0);
}

void for_each_document(std::istream& in, CorpusFormat format,
                       const TokenizerConfig& config,
                       const DocumentSink& sink) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t byte_offset = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_start = byte_offset;
    byte_offset += line.size() + 1;  // getline consumed the LF
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (format == CorpusFormat::lines) {
      Document doc = tokenize_at(line, config, line_start);
      if (!doc.tokens.empty()) sink(std::move(doc));
    } else {
      // Validate encoding before handing the line to the JSON parser so
      // bad bytes surface as a decode error with an offset.
      for (std::size_t pos = 0; pos < line.size();) {
        pos += decode_utf8(line, pos, line_start).second;
      }
      emit_jsonl_record(line, line_no, config, sink);
    }
  }
  if (in.bad()) throw FormatError("I/O error while reading corpus");
}

std::vector<Document> read_corpus(std::istream& in, CorpusFormat format,
                                  const TokenizerConfig& config) {
  std::vector<Document> docs;
  for_each_document(in, format, config,
                    [&](Document&& doc) { docs.push_back(std::move(doc)); });
  return docs;
}

}  // namespace bigrams
