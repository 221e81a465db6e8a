#pragma once

// Shared synthetic dataset: 5 scholars, 12 papers, a 10-token 3-d vector
// store. Rank/citation assignments are chosen to cover first/middle/last
// authorship, uncited papers, an all-unknown-words abstract (p08) and a
// scholar whose every paper is uncited (s5).

#include <string>
#include <vector>

namespace fixture {

struct StoreEntry {
  std::string token;
  std::vector<double> components;
};

struct PaperRecord {
  std::string paper_id;
  std::string abstract;
  std::vector<std::string> authors;  // rank order
  long long citations;
};

inline const std::vector<StoreEntry>& store_entries() {
  static const std::vector<StoreEntry> entries = {
      {"alpha", {0.9, 0.1, 0.0}},  {"beta", {0.1, 0.8, 0.1}},
      {"gamma", {0.0, 0.2, 0.7}},  {"delta", {0.4, 0.4, 0.2}},
      {"epsilon", {0.7, 0.0, 0.3}}, {"zeta", {0.2, 0.6, 0.2}},
      {"eta", {0.5, 0.3, 0.8}},    {"theta", {0.3, 0.9, 0.4}},
      {"iota", {0.6, 0.5, 0.1}},   {"kappa", {0.1, 0.2, 0.9}},
  };
  return entries;
}

inline const std::vector<PaperRecord>& paper_records() {
  static const std::vector<PaperRecord> papers = {
      {"p01", "alpha beta gamma", {"s1", "s2"}, 5},
      {"p02", "beta beta delta", {"s2"}, 0},
      {"p03", "epsilon zeta", {"s1", "s3", "s2"}, 12},
      {"p04", "gamma gamma kappa unknownword", {"s3"}, 3},
      {"p05", "eta theta", {"s4", "s1"}, 0},
      {"p06", "iota alpha delta epsilon", {"s4"}, 7},
      {"p07", "kappa zeta eta", {"s4", "s3", "s2"}, 2},
      {"p08", "xyzzy qwerty", {"s5"}, 0},
      {"p09", "theta iota", {"s2", "s1"}, 9},
      {"p10", "delta epsilon zeta eta", {"s3", "s1"}, 1},
      {"p11", "alpha kappa", {"s1"}, 4},
      {"p12", "beta gamma theta", {"s5"}, 0},
  };
  return papers;
}

// GloVe-format text for the toy store (token then components, single-space
// separated, \n line endings).
inline std::string store_file_text(std::size_t pad_to_dim = 3) {
  std::string out;
  for (const auto& entry : store_entries()) {
    out += entry.token;
    for (double value : entry.components) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " %.1f", value);
      out += buf;
    }
    for (std::size_t d = entry.components.size(); d < pad_to_dim; ++d) {
      out += " 0.0";
    }
    out += '\n';
  }
  return out;
}

// JSON-Lines text for the papers file. Fixture ids/abstracts need no
// escaping.
inline std::string papers_jsonl_text() {
  std::string out;
  for (const auto& paper : paper_records()) {
    out += "{\"paper_id\": \"" + paper.paper_id + "\", \"abstract\": \"" +
           paper.abstract + "\", \"authors\": [";
    for (std::size_t i = 0; i < paper.authors.size(); ++i) {
      if (i > 0) out += ", ";
      out += "\"" + paper.authors[i] + "\"";
    }
    out += "], \"citations\": " + std::to_string(paper.citations) + "}\n";
  }
  return out;
}

}  // namespace fixture
