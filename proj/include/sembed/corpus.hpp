#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sembed/errors.hpp"

namespace sembed {

struct Paper {
  std::string paper_id;
  std::string abstract;
  std::vector<std::string> authors;  // rank order, front() = first author
  long long citations = 0;
  std::optional<std::string> title;
};

struct Scholar {
  std::string scholar_id;
  std::optional<std::string> display_name;
};

// Per-scholar aggregates over exactly the papers listing the scholar as an
// author (any rank). Only scholars with at least one paper get a profile.
struct ScholarProfile {
  std::string scholar_id;
  std::vector<std::string> paper_ids;  // sorted
  std::size_t paper_count = 0;         // size of paper_ids
  long long max_citations = 0;         // highest single-paper citation count
};

struct Corpus {
  std::vector<Paper> papers;                 // file order
  std::map<std::string, Scholar> scholars;   // keyed by scholar_id

  const Paper* find_paper(const std::string& paper_id) const {
    for (const auto& paper : papers) {
      if (paper.paper_id == paper_id) return &paper;
    }
    return nullptr;
  }
};

namespace detail {

inline void validate_paper(const Paper& paper, const std::string& where) {
  if (paper.authors.empty()) {
    throw InputError(where + ": empty author list");
  }
  std::set<std::string> seen;
  for (const auto& author : paper.authors) {
    if (author.empty()) {
      throw InputError(where + ": empty scholar id in author list");
    }
    if (!seen.insert(author).second) {
      throw InputError(where + ": duplicate scholar id '" + author +
                       "' in author list");
    }
  }
  if (paper.citations < 0) {
    throw InputError(where + ": negative citations (" +
                     std::to_string(paper.citations) + ")");
  }
}

}  // namespace detail

// Assemble a corpus from in-memory records. Author ids referenced by papers
// but absent from `declared` are auto-created with no display name.
inline Corpus build_corpus(std::vector<Paper> papers,
                           std::vector<Scholar> declared = {}) {
  Corpus corpus;
  corpus.papers = std::move(papers);

  for (auto& scholar : declared) {
    if (scholar.scholar_id.empty()) {
      throw InputError("scholars: empty scholar_id");
    }
    auto [it, inserted] =
        corpus.scholars.emplace(scholar.scholar_id, std::move(scholar));
    if (!inserted) {
      throw InputError("scholars: duplicate scholar_id '" + it->first + "'");
    }
  }

  std::unordered_set<std::string> paper_ids;
  for (const auto& paper : corpus.papers) {
    const std::string where = "paper '" + paper.paper_id + "'";
    if (paper.paper_id.empty()) {
      throw InputError("papers: empty paper_id");
    }
    if (!paper_ids.insert(paper.paper_id).second) {
      throw InputError("papers: duplicate paper_id '" + paper.paper_id + "'");
    }
    detail::validate_paper(paper, where);
    for (const auto& author : paper.authors) {
      corpus.scholars.try_emplace(author, Scholar{author, std::nullopt});
    }
  }
  return corpus;
}

// Papers file: JSON-Lines, one object per line:
//   {"paper_id": str, "abstract": str, "authors": [str, ...],
//    "citations": int, "title": optional str}
// Scholars file (optional): JSON-Lines {"scholar_id": str, "name": str}.
inline Corpus load_corpus(const std::string& papers_path,
                          const std::optional<std::string>& scholars_path = std::nullopt) {
  std::ifstream in(papers_path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open papers file '" + papers_path + "'");
  }

  std::vector<Paper> papers;
  std::unordered_set<std::string> seen_paper_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where =
        "papers file '" + papers_path + "' line " + std::to_string(line_no);

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
      throw InputError(where + ": " + err.what());
    }
    if (!record.is_object()) {
      throw InputError(where + ": expected a JSON object");
    }

    Paper paper;
    try {
      paper.paper_id = record.at("paper_id").get<std::string>();
      paper.abstract = record.at("abstract").get<std::string>();
      if (!record.at("citations").is_number_integer()) {
        throw InputError(where + ": citations must be an integer");
      }
      paper.citations = record.at("citations").get<long long>();
      for (const auto& author : record.at("authors")) {
        paper.authors.push_back(author.get<std::string>());
      }
      if (record.contains("title")) {
        paper.title = record.at("title").get<std::string>();
      }
    } catch (const nlohmann::json::exception& err) {
      throw InputError(where + ": " + err.what());
    }
    detail::validate_paper(paper, where);
    if (!seen_paper_ids.insert(paper.paper_id).second) {
      throw InputError(where + ": duplicate paper_id '" + paper.paper_id + "'");
    }
    papers.push_back(std::move(paper));
  }

  std::vector<Scholar> declared;
  if (scholars_path) {
    std::ifstream sin(*scholars_path, std::ios::binary);
    if (!sin) {
      throw InputError("cannot open scholars file '" + *scholars_path + "'");
    }
    std::unordered_set<std::string> seen_scholar_ids;
    std::size_t sline_no = 0;
    while (std::getline(sin, line)) {
      ++sline_no;
      if (line.empty()) continue;
      const std::string where = "scholars file '" + *scholars_path +
                                "' line " + std::to_string(sline_no);
      Scholar scholar;
      try {
        auto record = nlohmann::json::parse(line);
        scholar.scholar_id = record.at("scholar_id").get<std::string>();
        if (record.contains("name")) {
          scholar.display_name = record.at("name").get<std::string>();
        }
      } catch (const nlohmann::json::exception& err) {
        throw InputError(where + ": " + err.what());
      }
      if (scholar.scholar_id.empty()) {
        throw InputError(where + ": empty scholar_id");
      }
      if (!seen_scholar_ids.insert(scholar.scholar_id).second) {
        throw InputError(where + ": duplicate scholar_id '" +
                         scholar.scholar_id + "'");
      }
      declared.push_back(std::move(scholar));
    }
  }

  return build_corpus(std::move(papers), std::move(declared));
}

// One profile per scholar with >= 1 paper; scholars that authored nothing
// are skipped (their aggregates are undefined).
inline std::map<std::string, ScholarProfile> scholar_profiles(const Corpus& corpus) {
  std::map<std::string, ScholarProfile> profiles;
  for (const auto& paper : corpus.papers) {
    for (const auto& author : paper.authors) {
      auto& profile = profiles[author];
      profile.scholar_id = author;
      profile.paper_ids.push_back(paper.paper_id);
      profile.max_citations = std::max(profile.max_citations, paper.citations);
    }
  }
  for (auto& [id, profile] : profiles) {
    std::sort(profile.paper_ids.begin(), profile.paper_ids.end());
    profile.paper_count = profile.paper_ids.size();
  }
  return profiles;
}

}  // namespace sembed
