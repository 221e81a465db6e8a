#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sembed/errors.hpp"

namespace sembed {

using WordVector = std::vector<double>;

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

inline double parse_strict_double(std::string_view field, const char* what,
                                  std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw InputError(std::string(what) + " line " + std::to_string(line_no) +
                     ": malformed float '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace detail

/**
 * Immutable token -> vector map loaded from a GloVe-format text file:
 * one entry per line, token followed by the components, single-space
 * separated. The dimension is fixed by the first line; every later line
 * must match it. Safe for concurrent readers once loaded.
 */
class VectorStore {
 public:
  static VectorStore load(const std::string& path,
                          std::optional<std::size_t> expected_dim = std::nullopt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot open vector file '" + path + "'");
    }

    VectorStore store;
    store.source_ = path;
    const std::string context = "vector file '" + path + "'";

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto space = line.find(' ');
      std::string token = line.substr(0, space == std::string::npos ? line.size() : space);
      if (token.empty()) {
        throw InputError(context + " line " + std::to_string(line_no) +
                         ": empty token");
      }

      WordVector components;
      components.reserve(store.dimension_);
      std::size_t pos = space;
      while (pos != std::string::npos) {
        std::size_t start = pos + 1;
        std::size_t end = line.find(' ', start);
        std::string_view field(line.data() + start,
                               (end == std::string::npos ? line.size() : end) - start);
        components.push_back(
            detail::parse_strict_double(field, context.c_str(), line_no));
        pos = end;
      }

      if (line_no == 1) {
        if (components.empty()) {
          throw InputError(context + " line 1: no vector components");
        }
        store.dimension_ = components.size();
      } else if (components.size() != store.dimension_) {
        throw InputError(context + " line " + std::to_string(line_no) +
                         ": expected " + std::to_string(store.dimension_) +
                         " components, got " +
                         std::to_string(components.size()));
      }

      auto [it, inserted] = store.entries_.emplace(std::move(token), std::move(components));
      if (!inserted) {
        throw InputError(context + " line " + std::to_string(line_no) +
                         ": duplicate token '" + it->first + "'");
      }
    }

    if (store.entries_.empty()) {
      throw InputError(context + " is empty");
    }
    if (expected_dim && *expected_dim != store.dimension_) {
      throw InputError(context + " has dimension " +
                       std::to_string(store.dimension_) + ", expected " +
                       std::to_string(*expected_dim));
    }
    return store;
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  const std::string& source() const { return source_; }

  // Exact-match lookup; nullptr when the token is out of vocabulary.
  // No case folding: the tokenizer lowercases and the store is uncased.
  const WordVector* lookup(std::string_view token) const {
    auto it = entries_.find(token);
    return it == entries_.end() ? nullptr : &it->second;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [token, components] : entries_) fn(token, components);
  }

 private:
  VectorStore() = default;

  std::size_t dimension_ = 0;
  std::unordered_map<std::string, WordVector, detail::StringHash, std::equal_to<>> entries_;
  std::string source_;
};

}  // namespace sembed
