#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "censet/error.hpp"
#include "censet/words.hpp"

namespace censet {

struct Coloring {
  int colors = 1;
  std::function<int(const Word&)> at;

  int operator()(const Word& w) const {
    const int c = at(w);
    if (c < 0 || c >= colors)
      fail(ErrorKind::invalid_input, "coloring left its declared range on '" + w + "'");
    return c;
  }
};

// Coloring backed by a table indexed by lexicographic word rank.
inline Coloring table_coloring(int t, std::size_t length, int colors,
                               std::vector<int> table) {
  check_alphabet(t);
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < length; ++i) expect *= static_cast<std::uint64_t>(t);
  if (colors < 1 || table.size() != expect)
    fail(ErrorKind::invalid_input, "coloring table must list one color per word");
  for (int c : table)
    if (c < 0 || c >= colors)
      fail(ErrorKind::invalid_input, "coloring table entry out of range");
  auto shared = std::make_shared<std::vector<int>>(std::move(table));
  return Coloring{colors, [t, shared](const Word& w) {
                    return (*shared)[static_cast<std::size_t>(word_rank(t, w))];
                  }};
}

// First variable word (by wildcard count, then lex) whose line is monochromatic.
inline std::optional<CombinatorialLine> find_monochromatic_line(int t,
                                                                std::size_t length,
                                                                const Coloring& chi) {
  std::optional<CombinatorialLine> found;
  for_each_variable_word(t, length, [&](const VariableWord& vw) {
    std::vector<Word> pts = line_points(t, vw);
    const int c = chi(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (chi(pts[i]) != c) return false;
    found = CombinatorialLine{vw, std::move(pts), c};
    return true;
  });
  return found;
}

// Same scan restricted to strong variable words.
inline std::optional<CombinatorialLine> find_strong_variable_word(int t,
                                                                  std::size_t length,
                                                                  const Coloring& chi) {
  std::optional<CombinatorialLine> found;
  for_each_variable_word(t, length, [&](const VariableWord& vw) {
    if (!strong_variable_word(vw)) return false;
    std::vector<Word> pts = line_points(t, vw);
    const int c = chi(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (chi(pts[i]) != c) return false;
    found = CombinatorialLine{vw, std::move(pts), c};
    return true;
  });
  return found;
}

struct HJCounterexample {
  std::size_t length = 0;
  std::vector<int> coloring;  // indexed by lexicographic word rank
};

struct HJCertificate {
  int colors = 0;
  int alphabet = 0;
  std::size_t length_limit = 0;
  std::optional<std::size_t> hj_number;  // least length forcing a mono line
  std::vector<HJCounterexample> counterexamples;  // one per refuted length
};

namespace detail {

// saturating r^(t^N); second member is the printable exponent t^N
inline std::pair<std::uint64_t, std::uint64_t> coloring_count(int r, int t,
                                                              std::size_t length) {
  const std::uint64_t cap = ~std::uint64_t{0};
  std::uint64_t exp = 1;
  for (std::size_t i = 0; i < length; ++i) {
    if (exp > cap / static_cast<std::uint64_t>(t)) return {cap, cap};
    exp *= static_cast<std::uint64_t>(t);
  }
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r != 1 && total > cap / static_cast<std::uint64_t>(r)) return {cap, exp};
    total *= static_cast<std::uint64_t>(r);
  }
  return {total, exp};
}

} // namespace detail

// Decide, for each length up to the limit, whether every r-coloring of [t]^N
// admits a monochromatic combinatorial line.  The scan over colorings is a
// depth-first assignment in lexicographic word order that abandons a branch
// as soon as some fully colored line is monochromatic, so reaching a leaf
// yields a counterexample coloring and an exhausted scan covers all r^(t^N)
// colorings.
inline HJCertificate hj_certificate_search(int r, int t, std::size_t length_limit,
                                           std::uint64_t budget = 1'000'000) {
  check_alphabet(t);
  if (r < 1) fail(ErrorKind::invalid_input, "need at least one color");
  if (length_limit == 0) fail(ErrorKind::invalid_input, "need a positive length limit");
  HJCertificate cert;
  cert.colors = r;
  cert.alphabet = t;
  cert.length_limit = length_limit;
  for (std::size_t n = 1; n <= length_limit; ++n) {
    const auto [count, exponent] = detail::coloring_count(r, t, n);
    if (count > budget)
      fail(ErrorKind::infeasible,
           "scanning length " + std::to_string(n) + " means " + std::to_string(r) +
               "^" + std::to_string(exponent) + " colorings, over budget " +
               std::to_string(budget));
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < n; ++i) words *= static_cast<std::uint64_t>(t);
    // lines as point-rank lists, grouped by the last rank they touch
    std::vector<std::vector<std::size_t>> lines;
    for_each_variable_word(t, n, [&](const VariableWord& vw) {
      std::vector<std::size_t> ranks;
      for (const Word& w : line_points(t, vw))
        ranks.push_back(static_cast<std::size_t>(word_rank(t, w)));
      lines.push_back(std::move(ranks));
      return false;
    });
    std::vector<std::vector<std::size_t>> closing(words);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      std::size_t last = 0;
      for (std::size_t p : lines[li]) last = std::max(last, p);
      closing[last].push_back(li);
    }
    std::vector<int> colors(words, -1);
    std::optional<std::vector<int>> leaf;
    const std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
      if (i == words) {
        leaf = colors;
        return true;
      }
      for (int c = 0; c < r; ++c) {
        colors[i] = c;
        bool mono = false;
        for (std::size_t li : closing[i]) {
          bool same = true;
          for (std::size_t p : lines[li])
            if (colors[p] != colors[lines[li].front()]) {
              same = false;
              break;
            }
          if (same) {
            mono = true;
            break;
          }
        }
        if (!mono && dfs(i + 1)) return true;
      }
      colors[i] = -1;
      return false;
    };
    if (dfs(0)) {
      cert.counterexamples.push_back({n, std::move(*leaf)});
    } else {
      cert.hj_number = n;
      return cert;
    }
  }
  return cert;
}

} // namespace censet
