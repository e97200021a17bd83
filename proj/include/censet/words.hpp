#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "censet/error.hpp"

namespace censet {

// Words over the alphabet {1..t} are digit strings; a variable word carries
// at least one '*' and every occurrence is substituted uniformly.
using Word = std::string;

struct VariableWord {
  std::string pattern;
};

inline void check_alphabet(int t) {
  if (t < 1 || t > 9)
    fail(ErrorKind::invalid_input, "alphabet size must lie in 1..9");
}

inline bool valid_word(int t, const Word& w) {
  if (w.empty()) return false;
  for (char c : w)
    if (c < '1' || c >= static_cast<char>('1' + t)) return false;
  return true;
}

inline bool valid_variable_word(int t, const VariableWord& vw) {
  if (vw.pattern.empty()) return false;
  bool has_star = false;
  for (char c : vw.pattern) {
    if (c == '*') {
      has_star = true;
    } else if (c < '1' || c >= static_cast<char>('1' + t)) {
      return false;
    }
  }
  return has_star;
}

// begins and ends with a constant letter; no two adjacent occurrences
inline bool strong_variable_word(const VariableWord& vw) {
  const std::string& p = vw.pattern;
  if (p.size() < 3 || p.front() == '*' || p.back() == '*') return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == '*' && p[i + 1] == '*') return false;
  return true;
}

inline std::vector<std::size_t> wildcard_positions(const VariableWord& vw) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vw.pattern.size(); ++i)
    if (vw.pattern[i] == '*') out.push_back(i + 1);
  return out;
}

inline std::vector<Word> line_points(int t, const VariableWord& vw) {
  check_alphabet(t);
  if (!valid_variable_word(t, vw))
    fail(ErrorKind::invalid_input, "malformed variable word '" + vw.pattern + "'");
  std::vector<Word> pts;
  pts.reserve(static_cast<std::size_t>(t));
  for (int c = 1; c <= t; ++c) {
    Word w = vw.pattern;
    for (char& ch : w)
      if (ch == '*') ch = static_cast<char>('0' + c);
    pts.push_back(std::move(w));
  }
  return pts;
}

struct CombinatorialLine {
  VariableWord vw;
  std::vector<Word> points;
  int color = 0;
};

// lexicographic rank of a length-N word among the t^N words of that length
inline std::uint64_t word_rank(int t, const Word& w) {
  check_alphabet(t);
  if (!valid_word(t, w))
    fail(ErrorKind::invalid_input, "malformed word '" + w + "'");
  std::uint64_t r = 0;
  for (char c : w) r = r * static_cast<std::uint64_t>(t) + static_cast<std::uint64_t>(c - '1');
  return r;
}

inline Word word_unrank(int t, std::size_t length, std::uint64_t rank) {
  check_alphabet(t);
  Word w(length, '1');
  for (std::size_t i = length; i-- > 0;) {
    w[i] = static_cast<char>('1' + rank % static_cast<std::uint64_t>(t));
    rank /= static_cast<std::uint64_t>(t);
  }
  return w;
}

namespace detail {

// Visit all length-N strings over {1..t, '*'} in lexicographic order with '*'
// sorting after the digits; fn returning true stops the scan.
template <typename Fn>
bool scan_patterns(int t, std::size_t length, Fn&& fn) {
  const auto bump = [&](char& c) {  // next symbol in the order 1..t, '*'
    if (c == static_cast<char>('0' + t)) {
      c = '*';
      return false;
    }
    if (c == '*') {
      c = '1';
      return true;  // carry
    }
    ++c;
    return false;
  };
  std::string p(length, '1');
  while (true) {
    if (fn(p)) return true;
    std::size_t i = length;
    while (i > 0 && bump(p[i - 1])) --i;
    if (i == 0) return false;
  }
}

} // namespace detail

// Visit variable words of the given length ordered by wildcard count, then
// lexicographically ('*' after digits); fn returning true stops the scan.
template <typename Fn>
bool for_each_variable_word(int t, std::size_t length, Fn&& fn) {
  check_alphabet(t);
  if (length == 0) fail(ErrorKind::invalid_input, "variable words need positive length");
  for (std::size_t wc = 1; wc <= length; ++wc) {
    const bool stop = detail::scan_patterns(t, length, [&](const std::string& p) {
      if (static_cast<std::size_t>(std::count(p.begin(), p.end(), '*')) != wc)
        return false;
      return fn(VariableWord{p});
    });
    if (stop) return true;
  }
  return false;
}

} // namespace censet
