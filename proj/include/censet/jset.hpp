#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "censet/classify.hpp"
#include "censet/element.hpp"
#include "censet/error.hpp"
#include "censet/hales_jewett.hpp"
#include "censet/semigroup.hpp"
#include "censet/sequence.hpp"
#include "censet/set_spec.hpp"
#include "censet/words.hpp"

namespace censet {

struct SearchBounds {
  std::size_t min_index = 0;       // sequence indices start past this offset
  std::uint64_t budget = 1'000'000;
};

struct JProvenance {
  Element b;            // base point pushing the word sums into the quotient union
  Element translate;    // the translate selected by the line's color
  std::size_t word_length = 0;
  std::string line;     // variable word whose line came out monochromatic
};

// Additive witness: a + sum over H of f(t) lands in the set for every f.
struct JWitness {
  Element a;
  std::vector<std::uint64_t> H;  // 1-based indices, strictly increasing
  JProvenance provenance;
};

struct NCProvenance {
  std::string word;          // variable word whose line came out monochromatic
  std::vector<Word> line;    // its points
  Element multiplier;        // right multiplier pushing word products into the union
  Element translate;         // the translate selected by the line's color
  std::size_t word_length = 0;
};

// Product witness: a(1)f(t(1)) a(2)f(t(2)) ... a(m)f(t(m)) a(m+1) lands in the
// set for every f.
struct NCWitness {
  std::size_t m = 0;
  std::vector<Element> a;        // m+1 blocks
  std::vector<std::uint64_t> t;  // m strictly increasing 1-based indices
  NCProvenance provenance;
};

namespace detail {

inline void require_indices(const SequenceFamily& family,
                            const std::vector<std::uint64_t>& H) {
  if (H.empty()) fail(ErrorKind::invalid_input, "index set must be nonempty");
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (i > 0 && H[i] <= H[i - 1])
      fail(ErrorKind::invalid_input, "index set must be strictly increasing");
    if (H[i] == 0 || H[i] > family.truncation())
      fail(ErrorKind::invalid_input,
           "index " + std::to_string(H[i]) + " is outside truncation " +
               std::to_string(family.truncation()));
  }
}

// product of sequence values chosen by the word's letters at successive indices
inline Element word_value(const GroundSemigroup& sg, const SequenceFamily& family,
                          const Word& w, std::size_t min_index) {
  std::optional<Element> acc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t which = static_cast<std::size_t>(w[i] - '0');
    const Element& v = family.seq(which).at(min_index + i + 1);
    acc = acc ? sg.apply(*acc, v) : v;
  }
  return *acc;
}

struct TranslateUnion {
  std::vector<Element> translates;

  // least translate index (0-based) sending x into the set, if any
  std::optional<std::size_t> color(const GroundSemigroup& sg, const SetSpec& A,
                                   const Element& x) const {
    for (std::size_t i = 0; i < translates.size(); ++i)
      if (A.member(sg, sg.apply(translates[i], x))) return i;
    return std::nullopt;
  }
};

inline TranslateUnion pws_translates(const GroundSemigroup& sg, const SetSpec& A) {
  const Certificate pws = is_piecewise_syndetic(sg, A);
  if (pws.verdict == Verdict::no)
    fail(ErrorKind::invalid_input, "set is not piecewise syndetic: " + pws.note);
  if (pws.translates.empty())
    fail(ErrorKind::invalid_input, "piecewise syndetic certificate has no translates");
  return TranslateUnion{pws.translates};
}

// how many base-point candidates the representation can honestly support
inline std::size_t base_candidate_count(const GroundSemigroup& sg, const SetSpec& A,
                                        std::uint64_t budget) {
  switch (A.kind()) {
    case SetKind::explicit_members: return sg.carrier_size();
    case SetKind::ev_periodic: {
      const SetSpec N = normalize(A);
      return N.preperiod_bits().size() + N.period_bits().size() + 1;
    }
    case SetKind::window: return A.window_size();
    case SetKind::factor: {
      const std::size_t len = std::max<std::size_t>(A.factor_word().size(), 1);
      std::size_t count = 0, total = 0;
      for (std::size_t l = 1; l <= len && total < budget; ++l) {
        std::size_t layer = 1;
        for (std::size_t i = 0; i < l; ++i) layer *= sg.alphabet_size();
        total += layer;
        count = total;
      }
      return std::max<std::size_t>(count, sg.alphabet_size());
    }
  }
  return 1;
}

// membership query guarded against running off a window
inline bool safe_member(const GroundSemigroup& sg, const SetSpec& A, const Element& x) {
  if (A.kind() == SetKind::window && x.backend() == Backend::naturals &&
      x.value() > A.window_size())
    fail(ErrorKind::window_too_small,
         "witness search needs membership of " + std::to_string(x.value()) +
             " beyond window of size " + std::to_string(A.window_size()));
  return A.member(sg, x);
}

} // namespace detail

inline bool check_j_witness(const GroundSemigroup& sg, const SetSpec& A,
                            const SequenceFamily& family, const JWitness& w) {
  if (!sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "additive witnesses apply to commutative semigroups only");
  sg.check(w.a, "witness base point");
  detail::require_indices(family, w.H);
  for (std::size_t i = 1; i <= family.size(); ++i) {
    const Element sum = aggregate(sg, family.seq(i).values, w.H);
    if (!detail::safe_member(sg, A, sg.apply(w.a, sum))) return false;
  }
  return true;
}

inline bool check_nc_witness(const GroundSemigroup& sg, const SetSpec& A,
                             const SequenceFamily& family, const NCWitness& w) {
  if (sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "product witnesses apply to non-commutative semigroups only");
  if (w.m == 0 || w.a.size() != w.m + 1 || w.t.size() != w.m)
    fail(ErrorKind::invalid_input, "witness blocks and indices are inconsistent");
  for (const Element& e : w.a) sg.check(e, "witness block");
  detail::require_indices(family, w.t);
  for (std::size_t i = 1; i <= family.size(); ++i) {
    const Sequence& f = family.seq(i);
    Element acc = w.a[0];
    for (std::size_t j = 0; j < w.m; ++j)
      acc = sg.apply(sg.apply(acc, f.at(w.t[j])), w.a[j + 1]);
    if (!detail::safe_member(sg, A, acc)) return false;
  }
  return true;
}

// Lift a piecewise syndetic certificate to an additive witness.  Word sums over
// growing lengths are pushed into the quotient union by a base point, colored
// by the least translate that absorbs them, and a monochromatic combinatorial
// line is converted into the index set (wildcard positions) and base point
// (color translate, base, constant positions).
inline JWitness pws_to_jset_commutative(const GroundSemigroup& sg, const SetSpec& A,
                                        const SequenceFamily& family,
                                        const SearchBounds& bounds = {}) {
  if (!sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "additive extraction applies to commutative semigroups only");
  if (family.size() > 9)
    fail(ErrorKind::invalid_input, "at most 9 sequences per witness search");
  const detail::TranslateUnion U = detail::pws_translates(sg, A);
  const int n = static_cast<int>(family.size());
  const int r = static_cast<int>(U.translates.size());
  const std::size_t bmax = detail::base_candidate_count(sg, A, bounds.budget);
  const std::vector<Element> candidates = sg.window_elements(bmax);
  std::uint64_t spent = 0;
  for (std::size_t N = 1; bounds.min_index + N <= family.truncation(); ++N) {
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < N; ++i) points *= static_cast<std::uint64_t>(n);
    spent += points * static_cast<std::uint64_t>(r) * N;
    if (spent > bounds.budget)
      fail(ErrorKind::infeasible,
           "witness search exceeded budget " + std::to_string(bounds.budget) +
               " at word length " + std::to_string(N));
    std::vector<Element> sums;
    sums.reserve(points);
    for (std::uint64_t rk = 0; rk < points; ++rk)
      sums.push_back(
          detail::word_value(sg, family, word_unrank(n, N, rk), bounds.min_index));
    std::optional<Element> base;
    std::vector<int> table(points, -1);
    for (const Element& b : candidates) {
      bool all = true;
      for (std::uint64_t rk = 0; rk < points && all; ++rk) {
        const auto c = U.color(sg, A, sg.apply(b, sums[rk]));
        if (c)
          table[rk] = static_cast<int>(*c);
        else
          all = false;
      }
      if (all) {
        base = b;
        break;
      }
    }
    if (!base) {
      if (A.kind() == SetKind::window)
        fail(ErrorKind::window_too_small,
             "no base point within window pushes word length " + std::to_string(N) +
                 " into the quotient union");
      continue;
    }
    const Coloring chi = table_coloring(n, N, r, table);
    const auto line = find_monochromatic_line(n, N, chi);
    if (!line) continue;
    JWitness w;
    w.provenance.b = *base;
    w.provenance.translate = U.translates[static_cast<std::size_t>(line->color)];
    w.provenance.word_length = N;
    w.provenance.line = line->vw.pattern;
    Element a = sg.apply(w.provenance.translate, *base);
    for (std::size_t i = 0; i < N; ++i) {
      const char ch = line->vw.pattern[i];
      if (ch == '*') {
        w.H.push_back(bounds.min_index + i + 1);
      } else {
        const std::size_t which = static_cast<std::size_t>(ch - '0');
        a = sg.apply(a, family.seq(which).at(bounds.min_index + i + 1));
      }
    }
    w.a = a;
    return w;
  }
  fail(ErrorKind::truncation_too_small,
       "no monochromatic line within truncation " +
           std::to_string(family.truncation()) + "; raise the truncation");
}

// Product-form analogue: word products are pushed into the quotient union by a
// right multiplier, and a monochromatic strong variable word yields the blocks
// between wildcard positions.
inline NCWitness pws_to_jset_noncommutative(const GroundSemigroup& sg, const SetSpec& A,
                                            const SequenceFamily& family,
                                            const SearchBounds& bounds = {}) {
  if (sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "product extraction applies to non-commutative semigroups only");
  if (family.size() > 9)
    fail(ErrorKind::invalid_input, "at most 9 sequences per witness search");
  const detail::TranslateUnion U = detail::pws_translates(sg, A);
  const int n = static_cast<int>(family.size());
  const int r = static_cast<int>(U.translates.size());
  const std::size_t cmax = detail::base_candidate_count(sg, A, bounds.budget);
  const std::vector<Element> candidates = sg.window_elements(cmax);
  std::uint64_t spent = 0;
  for (std::size_t N = 1; bounds.min_index + N <= family.truncation(); ++N) {
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < N; ++i) points *= static_cast<std::uint64_t>(n);
    spent += points * static_cast<std::uint64_t>(r) * N;
    if (spent > bounds.budget)
      fail(ErrorKind::infeasible,
           "witness search exceeded budget " + std::to_string(bounds.budget) +
               " at word length " + std::to_string(N));
    if (N < 3) continue;  // strong variable words need interior wildcards
    std::vector<Element> prods;
    prods.reserve(points);
    for (std::uint64_t rk = 0; rk < points; ++rk)
      prods.push_back(
          detail::word_value(sg, family, word_unrank(n, N, rk), bounds.min_index));
    std::optional<Element> mult;
    std::vector<int> table(points, -1);
    for (const Element& c : candidates) {
      bool all = true;
      for (std::uint64_t rk = 0; rk < points && all; ++rk) {
        const auto col = U.color(sg, A, sg.apply(prods[rk], c));
        if (col)
          table[rk] = static_cast<int>(*col);
        else
          all = false;
      }
      if (all) {
        mult = c;
        break;
      }
    }
    if (!mult) {
      if (A.kind() == SetKind::window)
        fail(ErrorKind::window_too_small,
             "no right multiplier within window pushes word length " +
                 std::to_string(N) + " into the quotient union");
      continue;
    }
    const Coloring chi = table_coloring(n, N, r, table);
    const auto line = find_strong_variable_word(n, N, chi);
    if (!line) continue;
    NCWitness w;
    w.provenance.word = line->vw.pattern;
    w.provenance.line = line->points;
    w.provenance.multiplier = *mult;
    w.provenance.translate = U.translates[static_cast<std::size_t>(line->color)];
    w.provenance.word_length = N;
    std::optional<Element> block = w.provenance.translate;
    for (std::size_t i = 0; i < N; ++i) {
      const char ch = line->vw.pattern[i];
      if (ch == '*') {
        w.a.push_back(*block);
        block.reset();
        w.t.push_back(bounds.min_index + i + 1);
      } else {
        const std::size_t which = static_cast<std::size_t>(ch - '0');
        const Element& v = family.seq(which).at(bounds.min_index + i + 1);
        block = block ? sg.apply(*block, v) : v;
      }
    }
    w.a.push_back(block ? sg.apply(*block, *mult) : *mult);
    w.m = w.t.size();
    return w;
  }
  fail(ErrorKind::truncation_too_small,
       "no monochromatic strong variable word within truncation " +
           std::to_string(family.truncation()) + "; raise the truncation");
}

} // namespace censet
