#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "censet/certificate.hpp"
#include "censet/element.hpp"
#include "censet/error.hpp"
#include "censet/semigroup.hpp"
#include "censet/set_spec.hpp"

namespace censet {

namespace detail {

// Visit k-subsets of {0..n-1} in lexicographic order; stop when fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t finite_mask(const GroundSemigroup& sg, const SetSpec& A) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < sg.carrier_size(); ++i)
    if (A.member(sg, Element::finite(i))) m |= std::uint64_t{1} << i;
  return m;
}

inline std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// {s : t.s in mask}
inline std::uint64_t quotient_mask(const GroundSemigroup& sg, std::size_t t,
                                   std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::size_t s = 0; s < sg.carrier_size(); ++s) {
    const Element ts = sg.apply(Element::finite(t), Element::finite(s));
    if (mask >> ts.index() & 1) out |= std::uint64_t{1} << s;
  }
  return out;
}

// least x with S.x inside mask, i.e. t.x in mask for every t
inline std::optional<std::size_t> right_multiplier_into(const GroundSemigroup& sg,
                                                        std::uint64_t mask) {
  for (std::size_t x = 0; x < sg.carrier_size(); ++x) {
    bool ok = true;
    for (std::size_t t = 0; t < sg.carrier_size() && ok; ++t) {
      const Element tx = sg.apply(Element::finite(t), Element::finite(x));
      ok = (mask >> tx.index() & 1) != 0;
    }
    if (ok) return x;
  }
  return std::nullopt;
}

// first translate family (by size, then lex) whose quotients cover the carrier
inline std::optional<std::vector<std::size_t>> first_cover(const GroundSemigroup& sg,
                                                           std::uint64_t mask) {
  const std::size_t n = sg.carrier_size();
  const std::uint64_t full = full_mask(n);
  std::vector<std::uint64_t> q(n);
  std::uint64_t everything = 0;
  for (std::size_t t = 0; t < n; ++t) {
    q[t] = quotient_mask(sg, t, mask);
    everything |= q[t];
  }
  if (everything != full) return std::nullopt;
  if (n <= 16) {
    std::optional<std::vector<std::size_t>> found;
    for (std::size_t k = 1; k <= n && !found; ++k)
      for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
        std::uint64_t u = 0;
        for (std::size_t t : idx) u |= q[t];
        if (u == full) {
          found = idx;
          return true;
        }
        return false;
      });
    return found;
  }
  // large carrier: deterministic greedy cover
  std::vector<std::size_t> picked;
  std::uint64_t covered = 0;
  while (covered != full) {
    std::size_t best = n;
    int best_gain = -1;
    for (std::size_t t = 0; t < n; ++t) {
      const int gain = std::popcount(q[t] & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = t;
      }
    }
    picked.push_back(best);
    covered |= q[best];
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

inline std::size_t window_run_threshold(const SetSpec& A) {
  const std::size_t w = A.window_size();
  if (w < 8)
    fail(ErrorKind::window_too_small,
         "window of size " + std::to_string(w) + " is too small; need at least 8");
  return w / 4;
}

struct EvPeriodicGaps {
  bool bounded = false;           // some member recurs periodically
  std::vector<std::uint64_t> realized;  // distances n -> next member, deduplicated
};

inline EvPeriodicGaps ev_periodic_gaps(const GroundSemigroup& sg, const SetSpec& A) {
  const SetSpec N = normalize(A);
  const std::size_t q = N.preperiod_bits().size();
  const std::size_t p = N.period_bits().size();
  EvPeriodicGaps out;
  out.bounded = std::find(N.period_bits().begin(), N.period_bits().end(), true) !=
                N.period_bits().end();
  if (!out.bounded) return out;
  const std::uint64_t limit = q + 2 * p + 2;
  for (std::uint64_t n = 1; n <= q + p; ++n) {
    for (std::uint64_t t = 1; t <= limit; ++t)
      if (N.member(sg, Element::nat(n + t))) {
        out.realized.push_back(t);
        break;
      }
  }
  std::sort(out.realized.begin(), out.realized.end());
  out.realized.erase(std::unique(out.realized.begin(), out.realized.end()),
                     out.realized.end());
  return out;
}

inline std::vector<std::uint64_t> window_members(const SetSpec& A) {
  std::vector<std::uint64_t> pos;
  for (std::size_t j = 0; j < A.window_size(); ++j)
    if (A.window_bits()[j]) pos.push_back(j + 1);
  return pos;
}

inline std::vector<Element> nat_translates(const std::vector<std::uint64_t>& ts) {
  std::vector<Element> out;
  out.reserve(ts.size());
  for (std::uint64_t t : ts) out.push_back(Element::nat(t));
  return out;
}

} // namespace detail

inline Certificate is_syndetic(const GroundSemigroup& sg, const SetSpec& A) {
  if (!A.backend_matches(sg))
    fail(ErrorKind::invalid_input, "set representation does not fit the semigroup");
  Certificate c;
  c.property = Property::syndetic;
  switch (A.kind()) {
    case SetKind::explicit_members: {
      const auto cover = detail::first_cover(sg, detail::finite_mask(sg, A));
      if (cover) {
        c.verdict = Verdict::yes;
        for (std::size_t t : *cover) c.translates.push_back(Element::finite(t));
        c.note = "exhaustive translate search by (size, lex)";
      } else {
        c.verdict = Verdict::no;
        c.note = "no translate family covers the carrier";
      }
      return c;
    }
    case SetKind::ev_periodic: {
      const auto gaps = detail::ev_periodic_gaps(sg, A);
      if (!gaps.bounded) {
        c.verdict = Verdict::no;
        c.note = "membership dies out, so gaps grow without bound";
        return c;
      }
      c.verdict = Verdict::yes;
      c.translates = detail::nat_translates(gaps.realized);
      c.note = "exact gap analysis of the eventual period";
      return c;
    }
    case SetKind::factor: {
      if (A.factor_trivially_empty() || (A.negated() && !A.factor_trivially_full())) {
        c.verdict = Verdict::no;
        c.note = A.factor_trivially_empty()
                     ? "empty set"
                     : "appending the forbidden factor defeats every translate family";
        return c;
      }
      c.verdict = Verdict::window_qualified;
      const std::string w =
          A.factor_trivially_full() || A.factor_word().empty() ? std::string(1, 'a')
                                                               : A.factor_word();
      c.translates.push_back(Element::word(w));
      c.note = "structural: prepending the factor lands every word in the set";
      return c;
    }
    case SetKind::window: {
      const std::size_t L = detail::window_run_threshold(A);
      const auto pos = detail::window_members(A);
      if (pos.empty()) {
        c.verdict = Verdict::no;
        c.note = "no members within window";
        return c;
      }
      const std::uint64_t last = pos.back();
      const std::uint64_t w = A.window_size();
      if (w - last > L) {
        c.verdict = Verdict::no;
        c.note = "window exhibits a gap of " + std::to_string(w - last) +
                 " past the last member (threshold " + std::to_string(L) + ")";
        return c;
      }
      std::vector<std::uint64_t> realized;
      for (std::uint64_t n = 1; n + 1 <= last; ++n) {
        const auto next = std::upper_bound(pos.begin(), pos.end(), n);
        const std::uint64_t d = *next - n;
        if (d > L) {
          c.verdict = Verdict::no;
          c.note = "window exhibits a gap of " + std::to_string(d) + " at " +
                   std::to_string(n) + " (threshold " + std::to_string(L) + ")";
          return c;
        }
        realized.push_back(d);
      }
      std::sort(realized.begin(), realized.end());
      realized.erase(std::unique(realized.begin(), realized.end()), realized.end());
      c.verdict = Verdict::window_qualified;
      c.translates = detail::nat_translates(realized);
      c.note = "gaps stay within threshold " + std::to_string(L) +
               " across window of size " + std::to_string(w);
      return c;
    }
  }
  fail(ErrorKind::invalid_input, "unknown set kind");
}

inline Certificate is_thick(const GroundSemigroup& sg, const SetSpec& A) {
  if (!A.backend_matches(sg))
    fail(ErrorKind::invalid_input, "set representation does not fit the semigroup");
  Certificate c;
  c.property = Property::thick;
  switch (A.kind()) {
    case SetKind::explicit_members: {
      const auto x = detail::right_multiplier_into(sg, detail::finite_mask(sg, A));
      if (x) {
        c.verdict = Verdict::yes;
        c.thick.x = Element::finite(*x);
        c.note = "right multiplier maps the whole carrier into the set";
      } else {
        c.verdict = Verdict::no;
        c.note = "every right multiplier leaves the set";
      }
      return c;
    }
    case SetKind::ev_periodic: {
      const SetSpec N = normalize(A);
      if (N.period_bits().size() == 1 && N.period_bits()[0]) {
        c.verdict = Verdict::yes;
        c.thick.x = Element::nat(N.preperiod_bits().size() + 1);
        c.note = "cofinite tail absorbs every shifted block";
      } else {
        c.verdict = Verdict::no;
        c.note = "run lengths are bounded by the period";
      }
      return c;
    }
    case SetKind::factor: {
      if (A.factor_trivially_empty() || (A.negated() && !A.factor_trivially_full())) {
        c.verdict = Verdict::no;
        c.note = A.factor_trivially_empty()
                     ? "empty set"
                     : "right-multiplying the forbidden factor escapes the set";
        return c;
      }
      c.verdict = Verdict::yes;
      const std::string w =
          A.factor_trivially_full() || A.factor_word().empty() ? std::string(1, 'a')
                                                               : A.factor_word();
      c.thick.x = Element::word(w);
      c.note = "right-multiplying by the factor lands every block in the set";
      return c;
    }
    case SetKind::window: {
      const std::size_t L = detail::window_run_threshold(A);
      std::size_t best = 0, cur = 0;
      for (std::size_t j = 0; j < A.window_size(); ++j) {
        cur = A.window_bits()[j] ? cur + 1 : 0;
        best = std::max(best, cur);
      }
      c.thick.run_length = best;
      if (best >= L) {
        c.verdict = Verdict::window_qualified;
        c.note = "run of length " + std::to_string(best) + " meets threshold " +
                 std::to_string(L);
      } else {
        c.verdict = Verdict::no;
        c.note = "longest run " + std::to_string(best) + " is below threshold " +
                 std::to_string(L);
      }
      return c;
    }
  }
  fail(ErrorKind::invalid_input, "unknown set kind");
}

inline Certificate is_piecewise_syndetic(const GroundSemigroup& sg, const SetSpec& A) {
  if (!A.backend_matches(sg))
    fail(ErrorKind::invalid_input, "set representation does not fit the semigroup");
  Certificate c;
  c.property = Property::piecewise_syndetic;
  switch (A.kind()) {
    case SetKind::explicit_members: {
      const std::size_t n = sg.carrier_size();
      const std::uint64_t mask = detail::finite_mask(sg, A);
      std::vector<std::uint64_t> q(n);
      for (std::size_t t = 0; t < n; ++t) q[t] = detail::quotient_mask(sg, t, mask);
      for (std::size_t k = 1; k <= n; ++k) {
        bool found = detail::for_each_combination(n, k, [&](const auto& idx) {
          std::uint64_t u = 0;
          for (std::size_t t : idx) u |= q[t];
          const auto x = detail::right_multiplier_into(sg, u);
          if (!x) return false;
          c.verdict = Verdict::yes;
          for (std::size_t t : idx) c.translates.push_back(Element::finite(t));
          c.thick.x = Element::finite(*x);
          c.note = "translate family found by (size, lex); union is thick";
          return true;
        });
        if (found) return c;
      }
      c.verdict = Verdict::no;
      c.note = "no translate family makes the union thick";
      return c;
    }
    case SetKind::ev_periodic: {
      Certificate s = is_syndetic(sg, A);
      c.verdict = s.verdict;
      c.translates = s.translates;
      c.note = s.verdict == Verdict::yes
                   ? "coincides with syndetic for eventually periodic sets"
                   : s.note;
      return c;
    }
    case SetKind::factor: {
      if (A.factor_trivially_empty() || (A.negated() && !A.factor_trivially_full())) {
        c.verdict = Verdict::no;
        c.note = A.factor_trivially_empty()
                     ? "empty set"
                     : "the forbidden factor survives every translate and multiplier";
        return c;
      }
      c.verdict = Verdict::yes;
      const std::string w =
          A.factor_trivially_full() || A.factor_word().empty() ? std::string(1, 'a')
                                                               : A.factor_word();
      c.translates.push_back(Element::word(std::string(1, 'a')));
      c.thick.x = Element::word(w);
      c.note = "single translate suffices; the quotient is already thick";
      return c;
    }
    case SetKind::window: {
      const std::size_t L = detail::window_run_threshold(A);
      const std::size_t w = A.window_size();
      if (w <= L) {
        c.verdict = Verdict::no;
        c.note = "window too short to exhibit a qualifying block";
        return c;
      }
      std::vector<std::uint64_t> dist(w - L + 1, 0);  // min t in [1,L] with n+t in A
      for (std::uint64_t n = 1; n + L <= w; ++n)
        for (std::uint64_t t = 1; t <= L; ++t)
          if (A.window_bits()[n + t - 1]) {
            dist[n] = t;
            break;
          }
      std::uint64_t best_len = 0, best_start = 0, cur_len = 0;
      for (std::uint64_t n = 1; n + L <= w; ++n) {
        cur_len = dist[n] ? cur_len + 1 : 0;
        if (cur_len > best_len) {
          best_len = cur_len;
          best_start = n - cur_len + 1;
        }
      }
      if (best_len >= L) {
        std::vector<std::uint64_t> realized;
        for (std::uint64_t n = best_start; n < best_start + best_len; ++n)
          realized.push_back(dist[n]);
        std::sort(realized.begin(), realized.end());
        realized.erase(std::unique(realized.begin(), realized.end()), realized.end());
        c.verdict = Verdict::window_qualified;
        c.translates = detail::nat_translates(realized);
        c.thick.run_length = best_len;
        c.note = "translates realized inside the densest block of length " +
                 std::to_string(best_len);
      } else {
        c.verdict = Verdict::no;
        c.thick.run_length = best_len;
        c.note = "densest covered block has length " + std::to_string(best_len) +
                 ", below threshold " + std::to_string(L);
      }
      return c;
    }
  }
  fail(ErrorKind::invalid_input, "unknown set kind");
}

struct Decomposition {
  SetSpec thick_part;
  SetSpec syndetic_part;
  Certificate thick_cert;
  Certificate syndetic_cert;
  Decomposition(SetSpec t, SetSpec s) : thick_part(std::move(t)), syndetic_part(std::move(s)) {}
};

namespace detail {

inline bool positive_verdict(const Certificate& c) {
  return c.verdict == Verdict::yes || c.verdict == Verdict::window_qualified;
}

} // namespace detail

// Split a piecewise syndetic A as T intersect Y with T thick and Y syndetic.
inline Decomposition decompose_pws(const GroundSemigroup& sg, const SetSpec& A) {
  if (!A.backend_matches(sg))
    fail(ErrorKind::invalid_input, "set representation does not fit the semigroup");
  const auto assemble = [&](SetSpec T, SetSpec Y) {
    Decomposition d(std::move(T), std::move(Y));
    d.thick_cert = is_thick(sg, d.thick_part);
    d.syndetic_cert = is_syndetic(sg, d.syndetic_part);
    return d;
  };
  switch (A.kind()) {
    case SetKind::explicit_members: {
      if (is_syndetic(sg, A).verdict == Verdict::yes)
        return assemble(SetSpec::full(sg), A);
      if (is_thick(sg, A).verdict == Verdict::yes)
        return assemble(A, SetSpec::full(sg));
      const std::size_t n = sg.carrier_size();
      const std::uint64_t mask = detail::finite_mask(sg, A);
      std::vector<std::size_t> comp;
      for (std::size_t s = 0; s < n; ++s)
        if (!(mask >> s & 1)) comp.push_back(s);
      for (std::size_t k = 1; k <= comp.size(); ++k) {
        std::optional<Decomposition> found;
        detail::for_each_combination(comp.size(), k, [&](const auto& idx) {
          std::uint64_t tmask = mask;
          for (std::size_t i : idx) tmask |= std::uint64_t{1} << comp[i];
          const std::uint64_t ymask =
              mask | (detail::full_mask(n) & ~tmask);
          std::vector<Element> tm, ym;
          for (std::size_t s = 0; s < n; ++s) {
            if (tmask >> s & 1) tm.push_back(Element::finite(s));
            if (ymask >> s & 1) ym.push_back(Element::finite(s));
          }
          SetSpec T = SetSpec::explicit_set(std::move(tm));
          SetSpec Y = SetSpec::explicit_set(std::move(ym));
          if (is_thick(sg, T).verdict != Verdict::yes) return false;
          if (is_syndetic(sg, Y).verdict != Verdict::yes) return false;
          found = assemble(std::move(T), std::move(Y));
          return true;
        });
        if (found) return *found;
      }
      fail(ErrorKind::invalid_input, "set is not piecewise syndetic");
    }
    case SetKind::ev_periodic: {
      if (is_syndetic(sg, A).verdict == Verdict::yes)
        return assemble(SetSpec::full(sg), A);
      if (is_thick(sg, A).verdict == Verdict::yes)
        return assemble(A, SetSpec::full(sg));
      fail(ErrorKind::invalid_input, "set is not piecewise syndetic");
    }
    case SetKind::factor: {
      if (detail::positive_verdict(is_thick(sg, A)))
        return assemble(A, SetSpec::full(sg));
      fail(ErrorKind::invalid_input, "set is not piecewise syndetic");
    }
    case SetKind::window: {
      const std::size_t L = detail::window_run_threshold(A);
      const auto pos = detail::window_members(A);
      if (pos.empty()) fail(ErrorKind::invalid_input, "set is not piecewise syndetic");
      const std::size_t w = A.window_size();
      std::vector<bool> tbits(w, false);
      std::uint64_t block_start = pos.front();
      std::uint64_t prev = pos.front();
      const auto flush = [&](std::uint64_t upto) {
        for (std::uint64_t j = block_start; j <= upto; ++j) tbits[j - 1] = true;
      };
      for (std::size_t i = 1; i < pos.size(); ++i) {
        if (pos[i] - prev > L) {
          flush(prev);
          block_start = pos[i];
        }
        prev = pos[i];
      }
      flush(prev);
      std::vector<bool> ybits(w);
      for (std::size_t j = 0; j < w; ++j)
        ybits[j] = A.window_bits()[j] || !tbits[j];
      SetSpec T = SetSpec::window_mask(std::move(tbits), A.promise());
      SetSpec Y = SetSpec::window_mask(std::move(ybits), A.promise());
      if (!detail::positive_verdict(is_thick(sg, T)) ||
          !detail::positive_verdict(is_syndetic(sg, Y)))
        fail(ErrorKind::invalid_input,
             "set is not piecewise syndetic within the window");
      return assemble(std::move(T), std::move(Y));
    }
  }
  fail(ErrorKind::invalid_input, "unknown set kind");
}

struct CollectionwiseReport {
  bool ok = false;
  std::vector<Element> translates;
  std::size_t depth = 0;
  std::string label;
};

// Depth-bounded stand-in for the collectionwise property: one translate family
// must make the quotient union of every subfamily intersection (up to the
// given depth) thick.
inline CollectionwiseReport collectionwise_pws_bounded(const GroundSemigroup& sg,
                                                       const std::vector<SetSpec>& sets,
                                                       std::size_t depth) {
  if (sets.empty() || depth == 0)
    fail(ErrorKind::invalid_input, "need at least one set and positive depth");
  for (const SetSpec& A : sets)
    if (!A.backend_matches(sg))
      fail(ErrorKind::invalid_input, "set representation does not fit the semigroup");
  CollectionwiseReport rep;
  rep.depth = depth;
  rep.label = "bounded surrogate at depth " + std::to_string(depth);
  const std::size_t kmax = std::min(depth, sets.size());
  switch (sg.backend()) {
    case Backend::finite: {
      const std::size_t n = sg.carrier_size();
      std::vector<std::uint64_t> base(sets.size());
      for (std::size_t i = 0; i < sets.size(); ++i)
        base[i] = detail::finite_mask(sg, sets[i]);
      std::vector<std::uint64_t> meets;
      for (std::size_t k = 1; k <= kmax; ++k)
        detail::for_each_combination(sets.size(), k, [&](const auto& idx) {
          std::uint64_t m = detail::full_mask(n);
          for (std::size_t i : idx) m &= base[i];
          meets.push_back(m);
          return false;
        });
      for (std::size_t k = 1; k <= n; ++k) {
        bool found = detail::for_each_combination(n, k, [&](const auto& idx) {
          for (std::uint64_t m : meets) {
            std::uint64_t u = 0;
            for (std::size_t t : idx) u |= detail::quotient_mask(sg, t, m);
            if (!detail::right_multiplier_into(sg, u)) return false;
          }
          rep.ok = true;
          for (std::size_t t : idx) rep.translates.push_back(Element::finite(t));
          return true;
        });
        if (found) return rep;
      }
      return rep;
    }
    case Backend::naturals: {
      std::vector<std::uint64_t> all;
      bool ok = true;
      for (std::size_t k = 1; k <= kmax && ok; ++k)
        detail::for_each_combination(sets.size(), k, [&](const auto& idx) {
          // meet of eventually periodic sets, built pointwise over one cycle
          std::size_t q = 0;
          std::uint64_t p = 1;
          for (std::size_t i : idx) {
            if (sets[i].kind() != SetKind::ev_periodic) {
              ok = false;
              return true;
            }
            const SetSpec N = normalize(sets[i]);
            q = std::max(q, N.preperiod_bits().size());
            p = detail::lcm_sz(p, N.period_bits().size());
            if (p > 4096) fail(ErrorKind::infeasible, "combined period exceeds 4096");
          }
          std::vector<bool> pre(q), per(p);
          const auto meet_member = [&](std::uint64_t v) {
            for (std::size_t i : idx)
              if (!sets[i].member(sg, Element::nat(v))) return false;
            return true;
          };
          for (std::size_t j = 0; j < q; ++j) pre[j] = meet_member(j + 1);
          for (std::size_t j = 0; j < p; ++j) per[j] = meet_member(q + j + 1);
          const SetSpec meet = SetSpec::ev_periodic(std::move(pre), std::move(per));
          const Certificate s = is_syndetic(sg, meet);
          if (s.verdict != Verdict::yes) {
            ok = false;
            return true;
          }
          for (const Element& t : s.translates) all.push_back(t.value());
          return false;
        });
      if (!ok) return rep;
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      rep.ok = true;
      rep.translates = detail::nat_translates(all);
      return rep;
    }
    case Backend::free_words: {
      std::string concat;
      for (const SetSpec& A : sets) {
        if (A.kind() != SetKind::factor || A.negated() || A.translate_prefix())
          return rep;
        concat += A.factor_word();
      }
      if (concat.empty()) concat = "a";
      rep.ok = true;
      rep.translates.push_back(Element::word(std::string(1, 'a')));
      rep.label += "; witness multiplier " + concat;
      return rep;
    }
  }
  return rep;
}

inline bool replay_certificate(const GroundSemigroup& sg, const SetSpec& A,
                               const Certificate& cert) {
  Certificate fresh;
  switch (cert.property) {
    case Property::syndetic: fresh = is_syndetic(sg, A); break;
    case Property::thick: fresh = is_thick(sg, A); break;
    case Property::piecewise_syndetic: fresh = is_piecewise_syndetic(sg, A); break;
  }
  return fresh.verdict == cert.verdict && fresh.translates == cert.translates &&
         fresh.thick.x == cert.thick.x &&
         fresh.thick.run_length == cert.thick.run_length && fresh.note == cert.note;
}

} // namespace censet
