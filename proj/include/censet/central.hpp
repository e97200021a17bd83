#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "censet/element.hpp"
#include "censet/error.hpp"
#include "censet/jset.hpp"
#include "censet/semigroup.hpp"
#include "censet/sequence.hpp"
#include "censet/set_spec.hpp"

namespace censet {

// Decreasing chain of sets, 1-based, with the first set as the target.  The
// resolver maps a base index and a point to the first deeper index whose set
// the point's quotient absorbs.
class CentralChain {
 public:
  static CentralChain of(std::vector<SetSpec> sets) {
    if (sets.empty()) fail(ErrorKind::invalid_input, "chain needs at least one set");
    CentralChain c;
    c.sets_ = std::move(sets);
    return c;
  }

  std::size_t depth() const { return sets_.size(); }

  const SetSpec& at(std::size_t n) const {
    if (n == 0 || n > sets_.size())
      fail(ErrorKind::invalid_input, "chain index " + std::to_string(n) +
                                         " is outside depth " +
                                         std::to_string(sets_.size()));
    return sets_[n - 1];
  }

  void validate(const GroundSemigroup& sg) const {
    for (const SetSpec& s : sets_)
      if (!s.backend_matches(sg))
        fail(ErrorKind::invalid_input, "chain set does not fit the semigroup");
    for (std::size_t i = 1; i < sets_.size(); ++i)
      if (!subset_of(sg, sets_[i], sets_[i - 1]).holds)
        fail(ErrorKind::invalid_input,
             "chain is not decreasing at position " + std::to_string(i + 1));
  }

  // first m >= base with chain[m] inside the quotient of chain[base] by x
  std::size_t resolve(const GroundSemigroup& sg, std::size_t base,
                      const Element& x) const {
    const SetSpec quotient = left_quotient(sg, x, at(base));
    for (std::size_t m = base; m <= depth(); ++m)
      if (subset_of(sg, at(m), quotient).holds) return m;
    fail(ErrorKind::depth_too_small,
         "no chain set refines the quotient by " + x.display() +
             "; extend the chain beyond depth " + std::to_string(depth()));
  }

 private:
  std::vector<SetSpec> sets_;
};

struct CentralEntry {
  std::vector<std::size_t> subset;  // 1-based picks into the family, ascending
  Element alpha;
  std::vector<std::uint64_t> H;
  std::size_t base_index = 1;       // chain set the row's sums land in
  std::size_t refine_index = 1;     // chain set the row was extracted from
  JProvenance provenance;
};

struct CentralTable {
  std::vector<CentralEntry> entries;
};

struct NCCentralEntry {
  std::vector<std::size_t> subset;
  std::size_t m = 0;
  std::vector<Element> blocks;       // m+1 blocks
  std::vector<std::uint64_t> tau;    // m strictly increasing indices
  std::size_t base_index = 1;
  std::size_t refine_index = 1;
  NCProvenance provenance;
};

struct NCCentralTable {
  std::vector<NCCentralEntry> entries;
};

// Stage-indexed variant produced by the iterated derivations.
struct StageEntry {
  std::size_t stage = 0;
  std::size_t family_limit = 0;  // sequences selectable at this stage
  Element alpha;
  std::vector<std::uint64_t> H;
  std::size_t base_index = 1;
  std::size_t refine_index = 1;
  JProvenance provenance;
};

struct StageTable {
  std::vector<StageEntry> entries;
};

// Selector for the bounded form: stage n may only pick among the first
// limit(n) sequences.
struct BoundedSelector {
  std::vector<std::size_t> stages;  // 1-based, strictly increasing
  std::vector<std::size_t> picks;   // picks[i] selects a sequence for stages[i]
};

struct VerifyReport {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_notes;
  bool ordering_ok = true;
  std::vector<std::string> ordering_notes;

  bool ok() const { return failures == 0 && ordering_ok; }
};

namespace detail {

inline bool proper_subset(const std::vector<std::size_t>& a,
                          const std::vector<std::size_t>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::uint64_t max_index(const std::vector<std::uint64_t>& H) {
  return H.empty() ? 0 : H.back();
}

inline std::string subset_label(const std::vector<std::size_t>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

inline Element row_value(const GroundSemigroup& sg, const SequenceFamily& family,
                         const CentralEntry& e, std::size_t pick) {
  return sg.apply(e.alpha, aggregate(sg, family.seq(pick).values, e.H));
}

inline Element row_value(const GroundSemigroup& sg, const SequenceFamily& family,
                         const NCCentralEntry& e, std::size_t pick) {
  const Sequence& f = family.seq(pick);
  Element acc = e.blocks[0];
  for (std::size_t j = 0; j < e.m; ++j)
    acc = sg.apply(sg.apply(acc, f.at(e.tau[j])), e.blocks[j + 1]);
  return acc;
}

inline Element row_value(const GroundSemigroup& sg, const SequenceFamily& family,
                         const StageEntry& e, std::size_t pick) {
  return sg.apply(e.alpha, aggregate(sg, family.seq(pick).values, e.H));
}

// Visit the value of every chain of table rows (strictly increasing subsets,
// optionally all inside `limit`) under every per-row selector.
template <typename Entry, typename Fn>
void for_each_chain_value(const GroundSemigroup& sg, const SequenceFamily& family,
                          const std::vector<Entry>& entries,
                          const std::vector<std::size_t>* limit, Fn&& fn) {
  const std::function<void(std::size_t, std::optional<Element>, std::string)> extend =
      [&](std::size_t from, std::optional<Element> acc, std::string label) {
        for (std::size_t i = from; i < entries.size(); ++i) {
          const Entry& e = entries[i];
          if (limit && !proper_subset(e.subset, *limit)) continue;
          if (acc.has_value() &&
              !proper_subset(entries[from - 1].subset, e.subset))
            continue;
          for (std::size_t pick : e.subset) {
            const Element v = row_value(sg, family, e, pick);
            const Element total = acc ? sg.apply(*acc, v) : v;
            const std::string tag =
                label + subset_label(e.subset) + "/f" + std::to_string(pick);
            fn(total, tag);
            extend(i + 1, total, tag + " ");
          }
        }
      };
  extend(0, std::nullopt, "");
}

template <typename Entry, typename Indices>
void check_table_ordering(const std::vector<Entry>& es, Indices&& indices,
                          VerifyReport& rep) {
  for (const Entry& e : es)
    if (indices(e).empty())
      fail(ErrorKind::invalid_input, "witness table row has an empty index set");
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (proper_subset(es[i].subset, es[j].subset) &&
          max_index(indices(es[i])) >= indices(es[j]).front()) {
        rep.ordering_ok = false;
        rep.ordering_notes.push_back(
            "indices of " + subset_label(es[i].subset) + " reach into those of " +
            subset_label(es[j].subset));
      }
  for (std::size_t i = 0; i + 1 < es.size(); ++i)
    if (max_index(indices(es[i])) >= indices(es[i + 1]).front()) {
      rep.ordering_ok = false;
      rep.ordering_notes.push_back("processing order broken between rows " +
                                   std::to_string(i + 1) + " and " +
                                   std::to_string(i + 2));
    }
}

} // namespace detail

// Build one witness row per nonempty subset of the family, processed by
// (cardinality, lex).  Each row is extracted from the chain set deep enough to
// absorb every sum over chains of already-built proper-subset rows, and its
// indices start past every index used before.
inline CentralTable build_commutative_witness(const GroundSemigroup& sg,
                                              const CentralChain& chain,
                                              const SequenceFamily& family,
                                              std::uint64_t budget = 1'000'000) {
  if (!sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "additive table construction applies to commutative semigroups only");
  chain.validate(sg);
  CentralTable table;
  std::uint64_t used_max = 0;
  for (std::size_t k = 1; k <= family.size(); ++k) {
    detail::for_each_combination(family.size(), k, [&](const auto& idx) {
      std::vector<std::size_t> subset;
      for (std::size_t i : idx) subset.push_back(i + 1);
      std::vector<Element> sums;
      detail::for_each_chain_value(
          sg, family, table.entries, &subset,
          [&](const Element& v, const std::string&) { sums.push_back(v); });
      std::sort(sums.begin(), sums.end());
      sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
      std::size_t refine = 1;
      for (const Element& x : sums) refine = std::max(refine, chain.resolve(sg, 1, x));
      const JWitness w = pws_to_jset_commutative(
          sg, chain.at(refine), family.subfamily(sg, subset),
          SearchBounds{static_cast<std::size_t>(used_max), budget});
      CentralEntry e;
      e.subset = subset;
      e.alpha = w.a;
      e.H = w.H;
      e.base_index = 1;
      e.refine_index = refine;
      e.provenance = w.provenance;
      used_max = std::max(used_max, detail::max_index(e.H));
      table.entries.push_back(std::move(e));
      return false;
    });
  }
  return table;
}

inline NCCentralTable build_noncommutative_witness(const GroundSemigroup& sg,
                                                   const CentralChain& chain,
                                                   const SequenceFamily& family,
                                                   std::uint64_t budget = 1'000'000) {
  if (sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "product table construction applies to non-commutative semigroups only");
  chain.validate(sg);
  NCCentralTable table;
  std::uint64_t used_max = 0;
  for (std::size_t k = 1; k <= family.size(); ++k) {
    detail::for_each_combination(family.size(), k, [&](const auto& idx) {
      std::vector<std::size_t> subset;
      for (std::size_t i : idx) subset.push_back(i + 1);
      std::vector<Element> prods;
      detail::for_each_chain_value(
          sg, family, table.entries, &subset,
          [&](const Element& v, const std::string&) { prods.push_back(v); });
      std::sort(prods.begin(), prods.end());
      prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
      std::size_t refine = 1;
      for (const Element& x : prods) refine = std::max(refine, chain.resolve(sg, 1, x));
      const NCWitness w = pws_to_jset_noncommutative(
          sg, chain.at(refine), family.subfamily(sg, subset),
          SearchBounds{static_cast<std::size_t>(used_max), budget});
      NCCentralEntry e;
      e.subset = subset;
      e.m = w.m;
      e.blocks = w.a;
      e.tau = w.t;
      e.base_index = 1;
      e.refine_index = refine;
      e.provenance = w.provenance;
      used_max = std::max(used_max, detail::max_index(e.tau));
      table.entries.push_back(std::move(e));
      return false;
    });
  }
  return table;
}

// Every chain of rows under every selector must land in the target set, and
// index sets must respect both the subset order and the processing order.
inline VerifyReport verify_chain_sums(const GroundSemigroup& sg, const SetSpec& A,
                                      const SequenceFamily& family,
                                      const CentralTable& table) {
  VerifyReport rep;
  detail::for_each_chain_value(sg, family, table.entries, nullptr,
                               [&](const Element& v, const std::string& tag) {
                                 ++rep.checks;
                                 if (!A.member(sg, v)) {
                                   ++rep.failures;
                                   rep.failure_notes.push_back(
                                       tag + " gives " + v.display() +
                                       ", outside the target set");
                                 }
                               });
  detail::check_table_ordering(
      table.entries, [](const CentralEntry& e) -> const auto& { return e.H; }, rep);
  return rep;
}

inline VerifyReport verify_chain_products(const GroundSemigroup& sg, const SetSpec& A,
                                          const SequenceFamily& family,
                                          const NCCentralTable& table) {
  VerifyReport rep;
  detail::for_each_chain_value(sg, family, table.entries, nullptr,
                               [&](const Element& v, const std::string& tag) {
                                 ++rep.checks;
                                 if (!A.member(sg, v)) {
                                   ++rep.failures;
                                   rep.failure_notes.push_back(
                                       tag + " gives " + v.display() +
                                       ", outside the target set");
                                 }
                               });
  detail::check_table_ordering(
      table.entries, [](const NCCentralEntry& e) -> const auto& { return e.tau; },
      rep);
  return rep;
}

namespace detail {

// shared skeleton of the two iterated derivations; limit_at fixes how many
// sequences a stage may select from
inline StageTable derive_stages(const GroundSemigroup& sg, const CentralChain& chain,
                                const SequenceFamily& family, std::size_t n_max,
                                std::uint64_t budget, bool per_sequence_sums,
                                const std::function<std::size_t(std::size_t)>& limit_at) {
  if (!sg.commutative())
    fail(ErrorKind::wrong_algorithm,
         "iterated derivations apply to commutative semigroups only");
  if (n_max == 0) fail(ErrorKind::invalid_input, "need at least one stage");
  chain.validate(sg);
  StageTable table;
  std::uint64_t used_max = 0;
  for (std::size_t stage = 1; stage <= n_max; ++stage) {
    const std::size_t limit = limit_at(stage);
    std::vector<Element> sums;
    const std::size_t prev = table.entries.size();
    if (per_sequence_sums) {
      for (std::size_t i = 1; i <= family.size(); ++i)
        for (std::uint64_t f = 1; f < (std::uint64_t{1} << prev); ++f) {
          std::optional<Element> acc;
          for (std::size_t n = 0; n < prev; ++n)
            if (f >> n & 1) {
              const Element v = row_value(sg, family, table.entries[n], i);
              acc = acc ? sg.apply(*acc, v) : v;
            }
          sums.push_back(*acc);
        }
    } else {
      const std::function<void(std::size_t, std::optional<Element>)> walk =
          [&](std::size_t from, std::optional<Element> acc) {
            for (std::size_t n = from; n < prev; ++n) {
              const StageEntry& e = table.entries[n];
              for (std::size_t pick = 1; pick <= e.family_limit; ++pick) {
                const Element v = row_value(sg, family, e, pick);
                const Element total = acc ? sg.apply(*acc, v) : v;
                sums.push_back(total);
                walk(n + 1, total);
              }
            }
          };
      walk(0, std::nullopt);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    std::size_t refine = 1;
    for (const Element& x : sums) refine = std::max(refine, chain.resolve(sg, 1, x));
    std::vector<std::size_t> picks(limit);
    std::iota(picks.begin(), picks.end(), 1);
    const JWitness w = pws_to_jset_commutative(
        sg, chain.at(refine), family.subfamily(sg, picks),
        SearchBounds{static_cast<std::size_t>(used_max), budget});
    StageEntry e;
    e.stage = stage;
    e.family_limit = limit;
    e.alpha = w.a;
    e.H = w.H;
    e.base_index = 1;
    e.refine_index = refine;
    e.provenance = w.provenance;
    used_max = std::max(used_max, max_index(e.H));
    table.entries.push_back(std::move(e));
  }
  return table;
}

} // namespace detail

// One row per stage; a single sequence choice must survive across every stage
// subset.
inline StageTable derive_furstenberg(const GroundSemigroup& sg,
                                     const CentralChain& chain,
                                     const SequenceFamily& family, std::size_t n_max,
                                     std::uint64_t budget = 1'000'000) {
  return detail::derive_stages(sg, chain, family, n_max, budget, true,
                               [&](std::size_t) { return family.size(); });
}

// One row per stage; stage n may select among the first min(n, size) sequences.
inline StageTable derive_phi_form(const GroundSemigroup& sg, const CentralChain& chain,
                                  const SequenceFamily& family, std::size_t n_max,
                                  std::uint64_t budget = 1'000'000) {
  return detail::derive_stages(
      sg, chain, family, n_max, budget, false,
      [&](std::size_t stage) { return std::min(stage, family.size()); });
}

inline VerifyReport verify_furstenberg(const GroundSemigroup& sg, const SetSpec& A,
                                       const SequenceFamily& family,
                                       const StageTable& table) {
  VerifyReport rep;
  const std::size_t n = table.entries.size();
  for (std::size_t i = 1; i <= family.size(); ++i)
    for (std::uint64_t f = 1; f < (std::uint64_t{1} << n); ++f) {
      std::optional<Element> acc;
      std::string tag = "f" + std::to_string(i) + " over stages";
      for (std::size_t s = 0; s < n; ++s)
        if (f >> s & 1) {
          const Element v = detail::row_value(sg, family, table.entries[s], i);
          acc = acc ? sg.apply(*acc, v) : v;
          tag += " " + std::to_string(s + 1);
        }
      ++rep.checks;
      if (!A.member(sg, *acc)) {
        ++rep.failures;
        rep.failure_notes.push_back(tag + " gives " + acc->display() +
                                    ", outside the target set");
      }
    }
  for (std::size_t s = 0; s + 1 < n; ++s)
    if (detail::max_index(table.entries[s].H) >= table.entries[s + 1].H.front()) {
      rep.ordering_ok = false;
      rep.ordering_notes.push_back("stage " + std::to_string(s + 1) +
                                   " indices reach into stage " +
                                   std::to_string(s + 2));
    }
  return rep;
}

inline Element selector_value(const GroundSemigroup& sg, const SequenceFamily& family,
                              const StageTable& table, const BoundedSelector& sel) {
  if (sel.stages.empty() || sel.stages.size() != sel.picks.size())
    fail(ErrorKind::invalid_input, "selector needs matched stages and picks");
  std::optional<Element> acc;
  for (std::size_t j = 0; j < sel.stages.size(); ++j) {
    const std::size_t s = sel.stages[j];
    if (s == 0 || s > table.entries.size() || (j > 0 && s <= sel.stages[j - 1]))
      fail(ErrorKind::invalid_input, "selector stages must increase within the table");
    const StageEntry& e = table.entries[s - 1];
    if (sel.picks[j] == 0 || sel.picks[j] > e.family_limit)
      fail(ErrorKind::invalid_input,
           "selector pick " + std::to_string(sel.picks[j]) +
               " exceeds the stage limit " + std::to_string(e.family_limit));
    const Element v = detail::row_value(sg, family, e, sel.picks[j]);
    acc = acc ? sg.apply(*acc, v) : v;
  }
  return *acc;
}

inline VerifyReport verify_phi_form(const GroundSemigroup& sg, const SetSpec& A,
                                    const SequenceFamily& family,
                                    const StageTable& table) {
  VerifyReport rep;
  const std::size_t n = table.entries.size();
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << n); ++f) {
    BoundedSelector sel;
    for (std::size_t s = 0; s < n; ++s)
      if (f >> s & 1) sel.stages.push_back(s + 1);
    sel.picks.assign(sel.stages.size(), 1);
    while (true) {
      const Element v = selector_value(sg, family, table, sel);
      std::string tag = "selector";
      for (std::size_t j = 0; j < sel.stages.size(); ++j)
        tag += " " + std::to_string(sel.stages[j]) + "->f" +
               std::to_string(sel.picks[j]);
      ++rep.checks;
      if (!A.member(sg, v)) {
        ++rep.failures;
        rep.failure_notes.push_back(tag + " gives " + v.display() +
                                    ", outside the target set");
      }
      std::size_t j = sel.picks.size();
      while (j > 0) {
        if (sel.picks[j - 1] < table.entries[sel.stages[j - 1] - 1].family_limit) {
          ++sel.picks[j - 1];
          break;
        }
        sel.picks[j - 1] = 1;
        --j;
      }
      if (j == 0) break;
    }
  }
  for (std::size_t s = 0; s + 1 < n; ++s)
    if (detail::max_index(table.entries[s].H) >= table.entries[s + 1].H.front()) {
      rep.ordering_ok = false;
      rep.ordering_notes.push_back("stage " + std::to_string(s + 1) +
                                   " indices reach into stage " +
                                   std::to_string(s + 2));
    }
  return rep;
}

} // namespace censet
