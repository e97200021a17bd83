#include <catch_amalgamated.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "censet/censet.hpp"

using censet::Certificate;
using censet::Element;
using censet::Error;
using censet::ErrorKind;
using censet::GroundSemigroup;
using censet::SetSpec;
using censet::Verdict;

namespace {

using Table = std::vector<std::vector<std::size_t>>;

// brute-force reference classifier over a raw table; the positive witness for
// syndetic and piecewise syndetic is monotone in the translate family, so the
// full family decides existence
struct FiniteOracle {
  Table t;

  std::size_t n() const { return t.size(); }

  bool syndetic(const std::vector<bool>& a) const {
    for (std::size_t s = 0; s < n(); ++s) {
      bool covered = false;
      for (std::size_t f = 0; f < n() && !covered; ++f) covered = a[t[f][s]];
      if (!covered) return false;
    }
    return true;
  }

  bool thick(const std::vector<bool>& a) const {
    for (std::size_t x = 0; x < n(); ++x) {
      bool all = true;
      for (std::size_t s = 0; s < n() && all; ++s) all = a[t[s][x]];
      if (all) return true;
    }
    return false;
  }

  bool pws(const std::vector<bool>& a) const {
    std::vector<bool> u(n(), false);
    for (std::size_t s = 0; s < n(); ++s)
      for (std::size_t f = 0; f < n(); ++f)
        if (a[t[f][s]]) {
          u[s] = true;
          break;
        }
    return thick(u);
  }

  bool associative() const {
    for (std::size_t a = 0; a < n(); ++a)
      for (std::size_t b = 0; b < n(); ++b)
        for (std::size_t c = 0; c < n(); ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
    return true;
  }
};

SetSpec subset_from_mask(std::size_t n, unsigned mask) {
  std::vector<Element> members;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1u << i)) members.push_back(Element::finite(i));
  if (members.empty()) return SetSpec::explicit_set({});
  return SetSpec::explicit_set(std::move(members));
}

std::vector<bool> bools_from_mask(std::size_t n, unsigned mask) {
  std::vector<bool> a(n, false);
  for (std::size_t i = 0; i < n; ++i) a[i] = (mask & (1u << i)) != 0;
  return a;
}

void sweep_table(const Table& t) {
  FiniteOracle oracle{t};
  REQUIRE(oracle.associative());
  GroundSemigroup sg = GroundSemigroup::finite(t);
  const std::size_t n = t.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const SetSpec a = subset_from_mask(n, mask);
    const auto bits = bools_from_mask(n, mask);

    const Certificate syn = censet::is_syndetic(sg, a);
    const Certificate thk = censet::is_thick(sg, a);
    const Certificate pws = censet::is_piecewise_syndetic(sg, a);

    REQUIRE((syn.verdict == Verdict::yes) == oracle.syndetic(bits));
    REQUIRE((thk.verdict == Verdict::yes) == oracle.thick(bits));
    REQUIRE((pws.verdict == Verdict::yes) == oracle.pws(bits));

    if (syn.verdict == Verdict::yes) REQUIRE(pws.verdict == Verdict::yes);
    if (thk.verdict == Verdict::yes) REQUIRE(pws.verdict == Verdict::yes);

    REQUIRE(censet::replay_certificate(sg, a, syn));
    REQUIRE(censet::replay_certificate(sg, a, thk));
    REQUIRE(censet::replay_certificate(sg, a, pws));

    if (pws.verdict == Verdict::yes) {
      const censet::Decomposition d = censet::decompose_pws(sg, a);
      REQUIRE(d.thick_cert.verdict == Verdict::yes);
      REQUIRE(d.syndetic_cert.verdict == Verdict::yes);
      for (const Element& s : sg.carrier())
        REQUIRE(a.member(sg, s) ==
                (d.thick_part.member(sg, s) && d.syndetic_part.member(sg, s)));
    } else {
      REQUIRE_THROWS_AS(censet::decompose_pws(sg, a), Error);
    }
  }
}

} // namespace

TEST_CASE("classification matches brute force on all 2-element semigroups") {
  std::size_t associative = 0;
  for (unsigned code = 0; code < 16; ++code) {
    Table t(2, std::vector<std::size_t>(2));
    unsigned c = code;
    for (auto& row : t)
      for (auto& cell : row) {
        cell = c & 1u;
        c >>= 1u;
      }
    if (!FiniteOracle{t}.associative()) continue;
    ++associative;
    sweep_table(t);
  }
  REQUIRE(associative == 8);
}

TEST_CASE("classification matches brute force on selected larger semigroups") {
  // cyclic group of order 3
  sweep_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  // right-zero: a*b = b
  sweep_table({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  // left-zero: a*b = a
  sweep_table({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  // 2x2 rectangular band: (i,j)*(k,l) = (i,l), indexed (i,j) -> 2i+j
  sweep_table({{0, 1, 0, 1}, {0, 1, 0, 1}, {2, 3, 2, 3}, {2, 3, 2, 3}});
  // Z4
  sweep_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
}

TEST_CASE("rectangular band decomposition is the expected pair") {
  GroundSemigroup sg =
      GroundSemigroup::finite({{0, 1, 0, 1}, {0, 1, 0, 1}, {2, 3, 2, 3}, {2, 3, 2, 3}});
  SetSpec a = SetSpec::explicit_set({Element::finite(0)});
  REQUIRE(censet::is_piecewise_syndetic(sg, a).verdict == Verdict::yes);
  REQUIRE(censet::is_thick(sg, a).verdict == Verdict::no);
  REQUIRE(censet::is_syndetic(sg, a).verdict == Verdict::no);
  const censet::Decomposition d = censet::decompose_pws(sg, a);
  REQUIRE(d.thick_part.members() ==
          std::vector<Element>{Element::finite(0), Element::finite(2)});
  REQUIRE(d.syndetic_part.members() ==
          std::vector<Element>{Element::finite(0), Element::finite(1), Element::finite(3)});
}

TEST_CASE("eventually periodic gaps give exact verdicts") {
  GroundSemigroup nat = GroundSemigroup::naturals();

  SetSpec odds = SetSpec::ev_periodic({}, {true, false});
  Certificate syn = censet::is_syndetic(nat, odds);
  REQUIRE(syn.verdict == Verdict::yes);
  REQUIRE(syn.translates == std::vector<Element>{Element::nat(1), Element::nat(2)});
  REQUIRE(censet::is_thick(nat, odds).verdict == Verdict::no);
  Certificate pws = censet::is_piecewise_syndetic(nat, odds);
  REQUIRE(pws.verdict == Verdict::yes);
  REQUIRE(pws.translates == syn.translates);

  SetSpec mult5 = SetSpec::ev_periodic({}, {false, false, false, false, true});
  Certificate syn5 = censet::is_syndetic(nat, mult5);
  REQUIRE(syn5.verdict == Verdict::yes);
  REQUIRE(syn5.translates.size() == 5);
  REQUIRE(syn5.translates.front() == Element::nat(1));
  REQUIRE(syn5.translates.back() == Element::nat(5));

  // finite support: membership dies out
  SetSpec finite_support = SetSpec::ev_periodic({true, true, true}, {false});
  REQUIRE(censet::is_syndetic(nat, finite_support).verdict == Verdict::no);
  REQUIRE(censet::is_thick(nat, finite_support).verdict == Verdict::no);
  REQUIRE(censet::is_piecewise_syndetic(nat, finite_support).verdict == Verdict::no);
  REQUIRE_THROWS_AS(censet::decompose_pws(nat, finite_support), Error);

  // cofinite tail is thick from the stabilization point on
  SetSpec cofinite = SetSpec::ev_periodic({false, false, true, true}, {true});
  Certificate thk = censet::is_thick(nat, cofinite);
  REQUIRE(thk.verdict == Verdict::yes);
  REQUIRE(thk.thick.x == Element::nat(3));

  for (const SetSpec& s : {odds, mult5, finite_support, cofinite}) {
    REQUIRE(censet::replay_certificate(nat, s, censet::is_syndetic(nat, s)));
    REQUIRE(censet::replay_certificate(nat, s, censet::is_thick(nat, s)));
    REQUIRE(censet::replay_certificate(nat, s, censet::is_piecewise_syndetic(nat, s)));
  }
}

TEST_CASE("eventually periodic piecewise syndetic coincides with syndetic") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  const std::vector<SetSpec> cases{
      SetSpec::ev_periodic({}, {true, false}),
      SetSpec::ev_periodic({true}, {false, false, true}),
      SetSpec::ev_periodic({false, true}, {false}),
      SetSpec::ev_periodic({}, {true}),
  };
  for (const SetSpec& a : cases)
    REQUIRE((censet::is_piecewise_syndetic(nat, a).verdict == Verdict::yes) ==
            (censet::is_syndetic(nat, a).verdict == Verdict::yes));
}

TEST_CASE("factor patterns classify structurally") {
  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  SetSpec ab = SetSpec::factor_pattern("ab", false);

  Certificate syn = censet::is_syndetic(fw, ab);
  REQUIRE(syn.verdict == Verdict::window_qualified);
  REQUIRE(syn.translates == std::vector<Element>{Element::word("ab")});

  Certificate thk = censet::is_thick(fw, ab);
  REQUIRE(thk.verdict == Verdict::yes);
  REQUIRE(thk.thick.x == Element::word("ab"));

  Certificate pws = censet::is_piecewise_syndetic(fw, ab);
  REQUIRE(pws.verdict == Verdict::yes);

  SetSpec no_ab = SetSpec::factor_pattern("ab", true);
  REQUIRE(censet::is_syndetic(fw, no_ab).verdict == Verdict::no);
  REQUIRE(censet::is_thick(fw, no_ab).verdict == Verdict::no);
  REQUIRE(censet::is_piecewise_syndetic(fw, no_ab).verdict == Verdict::no);

  for (const SetSpec& s : {ab, no_ab}) {
    REQUIRE(censet::replay_certificate(fw, s, censet::is_syndetic(fw, s)));
    REQUIRE(censet::replay_certificate(fw, s, censet::is_thick(fw, s)));
    REQUIRE(censet::replay_certificate(fw, s, censet::is_piecewise_syndetic(fw, s)));
  }
}

TEST_CASE("window masks answer relative to the window threshold") {
  GroundSemigroup nat = GroundSemigroup::naturals();

  // 16 positions, all present: threshold is 4
  SetSpec dense = SetSpec::window_mask(std::vector<bool>(16, true));
  REQUIRE(censet::is_syndetic(nat, dense).verdict == Verdict::window_qualified);
  Certificate thk = censet::is_thick(nat, dense);
  REQUIRE(thk.verdict == Verdict::window_qualified);
  REQUIRE(thk.thick.run_length == 16);
  REQUIRE(censet::is_piecewise_syndetic(nat, dense).verdict == Verdict::window_qualified);

  // a hole wider than the threshold kills syndeticity
  std::vector<bool> gapped(16, true);
  for (std::size_t i = 1; i <= 6; ++i) gapped[i] = false;
  SetSpec holed = SetSpec::window_mask(gapped);
  REQUIRE(censet::is_syndetic(nat, holed).verdict == Verdict::no);

  // sparse but evenly spread: syndetic within the window, never thick
  std::vector<bool> spread(16, false);
  for (std::size_t i = 0; i < 16; i += 2) spread[i] = true;
  SetSpec comb = SetSpec::window_mask(spread);
  REQUIRE(censet::is_syndetic(nat, comb).verdict == Verdict::window_qualified);
  Certificate comb_thick = censet::is_thick(nat, comb);
  REQUIRE(comb_thick.verdict == Verdict::no);
  REQUIRE(comb_thick.thick.run_length == 1);

  REQUIRE_THROWS_AS(censet::is_syndetic(nat, SetSpec::window_mask({true, true})), Error);
  try {
    censet::is_syndetic(nat, SetSpec::window_mask({true, true}));
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::window_too_small);
  }

  for (const SetSpec& s : {dense, holed, comb}) {
    REQUIRE(censet::replay_certificate(nat, s, censet::is_syndetic(nat, s)));
    REQUIRE(censet::replay_certificate(nat, s, censet::is_thick(nat, s)));
    REQUIRE(censet::replay_certificate(nat, s, censet::is_piecewise_syndetic(nat, s)));
  }
}

TEST_CASE("replay rejects doctored certificates") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  SetSpec odds = SetSpec::ev_periodic({}, {true, false});

  Certificate c = censet::is_syndetic(nat, odds);
  Certificate wrong_verdict = c;
  wrong_verdict.verdict = Verdict::no;
  REQUIRE(!censet::replay_certificate(nat, odds, wrong_verdict));

  Certificate wrong_translates = c;
  wrong_translates.translates.push_back(Element::nat(9));
  REQUIRE(!censet::replay_certificate(nat, odds, wrong_translates));

  Certificate wrong_note = c;
  wrong_note.note = "made up";
  REQUIRE(!censet::replay_certificate(nat, odds, wrong_note));
}

TEST_CASE("bounded collectionwise surrogate") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  SetSpec evens = SetSpec::ev_periodic({}, {false, true});
  SetSpec mult5 = SetSpec::ev_periodic({}, {false, false, false, false, true});
  SetSpec odds = SetSpec::ev_periodic({}, {true, false});

  auto ok = censet::collectionwise_pws_bounded(nat, {evens, mult5}, 2);
  REQUIRE(ok.ok);
  REQUIRE(ok.depth == 2);
  REQUIRE(ok.label.find("bounded surrogate") != std::string::npos);

  auto bad = censet::collectionwise_pws_bounded(nat, {evens, odds}, 2);
  REQUIRE(!bad.ok);

  GroundSemigroup z2 = GroundSemigroup::finite({{0, 1}, {1, 0}});
  SetSpec zero = SetSpec::explicit_set({Element::finite(0)});
  SetSpec both = SetSpec::full(z2);
  auto fin = censet::collectionwise_pws_bounded(z2, {zero, both}, 2);
  REQUIRE(fin.ok);
  REQUIRE(!fin.translates.empty());

  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  auto words = censet::collectionwise_pws_bounded(
      fw, {SetSpec::factor_pattern("ab", false), SetSpec::factor_pattern("ba", false)}, 2);
  REQUIRE(words.ok);
  REQUIRE(words.label.find("witness multiplier") != std::string::npos);
}
