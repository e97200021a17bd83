#include <catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "censet/censet.hpp"

using censet::Element;
using censet::Error;
using censet::ErrorKind;
using censet::GroundSemigroup;
using censet::JWitness;
using censet::NCWitness;
using censet::Sequence;
using censet::SequenceFamily;
using censet::SetSpec;

namespace {

SequenceFamily nat_family(const GroundSemigroup& nat,
                          std::vector<std::pair<const char*, std::uint64_t>> slopes,
                          std::uint64_t truncation) {
  std::vector<Sequence> seqs;
  for (const auto& [name, k] : slopes) {
    Sequence s{name, {}};
    for (std::uint64_t t = 1; t <= truncation; ++t) s.values.push_back(Element::nat(k * t));
    seqs.push_back(std::move(s));
  }
  return SequenceFamily(nat, std::move(seqs));
}

// plain-integer witness enumeration for f1(t)=t, f2(t)=2t into the multiples
// of five: every (a, H) with a <= 50 and H inside {1..8}
std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>> mult5_witnesses() {
  std::set<std::pair<std::uint64_t, std::vector<std::uint64_t>>> found;
  for (std::uint64_t a = 1; a <= 50; ++a) {
    for (unsigned mask = 1; mask < (1u << 8); ++mask) {
      std::uint64_t s1 = 0, s2 = 0;
      std::vector<std::uint64_t> h;
      for (std::uint64_t t = 1; t <= 8; ++t)
        if (mask & (1u << (t - 1))) {
          h.push_back(t);
          s1 += t;
          s2 += 2 * t;
        }
      if ((a + s1) % 5 == 0 && (a + s2) % 5 == 0) found.insert({a, h});
    }
  }
  return found;
}

} // namespace

TEST_CASE("additive witness for the multiples of five") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  SetSpec mult5 = SetSpec::ev_periodic({}, {false, false, false, false, true});
  SequenceFamily fam = nat_family(nat, {{"id", 1}, {"double", 2}}, 40);

  const auto oracle = mult5_witnesses();
  REQUIRE(!oracle.empty());
  REQUIRE(oracle.count({5, {2, 3}}) == 1);

  JWitness w = censet::pws_to_jset_commutative(nat, mult5, fam);
  REQUIRE(censet::check_j_witness(nat, mult5, fam, w));
  REQUIRE(w.a == Element::nat(5));
  REQUIRE(w.H == std::vector<std::uint64_t>{2, 3});
  REQUIRE(oracle.count({w.a.value(), w.H}) == 1);

  REQUIRE(w.provenance.b == Element::nat(1));
  REQUIRE(w.provenance.translate == Element::nat(3));
  REQUIRE(w.provenance.word_length == 3);
  REQUIRE(w.provenance.line == "1**");

  // doctored copies fail the check
  JWitness bad = w;
  bad.a = Element::nat(6);
  REQUIRE(!censet::check_j_witness(nat, mult5, fam, bad));
  JWitness worse = w;
  worse.H = {2, 4};
  REQUIRE(!censet::check_j_witness(nat, mult5, fam, worse));
}

TEST_CASE("additive witness respects a minimum index") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  SetSpec mult5 = SetSpec::ev_periodic({}, {false, false, false, false, true});
  SequenceFamily fam = nat_family(nat, {{"id", 1}, {"double", 2}}, 40);

  censet::SearchBounds bounds;
  bounds.min_index = 6;
  JWitness w = censet::pws_to_jset_commutative(nat, mult5, fam, bounds);
  REQUIRE(censet::check_j_witness(nat, mult5, fam, w));
  for (std::uint64_t h : w.H) REQUIRE(h > 6);
}

TEST_CASE("additive witness failure modes") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  SetSpec mult5 = SetSpec::ev_periodic({}, {false, false, false, false, true});

  try {
    censet::pws_to_jset_commutative(nat, mult5,
                                    nat_family(nat, {{"id", 1}, {"double", 2}}, 2));
    FAIL("expected truncation_too_small");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::truncation_too_small);
  }

  censet::SearchBounds tight;
  tight.budget = 10;
  try {
    censet::pws_to_jset_commutative(nat, mult5,
                                    nat_family(nat, {{"id", 1}, {"double", 2}}, 40), tight);
    FAIL("expected infeasible");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::infeasible);
  }

  // not piecewise syndetic: no translate union to color against
  SetSpec dying = SetSpec::ev_periodic({true}, {false});
  REQUIRE_THROWS_AS(
      censet::pws_to_jset_commutative(nat, dying,
                                      nat_family(nat, {{"id", 1}}, 10)),
      Error);

  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  try {
    censet::pws_to_jset_commutative(fw, SetSpec::factor_pattern("ab", false),
                                    nat_family(nat, {{"id", 1}}, 10));
    FAIL("expected wrong_algorithm");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::wrong_algorithm);
  }
}

TEST_CASE("additive witness over a finite commutative semigroup") {
  GroundSemigroup z2 = GroundSemigroup::finite({{0, 1}, {1, 0}});
  SetSpec zero = SetSpec::explicit_set({Element::finite(0)});
  Sequence alt{"alt", {}};
  for (std::uint64_t t = 1; t <= 8; ++t) alt.values.push_back(Element::finite(t % 2));
  SequenceFamily fam(z2, {alt});

  JWitness w = censet::pws_to_jset_commutative(z2, zero, fam);
  REQUIRE(censet::check_j_witness(z2, zero, fam, w));
  REQUIRE(w.H.size() >= 1);
  REQUIRE(w.H.back() <= 8);
}

TEST_CASE("product witness for words containing ab") {
  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  SetSpec ab = SetSpec::factor_pattern("ab", false);
  std::vector<Sequence> seqs{{"const_a", std::vector<Element>(30, Element::word("a"))},
                             {"const_b", std::vector<Element>(30, Element::word("b"))}};
  SequenceFamily fam(fw, seqs);

  NCWitness w = censet::pws_to_jset_noncommutative(fw, ab, fam);
  REQUIRE(censet::check_nc_witness(fw, ab, fam, w));
  REQUIRE(w.m == 1);
  REQUIRE(w.a == std::vector<Element>{Element::word("aa"), Element::word("ab")});
  REQUIRE(w.t == std::vector<std::uint64_t>{2});
  REQUIRE(w.provenance.word == "1*1");
  REQUIRE(w.provenance.multiplier == Element::word("b"));
  REQUIRE(w.provenance.translate == Element::word("a"));

  // spelled out: every family member lands in the set
  for (std::size_t i = 1; i <= fam.size(); ++i) {
    Element acc = w.a[0];
    for (std::size_t j = 0; j < w.m; ++j)
      acc = fw.apply(fw.apply(acc, fam.seq(i).at(w.t[j])), w.a[j + 1]);
    REQUIRE(acc.letters().find("ab") != std::string::npos);
  }

  NCWitness bad = w;
  bad.a[1] = Element::word("aa"); // the const_a product becomes pure a's
  REQUIRE(!censet::check_nc_witness(fw, ab, fam, bad));

  try {
    censet::pws_to_jset_noncommutative(
        GroundSemigroup::naturals(), SetSpec::ev_periodic({}, {true}),
        nat_family(GroundSemigroup::naturals(), {{"id", 1}}, 10));
    FAIL("expected wrong_algorithm");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::wrong_algorithm);
  }
}

TEST_CASE("product witness in a finite noncommutative semigroup") {
  // left-zero: products collapse to their first letter
  GroundSemigroup lz = GroundSemigroup::finite({{0, 0}, {1, 1}});
  SetSpec one = SetSpec::explicit_set({Element::finite(1)});
  Sequence f{"f", std::vector<Element>(8, Element::finite(0))};
  SequenceFamily fam(lz, {f});

  NCWitness w = censet::pws_to_jset_noncommutative(lz, one, fam);
  REQUIRE(censet::check_nc_witness(lz, one, fam, w));
  REQUIRE(w.a.front() == Element::finite(1));
}

TEST_CASE("witness checkers validate their inputs") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  SetSpec evens = SetSpec::ev_periodic({}, {false, true});
  SequenceFamily fam = nat_family(nat, {{"id", 1}}, 10);

  JWitness w;
  w.a = Element::nat(2);
  w.H = {};
  REQUIRE_THROWS_AS(censet::check_j_witness(nat, evens, fam, w), Error);
  w.H = {3, 2};
  REQUIRE_THROWS_AS(censet::check_j_witness(nat, evens, fam, w), Error);
  w.H = {1, 11};
  REQUIRE_THROWS_AS(censet::check_j_witness(nat, evens, fam, w), Error);

  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  std::vector<Sequence> seqs{{"const_a", std::vector<Element>(5, Element::word("a"))}};
  SequenceFamily wfam(fw, seqs);
  NCWitness nw;
  nw.m = 2;
  nw.a = {Element::word("a"), Element::word("b")};
  nw.t = {1, 2};
  REQUIRE_THROWS_AS(
      censet::check_nc_witness(fw, SetSpec::factor_pattern("ab", false), wfam, nw), Error);
}
