#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "censet/censet.hpp"

using censet::Element;
using censet::Error;
using censet::ErrorKind;
using censet::GroundSemigroup;
using censet::Sequence;
using censet::SequenceFamily;

namespace {

// independent associativity check over a raw table
bool table_associative(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> table_from_code(unsigned code) {
  // code enumerates all 2x2 tables, two bits per cell
  std::vector<std::vector<std::size_t>> t(2, std::vector<std::size_t>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      t[i][j] = code & 1u;
      code >>= 1u;
    }
  return t;
}

} // namespace

TEST_CASE("element backends compare and display") {
  REQUIRE(Element::nat(3).display() == "3");
  REQUIRE(Element::word("abba").display() == "abba");
  REQUIRE(Element::finite(2).display() == "2");

  REQUIRE_THROWS_AS(Element::nat(0), Error);
  REQUIRE_THROWS_AS(Element::word(""), Error);

  REQUIRE(Element::nat(2) < Element::nat(10));
  // shortlex: length first, then lexicographic
  REQUIRE(Element::word("b") < Element::word("aa"));
  REQUIRE(Element::word("ab") < Element::word("ba"));
  REQUIRE(Element::nat(7) == Element::nat(7));
  REQUIRE(!(Element::nat(7) == Element::nat(8)));
}

TEST_CASE("finite tables are validated") {
  GroundSemigroup z2 = GroundSemigroup::finite({{0, 1}, {1, 0}});
  REQUIRE(z2.commutative());
  REQUIRE(z2.carrier_size() == 2);
  REQUIRE(z2.apply(Element::finite(1), Element::finite(1)) == Element::finite(0));

  GroundSemigroup lz = GroundSemigroup::finite({{0, 0}, {1, 1}});
  REQUIRE(!lz.commutative());
  REQUIRE(lz.apply(Element::finite(1), Element::finite(0)) == Element::finite(1));

  // (0*1)*? vs 0*(1*?) breaks for this table
  REQUIRE_THROWS_AS(GroundSemigroup::finite({{0, 1}, {0, 0}}), Error);
  try {
    GroundSemigroup::finite({{0, 1}, {0, 0}});
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::invalid_input);
  }
}

TEST_CASE("exactly eight 2-element tables are associative") {
  std::size_t count = 0;
  for (unsigned code = 0; code < 16; ++code) {
    const auto t = table_from_code(code);
    const bool oracle = table_associative(t);
    bool engine = true;
    try {
      GroundSemigroup sg = GroundSemigroup::finite(t);
      REQUIRE(sg.commutative() == (t[0][1] == t[1][0]));
    } catch (const Error&) {
      engine = false;
    }
    REQUIRE(engine == oracle);
    if (oracle) ++count;
  }
  REQUIRE(count == 8);
}

TEST_CASE("naturals and free words") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  REQUIRE(nat.commutative());
  REQUIRE(nat.apply(Element::nat(2), Element::nat(3)) == Element::nat(5));
  REQUIRE_THROWS_AS(nat.check(Element::word("a"), "value"), Error);

  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  REQUIRE(!fw.commutative());
  REQUIRE(fw.apply(Element::word("ab"), Element::word("ba")) == Element::word("abba"));
  REQUIRE_THROWS_AS(fw.check(Element::word("c"), "value"), Error);

  GroundSemigroup one = GroundSemigroup::free_semigroup(1);
  REQUIRE(one.commutative());
}

TEST_CASE("window elements enumerate the natural ground order") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  const auto w = nat.window_elements(4);
  REQUIRE(w == std::vector<Element>{Element::nat(1), Element::nat(2), Element::nat(3),
                                    Element::nat(4)});

  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  const auto v = fw.window_elements(7);
  const std::vector<Element> expect{Element::word("a"),  Element::word("b"),
                                    Element::word("aa"), Element::word("ab"),
                                    Element::word("ba"), Element::word("bb"),
                                    Element::word("aaa")};
  REQUIRE(v == expect);

  GroundSemigroup z2 = GroundSemigroup::finite({{0, 1}, {1, 0}});
  REQUIRE(z2.window_elements(10).size() == 2);
}

TEST_CASE("aggregate folds over an increasing index set") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  std::vector<Element> id;
  for (unsigned t = 1; t <= 10; ++t) id.push_back(Element::nat(t));
  REQUIRE(censet::aggregate(nat, id, {2, 3}) == Element::nat(5));
  REQUIRE(censet::aggregate(nat, id, {1, 2, 3}) == Element::nat(6));

  std::vector<Element> odd;
  for (unsigned t = 1; t <= 10; ++t) odd.push_back(Element::nat(2 * t + 1));
  REQUIRE(censet::aggregate(nat, odd, {1, 2, 3}) == Element::nat(15));

  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  std::vector<Element> words{Element::word("a"), Element::word("b"), Element::word("a"),
                             Element::word("b")};
  REQUIRE(censet::aggregate(fw, words, {1, 4}) == Element::word("ab"));

  REQUIRE_THROWS_AS(censet::aggregate(nat, id, {}), Error);
  REQUIRE_THROWS_AS(censet::aggregate(nat, id, {3, 2}), Error);
  REQUIRE_THROWS_AS(censet::aggregate(nat, id, {2, 2}), Error);
  REQUIRE_THROWS_AS(censet::aggregate(nat, id, {11}), Error);
}

TEST_CASE("aggregate splits across a cut") {
  // aggregate(H1 u H2) == aggregate(H1) * aggregate(H2) when max H1 < min H2
  GroundSemigroup fw = GroundSemigroup::free_semigroup(2);
  std::vector<Element> vals;
  for (unsigned t = 1; t <= 8; ++t)
    vals.push_back(Element::word(t % 2 ? "ab" : "b"));
  const std::vector<std::uint64_t> h1{1, 3}, h2{5, 6, 8};
  std::vector<std::uint64_t> both = h1;
  both.insert(both.end(), h2.begin(), h2.end());
  REQUIRE(censet::aggregate(fw, vals, both) ==
          fw.apply(censet::aggregate(fw, vals, h1), censet::aggregate(fw, vals, h2)));
}

TEST_CASE("sequence families validate their shape") {
  GroundSemigroup nat = GroundSemigroup::naturals();
  Sequence f{"id", {Element::nat(1), Element::nat(2), Element::nat(3)}};
  Sequence g{"double", {Element::nat(2), Element::nat(4), Element::nat(6)}};

  SequenceFamily fam(nat, {f, g});
  REQUIRE(fam.size() == 2);
  REQUIRE(fam.truncation() == 3);
  REQUIRE(fam.seq(1).name == "id");
  REQUIRE(fam.seq(2).at(3) == Element::nat(6));
  REQUIRE_THROWS_AS(fam.seq(0), Error);
  REQUIRE_THROWS_AS(fam.seq(3), Error);
  REQUIRE_THROWS_AS(fam.seq(1).at(0), Error);
  REQUIRE_THROWS_AS(fam.seq(1).at(4), Error);

  REQUIRE_THROWS_AS(SequenceFamily(nat, {}), Error);
  Sequence short_one{"short", {Element::nat(1)}};
  REQUIRE_THROWS_AS(SequenceFamily(nat, {f, short_one}), Error);

  SequenceFamily sub = fam.subfamily(nat, {2});
  REQUIRE(sub.size() == 1);
  REQUIRE(sub.seq(1).name == "double");

  SequenceFamily cut = fam.truncated(nat, 2);
  REQUIRE(cut.truncation() == 2);
  REQUIRE_THROWS_AS(fam.truncated(nat, 0), Error);
  REQUIRE_THROWS_AS(fam.truncated(nat, 4), Error);
}
