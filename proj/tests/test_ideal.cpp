#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sspec/ideal.hpp"

using namespace sspec;

namespace {

std::vector<Bitset> member_sets(const std::vector<Ideal>& ideals) {
  std::vector<Bitset> out;
  out.reserve(ideals.size());
  for (const auto& i : ideals) out.push_back(i.members);
  return out;
}

}  // namespace

TEST_CASE("ideal_generated closes multiples under addition", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  CHECK(ideal_generated(z12, {}).members == Bitset::of(12, {0}));
  CHECK(ideal_generated(z12, {4, 6}).members == Bitset::of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(ideal_generated(z12, {5}).members == Bitset::full(12));
  CHECK_THROWS_AS(ideal_generated(z12, {12}), invalid_parameter_error);
}

TEST_CASE("all_ideals matches frozen lattices", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  auto lattice = all_ideals(z12);
  std::vector<Bitset> expected = {
      Bitset::of(12, {0}),
      Bitset::of(12, {0, 6}),
      Bitset::of(12, {0, 4, 8}),
      Bitset::of(12, {0, 3, 6, 9}),
      Bitset::of(12, {0, 2, 4, 6, 8, 10}),
      Bitset::full(12)};
  CHECK(member_sets(lattice) == expected);

  CHECK(all_ideals(make_poly_quotient(2, {1, 1, 1})).size() == 2);  // field
  CHECK(all_ideals(make_product({make_zn(2), make_zn(2)})).size() == 4);
  CHECK_THROWS_AS(all_ideals(make_zn(65)), capacity_error);
}

TEST_CASE("all_ideals equals the 2^n subset scan", "[ideal][oracle]") {
  std::vector<FiniteRing> rings;
  rings.push_back(make_zn(12));
  rings.push_back(make_zn(16));
  rings.push_back(make_zn(6));
  rings.push_back(make_poly_quotient(2, {0, 0, 1}));
  rings.push_back(make_poly_quotient(2, {1, 1, 1}));
  rings.push_back(make_product({make_zn(2), make_zn(2)}));
  rings.push_back(make_product({make_zn(2), make_zn(2), make_zn(2)}));
  for (const auto& ring : rings) {
    INFO(ring.name);
    CHECK(member_sets(all_ideals(ring)) == oracle::ideal_subsets_scan(ring));
  }
}

TEST_CASE("ideal arithmetic follows the lattice", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  Ideal four = ideal_generated(z12, {4});
  Ideal six = ideal_generated(z12, {6});
  CHECK(ideal_product(four, six).members == Bitset::of(12, {0}));
  CHECK(ideal_sum(four, six).members == Bitset::of(12, {0, 2, 4, 6, 8, 10}));
  Ideal whole = unit_ideal(z12);
  for (const Ideal& ideal : all_ideals(z12)) {
    CHECK(ideal_intersect(ideal, whole) == ideal);
  }

  FiniteRing z6 = make_zn(6);
  Ideal other = ideal_generated(z6, {2});
  CHECK_THROWS_AS(ideal_sum(four, other), invalid_parameter_error);
}

TEST_CASE("the lattice is closed under sum, product, intersection, colon", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  auto lattice = all_ideals(z12);
  auto sets = member_sets(lattice);
  auto in_lattice = [&](const Bitset& m) {
    return std::find(sets.begin(), sets.end(), m) != sets.end();
  };
  for (const Ideal& a : lattice) {
    for (const Ideal& b : lattice) {
      CHECK(in_lattice(ideal_sum(a, b).members));
      CHECK(in_lattice(ideal_product(a, b).members));
      CHECK(in_lattice(ideal_intersect(a, b).members));
    }
    for (int s = 0; s < z12.size; ++s) CHECK(in_lattice(colon(a, s).members));
  }
}

TEST_CASE("colon ideals", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  CHECK(colon(ideal_generated(z12, {6}), 3).members == Bitset::of(12, {0, 2, 4, 6, 8, 10}));
  for (const Ideal& ideal : all_ideals(z12)) {
    CHECK(colon(ideal, 1) == ideal);
  }
  CHECK(colon(zero_ideal(z12), 0).members == Bitset::full(12));
}

TEST_CASE("mult_closure closes under products and guards zero", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  CHECK(mult_closure(z12, {3}).members == Bitset::of(12, {1, 3, 9}));
  CHECK(mult_closure(z12, {}).members == Bitset::of(12, {1}));
  CHECK_THROWS_AS(mult_closure(z12, {6}), invalid_multset_error);
  CHECK_THROWS_AS(mult_closure(z12, {0}), invalid_multset_error);
  CHECK_THROWS_AS(mult_closure(z12, {-1}), invalid_parameter_error);
}

TEST_CASE("s_radical on the worked Z/12 space", "[ideal]") {
  FiniteRing z12 = make_zn(12);
  MultSet s = mult_closure(z12, {3});
  CHECK(s_radical(s, zero_ideal(z12)).members == Bitset::of(12, {0, 2, 4, 6, 8, 10}));
  CHECK(s_radical(s, ideal_generated(z12, {3})).members == Bitset::full(12));

  CHECK(is_s_radical_ideal(s, ideal_generated(z12, {2})));
  CHECK_FALSE(is_s_radical_ideal(s, zero_ideal(z12)));
  CHECK(is_s_radical_ideal(s, unit_ideal(z12)));
}

TEST_CASE("s_radical with S = {1} is the classical radical", "[ideal][oracle]") {
  for (int n : {4, 6, 8, 12, 16}) {
    FiniteRing ring = make_zn(n);
    MultSet trivial = mult_closure(ring, {});
    for (const Ideal& ideal : all_ideals(ring)) {
      INFO(ring.name << " ideal " << ideal.members.to_string());
      CHECK(s_radical(trivial, ideal).members ==
            oracle::classical_radical(ring, ideal.members));
    }
  }
}

TEST_CASE("s_radical is idempotent and monotone", "[ideal]") {
  struct Case {
    FiniteRing ring;
    std::vector<int> gens;
  };
  std::vector<Case> cases;
  cases.push_back({make_zn(12), {3}});
  cases.push_back({make_zn(6), {3}});
  cases.push_back({make_product({make_zn(2), make_zn(3)}), {3}});
  for (const auto& c : cases) {
    MultSet s = mult_closure(c.ring, c.gens);
    auto lattice = all_ideals(c.ring);
    for (const Ideal& a : lattice) {
      Ideal ra = s_radical(s, a);
      CHECK(s_radical(s, ra) == ra);
      for (const Ideal& b : lattice) {
        if (a.members.is_subset_of(b.members)) {
          CHECK(ra.members.is_subset_of(s_radical(s, b).members));
        }
      }
    }
  }
}
