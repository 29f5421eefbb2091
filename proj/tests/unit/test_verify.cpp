#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "../support.hpp"
#include "pds/canonical.hpp"
#include "pds/search.hpp"
#include "pds/verify.hpp"

using namespace pds;

namespace {

std::set<oracle::Element> as_set(const OrbitTree& t, const Coloring& c) {
  std::set<oracle::Element> s;
  for (const GroupElement& g : to_group_subset(t, c)) s.insert({g.a, g.b});
  return s;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("eigenvalue profiles") {
    const OrbitTree t3 = OrbitTree::build(3);
    const CharacterTable c3(t3);
    const auto zero = eigenvalue_profile(c3, Coloring(t3.size()));
    CHECK(zero.trivial == 0);
    CHECK(zero.nontrivial == std::map<std::int64_t, std::int64_t>{{0, 63}});

    const auto p = eigenvalue_profile(c3, decode(3, "0;110;110010;101010101011"));
    CHECK(p.trivial == 36);
    CHECK(p.nontrivial == std::map<std::int64_t, std::int64_t>{{-4, 36}, {4, 27}});

    const OrbitTree t2 = OrbitTree::build(2);
    const CharacterTable c2(t2);
    const auto q = eigenvalue_profile(c2, decode(2, "0;000;101010"));
    CHECK(q.trivial == 6);
    CHECK(q.nontrivial == std::map<std::int64_t, std::int64_t>{{-2, 9}, {2, 6}});
  }

  TEST_CASE("records of known sets") {
    const OrbitTree t = OrbitTree::build(3);
    const CharacterTable chars(t);
    const auto rec = is_pds_by_eigenvalues(chars, decode(3, "0;110;110010;101010101011"));
    REQUIRE(rec);
    CHECK(rec->k == 36);
    CHECK(rec->r == 4);
    CHECK(rec->s == -4);
    CHECK(rec->mu == 20);
    CHECK(rec->lambda == 20);

    Coloring all(t.size());
    for (std::size_t i = 1; i < t.size(); ++i) all[i] = 1;
    CHECK_FALSE(is_pds_by_eigenvalues(chars, all));
    CHECK_FALSE(is_pds_by_eigenvalues(chars, Coloring(t.size())));
    CHECK_FALSE(is_pds_by_definition(3, {}));

    const OrbitTree t2 = OrbitTree::build(2);
    const CharacterTable c2(t2);
    const auto b = is_pds_by_eigenvalues(c2, decode(2, "0;110;101011"));
    REQUIRE(b);
    CHECK(b->k == 10);
  }

  TEST_CASE("definition check agrees with the map-based oracle") {
    for (int n = 2; n <= 3; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      const CharacterTable chars(t);
      for (const auto& rec : testing::golden_records(chars)) {
        const auto def = is_pds_by_definition(n, to_group_subset(t, rec.coloring));
        const auto ref = oracle::naive_pds(t.modulus(), as_set(t, rec.coloring));
        REQUIRE(def);
        REQUIRE(ref);
        CHECK(def->k == ref->k);
        CHECK(def->lambda == ref->lambda);
        CHECK(def->mu == ref->mu);
        CHECK(rec.lambda == ref->lambda);
        CHECK(rec.mu == ref->mu);
      }
    }
  }

  TEST_CASE("exhaustive membership at depth two") {
    const OrbitTree t = OrbitTree::build(2);
    const CharacterTable chars(t);
    int even = 0;
    for (std::uint32_t s = 1; s < 512; ++s) {
      Coloring c(t.size());
      for (std::size_t i = 1; i < t.size(); ++i) c[i] = (s >> (i - 1)) & 1;
      const bool by_eig = is_pds_by_eigenvalues(chars, c).has_value();
      const bool by_def = oracle::naive_pds(t.modulus(), as_set(t, c)).has_value();
      CHECK(by_eig == by_def);
      if (by_eig && subset_size(t, c) % 2 == 0) ++even;
    }
    CHECK(even == 32);
  }

  TEST_CASE("classification") {
    auto tag_of = [](int n, std::int64_t k) {
      PdsRecord r;
      r.n = n;
      r.k = k;
      return classify(r);
    };
    CHECK(tag_of(3, 28) == PdsClass::kRhpdsA);
    CHECK(tag_of(3, 42) == PdsClass::kPcp3Complement);
    CHECK(tag_of(3, 14) == PdsClass::kPcp2);
    CHECK(tag_of(3, 36) == PdsClass::kRhpdsB);
    CHECK(tag_of(4, 90) == PdsClass::kSporadic);
    CHECK(parse_pds_class("RHPDS_B") == PdsClass::kRhpdsB);
    CHECK_FALSE(parse_pds_class("nope"));
    for (PdsClass c : {PdsClass::kPcp2, PdsClass::kPcp3Complement, PdsClass::kRhpdsA, PdsClass::kRhpdsB,
                       PdsClass::kSporadic}) {
      CHECK(parse_pds_class(to_string(c)) == c);
    }
  }

  TEST_CASE("Latin square signs") {
    const OrbitTree t = OrbitTree::build(3);
    const CharacterTable chars(t);
    // PCP(2): k = 2(m - 1), eigenvalues m - 2 and -2.
    const auto pcp = is_pds_by_eigenvalues(chars, decode(3, "0;110;101000;100010000000"));
    REQUIRE(pcp);
    CHECK(latin_sign(*pcp) == LatinSign::kPositive);
  }

  TEST_CASE("complements") {
    for (int n = 2; n <= 4; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      const CharacterTable chars(t);
      Coloring all(t.size());
      for (std::size_t i = 1; i < t.size(); ++i) all[i] = 1;
      CHECK(complement(t, Coloring(t.size())) == all);
      for (const auto& rec : testing::golden_records(chars)) {
        const Coloring c = complement(t, rec.coloring);
        CHECK(complement(t, c) == rec.coloring);
        const auto rc = is_pds_by_eigenvalues(chars, c);
        REQUIRE(rc);
        CHECK(rc->k == (std::int64_t{1} << (2 * n)) - 1 - rec.k);
        CHECK(rc->k % 2 == 1);
        if (n <= 3) CHECK(oracle::naive_pds(t.modulus(), as_set(t, c)).has_value());
      }
    }
  }

  TEST_CASE("brute force agrees with the search") {
    for (int n = 2; n <= 3; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      const CharacterTable chars(t);
      const auto brute = brute_force_pds(chars);
      const auto found = enumerate_all(chars).records;
      REQUIRE(brute.size() == found.size());
      std::set<Coloring> a, b;
      for (const auto& r : brute) a.insert(r.coloring);
      for (const auto& r : found) b.insert(r.coloring);
      CHECK(a == b);
      CHECK(brute_force_pds(chars, false).size() == 2 * brute.size());
    }
    const OrbitTree t = OrbitTree::build(3);
    const CharacterTable chars(t);
    CHECK(brute_force_pds(chars).size() == 8);
    CHECK_THROWS_AS(brute_force_pds(CharacterTable(OrbitTree::build(4))), std::invalid_argument);
  }
}
