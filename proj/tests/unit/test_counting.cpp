#include <doctest.h>

#include <set>
#include <sstream>

#include "../oracles.hpp"
#include "../support.hpp"
#include "pds/counting.hpp"

using namespace pds;

namespace {

struct Golden {
  OrbitTree tree;
  CharacterTable chars;
  std::vector<PdsRecord> records;
  explicit Golden(int n) : tree(OrbitTree::build(n)), chars(tree), records(testing::golden_records(chars)) {}
};

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("totals") {
    const std::vector<std::string> expect{"32", "1392", "709312", "82678125312"};
    for (int n = 2; n <= 5; ++n) {
      const Golden g(n);
      CHECK(total_pds_count(g.tree, g.records).str() == expect[static_cast<std::size_t>(n - 2)]);
    }
  }

  TEST_CASE("per-size totals") {
    const Golden g3(3), g4(4), g5(5);
    CHECK(total_by_k(g3.tree, g3.records).at(14) == 48);
    CHECK(total_by_k(g4.tree, g4.records).at(120) == 278528);
    CHECK(total_by_k(g4.tree, g4.records).at(136) == 245760);
    CHECK(total_by_k(g4.tree, g4.records).at(90) == 81920);
    CHECK(total_by_k(g5.tree, g5.records).at(496) == BigInt("35433480192"));
    CHECK(total_by_k(g5.tree, g5.records).at(528) == BigInt("33285996544"));
    CHECK(g4.records.size() == 13);
  }

  TEST_CASE("conjectured closed forms") {
    for (int n = 2; n <= 5; ++n) {
      const Golden g(n);
      const auto check = rhpds_conjecture_check(n, total_by_k(g.tree, g.records));
      CHECK(check.holds());
      CHECK(check.type_a_expected == (BigInt(1) << ((1 << n) - 2)) * ((1 << n) + 1));
    }
    const Golden g2(2);
    CHECK(rhpds_conjecture_check(2, total_by_k(g2.tree, g2.records)).type_a_total == 20);
    CHECK_FALSE(rhpds_conjecture_check(2, {}).holds());
  }

  TEST_CASE("percentages") {
    CHECK(percentage_4sig(20, 32) == "62.50");
    CHECK(percentage_4sig(12, 32) == "37.50");
    CHECK(percentage_4sig(1, 3) == "33.33");
    CHECK(percentage_4sig(1, 1) == "100.0");
    CHECK(percentage_4sig(0, 7) == "0");
    CHECK(percentage_4sig(1, 7) == "14.29");
    CHECK(percentage_4sig(1, 100000) == "0.001000");
    CHECK(percentage_4sig(9999, 10000) == "99.99");
    CHECK(percentage_4sig(99999, 100000) == "100.0");
    CHECK(percentage_4sig(BigInt(1), BigInt("100000000000")) == "1.000e-9");
    CHECK_THROWS(percentage_4sig(1, 0));
  }

  TEST_CASE("summary table") {
    const Golden g(2);
    std::ostringstream os;
    write_summary_csv(os, g.tree, g.records);
    CHECK(os.str() == "n,k,type,canonical,total,percent\n2,6,PCP2,2,20,62.50\n2,10,RHPDS_B,1,12,37.50\n");
  }

  TEST_CASE("automorphism generators") {
    CHECK(generated_group_order(2) == 96);
    CHECK(generated_group_order(3) == 1536);
    CHECK(generated_group_order(4) == 24576);
  }

  TEST_CASE("group classes at depth two") {
    const Golden g(2);
    CHECK(group_inequivalent_count(g.tree, g.records) == 3);
    CHECK_THROWS_AS(group_inequivalent_count(OrbitTree::build(5), {}), std::invalid_argument);
  }

  // Subsets as 64-bit element masks, orbits under every invertible matrix mod 8.
  // No tree or generator machinery is involved.
  TEST_CASE("group classes at depth three against a matrix-orbit oracle") {
    const Golden g(3);
    const std::uint32_t m = 8;
    const auto auts = oracle::tree_automorphisms(testing::child_lists(g.tree));
    std::set<std::uint64_t> family;
    for (const auto& rec : g.records) {
      for (const auto& p : auts) {
        std::uint64_t mask = 0;
        for (const GroupElement& e : to_group_subset(g.tree, testing::permute(rec.coloring, p))) {
          mask |= std::uint64_t{1} << (e.a * m + e.b);
        }
        family.insert(mask);
      }
    }
    REQUIRE(family.size() == 1392);

    std::set<std::uint64_t> seen;
    std::size_t classes = 0;
    for (std::uint64_t s : family) {
      if (seen.count(s)) continue;
      ++classes;
      for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b)
          for (std::uint32_t c = 0; c < m; ++c)
            for (std::uint32_t d = 0; d < m; ++d) {
              if ((a * d + b * c) % 2 == 0) continue;
              std::uint64_t img = 0;
              for (std::uint32_t x = 0; x < 64; ++x) {
                if (!((s >> x) & 1)) continue;
                const std::uint32_t u = x / m, v = x % m;
                img |= std::uint64_t{1} << (((a * u + b * v) % m) * m + (c * u + d * v) % m);
              }
              seen.insert(img);
            }
    }
    CHECK(classes == 11);
    CHECK(group_inequivalent_count(g.tree, g.records) == classes);
  }
}
