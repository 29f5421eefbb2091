#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "../support.hpp"
#include "pds/canonical.hpp"
#include "pds/lm_seeds.hpp"

using namespace pds;

namespace {

// Node permutation induced by x -> M x on representatives.
std::vector<std::size_t> induced(const OrbitTree& t, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                                 std::uint32_t d) {
  const std::uint32_t m = t.modulus();
  std::vector<std::size_t> p(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const GroupElement x = t.representative(i);
    p[i] = t.index_of_element({(a * x.a + b * x.b) % m, (c * x.a + d * x.b) % m});
  }
  return p;
}

struct OrbitFacts {
  std::set<Coloring> orbit;
  std::size_t fixing = 0;
};

OrbitFacts orbit_of(const Coloring& c, const std::vector<std::vector<std::size_t>>& auts) {
  OrbitFacts f;
  for (const auto& p : auts) {
    Coloring img = testing::permute(c, p);
    if (img == c) ++f.fixing;
    f.orbit.insert(std::move(img));
  }
  return f;
}

void check_orbit(const OrbitTree& t, const Coloring& c, const std::vector<std::vector<std::size_t>>& auts) {
  const OrbitFacts f = orbit_of(c, auts);
  const Coloring canon = canonicalize(t, c);
  int canonical_members = 0;
  for (const Coloring& x : f.orbit) {
    if (is_canonical(t, x)) {
      ++canonical_members;
      CHECK(x == canon);
    }
  }
  CHECK(canonical_members == 1);
  CHECK(f.orbit.count(canon) == 1);
  CHECK(stabilizer_order(t, c) == BigInt(f.fixing));
  CHECK(orbit_size(t, c) == BigInt(f.orbit.size()));
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("group orders") {
    const auto a2 = oracle::tree_automorphisms(testing::child_lists(OrbitTree::build(2)));
    const auto a3 = oracle::tree_automorphisms(testing::child_lists(OrbitTree::build(3)));
    CHECK(a2.size() == 48);
    CHECK(a3.size() == 3072);
    CHECK(tree_aut_order(2) == 48);
    CHECK(tree_aut_order(3) == 3072);
    CHECK(tree_aut_order(4) == BigInt(3) * (BigInt(1) << 22));
    CHECK(group_aut_order(2) == 96);
    CHECK(group_aut_order(4) == 24576);
  }

  TEST_CASE("matrix group counts and the induced tree action") {
    for (int n = 2; n <= 3; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      const std::uint32_t m = t.modulus();
      std::size_t invertible = 0;
      std::set<std::vector<std::size_t>> perms;
      for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b)
          for (std::uint32_t c = 0; c < m; ++c)
            for (std::uint32_t d = 0; d < m; ++d) {
              if ((a * d + b * c) % 2 == 0) continue;
              ++invertible;
              perms.insert(induced(t, a, b, c, d));
            }
      CHECK(BigInt(invertible) == group_aut_order(n));
      CHECK(BigInt(perms.size()) == induced_tree_action_order(n));
    }
    CHECK(induced_tree_action_order(3) == 384);
  }

  TEST_CASE("exhaustive orbit structure for n = 2") {
    const OrbitTree t = OrbitTree::build(2);
    const auto auts = oracle::tree_automorphisms(testing::child_lists(t));
    std::set<Coloring> canonical;
    for (std::uint32_t s = 0; s < 512; ++s) {
      Coloring c(t.size());
      for (std::size_t i = 1; i < t.size(); ++i) c[i] = (s >> (i - 1)) & 1;
      check_orbit(t, c, auts);
      canonical.insert(canonicalize(t, c));
    }
    std::size_t flagged = 0;
    for (std::uint32_t s = 0; s < 512; ++s) {
      Coloring c(t.size());
      for (std::size_t i = 1; i < t.size(); ++i) c[i] = (s >> (i - 1)) & 1;
      if (is_canonical(t, c)) ++flagged;
    }
    CHECK(flagged == canonical.size());
  }

  TEST_CASE("sampled orbit structure for n = 3") {
    const OrbitTree t = OrbitTree::build(3);
    const auto auts = oracle::tree_automorphisms(testing::child_lists(t));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      Coloring c(t.size());
      // Low densities exercise ties between sibling subtrees.
      const int density = 1 + trial % 7;
      for (std::size_t i = 1; i < t.size(); ++i) c[i] = (rng() % 8) < static_cast<unsigned>(density);
      check_orbit(t, c, auts);
    }
  }

  TEST_CASE("worked result is canonical and its orbit canonicalizes back") {
    const OrbitTree t = OrbitTree::build(3);
    const Coloring c = decode(3, "0;110;110010;101010101011");
    CHECK(is_canonical(t, c));
    CHECK(canonicalize(t, c) == c);
    const auto auts = oracle::tree_automorphisms(testing::child_lists(t));
    for (const Coloring& x : orbit_of(c, auts).orbit) CHECK(canonicalize(t, x) == c);

    // Swap the subtrees under (1,0) and (1,2).
    std::vector<std::size_t> p(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) p[i] = i;
    const auto l0 = t.subtree_order(t.index({1, 0}));
    const auto l2 = t.subtree_order(t.index({1, 2}));
    for (std::size_t i = 0; i < l0.size(); ++i) {
      p[l0[i]] = l2[i];
      p[l2[i]] = l0[i];
    }
    CHECK_FALSE(is_canonical(t, testing::permute(c, p)));
  }

  TEST_CASE("stabilizers and orbit sizes") {
    for (int n = 2; n <= 6; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      const Coloring zero(t.size());
      CHECK(stabilizer_order(t, zero) == tree_aut_order(n));
      CHECK(orbit_size(t, zero) == 1);
    }
    const OrbitTree t = OrbitTree::build(2);
    const Coloring b = decode(2, "0;110;101011");
    CHECK(orbit_size(t, b) == 12);
    CHECK(stabilizer_order(t, b) == 4);
    BigInt k6 = 0;
    const CharacterTable chars(t);
    for (const auto& rec : testing::golden_records(chars)) {
      if (rec.k == 6) k6 += orbit_size(t, rec.coloring);
    }
    CHECK(k6 == 20);
    CHECK(orbit_size(t, decode(2, "0;000;101010")) < 20);
  }

  TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 6; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      for (int trial = 0; trial < 200; ++trial) {
        Coloring c(t.size());
        for (std::size_t i = 1; i < t.size(); ++i) c[i] = rng() & 1;
        const Coloring k = canonicalize(t, c);
        CHECK(is_canonical(t, k));
        CHECK(canonicalize(t, k) == k);
        CHECK(orbit_size(t, k) == orbit_size(t, c));
      }
    }
  }

  TEST_CASE("homogeneous sets are canonical") {
    for (int n = 2; n <= 6; ++n) {
      const OrbitTree t = OrbitTree::build(n);
      for (const auto& spec : homogeneous_specs(n, {0, 1, 2, 3})) CHECK(is_canonical(t, canonical_homogeneous(t, spec)));
    }
  }

  TEST_CASE("symbolic canonicity violations") {
    const OrbitTree t = OrbitTree::build(2);
    auto constants = [&](const std::string& s) {
      const Coloring c = decode(2, s);
      SymbolicColoring q(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) q[i] = SymbolicValue::constant(c[i]);
      return q;
    };
    // Younger level-one subtree smaller than its older sibling.
    CHECK(canonicity_violated(t, constants("0;010;000000")));
    CHECK_FALSE(canonicity_violated(t, constants("0;110;101011")));

    // Prefix gate decided on equal expressions: [0, x, 0] < [0, x, 1] for every x.
    SymbolicColoring q = constants("0;000;000100");
    q[t.index({2, 0})] = SymbolicValue::var(0);
    q[t.index({2, 2})] = SymbolicValue::var(0);
    CHECK(canonicity_violated(t, q));

    // Distinct variables leave the comparison open.
    q[t.index({2, 2})] = SymbolicValue::var(1);
    CHECK_FALSE(canonicity_violated(t, q));
  }
}
