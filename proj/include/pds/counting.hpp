#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pds/canonical.hpp"
#include "pds/verify.hpp"

namespace pds {

/// Sum over records of |Aut(T_n)| / |Stab(record)|: the number of subsets of
/// G_n that are PDS of the listed kinds.
BigInt total_pds_count(const OrbitTree& tree, const std::vector<PdsRecord>& records);

/// Per-k orbit-size sums.
std::map<std::int64_t, BigInt> total_by_k(const OrbitTree& tree, const std::vector<PdsRecord>& records);

/// 100 * part / whole rounded to 4 significant figures, in plain or
/// scientific notation ("41.38", "0.02707", "9.289e-07").
std::string percentage_4sig(const BigInt& part, const BigInt& whole);

struct ConjectureCheck {
  BigInt type_a_total;
  BigInt type_b_total;
  BigInt type_a_expected;  // 2^{2^n - 2} (2^n + 1)
  BigInt type_b_expected;  // 2^{2^n - 2} (2^n - 1)
  bool holds() const { return type_a_total == type_a_expected && type_b_total == type_b_expected; }
};

/// Compares the totals at k = 2^{2n-1} - 2^{n-1} and 2^{2n-1} + 2^{n-1} with
/// the conjectured closed forms.
ConjectureCheck rhpds_conjecture_check(int n, const std::map<std::int64_t, BigInt>& totals);

/// A 2x2 matrix over Z/2^n acting on column vectors (a, b).
using Matrix2 = std::array<std::uint32_t, 4>;

/// Generators of Aut(G_n) = GL_2(Z/2^n): two elementary matrices and
/// diag(-1, 1), diag(3, 1), diag(5, 1).
std::vector<Matrix2> automorphism_generators(int n);

/// Order of the group generated by automorphism_generators(n), by closure.
std::size_t generated_group_order(int n);

/// Number of Aut(G_n)-classes among all subsets in the tree-automorphism
/// orbits of the records. Throws std::invalid_argument for n > 4.
std::size_t group_inequivalent_count(const OrbitTree& tree, const std::vector<PdsRecord>& records);

/// Table rows "n,k,type,canonical,total,percent" for one complete record list.
void write_summary_csv(std::ostream& out, const OrbitTree& tree, const std::vector<PdsRecord>& records,
                       bool header = true);

}  // namespace pds
