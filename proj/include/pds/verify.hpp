#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pds/characters.hpp"
#include "pds/coloring.hpp"
#include "pds/orbit_tree.hpp"

namespace pds {

enum class PdsClass { kPcp2, kPcp3Complement, kRhpdsA, kRhpdsB, kSporadic };

/// Sign of the Latin square parameter family a PDS belongs to.
enum class LatinSign { kPositive, kNegative, kNeither };

std::string_view to_string(PdsClass c);
std::optional<PdsClass> parse_pds_class(std::string_view s);

/// A verified regular nontrivial PDS, with s = r - 2^n.
struct PdsRecord {
  int n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t mult_r = 0;
  std::int64_t s = 0;
  std::int64_t mult_s = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  PdsClass class_tag = PdsClass::kSporadic;
  Coloring coloring;
};

/// Character values of a subset: the trivial eigenvalue k and the nontrivial
/// values with their multiplicities (summing to 2^{2n} - 1).
struct EigenvalueProfile {
  std::int64_t trivial = 0;
  std::map<std::int64_t, std::int64_t> nontrivial;

  /// All (eigenvalue, multiplicity) pairs, the trivial one merged in.
  std::map<std::int64_t, std::int64_t> combined() const;
};

EigenvalueProfile eigenvalue_profile(const CharacterTable& chars, const Coloring& c);

/// A record iff the coloring has exactly three eigenvalues k, r > 0 > s with
/// s = r - 2^n and k = r = s (mod 2^n); lambda and mu come from the SRG quadratic.
std::optional<PdsRecord> is_pds_by_eigenvalues(const CharacterTable& chars, const Coloring& c);

struct DifferenceParameters {
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  bool operator==(const DifferenceParameters&) const = default;
};

/// Direct check of the difference-multiset definition in G_n, requiring
/// 0 < mu < k. Elements must be distinct and exclude the identity.
std::optional<DifferenceParameters> is_pds_by_definition(int n, std::span<const GroupElement> set);

/// The group elements covered by a coloring.
std::vector<GroupElement> to_group_subset(const OrbitTree& tree, const Coloring& c);

/// S^c: flips every non-root node.
Coloring complement(const OrbitTree& tree, const Coloring& c);

PdsClass classify(const PdsRecord& record);

/// Exhaustive oracle for n <= 3: every root-zero node-union subset is tested
/// against the definition; survivors are canonicalized and deduplicated.
/// Returns records sorted by (k, coloring). Throws std::invalid_argument for n > 3.
std::vector<PdsRecord> brute_force_pds(const CharacterTable& chars, bool even_only = true);
LatinSign latin_sign(const PdsRecord& record);

}  // namespace pds
