#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pds/coloring.hpp"
#include "pds/orbit_tree.hpp"

namespace pds {

/// X = (x_0, ..., x_{n-1}) with x_0 in {0,1,2,3} and x_i in {0,1} for i > 0.
struct HomogeneousSpec {
  std::vector<int> x;

  bool operator==(const HomogeneousSpec&) const = default;
  std::string to_string() const;
};

/// S_X: the youngest x_0 children of the root are colored 1; each node N in
/// row i < n colors its youngest S_X(N) + x_i children 1.
Coloring canonical_homogeneous(const OrbitTree& tree, const HomogeneousSpec& spec);

/// S'_X: as S_X with "oldest" in place of "youngest".
Coloring anti_canonical_homogeneous(const OrbitTree& tree, const HomogeneousSpec& spec);

enum class LmType { kPlus, kMinus2, kMinus3 };

std::string to_string(LmType t);

struct LmProvenance {
  LmType type = LmType::kMinus2;
  HomogeneousSpec spec;
};

/// Rows 0, 1 and n of a coloring; rows 2..n-1 are unassigned.
struct LmPartialColoring {
  Coloring coloring;  // entries outside rows 0, 1, n are 0 and meaningless
  std::vector<LmProvenance> provenance;

  /// True for nodes in rows 0, 1 and n.
  bool is_fixed(const OrbitTree& tree, std::size_t node) const;
};

/// LM^+_X for x_0 in {0, 2}.
LmPartialColoring lm_plus(const OrbitTree& tree, const HomogeneousSpec& spec);

/// LM^-_X: type 2 for x_0 in {0, 2}, type 3 (complement construction) for x_0 in {1, 3}.
LmPartialColoring lm_minus(const OrbitTree& tree, const HomogeneousSpec& spec);

/// Every distinct LM partial coloring of T_n, deduplicated on rows 1 and n.
/// Type 2 specs come first, then type 3, each in lexicographic X order; type 1
/// colorings only add provenance. Throws std::logic_error unless the count is
/// 2^{n+1} - 1.
std::vector<LmPartialColoring> lm_partial_colorings(const OrbitTree& tree);

/// All specs with x_0 drawn from `first_values`, in lexicographic order.
std::vector<HomogeneousSpec> homogeneous_specs(int n, std::initializer_list<int> first_values);

}  // namespace pds
