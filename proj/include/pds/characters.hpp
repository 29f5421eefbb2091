#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pds/coloring.hpp"
#include "pds/orbit_tree.hpp"

namespace pds {

/// One nonzero value of a tree character: chi(node) = coefficient (+-|node|).
struct CharacterTerm {
  std::size_t node = 0;
  std::int64_t coefficient = 0;
};

/// The common value pattern on T_n of one dual-group multiplier orbit.
/// Stored sparsely; nodes outside `terms` evaluate to 0.
struct TreeCharacter {
  std::size_t owner = 0;
  std::vector<CharacterTerm> terms;  // sorted by node index

  std::int64_t value_at(std::size_t node) const;
};

/// An integer linear expression: constant + sum(coefficient * variable).
struct LinearValue {
  std::int64_t constant = 0;
  std::map<std::size_t, std::int64_t> terms;  // variable id -> coefficient (zeros dropped)

  bool is_constant() const { return terms.empty(); }
  std::int64_t evaluate(std::span<const std::uint8_t> assignment) const;
};

/// All |T_n| tree characters of one orbit tree, indexed by owner node.
class CharacterTable {
 public:
  explicit CharacterTable(const OrbitTree& tree);

  const OrbitTree& tree() const { return *tree_; }
  const TreeCharacter& operator[](std::size_t owner) const { return characters_[owner]; }
  std::size_t size() const { return characters_.size(); }
  std::span<const TreeCharacter> all() const { return characters_; }

 private:
  const OrbitTree* tree_;
  std::vector<TreeCharacter> characters_;
};

/// Builds chi_A directly. Characters of row-n owners come from the P+/P- path
/// shape; lower owners are derived from their first child's character.
TreeCharacter character_for(const OrbitTree& tree, NodeId owner);

/// chi(c) for a fully assigned coloring.
std::int64_t evaluate(const TreeCharacter& chi, const Coloring& c);

/// chi(q) for a coloring whose entries may be variables or complemented variables.
LinearValue evaluate(const TreeCharacter& chi, const SymbolicColoring& q);

/// Size of the dual-group orbit represented by chi_A: 1 for the root, 2^{row-1} otherwise.
std::int64_t eigenvalue_multiplicity(const OrbitTree& tree, NodeId owner);

}  // namespace pds
