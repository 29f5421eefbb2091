#include "pds/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace pds {

namespace {

TreeCharacter top_level_character(const OrbitTree& tree, std::size_t owner) {
  TreeCharacter chi;
  chi.owner = owner;
  std::vector<std::int64_t> values(tree.size(), 0);
  std::vector<std::uint8_t> on_path(tree.size(), 0);
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(owner); i >= 0; i = tree.parent(static_cast<std::size_t>(i))) {
    on_path[static_cast<std::size_t>(i)] = 1;
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!on_path[i]) continue;
    values[i] = tree.weight(i);
    for (std::size_t c : tree.children(i)) {
      if (!on_path[c]) values[c] = -tree.weight(c);
    }
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (values[i] != 0) chi.terms.push_back({i, values[i]});
  }
  return chi;
}

// chi_A from the character of a child of A (the squaring rule).
TreeCharacter square_character(const OrbitTree& tree, std::size_t owner, const TreeCharacter& child) {
  std::vector<std::int64_t> values(tree.size(), 0);
  for (const CharacterTerm& t : child.terms) values[t.node] = tree.weight(t.node);
  for (const CharacterTerm& t : child.terms) {
    if (t.coefficient >= 0) continue;
    for (std::size_t c : tree.children(t.node)) {
      if (values[c] != 0) {
        throw std::logic_error("tree character squaring rule assigns two values to one node");
      }
      values[c] = -tree.weight(c);
    }
  }
  TreeCharacter chi;
  chi.owner = owner;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (values[i] != 0) chi.terms.push_back({i, values[i]});
  }
  return chi;
}

}  // namespace

std::int64_t TreeCharacter::value_at(std::size_t node) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), node,
                             [](const CharacterTerm& t, std::size_t n) { return t.node < n; });
  return (it != terms.end() && it->node == node) ? it->coefficient : 0;
}

std::int64_t LinearValue::evaluate(std::span<const std::uint8_t> assignment) const {
  std::int64_t v = constant;
  for (const auto& [var, coeff] : terms) v += coeff * assignment[var];
  return v;
}

CharacterTable::CharacterTable(const OrbitTree& tree) : tree_(&tree), characters_(tree.size()) {
  const int n = tree.depth();
  for (int row = n; row >= 0; --row) {
    for (std::size_t j = 0; j < row_width(row); ++j) {
      const std::size_t owner = row_offset(row) + j;
      if (row == n) {
        characters_[owner] = top_level_character(tree, owner);
      } else {
        characters_[owner] = square_character(tree, owner, characters_[tree.children(owner)[0]]);
      }
    }
  }
}

TreeCharacter character_for(const OrbitTree& tree, NodeId owner) {
  std::size_t index = tree.index(owner);
  std::vector<std::size_t> chain{index};
  while (tree.id(chain.back()).row < tree.depth()) chain.push_back(tree.children(chain.back())[0]);
  TreeCharacter chi = top_level_character(tree, chain.back());
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) chi = square_character(tree, *it, chi);
  return chi;
}

std::int64_t evaluate(const TreeCharacter& chi, const Coloring& c) {
  std::int64_t v = 0;
  for (const CharacterTerm& t : chi.terms) v += t.coefficient * c[t.node];
  return v;
}

LinearValue evaluate(const TreeCharacter& chi, const SymbolicColoring& q) {
  LinearValue out;
  for (const CharacterTerm& t : chi.terms) {
    const SymbolicValue& v = q[t.node];
    if (v.is_constant()) {
      out.constant += t.coefficient * v.value;
    } else if (v.value) {
      out.constant += t.coefficient;
      out.terms[static_cast<std::size_t>(v.variable)] -= t.coefficient;
    } else {
      out.terms[static_cast<std::size_t>(v.variable)] += t.coefficient;
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t eigenvalue_multiplicity(const OrbitTree& tree, NodeId owner) {
  return tree.weight(tree.index(owner));
}

}  // namespace pds
