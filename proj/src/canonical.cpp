#include "pds/canonical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pds {

namespace {

using Levels = std::vector<std::vector<std::uint8_t>>;

std::vector<std::uint8_t> flatten(const Levels& levels) {
  std::vector<std::uint8_t> out;
  for (const auto& l : levels) out.insert(out.end(), l.begin(), l.end());
  return out;
}

// Canonical colored form of the subtree at `node`, level by level, together
// with the number of automorphisms of that subtree fixing the coloring.
struct SubtreeForm {
  Levels levels;
  BigInt automorphisms = 1;
};

SubtreeForm canonical_form(const OrbitTree& tree, const Coloring& c, std::size_t node) {
  SubtreeForm form;
  form.levels.push_back({c[node]});
  auto kids = tree.children(node);
  if (kids.empty()) return form;

  std::vector<SubtreeForm> child_forms;
  child_forms.reserve(kids.size());
  for (std::size_t k : kids) child_forms.push_back(canonical_form(tree, c, k));
  std::vector<std::vector<std::uint8_t>> keys;
  for (const auto& f : child_forms) keys.push_back(flatten(f.levels));

  std::vector<std::size_t> order(kids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });

  for (const auto& f : child_forms) form.automorphisms *= f.automorphisms;
  // Count permutations of the children that preserve colored-subtree classes.
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && keys[order[j]] == keys[order[i]]) ++j;
    for (std::size_t f = 2; f <= j - i; ++f) form.automorphisms *= f;
    i = j;
  }

  const std::size_t depth = child_forms[0].levels.size();
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::uint8_t> level;
    for (std::size_t k : order) {
      const auto& part = child_forms[k].levels[d];
      level.insert(level.end(), part.begin(), part.end());
    }
    form.levels.push_back(std::move(level));
  }
  return form;
}

}  // namespace

std::size_t subtree_position(const OrbitTree& tree, std::size_t m, std::size_t pos) {
  const NodeId id = tree.id(m);
  if (id.row == 0) throw std::invalid_argument("subtree_position: L(N) is only used below the root");
  // Level d of the subtree holds positions [2^d, 2^{d+1} - 1].
  int d = 0;
  while ((std::size_t{2} << d) <= pos) ++d;
  const std::size_t offset = pos - (std::size_t{1} << d);
  const NodeId target{id.row + d, static_cast<int>((static_cast<std::size_t>(id.col) << d) + offset)};
  return tree.index(target);
}

std::vector<std::size_t> younger_siblings(const OrbitTree& tree, std::size_t node) {
  std::vector<std::size_t> out;
  const std::ptrdiff_t p = tree.parent(node);
  if (p < 0) return out;
  for (std::size_t s : tree.children(static_cast<std::size_t>(p))) {
    if (s < node) out.push_back(s);
  }
  return out;
}

bool is_canonical_truncated(const OrbitTree& tree, const Coloring& c, int depth) {
  for (std::size_t i = 0; i < row_offset(depth + 1); ++i) {
    if (c[i] > 1) return false;
  }
  if (depth <= 0) return true;
  if (depth == 1) {
    for (std::size_t j = 2; j <= 3; ++j) {
      if (c[j] == 1 && c[j - 1] == 0) return false;
    }
    return true;
  }
  if (!is_canonical_truncated(tree, c, depth - 1)) return false;

  for (std::size_t jn = 0; jn < row_width(depth); ++jn) {
    const std::size_t node = row_offset(depth) + jn;
    // Walk M over P_-(N): N itself, then ancestors down to row 1.
    std::size_t m = node;
    while (tree.id(m).row >= 1) {
      const int rows_below = depth - tree.id(m).row;
      const std::size_t first_in_row = static_cast<std::size_t>(tree.id(m).col) << rows_below;
      // Position of N in L(M) (1-based).
      const std::size_t j = ((std::size_t{1} << rows_below) - 1) +
                            (static_cast<std::size_t>(tree.id(node).col) - first_in_row) + 1;
      for (std::size_t young : younger_siblings(tree, m)) {
        if (j == 1) {
          if (c[node] > c[young]) return false;
          continue;
        }
        bool prefix_equal = true;
        for (std::size_t l = 1; l < j && prefix_equal; ++l) {
          prefix_equal = c[subtree_position(tree, m, l)] == c[subtree_position(tree, young, l)];
        }
        if (prefix_equal && c[node] > c[subtree_position(tree, young, j)]) return false;
      }
      m = static_cast<std::size_t>(tree.parent(m));
    }
  }
  return true;
}

bool is_canonical(const OrbitTree& tree, const Coloring& c) {
  if (c.size() != tree.size()) return false;
  return is_canonical_truncated(tree, c, tree.depth());
}

bool canonicity_violated(const OrbitTree& tree, const SymbolicColoring& q) {
  // Regrouped by the pair (M, younger sibling): each position of L(M) in
  // turn, as long as the prefix before it is symbolically equal.
  for (std::size_t m = 1; m < tree.size(); ++m) {
    const std::size_t subtree = (std::size_t{2} << (tree.depth() - tree.id(m).row)) - 1;
    for (std::size_t young : younger_siblings(tree, m)) {
      for (std::size_t pos = 1; pos <= subtree; ++pos) {
        const SymbolicValue& older = q[subtree_position(tree, m, pos)];
        const SymbolicValue& younger = q[subtree_position(tree, young, pos)];
        if (older.is_constant() && younger.is_constant() && older.value > younger.value) return true;
        if (!(older == younger)) break;
      }
    }
  }
  return false;
}

BigInt tree_aut_order(int n) {
  if (n < 1) throw std::invalid_argument("tree_aut_order requires n >= 1");
  const unsigned exponent = 3u * ((1u << (n - 1)) - 1u) + 1u;
  return BigInt(3) << exponent;
}

BigInt group_aut_order(int n) {
  if (n < 2) throw std::invalid_argument("group_aut_order requires n >= 2");
  return BigInt(3) << (4 * n - 3);
}

BigInt induced_tree_action_order(int n) {
  if (n < 2) throw std::invalid_argument("induced_tree_action_order requires n >= 2");
  return BigInt(3) << (3 * n - 2);
}

BigInt stabilizer_order(const OrbitTree& tree, const Coloring& c) {
  return canonical_form(tree, c, 0).automorphisms;
}

BigInt orbit_size(const OrbitTree& tree, const Coloring& c) {
  return tree_aut_order(tree.depth()) / stabilizer_order(tree, c);
}

Coloring canonicalize(const OrbitTree& tree, const Coloring& c) {
  return Coloring(flatten(canonical_form(tree, c, 0).levels));
}

}  // namespace pds
