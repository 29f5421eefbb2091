#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pds {

/// An element (a/2^n, b/2^n) of G_n = C_{2^n} x C_{2^n}, stored as numerators.
struct GroupElement {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  auto operator<=>(const GroupElement&) const = default;
};

/// Position of a node in the orbit tree: row (level) and column.
struct NodeId {
  int row = 0;
  int col = 0;

  auto operator<=>(const NodeId&) const = default;
};

/// Number of nodes in row `row` of an orbit tree.
constexpr std::size_t row_width(int row) {
  return row == 0 ? 1 : std::size_t{3} << (row - 1);
}

/// 0-based offset of the first node of `row` in row-major order.
constexpr std::size_t row_offset(int row) {
  return row == 0 ? 0 : (std::size_t{3} << (row - 1)) - 2;
}

/// Total node count of T_n: 3 * 2^n - 2.
constexpr std::size_t tree_size(int n) { return row_offset(n + 1); }

/// The orbit tree T_n: multiplier orbits of G_n, parented by the doubling map.
///
/// Nodes are addressed either by NodeId or by their 0-based row-major index;
/// the index order is the linear order used for serialization, variables and
/// characters throughout the library. The tree is immutable once built.
class OrbitTree {
 public:
  /// Builds T_n. n = 0 and n = 1 are accepted for the small recursion bases.
  /// Throws std::invalid_argument for n < 0 or n > 11.
  static OrbitTree build(int n);

  int depth() const { return n_; }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return ids_.size(); }
  std::size_t group_order() const { return std::size_t{modulus_} * modulus_; }

  std::size_t index(NodeId id) const;
  NodeId id(std::size_t index) const { return ids_[index]; }
  bool contains(NodeId id) const;

  /// 1-based position in row-major order (root is 1).
  std::size_t linear_index(NodeId id) const { return index(id) + 1; }

  std::span<const GroupElement> elements(std::size_t index) const;
  std::span<const GroupElement> elements(NodeId id) const { return elements(index(id)); }
  GroupElement representative(std::size_t index) const { return representative_[index]; }

  /// Parent index, or -1 for the root.
  std::ptrdiff_t parent(std::size_t index) const { return parent_[index]; }
  std::span<const std::size_t> children(std::size_t index) const;

  /// Weight |M| of a node: 1 for rows 0 and 1, 2^{row-1} otherwise.
  std::int64_t weight(std::size_t index) const;

  NodeId node_of_element(GroupElement g) const;
  std::size_t index_of_element(GroupElement g) const;

  /// Path from `id` up to and including the root.
  std::vector<NodeId> path_to_root(NodeId id) const;

  /// Row-major list of `index` and all its descendants (the order L(N)).
  std::vector<std::size_t> subtree_order(std::size_t index) const;

  /// Order of g in G_n.
  std::uint32_t element_order(GroupElement g) const;

 private:
  OrbitTree() = default;

  int n_ = 0;
  std::uint32_t modulus_ = 1;
  std::vector<NodeId> ids_;
  std::vector<GroupElement> representative_;
  std::vector<std::ptrdiff_t> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<std::size_t> child_count_;
  std::vector<std::size_t> children_;
  std::vector<std::size_t> element_begin_;
  std::vector<GroupElement> elements_;
  std::vector<std::uint32_t> element_node_;  // a * 2^n + b -> node index
};

}  // namespace pds
