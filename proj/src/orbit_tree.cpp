#include "pds/orbit_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pds {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::vector<GroupElement> multiplier_orbit(GroupElement g, std::uint32_t modulus) {
  std::vector<GroupElement> orbit;
  const std::uint32_t mask = modulus - 1;
  for (std::uint32_t u = 1; u < std::max<std::uint32_t>(modulus, 2); u += 2) {
    orbit.push_back({(u * g.a) & mask, (u * g.b) & mask});
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

}  // namespace

OrbitTree OrbitTree::build(int n) {
  if (n < 0 || n > 11) {
    throw std::invalid_argument("orbit tree depth must lie in [0, 11], got " + std::to_string(n));
  }
  OrbitTree t;
  t.n_ = n;
  t.modulus_ = std::uint32_t{1} << n;
  const std::uint32_t m = t.modulus_;
  t.element_node_.assign(std::size_t{m} * m, kUnassigned);

  auto add_node = [&t, m](NodeId id, std::vector<GroupElement> orbit, std::ptrdiff_t parent) {
    const std::size_t index = t.ids_.size();
    t.ids_.push_back(id);
    t.parent_.push_back(parent);
    t.representative_.push_back(orbit.front());
    t.element_begin_.push_back(t.elements_.size());
    for (const GroupElement& g : orbit) {
      t.element_node_[std::size_t{g.a} * m + g.b] = static_cast<std::uint32_t>(index);
      t.elements_.push_back(g);
    }
  };

  add_node({0, 0}, {{0, 0}}, -1);
  if (n >= 1) {
    const std::uint32_t h = m / 2;
    add_node({1, 0}, {{0, h}}, 0);
    add_node({1, 1}, {{h, 0}}, 0);
    add_node({1, 2}, {{h, h}}, 0);
  }
  const GroupElement order_two[3] = {{0, m / 2}, {m / 2, 0}, {m / 2, m / 2}};
  for (int row = 1; row < n; ++row) {
    for (std::size_t j = 0; j < row_width(row); ++j) {
      const std::size_t p = row_offset(row) + j;
      const GroupElement rep = t.representative_[p];
      const GroupElement half{rep.a / 2, rep.b / 2};
      auto first = multiplier_orbit(half, m);
      std::vector<GroupElement> second;
      for (const GroupElement& tr : order_two) {
        const GroupElement cand{(half.a + tr.a) & (m - 1), (half.b + tr.b) & (m - 1)};
        if (!std::binary_search(first.begin(), first.end(), cand)) {
          second = multiplier_orbit(cand, m);
          break;
        }
      }
      if (second.empty()) {
        throw std::logic_error("orbit tree: node has a single child orbit");
      }
      add_node({row + 1, static_cast<int>(2 * j)}, std::move(first), static_cast<std::ptrdiff_t>(p));
      add_node({row + 1, static_cast<int>(2 * j + 1)}, std::move(second), static_cast<std::ptrdiff_t>(p));
    }
  }
  t.element_begin_.push_back(t.elements_.size());

  const std::size_t count = t.ids_.size();
  t.child_begin_.assign(count, 0);
  t.child_count_.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    t.child_begin_[i] = t.children_.size();
    const NodeId id = t.ids_[i];
    if (id.row >= n) continue;
    if (id.row == 0) {
      t.children_.insert(t.children_.end(), {1, 2, 3});
    } else {
      const std::size_t first = row_offset(id.row + 1) + 2 * static_cast<std::size_t>(id.col);
      t.children_.insert(t.children_.end(), {first, first + 1});
    }
    t.child_count_[i] = t.children_.size() - t.child_begin_[i];
  }
  return t;
}

std::size_t OrbitTree::index(NodeId id) const {
  if (!contains(id)) {
    throw std::out_of_range("node (" + std::to_string(id.row) + "," + std::to_string(id.col) +
                            ") is not in T_" + std::to_string(n_));
  }
  return row_offset(id.row) + static_cast<std::size_t>(id.col);
}

bool OrbitTree::contains(NodeId id) const {
  return id.row >= 0 && id.row <= n_ && id.col >= 0 &&
         static_cast<std::size_t>(id.col) < row_width(id.row);
}

std::span<const GroupElement> OrbitTree::elements(std::size_t index) const {
  return {elements_.data() + element_begin_[index], element_begin_[index + 1] - element_begin_[index]};
}

std::span<const std::size_t> OrbitTree::children(std::size_t index) const {
  return {children_.data() + child_begin_[index], child_count_[index]};
}

std::int64_t OrbitTree::weight(std::size_t index) const {
  const int row = ids_[index].row;
  return row == 0 ? 1 : std::int64_t{1} << (row - 1);
}

std::size_t OrbitTree::index_of_element(GroupElement g) const {
  if (g.a >= modulus_ || g.b >= modulus_) {
    throw std::out_of_range("group element outside G_n");
  }
  return element_node_[std::size_t{g.a} * modulus_ + g.b];
}

NodeId OrbitTree::node_of_element(GroupElement g) const { return ids_[index_of_element(g)]; }

std::vector<NodeId> OrbitTree::path_to_root(NodeId id) const {
  std::vector<NodeId> path;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(index(id));
  while (i >= 0) {
    path.push_back(ids_[static_cast<std::size_t>(i)]);
    i = parent_[static_cast<std::size_t>(i)];
  }
  return path;
}

std::vector<std::size_t> OrbitTree::subtree_order(std::size_t index) const {
  std::vector<std::size_t> order{index};
  std::size_t level_begin = 0;
  while (level_begin < order.size()) {
    const std::size_t level_end = order.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (std::size_t c : children(order[k])) order.push_back(c);
    }
    level_begin = level_end;
  }
  return order;
}

std::uint32_t OrbitTree::element_order(GroupElement g) const {
  const std::uint32_t g_all = std::gcd(modulus_, std::gcd(g.a, g.b));
  return modulus_ / g_all;
}

}  // namespace pds
