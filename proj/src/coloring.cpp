#include "pds/coloring.hpp"

#include "pds/orbit_tree.hpp"

namespace pds {

std::int64_t subset_size(const OrbitTree& tree, const Coloring& c) {
  std::int64_t k = 0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (c[i]) k += tree.weight(i);
  }
  return k;
}

Coloring restrict_to_parent_tree(const OrbitTree& tree, const Coloring& c) {
  const std::size_t keep = row_offset(tree.depth());
  return Coloring(std::vector<std::uint8_t>(c.bits.begin(), c.bits.begin() + static_cast<std::ptrdiff_t>(keep)));
}

}  // namespace pds
