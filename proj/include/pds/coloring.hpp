#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pds {

class OrbitTree;

/// A 0-1 coloring of an orbit tree, indexed by row-major node index.
/// A node colored 1 belongs to the subset of G_n the coloring describes.
struct Coloring {
  std::vector<std::uint8_t> bits;

  Coloring() = default;
  explicit Coloring(std::size_t size) : bits(size, 0) {}
  explicit Coloring(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  std::size_t size() const { return bits.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }
  std::uint8_t& operator[](std::size_t i) { return bits[i]; }

  auto operator<=>(const Coloring&) const = default;
};

/// The value of one node in a coloring with unknowns: a constant, or a
/// variable x_v, or its complement 1 - x_v.
struct SymbolicValue {
  static constexpr std::int32_t kConstant = -1;

  std::int32_t variable = kConstant;
  std::uint8_t value = 0;  // constant value, or 1 when the variable is complemented

  static SymbolicValue constant(std::uint8_t v) { return {kConstant, v}; }
  static SymbolicValue var(std::int32_t v, bool complemented = false) {
    return {v, static_cast<std::uint8_t>(complemented ? 1 : 0)};
  }
  bool is_constant() const { return variable == kConstant; }

  bool operator==(const SymbolicValue&) const = default;
};

using SymbolicColoring = std::vector<SymbolicValue>;

/// Number of group elements in the subset: sum of |M| over nodes colored 1.
std::int64_t subset_size(const OrbitTree& tree, const Coloring& c);

/// The restriction pi(c) of a coloring of T_n to T_{n-1}.
Coloring restrict_to_parent_tree(const OrbitTree& tree, const Coloring& c);

}  // namespace pds
