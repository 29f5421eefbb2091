#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pds/coloring.hpp"
#include "pds/orbit_tree.hpp"

namespace pds {

using BigInt = boost::multiprecision::cpp_int;

/// Canonicity of a 0-1 coloring under rooted-tree automorphisms.
///
/// Follows the recursive definition directly: pi(c) must be canonical on
/// T_{n-1}, and every row-n node N must be M-canonical for each M on its path
/// (excluding the root), comparing against every younger sibling of M under
/// the prefix gate on L(M). T_1 colorings are canonical when the 1s occupy the
/// youngest columns; both T_0 colorings are canonical.
bool is_canonical(const OrbitTree& tree, const Coloring& c);

/// Same predicate evaluated on the coloring truncated to rows 0..depth.
bool is_canonical_truncated(const OrbitTree& tree, const Coloring& c, int depth);

/// True when some mandated comparison is already violated for every
/// assignment of the variables in q. Prefix gates are evaluated on the
/// symbolic values, so x == x and (1 - x) == (1 - x) count as equal.
/// `q` must be resolved: equal classes share a variable id.
bool canonicity_violated(const OrbitTree& tree, const SymbolicColoring& q);

/// |Aut(T_n)| = 3 * 2^{3(2^{n-1} - 1) + 1} for n >= 1.
BigInt tree_aut_order(int n);

/// |Aut(G_n)| = 3 * 2^{4n-3} for n >= 2.
BigInt group_aut_order(int n);

/// Order of the subgroup of Aut(T_n) induced by Aut(G_n): 3 * 2^{3n-2}.
BigInt induced_tree_action_order(int n);

/// Number of tree automorphisms fixing c.
BigInt stabilizer_order(const OrbitTree& tree, const Coloring& c);

/// |orbit of c| = tree_aut_order / stabilizer_order.
BigInt orbit_size(const OrbitTree& tree, const Coloring& c);

/// The unique canonical member of c's tree-automorphism orbit.
Coloring canonicalize(const OrbitTree& tree, const Coloring& c);

/// Node at 1-based position `pos` of L(m), the row-major order of the
/// subtree rooted at m (m must not be the root).
std::size_t subtree_position(const OrbitTree& tree, std::size_t m, std::size_t pos);

/// Younger siblings of a node (same parent, smaller column), oldest first.
std::vector<std::size_t> younger_siblings(const OrbitTree& tree, std::size_t node);

}  // namespace pds
