#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "pds/characters.hpp"
#include "pds/coloring.hpp"
#include "pds/lm_seeds.hpp"
#include "pds/verify.hpp"

namespace pds {

/// A coloring of T_n whose rows 2..n-1 may hold unknowns.
///
/// Unknown nodes are grouped in a parity union-find: every variable node is
/// x_root or 1 - x_root for the smallest (L-order earliest) node of its class,
/// and a class may carry an assigned constant. Classes are relabelled eagerly on
/// union, so lookups are O(1).
class PartialColoring {
 public:
  PartialColoring(const OrbitTree& tree, const LmPartialColoring& seed);

  const OrbitTree& tree() const { return *tree_; }

  bool is_variable(std::size_t node) const { return root_[node] >= 0; }
  /// Class root of a variable node.
  std::size_t root(std::size_t node) const { return static_cast<std::size_t>(root_[node]); }
  /// 1 when the node holds 1 - x_root.
  std::uint8_t parity(std::size_t node) const { return parity_[node]; }

  /// 0 or 1 once known, -1 while the node still depends on a free variable.
  int value(std::size_t node) const;

  /// Sets the node's class so that the node takes value v. False on conflict.
  bool assign(std::size_t node, std::uint8_t v);

  /// Records value(a) xor value(b) = p. False on conflict.
  bool unite(std::size_t a, std::size_t b, std::uint8_t p);

  /// Unassigned class roots in L-order.
  std::vector<std::size_t> free_variables() const;
  bool complete() const;

  /// chi(q) with terms keyed by class root.
  LinearValue evaluate(const TreeCharacter& chi) const;

  /// Variables are named by class root; complemented nodes carry value 1.
  SymbolicColoring symbolic() const;

  /// Requires complete().
  Coloring coloring() const;

 private:
  const OrbitTree* tree_;
  std::vector<std::uint8_t> bit_;       // constant value for fixed or assigned nodes
  std::vector<std::ptrdiff_t> root_;    // -1 for seed nodes
  std::vector<std::uint8_t> parity_;
  std::vector<std::int8_t> assigned_;   // per root: -1, 0, 1
  std::vector<std::size_t> variables_;  // variable nodes in L-order
};

enum class Propagation { kUpdated, kContradiction };

/// Modular propagation to a joint fixpoint over every tree character and every
/// modulus 2^k, 2 <= k <= n. Mutates q.
Propagation propagate(const CharacterTable& chars, PartialColoring& q, std::int64_t r);

/// True when some nontrivial character is already constant and not in {r, r - 2^n}.
bool constant_eigenvalue_prune(const CharacterTable& chars, const PartialColoring& q, std::int64_t r);

/// True when a mandated canonicity comparison is violated for every completion of q.
bool definitively_non_canonical(const PartialColoring& q);

struct SearchStats {
  std::uint64_t nodes = 0;     // search nodes visited
  std::uint64_t branches = 0;  // nodes that split on a free variable
  std::uint64_t leaves = 0;    // fully assigned colorings tested
  std::size_t free_after_root_propagation = 0;
};

/// Every canonical PDS extending the seed whose positive nontrivial eigenvalue
/// is r, in discovery order.
std::vector<Coloring> search(const CharacterTable& chars, const LmPartialColoring& seed, std::int64_t r,
                             SearchStats* stats = nullptr);

/// One (seed, r) work item and its outcome.
struct WorkItem {
  std::size_t seed_index = 0;
  std::int64_t r = 0;
  std::vector<Coloring> found;
  bool resumed = false;  // taken from the checkpoint log instead of being searched
};

struct EnumerateOptions {
  unsigned jobs = 1;
  std::optional<std::size_t> seed_index;  // restrict to one seed
  std::optional<std::int64_t> r;          // restrict to one eigenvalue
  /// Checkpoint log; empty disables it. Completed items are appended as
  ///   found seed=<i> r=<r> bits=<plain string>   (one per PDS)
  ///   done seed=<i> r=<r> found=<count>
  std::filesystem::path checkpoint;
  bool resume = false;                     // skip items already marked done in the log
  std::optional<std::size_t> max_items;    // stop after searching this many new items
  std::function<void(const WorkItem&)> on_item;  // called under a lock as items finish
};

struct EnumerateResult {
  std::vector<PdsRecord> records;  // sorted by (k, serialized string)
  std::size_t seeds = 0;
  std::size_t feasible_items = 0;
  std::size_t searched = 0;
  std::size_t resumed = 0;
  bool complete = false;  // every feasible item was covered
};

/// Runs search over all LM seeds and feasible r. Throws std::logic_error if
/// two items report the same coloring or a result fails verification.
EnumerateResult enumerate_all(const CharacterTable& chars, const EnumerateOptions& options = {});

}  // namespace pds
