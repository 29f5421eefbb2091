#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pds/characters.hpp"
#include "pds/lm_seeds.hpp"

namespace pds {

using Rational = boost::multiprecision::cpp_rational;

/// A rational with 64-bit numerator and denominator, kept in lowest terms
/// with a positive denominator. Arithmetic throws RationalOverflow when a
/// result does not fit.
struct SmallRational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  SmallRational() = default;
  SmallRational(std::int64_t n) : num(n) {}  // NOLINT(google-explicit-constructor)
  static SmallRational from(const Rational& r);

  friend SmallRational operator-(const SmallRational& a, const SmallRational& b);
  friend SmallRational operator*(const SmallRational& a, const SmallRational& b);
  friend bool operator==(const SmallRational& a, const SmallRational& b) = default;
  friend bool operator<(const SmallRational& a, const SmallRational& b);
};

struct RationalOverflow : std::overflow_error {
  RationalOverflow() : std::overflow_error("rational out of 64-bit range") {}
};

/// A finite set of rationals, or "anything" once it outgrows kMaxSize or
/// leaves the 64-bit range. The universal set contains 0, so it never causes
/// a row to be rejected.
class RhsSet {
 public:
  static constexpr std::size_t kMaxSize = 512;

  RhsSet() = default;
  explicit RhsSet(std::vector<SmallRational> values);
  static RhsSet universal();

  bool is_universal() const { return universal_; }
  bool contains(const SmallRational& v) const;
  const std::vector<SmallRational>& values() const { return values_; }

  /// {a - factor * b : a in this, b in other}.
  RhsSet minus_scaled(const SmallRational& factor, const RhsSet& other) const;

 private:
  bool universal_ = false;
  std::vector<SmallRational> values_;  // sorted, unique
};

/// [A | v]: one row per nontrivial tree character, one column per variable
/// node in rows 2..n-1 (column order = node order).
struct SetAugmentedMatrix {
  std::vector<std::size_t> variables;
  std::vector<std::size_t> owners;
  std::vector<std::vector<Rational>> a;
  std::vector<RhsSet> v;
};

/// The statements E_chi for seed C and target r, with constants moved right:
/// row-n characters whose sibling pair differs in C get {r - c} or {r - 2^n - c};
/// every other nontrivial character gets {r - c, r - 2^n - c}.
/// Throws std::invalid_argument unless r is even and in [2, 2^n - 2].
SetAugmentedMatrix build_system(const CharacterTable& chars, const LmPartialColoring& seed, std::int64_t r);

/// Forward elimination in column order, pivot = first remaining row with a
/// nonzero entry. False iff some all-zero row ends with a set lacking 0.
bool elimination_consistent(SetAugmentedMatrix m);

/// Feasibility test used by the search driver.
///
/// Elimination runs once per tree on [A | I], so every zero row of rref(A)
/// comes with its combination t of the original rows. Its right-hand side is
/// then the set sum of t_j * v_j with each original v_j used once, and
/// membership of 0 reduces to a subset-sum question over the two-element rows.
/// This never rejects more than the exact system would, and rejects at least
/// what elimination_consistent rejects.
class FeasibilityEngine {
 public:
  /// Subset sums spanning more than this many integers are not tracked and
  /// the row is treated as satisfiable.
  static constexpr std::int64_t kMaxSpan = std::int64_t{1} << 26;

  explicit FeasibilityEngine(const CharacterTable& chars);

  bool is_feasible(const LmPartialColoring& seed, std::int64_t r) const;
  std::vector<std::int64_t> feasible_eigenvalues(const LmPartialColoring& seed) const;
  std::size_t zero_rows() const { return combos_.size(); }

 private:
  struct Term {
    std::size_t row;
    std::int64_t coefficient;
  };

  const CharacterTable* chars_;
  std::vector<std::vector<Term>> combos_;  // integer multiple of each zero-row combination
};

/// R' for a seed: every r in {2, 4, ..., 2^n - 2} surviving elimination.
std::vector<std::int64_t> feasible_eigenvalues(const CharacterTable& chars, const LmPartialColoring& seed);

}  // namespace pds
