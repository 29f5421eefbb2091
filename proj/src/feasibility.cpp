#include "pds/feasibility.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace pds {

namespace {

using Wide = __int128;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

SmallRational make(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min() / 2;
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max() / 2;
  if (num < lo || num > hi || den > hi) throw RationalOverflow();
  SmallRational r;
  r.num = static_cast<std::int64_t>(num);
  r.den = static_cast<std::int64_t>(den);
  return r;
}

}  // namespace

SmallRational SmallRational::from(const Rational& r) {
  using boost::multiprecision::cpp_int;
  const cpp_int n = boost::multiprecision::numerator(r);
  const cpp_int d = boost::multiprecision::denominator(r);
  const cpp_int limit = std::numeric_limits<std::int64_t>::max() / 2;
  if (abs(n) > limit || d > limit) throw RationalOverflow();
  return make(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
}

SmallRational operator-(const SmallRational& a, const SmallRational& b) {
  if (a.den == b.den) return make(Wide(a.num) - b.num, a.den);
  return make(Wide(a.num) * b.den - Wide(b.num) * a.den, Wide(a.den) * b.den);
}

SmallRational operator*(const SmallRational& a, const SmallRational& b) {
  return make(Wide(a.num) * b.num, Wide(a.den) * b.den);
}

bool operator<(const SmallRational& a, const SmallRational& b) { return Wide(a.num) * b.den < Wide(b.num) * a.den; }

RhsSet::RhsSet(std::vector<SmallRational> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.size() > kMaxSize) {
    universal_ = true;
    values_.clear();
  }
}

RhsSet RhsSet::universal() {
  RhsSet s;
  s.universal_ = true;
  return s;
}

bool RhsSet::contains(const SmallRational& v) const {
  return universal_ || std::binary_search(values_.begin(), values_.end(), v);
}

RhsSet RhsSet::minus_scaled(const SmallRational& factor, const RhsSet& other) const {
  if (universal_ || other.universal_) return universal();
  if (values_.size() * other.values_.size() > kMaxSize * 8) return universal();
  std::vector<SmallRational> out;
  out.reserve(values_.size() * other.values_.size());
  try {
    for (const SmallRational& y : other.values_) {
      const SmallRational fy = factor * y;
      for (const SmallRational& x : values_) out.push_back(x - fy);
    }
  } catch (const RationalOverflow&) {
    return universal();
  }
  return RhsSet(std::move(out));
}

namespace {

void check_r(const OrbitTree& tree, std::int64_t r) {
  const std::int64_t m = tree.modulus();
  if (r % 2 != 0 || r < 2 || r > m - 2) {
    throw std::invalid_argument("r must be even and lie in [2, 2^n - 2], got " + std::to_string(r));
  }
}

std::size_t sibling_of(const OrbitTree& tree, std::size_t node) {
  const NodeId id = tree.id(node);
  return tree.index({id.row, id.col ^ 1});
}

std::vector<std::size_t> variable_nodes(const OrbitTree& tree) {
  std::vector<std::size_t> vars;
  for (int row = 2; row < tree.depth(); ++row) {
    for (std::size_t j = 0; j < row_width(row); ++j) vars.push_back(row_offset(row) + j);
  }
  return vars;
}

// Right-hand side of E_chi for one row: the constant part of chi(C') moved over.
RhsSet rhs_for(const CharacterTable& chars, const LmPartialColoring& seed, std::size_t owner, std::int64_t r) {
  const OrbitTree& tree = chars.tree();
  const std::int64_t m = tree.modulus();
  std::int64_t constant = 0;
  for (const CharacterTerm& t : chars[owner].terms) {
    if (seed.is_fixed(tree, t.node)) constant += t.coefficient * seed.coloring[t.node];
  }
  if (tree.id(owner).row == tree.depth()) {
    const std::size_t sib = sibling_of(tree, owner);
    if (seed.coloring[owner] != seed.coloring[sib]) {
      return RhsSet({SmallRational(seed.coloring[owner] ? r - constant : r - m - constant)});
    }
  }
  return RhsSet({SmallRational(r - constant), SmallRational(r - m - constant)});
}

}  // namespace

SetAugmentedMatrix build_system(const CharacterTable& chars, const LmPartialColoring& seed, std::int64_t r) {
  const OrbitTree& tree = chars.tree();
  check_r(tree, r);
  SetAugmentedMatrix sys;
  sys.variables = variable_nodes(tree);
  for (std::size_t owner = 1; owner < chars.size(); ++owner) {
    sys.owners.push_back(owner);
    std::vector<Rational> row;
    row.reserve(sys.variables.size());
    for (std::size_t var : sys.variables) row.emplace_back(chars[owner].value_at(var));
    sys.a.push_back(std::move(row));
    sys.v.push_back(rhs_for(chars, seed, owner, r));
  }
  return sys;
}

bool elimination_consistent(SetAugmentedMatrix m) {
  const std::size_t rows = m.a.size();
  const std::size_t cols = m.variables.size();
  std::vector<std::uint8_t> used(rows, 0);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!used[i] && m.a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    used[pivot] = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used[i] || m.a[i][col] == 0) continue;
      const Rational factor = m.a[i][col] / m.a[pivot][col];
      for (std::size_t c = col; c < cols; ++c) m.a[i][c] -= factor * m.a[pivot][c];
      m.v[i] = m.v[i].minus_scaled(SmallRational::from(factor), m.v[pivot]);
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (!used[i] && !m.v[i].contains(SmallRational(0))) return false;
  }
  return true;
}

FeasibilityEngine::FeasibilityEngine(const CharacterTable& chars) : chars_(&chars) {
  using boost::multiprecision::cpp_int;
  const OrbitTree& tree = chars.tree();
  const std::vector<std::size_t> vars = variable_nodes(tree);
  const std::size_t rows = chars.size() - 1;
  const std::size_t cols = vars.size();
  // [A | I]
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = chars[i + 1].value_at(vars[c]);
    a[i][cols + i] = 1;
  }
  std::vector<std::uint8_t> used(rows, 0);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!used[i] && a[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    used[pivot] = 1;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used[i] || a[i][col] == 0) continue;
      const Rational factor = a[i][col] / a[pivot][col];
      for (std::size_t c = col; c < cols + rows; ++c) {
        if (a[pivot][c] != 0) a[i][c] -= factor * a[pivot][c];
      }
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (used[i]) continue;
    cpp_int scale = 1;
    for (std::size_t j = 0; j < rows; ++j) {
      const cpp_int d = boost::multiprecision::denominator(a[i][cols + j]);
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    std::vector<Term> combo;
    for (std::size_t j = 0; j < rows; ++j) {
      if (a[i][cols + j] == 0) continue;
      const Rational scaled = a[i][cols + j] * Rational(scale);
      combo.push_back({j, boost::multiprecision::numerator(scaled).convert_to<std::int64_t>()});
    }
    combos_.push_back(std::move(combo));
  }
}

bool FeasibilityEngine::is_feasible(const LmPartialColoring& seed, std::int64_t r) const {
  const OrbitTree& tree = chars_->tree();
  check_r(tree, r);
  const std::int64_t m = tree.modulus();
  const std::size_t rows = chars_->size() - 1;
  // v_j = {beta_j} or {beta_j, beta_j - 2^n}
  std::vector<std::int64_t> beta(rows);
  std::vector<std::uint8_t> pair(rows);
  for (std::size_t j = 0; j < rows; ++j) {
    const RhsSet v = rhs_for(*chars_, seed, j + 1, r);
    beta[j] = v.values().back().num;
    pair[j] = v.values().size() == 2;
  }
  for (const auto& combo : combos_) {
    // 0 in sum_j t_j v_j  <=>  sum_{j in J'} t_j = (sum_j t_j beta_j) / 2^n for some J' among the pairs.
    Wide total = 0;
    std::int64_t lo = 0, hi = 0;
    std::vector<std::int64_t> items;
    for (const Term& t : combo) {
      total += Wide(t.coefficient) * beta[t.row];
      if (pair[t.row]) {
        items.push_back(t.coefficient);
        (t.coefficient < 0 ? lo : hi) += t.coefficient;
      }
    }
    if (total % m != 0) return false;
    const Wide target = total / m;
    if (target < lo || target > hi) return false;
    if (hi - lo > kMaxSpan) continue;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>((hi - lo) / 64 + 1), 0);
    const std::int64_t origin = -lo;  // bit index of sum 0
    reach[static_cast<std::size_t>(origin / 64)] |= std::uint64_t{1} << (origin % 64);
    for (std::int64_t t : items) {
      const std::size_t words = reach.size();
      std::vector<std::uint64_t> shifted(words, 0);
      const std::int64_t sh = t < 0 ? -t : t;
      const std::size_t ws = static_cast<std::size_t>(sh / 64);
      const unsigned bs = static_cast<unsigned>(sh % 64);
      for (std::size_t w = 0; w < words; ++w) {
        if (!reach[w]) continue;
        if (t > 0) {
          if (w + ws < words) shifted[w + ws] |= reach[w] << bs;
          if (bs && w + ws + 1 < words) shifted[w + ws + 1] |= reach[w] >> (64 - bs);
        } else {
          if (w >= ws) shifted[w - ws] |= reach[w] >> bs;
          if (bs && w >= ws + 1) shifted[w - ws - 1] |= reach[w] << (64 - bs);
        }
      }
      for (std::size_t w = 0; w < words; ++w) reach[w] |= shifted[w];
    }
    const std::int64_t bit = static_cast<std::int64_t>(target) + origin;
    if (!((reach[static_cast<std::size_t>(bit / 64)] >> (bit % 64)) & 1u)) return false;
  }
  return true;
}

std::vector<std::int64_t> FeasibilityEngine::feasible_eigenvalues(const LmPartialColoring& seed) const {
  std::vector<std::int64_t> out;
  const std::int64_t m = chars_->tree().modulus();
  for (std::int64_t r = 2; r <= m - 2; r += 2) {
    if (is_feasible(seed, r)) out.push_back(r);
  }
  return out;
}

std::vector<std::int64_t> feasible_eigenvalues(const CharacterTable& chars, const LmPartialColoring& seed) {
  return FeasibilityEngine(chars).feasible_eigenvalues(seed);
}

}  // namespace pds
