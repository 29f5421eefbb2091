#include "pds/verify.hpp"

#include "pds/canonical.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

namespace pds {

std::string_view to_string(PdsClass c) {
  switch (c) {
    case PdsClass::kPcp2: return "PCP2";
    case PdsClass::kPcp3Complement: return "PCP3C";
    case PdsClass::kRhpdsA: return "RHPDS_A";
    case PdsClass::kRhpdsB: return "RHPDS_B";
    case PdsClass::kSporadic: return "SPORADIC";
  }
  return "SPORADIC";
}

std::optional<PdsClass> parse_pds_class(std::string_view s) {
  for (PdsClass c : {PdsClass::kPcp2, PdsClass::kPcp3Complement, PdsClass::kRhpdsA, PdsClass::kRhpdsB,
                     PdsClass::kSporadic}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::map<std::int64_t, std::int64_t> EigenvalueProfile::combined() const {
  auto all = nontrivial;
  all[trivial] += 1;
  return all;
}

EigenvalueProfile eigenvalue_profile(const CharacterTable& chars, const Coloring& c) {
  const OrbitTree& tree = chars.tree();
  EigenvalueProfile profile;
  profile.trivial = evaluate(chars[0], c);
  for (std::size_t owner = 1; owner < chars.size(); ++owner) {
    profile.nontrivial[evaluate(chars[owner], c)] += tree.weight(owner);
  }
  return profile;
}

std::optional<PdsRecord> is_pds_by_eigenvalues(const CharacterTable& chars, const Coloring& c) {
  const OrbitTree& tree = chars.tree();
  if (c.size() != tree.size() || c[0] != 0) return std::nullopt;
  const EigenvalueProfile profile = eigenvalue_profile(chars, c);
  if (profile.nontrivial.size() != 2) return std::nullopt;
  const std::int64_t m = tree.modulus();
  const auto [s, mult_s] = *profile.nontrivial.begin();
  const auto [r, mult_r] = *profile.nontrivial.rbegin();
  const std::int64_t k = profile.trivial;
  if (!(r > 0 && s < 0 && s == r - m)) return std::nullopt;
  if (k == r || k == s) return std::nullopt;
  if (((k - r) % m) != 0) return std::nullopt;

  PdsRecord rec;
  rec.n = tree.depth();
  rec.k = k;
  rec.r = r;
  rec.mult_r = mult_r;
  rec.s = s;
  rec.mult_s = mult_s;
  rec.mu = k + r * s;
  rec.lambda = rec.mu + r + s;
  if (!(rec.mu > 0 && rec.mu < k)) return std::nullopt;
  rec.coloring = c;
  rec.class_tag = classify(rec);
  return rec;
}

namespace {

// Groups of at most 64 elements: subsets as bitmasks, index a * 2^n + b.
std::optional<DifferenceParameters> small_group_definition(int n, std::uint64_t set) {
  const unsigned w = 1u << n;
  const unsigned bits = w * w;
  const std::uint64_t full = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  std::uint64_t lane = (std::uint64_t{1} << w) - 1;
  std::uint64_t lanes = 0;
  for (unsigned a = 0; a < w; ++a) lanes |= lane << (a * w);

  auto translate = [&](std::uint64_t x, unsigned ga, unsigned gb) {
    if (ga) {
      const unsigned sh = ga * w;
      x = ((x << sh) | (x >> (bits - sh))) & full;
    }
    if (gb) {
      std::uint64_t low_part = 0;  // bits that wrap around inside each lane
      std::uint64_t low_mask = 0;
      for (unsigned a = 0; a < w; ++a) low_mask |= ((std::uint64_t{1} << gb) - 1) << (a * w);
      low_part = (x >> (w - gb)) & low_mask;
      x = ((x << gb) & lanes & ~low_mask) | low_part;
    }
    return x;
  };

  const std::int64_t k = std::popcount(set);
  std::optional<std::int64_t> lambda, mu;
  for (unsigned ga = 0; ga < w; ++ga) {
    for (unsigned gb = 0; gb < w; ++gb) {
      if (ga == 0 && gb == 0) continue;
      const std::int64_t count = std::popcount(set & translate(set, ga, gb));
      const bool member = (set >> (ga * w + gb)) & 1u;
      auto& slot = member ? lambda : mu;
      if (!slot) slot = count;
      else if (*slot != count) return std::nullopt;
    }
  }
  if (!mu || *mu <= 0 || *mu >= k) return std::nullopt;
  return DifferenceParameters{k, lambda.value_or(0), *mu};
}

}  // namespace

std::optional<DifferenceParameters> is_pds_by_definition(int n, std::span<const GroupElement> set) {
  if (n < 1) throw std::invalid_argument("is_pds_by_definition requires n >= 1");
  const std::uint32_t w = 1u << n;
  const std::size_t order = std::size_t{w} * w;
  std::vector<std::uint8_t> member(order, 0);
  for (const GroupElement& g : set) {
    if (g.a >= w || g.b >= w) throw std::out_of_range("element outside G_n");
    const std::size_t idx = std::size_t{g.a} * w + g.b;
    if (idx == 0) throw std::invalid_argument("regular PDS candidates exclude the identity");
    if (member[idx]) throw std::invalid_argument("duplicate element in candidate set");
    member[idx] = 1;
  }
  if (set.empty()) return std::nullopt;

  if (order <= 64) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < order; ++i) mask |= std::uint64_t{member[i]} << i;
    return small_group_definition(n, mask);
  }

  std::vector<std::int64_t> counts(order, 0);
  const std::uint32_t mask = w - 1;
  for (const GroupElement& x : set) {
    for (const GroupElement& y : set) {
      counts[std::size_t{(x.a - y.a) & mask} * w + ((x.b - y.b) & mask)] += 1;
    }
  }
  const std::int64_t k = static_cast<std::int64_t>(set.size());
  std::optional<std::int64_t> lambda, mu;
  for (std::size_t idx = 1; idx < order; ++idx) {
    auto& slot = member[idx] ? lambda : mu;
    if (!slot) slot = counts[idx];
    else if (*slot != counts[idx]) return std::nullopt;
  }
  if (!mu || *mu <= 0 || *mu >= k) return std::nullopt;
  return DifferenceParameters{k, lambda.value_or(0), *mu};
}

std::vector<GroupElement> to_group_subset(const OrbitTree& tree, const Coloring& c) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (!c[i]) continue;
    auto e = tree.elements(i);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

Coloring complement(const OrbitTree& tree, const Coloring& c) {
  if (c[0] != 0) throw std::invalid_argument("complement requires the root to be colored 0");
  Coloring out = c;
  for (std::size_t i = 1; i < tree.size(); ++i) out[i] = static_cast<std::uint8_t>(1 - c[i]);
  return out;
}

PdsClass classify(const PdsRecord& record) {
  const std::int64_t m = std::int64_t{1} << record.n;
  const std::int64_t half_square = std::int64_t{1} << (2 * record.n - 1);
  const std::int64_t half_m = m / 2;
  if (record.k == 2 * (m - 1)) return PdsClass::kPcp2;
  if (record.k == m * m - 3 * m + 2) return PdsClass::kPcp3Complement;
  if (record.k == half_square - half_m) return PdsClass::kRhpdsA;
  if (record.k == half_square + half_m) return PdsClass::kRhpdsB;
  return PdsClass::kSporadic;
}

LatinSign latin_sign(const PdsRecord& record) {
  const std::int64_t m = std::int64_t{1} << record.n;
  // PL_t(m): eigenvalues m - t, -t and k = t(m - 1).  NL_t(m): t, t - m and k = t(m + 1).
  if (record.k == -record.s * (m - 1) && record.r == m + record.s) return LatinSign::kPositive;
  if (record.k == record.r * (m + 1) && record.s == record.r - m) return LatinSign::kNegative;
  return LatinSign::kNeither;
}

std::vector<PdsRecord> brute_force_pds(const CharacterTable& chars, bool even_only) {
  const OrbitTree& tree = chars.tree();
  if (tree.depth() > 3) throw std::invalid_argument("brute force is limited to n <= 3");
  const std::size_t nodes = tree.size() - 1;
  std::set<Coloring> found;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nodes); ++mask) {
    Coloring c(tree.size());
    for (std::size_t i = 0; i < nodes; ++i) c[i + 1] = (mask >> i) & 1u;
    const auto set = to_group_subset(tree, c);
    if (even_only && set.size() % 2) continue;
    if (is_pds_by_definition(tree.depth(), set)) found.insert(canonicalize(tree, c));
  }
  std::vector<PdsRecord> out;
  for (const Coloring& c : found) {
    auto rec = is_pds_by_eigenvalues(chars, c);
    if (!rec) throw std::logic_error("definition and eigenvalue tests disagree");
    out.push_back(std::move(*rec));
  }
  std::stable_sort(out.begin(), out.end(), [](const PdsRecord& a, const PdsRecord& b) { return a.k < b.k; });
  return out;
}

}  // namespace pds
