#include "pds/counting.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pds {

BigInt total_pds_count(const OrbitTree& tree, const std::vector<PdsRecord>& records) {
  BigInt total = 0;
  for (const PdsRecord& rec : records) total += orbit_size(tree, rec.coloring);
  return total;
}

std::map<std::int64_t, BigInt> total_by_k(const OrbitTree& tree, const std::vector<PdsRecord>& records) {
  std::map<std::int64_t, BigInt> out;
  for (const PdsRecord& rec : records) out[rec.k] += orbit_size(tree, rec.coloring);
  return out;
}

namespace {

BigInt pow10(int e) {
  BigInt p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

// 100 * part / whole >= 10^e ?
bool at_least_power(const BigInt& part, const BigInt& whole, int e) {
  if (e >= 0) return 100 * part >= pow10(e) * whole;
  return 100 * part * pow10(-e) >= whole;
}

}  // namespace

std::string percentage_4sig(const BigInt& part, const BigInt& whole) {
  if (whole <= 0) throw std::invalid_argument("percentage of an empty total");
  if (part == 0) return "0";
  int e = 2;
  while (!at_least_power(part, whole, e)) --e;
  // digits = round(100 * part / whole * 10^{3 - e})
  BigInt num = 100 * part;
  BigInt den = whole;
  if (3 - e >= 0) num *= pow10(3 - e);
  else den *= pow10(e - 3);
  BigInt digits = (2 * num + den) / (2 * den);
  if (digits >= 10000) {
    digits /= 10;
    ++e;
  }
  const std::string d = digits.str();
  if (e < -3) return d.substr(0, 1) + "." + d.substr(1) + "e" + std::to_string(e);
  if (e >= 3) return d + std::string(static_cast<std::size_t>(e - 3), '0');
  if (e >= 0) return d.substr(0, static_cast<std::size_t>(e) + 1) + "." + d.substr(static_cast<std::size_t>(e) + 1);
  return "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
}

ConjectureCheck rhpds_conjecture_check(int n, const std::map<std::int64_t, BigInt>& totals) {
  ConjectureCheck c;
  const std::int64_t half = std::int64_t{1} << (2 * n - 1);
  const std::int64_t step = std::int64_t{1} << (n - 1);
  auto get = [&](std::int64_t k) {
    auto it = totals.find(k);
    return it == totals.end() ? BigInt(0) : it->second;
  };
  c.type_a_total = get(half - step);
  c.type_b_total = get(half + step);
  const BigInt base = BigInt(1) << ((1u << n) - 2);
  c.type_a_expected = base * ((1 << n) + 1);
  c.type_b_expected = base * ((1 << n) - 1);
  return c;
}

std::vector<Matrix2> automorphism_generators(int n) {
  const std::uint32_t m = 1u << n;
  return {
      {1, 1, 0, 1},
      {1, 0, 1, 1},
      {m - 1, 0, 0, 1},
      {3 % m, 0, 0, 1},
      {5 % m, 0, 0, 1},
  };
}

namespace {

Matrix2 multiply(const Matrix2& x, const Matrix2& y, std::uint32_t m) {
  return {(x[0] * y[0] + x[1] * y[2]) % m, (x[0] * y[1] + x[1] * y[3]) % m, (x[2] * y[0] + x[3] * y[2]) % m,
          (x[2] * y[1] + x[3] * y[3]) % m};
}

std::uint64_t key(const Matrix2& x) {
  return (std::uint64_t{x[0]} << 48) | (std::uint64_t{x[1]} << 32) | (std::uint64_t{x[2]} << 16) | x[3];
}

using Permutation = std::vector<std::size_t>;

std::uint64_t apply(const Permutation& p, std::uint64_t mask) {
  std::uint64_t out = 0;
  while (mask) {
    const int i = __builtin_ctzll(mask);
    mask &= mask - 1;
    out |= std::uint64_t{1} << p[static_cast<std::size_t>(i)];
  }
  return out;
}

Permutation swap_subtrees(const OrbitTree& tree, std::size_t x, std::size_t y) {
  Permutation p(tree.size());
  std::iota(p.begin(), p.end(), 0);
  const auto lx = tree.subtree_order(x);
  const auto ly = tree.subtree_order(y);
  for (std::size_t i = 0; i < lx.size(); ++i) {
    p[lx[i]] = ly[i];
    p[ly[i]] = lx[i];
  }
  return p;
}

std::vector<Permutation> tree_generators(const OrbitTree& tree) {
  std::vector<Permutation> gens;
  gens.push_back(swap_subtrees(tree, 1, 2));
  gens.push_back(swap_subtrees(tree, 2, 3));
  for (std::size_t i = 1; i < tree.size(); ++i) {
    auto kids = tree.children(i);
    if (kids.size() == 2) gens.push_back(swap_subtrees(tree, kids[0], kids[1]));
  }
  return gens;
}

std::uint64_t to_mask(const Coloring& c) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

}  // namespace

std::size_t generated_group_order(int n) {
  const std::uint32_t m = 1u << n;
  const auto gens = automorphism_generators(n);
  std::unordered_set<std::uint64_t> seen;
  std::deque<Matrix2> queue;
  const Matrix2 id{1 % m, 0, 0, 1 % m};
  seen.insert(key(id));
  queue.push_back(id);
  while (!queue.empty()) {
    const Matrix2 x = queue.front();
    queue.pop_front();
    for (const Matrix2& g : gens) {
      const Matrix2 y = multiply(g, x, m);
      if (seen.insert(key(y)).second) queue.push_back(y);
    }
  }
  return seen.size();
}

std::size_t group_inequivalent_count(const OrbitTree& tree, const std::vector<PdsRecord>& records) {
  const int n = tree.depth();
  if (n > 4) throw std::invalid_argument("group_inequivalent_count supports n <= 4");
  const std::uint32_t m = tree.modulus();

  std::vector<Permutation> group_perms;
  for (const Matrix2& g : automorphism_generators(n)) {
    Permutation p(tree.size());
    for (std::size_t i = 0; i < tree.size(); ++i) {
      const GroupElement x = tree.representative(i);
      p[i] = tree.index_of_element({(g[0] * x.a + g[1] * x.b) % m, (g[2] * x.a + g[3] * x.b) % m});
    }
    group_perms.push_back(std::move(p));
  }

  // All subsets: tree-automorphism orbits of the canonical records.
  const auto tree_perms = tree_generators(tree);
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::uint64_t> subsets;
  for (const PdsRecord& rec : records) {
    const std::uint64_t start = to_mask(rec.coloring);
    if (index.count(start)) throw std::logic_error("records share a tree orbit");
    std::size_t first = subsets.size();
    index.emplace(start, subsets.size());
    subsets.push_back(start);
    for (std::size_t i = first; i < subsets.size(); ++i) {
      for (const Permutation& p : tree_perms) {
        const std::uint64_t y = apply(p, subsets[i]);
        if (index.emplace(y, subsets.size()).second) subsets.push_back(y);
      }
    }
    if (BigInt(subsets.size() - first) != orbit_size(tree, rec.coloring)) {
      throw std::logic_error("tree orbit expansion disagrees with orbit-stabilizer count");
    }
  }

  std::vector<std::size_t> parent(subsets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = subsets.size();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (const Permutation& p : group_perms) {
      auto it = index.find(apply(p, subsets[i]));
      if (it == index.end()) throw std::logic_error("group automorphism left the PDS family");
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
        --classes;
      }
    }
  }
  return classes;
}

void write_summary_csv(std::ostream& out, const OrbitTree& tree, const std::vector<PdsRecord>& records, bool header) {
  if (header) out << "n,k,type,canonical,total,percent\n";
  const BigInt all = total_pds_count(tree, records);
  std::map<std::int64_t, std::set<std::string>> types;
  std::map<std::int64_t, std::size_t> canonical;
  for (const PdsRecord& rec : records) {
    types[rec.k].insert(std::string(to_string(rec.class_tag)));
    ++canonical[rec.k];
  }
  for (const auto& [k, total] : total_by_k(tree, records)) {
    std::string t;
    for (const auto& s : types[k]) t += (t.empty() ? "" : "/") + s;
    out << tree.depth() << ',' << k << ',' << t << ',' << canonical[k] << ',' << total << ','
        << percentage_4sig(total, all) << '\n';
  }
}

}  // namespace pds
