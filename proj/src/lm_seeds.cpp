#include "pds/lm_seeds.hpp"

#include <algorithm>
#include <stdexcept>

namespace pds {

namespace {

void check_spec(const OrbitTree& tree, const HomogeneousSpec& spec) {
  if (spec.x.size() != static_cast<std::size_t>(tree.depth()) || spec.x.empty()) {
    throw std::invalid_argument("homogeneous spec must have length n");
  }
  if (spec.x[0] < 0 || spec.x[0] > 3) throw std::invalid_argument("x_0 must lie in {0,1,2,3}");
  for (std::size_t i = 1; i < spec.x.size(); ++i) {
    if (spec.x[i] != 0 && spec.x[i] != 1) throw std::invalid_argument("x_i must lie in {0,1} for i > 0");
  }
}

Coloring homogeneous(const OrbitTree& tree, const HomogeneousSpec& spec, bool youngest) {
  check_spec(tree, spec);
  Coloring c(tree.size());
  auto color_children = [&](std::size_t node, int count) {
    auto kids = tree.children(node);
    const int width = static_cast<int>(kids.size());
    for (int k = 0; k < count; ++k) c[kids[static_cast<std::size_t>(youngest ? k : width - 1 - k)]] = 1;
  };
  color_children(0, spec.x[0]);
  for (int row = 1; row < tree.depth(); ++row) {
    for (std::size_t j = 0; j < row_width(row); ++j) {
      const std::size_t node = row_offset(row) + j;
      color_children(node, c[node] + spec.x[static_cast<std::size_t>(row)]);
    }
  }
  return c;
}

// Rows 1 and n of `base`, with row n blocks that are empty in `base` filled with 1s.
Coloring fill_empty_blocks(const OrbitTree& tree, const Coloring& base) {
  Coloring out(tree.size());
  for (std::size_t j = 0; j < 3; ++j) out[1 + j] = base[1 + j];
  const int n = tree.depth();
  for (std::size_t j = 0; j < row_width(n); j += 2) {
    const std::size_t a = row_offset(n) + j;
    const bool empty = !base[a] && !base[a + 1];
    out[a] = empty ? 1 : base[a];
    out[a + 1] = empty ? 1 : base[a + 1];
  }
  return out;
}

Coloring restrict_to_seed_rows(const OrbitTree& tree, const Coloring& c) {
  Coloring out(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const int row = tree.id(i).row;
    if (row == 1 || row == tree.depth()) out[i] = c[i];
  }
  return out;
}

}  // namespace

std::string HomogeneousSpec::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + ")";
}

std::string to_string(LmType t) {
  switch (t) {
    case LmType::kPlus: return "plus";
    case LmType::kMinus2: return "minus2";
    case LmType::kMinus3: return "minus3";
  }
  return "?";
}

bool LmPartialColoring::is_fixed(const OrbitTree& tree, std::size_t node) const {
  const int row = tree.id(node).row;
  return row <= 1 || row == tree.depth();
}

Coloring canonical_homogeneous(const OrbitTree& tree, const HomogeneousSpec& spec) {
  return homogeneous(tree, spec, true);
}

Coloring anti_canonical_homogeneous(const OrbitTree& tree, const HomogeneousSpec& spec) {
  return homogeneous(tree, spec, false);
}

LmPartialColoring lm_plus(const OrbitTree& tree, const HomogeneousSpec& spec) {
  check_spec(tree, spec);
  if (spec.x[0] % 2) throw std::invalid_argument("LM+ requires x_0 in {0, 2}");
  return {restrict_to_seed_rows(tree, canonical_homogeneous(tree, spec)), {{LmType::kPlus, spec}}};
}

LmPartialColoring lm_minus(const OrbitTree& tree, const HomogeneousSpec& spec) {
  check_spec(tree, spec);
  if (spec.x[0] % 2 == 0) {
    return {fill_empty_blocks(tree, canonical_homogeneous(tree, spec)), {{LmType::kMinus2, spec}}};
  }
  const Coloring filled = fill_empty_blocks(tree, anti_canonical_homogeneous(tree, spec));
  Coloring out(tree.size());
  for (std::size_t i = 1; i < tree.size(); ++i) {
    const int row = tree.id(i).row;
    if (row == 1 || row == tree.depth()) out[i] = static_cast<std::uint8_t>(1 - filled[i]);
  }
  return {out, {{LmType::kMinus3, spec}}};
}

std::vector<HomogeneousSpec> homogeneous_specs(int n, std::initializer_list<int> first_values) {
  std::vector<HomogeneousSpec> specs;
  for (int x0 : first_values) {
    for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
      HomogeneousSpec spec;
      spec.x.push_back(x0);
      for (int i = n - 2; i >= 0; --i) spec.x.push_back(static_cast<int>((rest >> i) & 1u));
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

std::vector<LmPartialColoring> lm_partial_colorings(const OrbitTree& tree) {
  const int n = tree.depth();
  if (n < 2) throw std::invalid_argument("LM partial colorings need n >= 2");
  std::vector<LmPartialColoring> seeds;
  auto merge = [&seeds](LmPartialColoring c, bool may_add) {
    for (auto& s : seeds) {
      if (s.coloring == c.coloring) {
        s.provenance.insert(s.provenance.end(), c.provenance.begin(), c.provenance.end());
        return;
      }
    }
    if (!may_add) throw std::logic_error("LM+ coloring is not among the LM- colorings");
    seeds.push_back(std::move(c));
  };
  for (const auto& spec : homogeneous_specs(n, {0, 2})) merge(lm_minus(tree, spec), true);
  for (const auto& spec : homogeneous_specs(n, {1, 3})) merge(lm_minus(tree, spec), true);
  for (const auto& spec : homogeneous_specs(n, {0, 2})) merge(lm_plus(tree, spec), false);

  const std::size_t expected = (std::size_t{2} << n) - 1;
  if (seeds.size() != expected) {
    throw std::logic_error("expected " + std::to_string(expected) + " distinct LM partial colorings, found " +
                           std::to_string(seeds.size()));
  }
  return seeds;
}

}  // namespace pds
