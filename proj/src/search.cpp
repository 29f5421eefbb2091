#include "pds/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pds/canonical.hpp"
#include "pds/feasibility.hpp"
#include "pds/serialization.hpp"

namespace pds {

PartialColoring::PartialColoring(const OrbitTree& tree, const LmPartialColoring& seed)
    : tree_(&tree),
      bit_(tree.size(), 0),
      root_(tree.size(), -1),
      parity_(tree.size(), 0),
      assigned_(tree.size(), -1) {
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (seed.is_fixed(tree, i)) {
      bit_[i] = seed.coloring[i];
    } else {
      root_[i] = static_cast<std::ptrdiff_t>(i);
      variables_.push_back(i);
    }
  }
}

int PartialColoring::value(std::size_t node) const {
  if (root_[node] < 0) return bit_[node];
  const int v = assigned_[root(node)];
  return v < 0 ? -1 : v ^ parity_[node];
}

bool PartialColoring::assign(std::size_t node, std::uint8_t v) {
  if (root_[node] < 0) return bit_[node] == v;
  const std::size_t r = root(node);
  const std::int8_t want = static_cast<std::int8_t>(v ^ parity_[node]);
  if (assigned_[r] >= 0) return assigned_[r] == want;
  assigned_[r] = want;
  return true;
}

bool PartialColoring::unite(std::size_t a, std::size_t b, std::uint8_t p) {
  const int va = value(a);
  const int vb = value(b);
  if (va >= 0 && vb >= 0) return (va ^ vb) == p;
  if (va >= 0) return assign(b, static_cast<std::uint8_t>(va ^ p));
  if (vb >= 0) return assign(a, static_cast<std::uint8_t>(vb ^ p));
  std::size_t ra = root(a);
  std::size_t rb = root(b);
  // x_ra xor x_rb = p xor parity(a) xor parity(b)
  const std::uint8_t link = p ^ parity_[a] ^ parity_[b];
  if (ra == rb) return link == 0;
  if (rb < ra) std::swap(ra, rb);
  for (std::size_t v : variables_) {
    if (root_[v] == static_cast<std::ptrdiff_t>(rb)) {
      root_[v] = static_cast<std::ptrdiff_t>(ra);
      parity_[v] ^= link;
    }
  }
  return true;
}

std::vector<std::size_t> PartialColoring::free_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v : variables_) {
    if (root(v) == v && assigned_[v] < 0) out.push_back(v);
  }
  return out;
}

bool PartialColoring::complete() const {
  return std::all_of(variables_.begin(), variables_.end(), [&](std::size_t v) { return value(v) >= 0; });
}

LinearValue PartialColoring::evaluate(const TreeCharacter& chi) const {
  LinearValue out;
  for (const CharacterTerm& t : chi.terms) {
    const int v = value(t.node);
    if (v >= 0) {
      out.constant += t.coefficient * v;
    } else if (parity_[t.node] == 0) {
      out.terms[root(t.node)] += t.coefficient;
    } else {
      out.constant += t.coefficient;
      out.terms[root(t.node)] -= t.coefficient;
    }
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SymbolicColoring PartialColoring::symbolic() const {
  SymbolicColoring q(tree_->size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const int v = value(i);
    q[i] = v >= 0 ? SymbolicValue::constant(static_cast<std::uint8_t>(v))
                  : SymbolicValue::var(static_cast<std::int32_t>(root(i)), parity_[i] != 0);
  }
  return q;
}

Coloring PartialColoring::coloring() const {
  Coloring c(tree_->size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int v = value(i);
    if (v < 0) throw std::logic_error("coloring() on an incomplete partial coloring");
    c[i] = static_cast<std::uint8_t>(v);
  }
  return c;
}

bool definitively_non_canonical(const PartialColoring& q) { return canonicity_violated(q.tree(), q.symbolic()); }

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

enum class Step { kNone, kChanged, kContradiction };

// One statement chi(q) = r (mod 2^k), with chi(q) already in root variables.
Step apply_statement(PartialColoring& q, const LinearValue& lv, std::int64_t r, std::int64_t m) {
  std::size_t vars[2];
  std::int64_t coef[2];
  std::size_t count = 0;
  for (const auto& [var, c] : lv.terms) {
    if (mod(c, m) == 0) continue;
    if (count == 2) return Step::kNone;
    vars[count] = var;
    coef[count] = c;
    ++count;
  }
  const std::int64_t target = mod(r, m);
  auto holds = [&](std::int64_t x, std::int64_t y) {
    std::int64_t v = lv.constant + coef[0] * x;
    if (count == 2) v += coef[1] * y;
    return mod(v, m) == target;
  };
  if (count == 0) return mod(lv.constant, m) == target ? Step::kNone : Step::kContradiction;
  if (count == 1) {
    const bool ok0 = holds(0, 0);
    const bool ok1 = holds(1, 0);
    if (ok0 && ok1) return Step::kNone;
    if (!ok0 && !ok1) return Step::kContradiction;
    q.assign(vars[0], ok1 ? 1 : 0);
    return Step::kChanged;
  }

  const bool v00 = holds(0, 0), v01 = holds(0, 1), v10 = holds(1, 0), v11 = holds(1, 1);
  const int valid = v00 + v01 + v10 + v11;
  if (valid == 0) return Step::kContradiction;
  if (valid == 4 || valid == 3) return Step::kNone;
  if (valid == 1) {
    // A single solution fixes both variables.
    const std::uint8_t x = (v10 || v11) ? 1 : 0;
    const std::uint8_t y = (v01 || v11) ? 1 : 0;
    q.assign(vars[0], x);
    q.assign(vars[1], y);
    return Step::kChanged;
  }
  if (v00 && v11) {
    q.unite(vars[0], vars[1], 0);
    return Step::kChanged;
  }
  if (v01 && v10) {
    q.unite(vars[0], vars[1], 1);
    // Which of the two completions can still be canonical?
    PartialColoring with0 = q;
    with0.assign(vars[0], 0);
    PartialColoring with1 = q;
    with1.assign(vars[0], 1);
    const bool bad0 = definitively_non_canonical(with0);
    const bool bad1 = definitively_non_canonical(with1);
    if (bad0 && bad1) return Step::kContradiction;
    if (bad0) q = std::move(with1);
    else if (bad1) q = std::move(with0);
    return Step::kChanged;
  }
  // The two valid pairs share a coordinate: that coordinate is forced.
  if (v00 && v01) q.assign(vars[0], 0);
  else if (v10 && v11) q.assign(vars[0], 1);
  else if (v00 && v10) q.assign(vars[1], 0);
  else q.assign(vars[1], 1);
  return Step::kChanged;
}

}  // namespace

Propagation propagate(const CharacterTable& chars, PartialColoring& q, std::int64_t r) {
  const int n = chars.tree().depth();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const TreeCharacter& chi : chars.all()) {
      for (int k = 2; k <= n; ++k) {
        const LinearValue lv = q.evaluate(chi);
        if (lv.is_constant() && k > 2) {
          // Constant statements only need the strongest modulus.
          if (mod(lv.constant, std::int64_t{1} << n) != mod(r, std::int64_t{1} << n)) return Propagation::kContradiction;
          break;
        }
        const Step s = apply_statement(q, lv, r, std::int64_t{1} << k);
        if (s == Step::kContradiction) return Propagation::kContradiction;
        if (s == Step::kChanged) changed = true;
      }
    }
  }
  return Propagation::kUpdated;
}

bool constant_eigenvalue_prune(const CharacterTable& chars, const PartialColoring& q, std::int64_t r) {
  const std::int64_t s = r - static_cast<std::int64_t>(chars.tree().modulus());
  for (std::size_t owner = 1; owner < chars.size(); ++owner) {
    const LinearValue lv = q.evaluate(chars[owner]);
    if (lv.is_constant() && lv.constant != r && lv.constant != s) return true;
  }
  return false;
}

namespace {

void search_node(const CharacterTable& chars, PartialColoring q, std::int64_t r, std::vector<Coloring>& out,
                 SearchStats& stats, bool at_root) {
  ++stats.nodes;
  if (propagate(chars, q, r) == Propagation::kContradiction) return;
  if (at_root) stats.free_after_root_propagation = q.free_variables().size();
  if (constant_eigenvalue_prune(chars, q, r)) return;
  if (definitively_non_canonical(q)) return;

  const std::vector<std::size_t> free = q.free_variables();
  if (free.empty()) {
    ++stats.leaves;
    Coloring c = q.coloring();
    if (!is_canonical(chars.tree(), c)) return;
    const auto rec = is_pds_by_eigenvalues(chars, c);
    if (!rec || rec->r != r) return;
    out.push_back(std::move(c));
    return;
  }
  ++stats.branches;
  for (std::uint8_t v : {0, 1}) {
    PartialColoring child = q;
    child.assign(free.front(), v);
    search_node(chars, std::move(child), r, out, stats, false);
  }
}

}  // namespace

std::vector<Coloring> search(const CharacterTable& chars, const LmPartialColoring& seed, std::int64_t r,
                             SearchStats* stats) {
  SearchStats local;
  std::vector<Coloring> out;
  search_node(chars, PartialColoring(chars.tree(), seed), r, out, local, true);
  if (stats) *stats = local;
  return out;
}

namespace {

struct LogState {
  std::set<std::pair<std::size_t, std::int64_t>> done;
  std::map<std::pair<std::size_t, std::int64_t>, std::vector<std::string>> found;
};

bool parse_field(const std::string& token, const std::string& key, std::string& out) {
  if (token.rfind(key + "=", 0) != 0) return false;
  out = token.substr(key.size() + 1);
  return true;
}

// Unparseable lines (e.g. a torn final write) are ignored; an item counts as
// done only if its done line is present and its found lines add up.
LogState read_log(const std::filesystem::path& path) {
  LogState st;
  std::ifstream in(path);
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> claimed;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind, a, b, c;
    ls >> kind >> a >> b >> c;
    std::string seed_s, r_s, rest;
    if (!parse_field(a, "seed", seed_s) || !parse_field(b, "r", r_s)) continue;
    std::pair<std::size_t, std::int64_t> key;
    try {
      key = {std::stoul(seed_s), std::stoll(r_s)};
    } catch (const std::exception&) {
      continue;
    }
    if (kind == "found" && parse_field(c, "bits", rest)) {
      st.found[key].push_back(rest);
    } else if (kind == "done" && parse_field(c, "found", rest)) {
      try {
        claimed[key] = std::stoul(rest);
      } catch (const std::exception&) {
      }
    }
  }
  for (const auto& [key, count] : claimed) {
    auto& f = st.found[key];
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.size() == count) st.done.insert(key);
  }
  return st;
}

}  // namespace

EnumerateResult enumerate_all(const CharacterTable& chars, const EnumerateOptions& options) {
  const OrbitTree& tree = chars.tree();
  const std::vector<LmPartialColoring> seeds = lm_partial_colorings(tree);
  const FeasibilityEngine engine(chars);

  EnumerateResult result;
  result.seeds = seeds.size();
  std::vector<WorkItem> items;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (options.seed_index && *options.seed_index != i) continue;
    for (std::int64_t r : engine.feasible_eigenvalues(seeds[i])) {
      if (options.r && *options.r != r) continue;
      items.push_back({i, r, {}, false});
    }
  }
  result.feasible_items = items.size();

  LogState log;
  if (options.resume && !options.checkpoint.empty() && std::filesystem::exists(options.checkpoint)) {
    log = read_log(options.checkpoint);
  }
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto key = std::make_pair(items[i].seed_index, items[i].r);
    if (log.done.count(key)) {
      items[i].resumed = true;
      for (const std::string& bits : log.found[key]) items[i].found.push_back(decode(tree.depth(), bits));
    } else {
      pending.push_back(i);
    }
  }
  if (options.max_items && pending.size() > *options.max_items) pending.resize(*options.max_items);

  std::ofstream log_out;
  if (!options.checkpoint.empty()) {
    log_out.open(options.checkpoint, options.resume ? std::ios::app : std::ios::trunc);
    if (!log_out) throw std::runtime_error("cannot open checkpoint log " + options.checkpoint.string());
  }
  std::mutex mu;
  for (const WorkItem& item : items) {
    if (item.resumed && options.on_item) options.on_item(item);
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= pending.size()) return;
      WorkItem& item = items[pending[slot]];
      try {
        item.found = search(chars, seeds[item.seed_index], item.r);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
      std::lock_guard lock(mu);
      if (log_out.is_open()) {
        std::string block;
        for (const Coloring& c : item.found) {
          block += "found seed=" + std::to_string(item.seed_index) + " r=" + std::to_string(item.r) +
                   " bits=" + encode(tree, c) + "\n";
        }
        block += "done seed=" + std::to_string(item.seed_index) + " r=" + std::to_string(item.r) +
                 " found=" + std::to_string(item.found.size()) + "\n";
        log_out << block << std::flush;
      }
      if (options.on_item) options.on_item(item);
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  result.searched = pending.size();
  std::vector<std::uint8_t> searched(items.size(), 0);
  for (std::size_t p : pending) searched[p] = 1;
  std::set<Coloring> seen;
  std::size_t covered = 0;
  for (const WorkItem& item : items) {
    if (item.resumed) ++result.resumed;
    if (!item.resumed && !searched[static_cast<std::size_t>(&item - items.data())]) continue;
    ++covered;
    for (const Coloring& c : item.found) {
      if (!seen.insert(c).second) throw std::logic_error("coloring reported by two work items: " + encode(tree, c));
      auto rec = is_pds_by_eigenvalues(chars, c);
      if (!rec || rec->r != item.r) throw std::logic_error("search result failed verification: " + encode(tree, c));
      result.records.push_back(std::move(*rec));
    }
  }
  result.complete = covered == items.size();
  std::sort(result.records.begin(), result.records.end(), [&](const PdsRecord& a, const PdsRecord& b) {
    if (a.k != b.k) return a.k < b.k;
    return encode(tree, a.coloring) < encode(tree, b.coloring);
  });
  return result;
}

}  // namespace pds
