#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pds/characters.hpp"
#include "pds/serialization.hpp"
#include "pds/verify.hpp"

namespace testing {

inline std::string golden_path(int n) { return std::string(PDS_GOLDEN_DIR) + "/n" + std::to_string(n) + ".txt"; }

inline std::string golden_text(int n) {
  std::ifstream in(golden_path(n), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<pds::RecordBlock> golden_blocks(int n) {
  std::ifstream in(golden_path(n));
  return pds::read_record_blocks(in);
}

// Golden records re-derived through the eigenvalue check.
inline std::vector<pds::PdsRecord> golden_records(const pds::CharacterTable& chars) {
  std::vector<pds::PdsRecord> out;
  for (const auto& b : golden_blocks(chars.tree().depth())) {
    auto rec = pds::is_pds_by_eigenvalues(chars, pds::decode(chars.tree().depth(), b.bits));
    if (rec) out.push_back(*rec);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> child_lists(const pds::OrbitTree& tree) {
  std::vector<std::vector<std::size_t>> kids(tree.size());
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t c : tree.children(i)) kids[i].push_back(c);
  }
  return kids;
}

inline pds::Coloring permute(const pds::Coloring& c, const std::vector<std::size_t>& map) {
  pds::Coloring out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[map[i]] = c[i];
  return out;
}

}  // namespace testing
