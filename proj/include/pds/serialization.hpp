#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pds/coloring.hpp"
#include "pds/orbit_tree.hpp"
#include "pds/verify.hpp"

namespace pds {

/// Raised for strings or record files that do not parse.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t row, std::size_t offset);

  std::size_t row() const { return row_; }
  std::size_t offset() const { return offset_; }

 private:
  std::size_t row_;
  std::size_t offset_;
};

/// Rows joined by ';' in row-major order, e.g. "0;110;110010;101010101011".
std::string encode(const OrbitTree& tree, const Coloring& c);

/// Inverse of encode. Also accepts run-length rows such as
/// "0;1^2 0;1^2 0^2 10;(10)^5 1^2", with optional braces around exponents.
Coloring decode(int n, std::string_view s);

/// Display form: each row compressed with b^e atoms and (pattern)^e groups.
std::string encode_runlength(const OrbitTree& tree, const Coloring& c);

/// Run-length form of a single row of '0'/'1' characters.
std::string runlength_row(std::string_view row);

/// Header line of a record block: "k=36 r=4^27 s=-4^36 class=RHPDS_B".
std::string record_header(const PdsRecord& rec);

/// Record blocks: header line, bits line, blank line between blocks.
void write_records(std::ostream& out, const OrbitTree& tree, const std::vector<PdsRecord>& records);

/// A parsed record block. Header fields are as written; they are not re-derived.
struct RecordBlock {
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t mult_r = 0;
  std::int64_t s = 0;
  std::int64_t mult_s = 0;
  std::string class_tag;
  std::string bits;
  std::size_t line = 0;  // 1-based line of the header
};

std::vector<RecordBlock> read_record_blocks(std::istream& in);

}  // namespace pds
