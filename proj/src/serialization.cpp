#include "pds/serialization.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pds {

FormatError::FormatError(const std::string& what, std::size_t row, std::size_t offset)
    : std::runtime_error(what + " (row " + std::to_string(row) + ", offset " + std::to_string(offset) + ")"),
      row_(row),
      offset_(offset) {}

std::string encode(const OrbitTree& tree, const Coloring& c) {
  std::string out;
  out.reserve(tree.size() + static_cast<std::size_t>(tree.depth()));
  for (int row = 0; row <= tree.depth(); ++row) {
    if (row) out.push_back(';');
    for (std::size_t j = 0; j < row_width(row); ++j) out.push_back(c[row_offset(row) + j] ? '1' : '0');
  }
  return out;
}

namespace {

std::string expand_row(std::string_view row, std::size_t row_index) {
  std::string out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
  };
  auto read_exponent = [&]() -> std::size_t {
    skip_space();
    if (i >= row.size() || row[i] != '^') return 1;
    ++i;
    skip_space();
    const bool braced = i < row.size() && row[i] == '{';
    if (braced) ++i;
    const std::size_t start = i;
    std::size_t e = 0;
    while (i < row.size() && std::isdigit(static_cast<unsigned char>(row[i]))) e = e * 10 + static_cast<std::size_t>(row[i++] - '0');
    if (i == start) throw FormatError("missing exponent", row_index, i);
    if (braced) {
      if (i >= row.size() || row[i] != '}') throw FormatError("unterminated exponent brace", row_index, i);
      ++i;
    }
    return e;
  };

  while (true) {
    skip_space();
    if (i >= row.size()) break;
    const char ch = row[i];
    if (ch == '0' || ch == '1') {
      ++i;
      out.append(read_exponent(), ch);
    } else if (ch == '(') {
      const std::size_t open = i++;
      std::string pattern;
      while (i < row.size() && row[i] != ')') {
        if (row[i] == '0' || row[i] == '1') pattern.push_back(row[i]);
        else if (!std::isspace(static_cast<unsigned char>(row[i])))
          throw FormatError(std::string("unexpected character '") + row[i] + "' in group", row_index, i);
        ++i;
      }
      if (i >= row.size()) throw FormatError("unterminated group", row_index, open);
      ++i;
      const std::size_t e = read_exponent();
      for (std::size_t k = 0; k < e; ++k) out += pattern;
    } else {
      throw FormatError(std::string("unexpected character '") + ch + "'", row_index, i);
    }
  }
  return out;
}

}  // namespace

Coloring decode(int n, std::string_view s) {
  if (n < 0 || n > 11) throw FormatError("unsupported depth " + std::to_string(n), 0, 0);
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = s.find(';', start);
    rows.push_back(s.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (rows.size() != static_cast<std::size_t>(n) + 1) {
    throw FormatError("expected " + std::to_string(n + 1) + " rows, found " + std::to_string(rows.size()),
                      rows.size() - 1, 0);
  }
  Coloring c(tree_size(n));
  for (std::size_t row = 0; row < rows.size(); ++row) {
    const std::string bits = expand_row(rows[row], row);
    const std::size_t width = row_width(static_cast<int>(row));
    if (bits.size() != width) {
      throw FormatError("row width " + std::to_string(bits.size()) + ", expected " + std::to_string(width), row,
                        std::min(bits.size(), width));
    }
    for (std::size_t j = 0; j < width; ++j) c[row_offset(static_cast<int>(row)) + j] = bits[j] == '1';
  }
  return c;
}

std::string runlength_row(std::string_view row) {
  std::vector<std::string> tokens;
  std::string singles;
  auto flush_singles = [&] {
    if (!singles.empty()) tokens.push_back(std::move(singles));
    singles.clear();
  };
  auto is_primitive = [](std::string_view p) {
    for (std::size_t d = 1; d < p.size(); ++d) {
      if (p.size() % d) continue;
      bool periodic = true;
      for (std::size_t k = d; k < p.size() && periodic; ++k) periodic = p[k] == p[k - d];
      if (periodic) return false;
    }
    return true;
  };

  std::size_t i = 0;
  while (i < row.size()) {
    std::size_t run = 1;
    while (i + run < row.size() && row[i + run] == row[i]) ++run;
    std::size_t best_len = 0;
    std::size_t best_reps = 0;
    for (std::size_t p = 2; p <= 16 && i + 2 * p <= row.size(); ++p) {
      const std::string_view pattern = row.substr(i, p);
      if (!is_primitive(pattern)) continue;
      std::size_t reps = 1;
      while (i + (reps + 1) * p <= row.size() && row.substr(i + reps * p, p) == pattern) ++reps;
      if (reps >= 2 && reps * p > best_len * best_reps) {
        best_len = p;
        best_reps = reps;
      }
    }
    if (best_reps >= 2 && best_len * best_reps > run) {
      flush_singles();
      tokens.push_back("(" + std::string(row.substr(i, best_len)) + ")^" + std::to_string(best_reps));
      i += best_len * best_reps;
    } else if (run >= 2) {
      flush_singles();
      tokens.push_back(std::string(1, row[i]) + "^" + std::to_string(run));
      i += run;
    } else {
      singles.push_back(row[i]);
      ++i;
    }
  }
  flush_singles();
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

std::string encode_runlength(const OrbitTree& tree, const Coloring& c) {
  const std::string plain = encode(tree, c);
  std::string out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = plain.find(';', start);
    out += runlength_row(std::string_view(plain).substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    out.push_back(';');
    start = semi + 1;
  }
  return out;
}

std::string record_header(const PdsRecord& rec) {
  std::ostringstream os;
  os << "k=" << rec.k << " r=" << rec.r << '^' << rec.mult_r << " s=" << rec.s << '^' << rec.mult_s
     << " class=" << to_string(rec.class_tag);
  return os.str();
}

void write_records(std::ostream& out, const OrbitTree& tree, const std::vector<PdsRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << '\n';
    out << record_header(records[i]) << '\n' << encode(tree, records[i].coloring) << '\n';
  }
}

namespace {

bool parse_power(std::string_view field, std::string_view key, std::int64_t& base, std::int64_t& exponent) {
  if (field.substr(0, key.size()) != key) return false;
  const std::string body(field.substr(key.size()));
  const std::size_t caret = body.find('^');
  if (caret == std::string::npos) return false;
  try {
    std::size_t used = 0;
    base = std::stoll(body.substr(0, caret), &used);
    if (used != caret) return false;
    exponent = std::stoll(body.substr(caret + 1), &used);
    return used == body.size() - caret - 1;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<RecordBlock> read_record_blocks(std::istream& in) {
  std::vector<RecordBlock> blocks;
  std::string line;
  std::size_t line_no = 0;
  std::optional<RecordBlock> pending;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (pending) throw FormatError("record header without bits line", line_no, 0);
      continue;
    }
    if (!pending) {
      std::istringstream fields(line);
      std::string kf, rf, sf, cf;
      fields >> kf >> rf >> sf >> cf;
      RecordBlock b;
      b.line = line_no;
      bool ok = kf.rfind("k=", 0) == 0 && cf.rfind("class=", 0) == 0;
      if (ok) {
        try {
          std::size_t used = 0;
          b.k = std::stoll(kf.substr(2), &used);
          ok = used == kf.size() - 2;
        } catch (const std::exception&) {
          ok = false;
        }
      }
      ok = ok && parse_power(rf, "r=", b.r, b.mult_r) && parse_power(sf, "s=", b.s, b.mult_s);
      if (!ok) throw FormatError("malformed record header '" + line + "'", line_no, 0);
      b.class_tag = cf.substr(6);
      pending = b;
    } else {
      pending->bits = line;
      blocks.push_back(std::move(*pending));
      pending.reset();
    }
  }
  if (pending) throw FormatError("record header without bits line", line_no, 0);
  return blocks;
}

}  // namespace pds
