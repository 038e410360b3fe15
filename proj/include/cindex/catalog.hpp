#pragma once

// Catalog text format.
//
//   group <label>
//   perm <degree>            followed by one line per generator: 1-based images
//   table <n>                followed by n rows of n 0-based product indices
//
// Blocks are separated by blank lines. Lines starting with '#' are comments.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cindex/group.hpp"

namespace cindex {

class ParseError : public GroupError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GroupError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::uint64_t> parse_numbers(std::string_view s, std::size_t line) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    if (s[i] < '0' || s[i] > '9') throw ParseError(line, "expected a non-negative integer");
    std::uint64_t v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (v > (std::uint64_t{1} << 40)) throw ParseError(line, "integer too large");
      ++i;
    }
    if (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') throw ParseError(line, "expected a non-negative integer");
    out.push_back(v);
  }
  return out;
}

inline std::size_t parse_count(std::string_view rest, std::size_t line, const char* what) {
  auto nums = parse_numbers(rest, line);
  if (nums.size() != 1 || nums[0] == 0) throw ParseError(line, std::string("expected a positive ") + what);
  return static_cast<std::size_t>(nums[0]);
}

}  // namespace detail

struct CatalogEntry {
  std::string label;
  std::size_t line = 0;  // line of the `group` header
  Group group;
};

inline std::vector<CatalogEntry> parse_catalog(std::string_view text, std::size_t cap = Group::kDefaultCap) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  std::vector<CatalogEntry> out;
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size()) {
      auto t = detail::trim(lines[i]);
      if (!t.empty() && t.front() != '#') break;
      ++i;
    }
  };
  while (true) {
    skip_blank();
    if (i >= lines.size()) break;
    const std::size_t header_line = i + 1;
    auto head = detail::trim(lines[i]);
    if (!head.starts_with("group")) throw ParseError(header_line, "expected 'group <label>'");
    std::string label(detail::trim(head.substr(5)));
    if (label.empty()) throw ParseError(header_line, "missing group label");
    ++i;
    if (i >= lines.size()) throw ParseError(i, "missing 'perm' or 'table' line");
    auto kind = detail::trim(lines[i]);
    const std::size_t kind_line = i + 1;
    ++i;
    try {
      if (kind.starts_with("perm")) {
        const std::size_t degree = detail::parse_count(kind.substr(4), kind_line, "degree");
        std::vector<std::vector<index_t>> gens;
        while (i < lines.size()) {
          auto t = detail::trim(lines[i]);
          if (t.empty() || t.starts_with("group")) break;
          if (t.front() == '#') {
            ++i;
            continue;
          }
          auto nums = detail::parse_numbers(t, i + 1);
          if (nums.size() != degree)
            throw ParseError(i + 1, "expected " + std::to_string(degree) + " images, got " + std::to_string(nums.size()));
          std::vector<index_t> img(degree);
          std::vector<bool> seen(degree, false);
          for (std::size_t k = 0; k < degree; ++k) {
            if (nums[k] < 1 || nums[k] > degree) throw ParseError(i + 1, "image out of range 1.." + std::to_string(degree));
            img[k] = static_cast<index_t>(nums[k] - 1);
            if (seen[img[k]]) throw ParseError(i + 1, "image list is not a permutation");
            seen[img[k]] = true;
          }
          gens.push_back(std::move(img));
          ++i;
        }
        out.push_back({label, header_line, Group::from_permutations(label, degree, gens, cap)});
      } else if (kind.starts_with("table")) {
        const std::size_t n = detail::parse_count(kind.substr(5), kind_line, "order");
        if (n > Group::kTableLimit) throw ParseError(kind_line, "table groups are limited to " + std::to_string(Group::kTableLimit) + " elements");
        if (n > cap) throw ParseError(kind_line, "table order exceeds element cap of " + std::to_string(cap));
        std::vector<index_t> table;
        table.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r, ++i) {
          if (i >= lines.size() || detail::trim(lines[i]).empty())
            throw ParseError(i, "table ends after " + std::to_string(r) + " rows");
          auto nums = detail::parse_numbers(detail::trim(lines[i]), i + 1);
          if (nums.size() != n) throw ParseError(i + 1, "expected " + std::to_string(n) + " entries, got " + std::to_string(nums.size()));
          for (auto v : nums) {
            if (v >= n) throw ParseError(i + 1, "entry " + std::to_string(v) + " out of range");
            table.push_back(static_cast<index_t>(v));
          }
        }
        out.push_back({label, header_line, Group::from_table(label, n, std::move(table))});
      } else {
        throw ParseError(kind_line, "expected 'perm <degree>' or 'table <n>'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const GroupError& e) {
      throw ParseError(header_line, "group '" + label + "': " + e.what());
    }
  }
  return out;
}

/// Parses exactly one catalog entry.
inline Group load_group(std::string_view text, std::size_t cap = Group::kDefaultCap) {
  auto entries = parse_catalog(text, cap);
  if (entries.size() != 1)
    throw ParseError(1, "expected exactly one group, found " + std::to_string(entries.size()));
  return entries.front().group;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GroupError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<CatalogEntry> load_catalog_file(const std::filesystem::path& path, std::size_t cap = Group::kDefaultCap) {
  return parse_catalog(read_text_file(path), cap);
}

/// Writes a group as a `table` block (round-trips through parse_catalog).
inline std::string to_table_block(const Group& g) {
  if (g.order() > Group::kTableLimit) throw GroupError("group too large for a table block");
  std::string out = "group " + g.label() + "\ntable " + std::to_string(g.order()) + "\n";
  for (index_t r = 0; r < g.order(); ++r) {
    for (index_t c = 0; c < g.order(); ++c) {
      if (c) out += ' ';
      out += std::to_string(g.mul(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace cindex
