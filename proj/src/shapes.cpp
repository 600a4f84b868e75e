#include "schurpb/shapes.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <cmath>
#include <cstdlib>

namespace schurpb {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw InputError("partition parts must be positive, got " +
                       std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("partition parts must be non-increasing");
    weight_ += parts_[i];
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  text = trim(text);
  if (text.empty()) throw InputError("empty shape");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    int v = 0;
    if (!parse_int(item, v))
      throw InputError("shape entry '" + std::string(trim(item)) +
                       "' is not an integer");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::row_length(int row) const {
  if (row < 1 || row > length()) return 0;
  return parts_[static_cast<std::size_t>(row - 1)];
}

bool Partition::contains(Cell c) const {
  return c.col >= 1 && c.col <= row_length(c.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(weight_));
  for (int i = 1; i <= length(); ++i)
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  return out;
}

int Partition::cell_index(Cell c) const {
  int idx = 0;
  for (int i = 1; i < c.row; ++i) idx += row_length(i);
  return idx + c.col - 1;
}

bool Partition::is_hook() const {
  if (length() < 2 || parts_.front() < 2) return false;
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] != 1) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Cell> corners(const Partition& shape) {
  std::vector<Cell> out;
  for (int i = 1; i <= shape.length(); ++i) {
    const Cell c{i, shape.row_length(i)};
    if (!shape.contains({i + 1, c.col})) out.push_back(c);
  }
  return out;
}

Partition conjugate(const Partition& shape) {
  std::vector<int> parts;
  for (int j = 1; j <= shape.arm(); ++j) {
    int len = 0;
    while (shape.contains({len + 1, j})) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

bool is_semistandard(const Tableau<int>& t) {
  const Partition& sh = t.shape();
  for (const Cell& c : sh.cells()) {
    const int v = t.at(c);
    if (v < 1) return false;
    if (sh.contains({c.row, c.col + 1}) && t.at({c.row, c.col + 1}) < v)
      return false;
    if (sh.contains({c.row + 1, c.col}) && t.at({c.row + 1, c.col}) <= v)
      return false;
  }
  return true;
}

std::vector<std::vector<std::string>> parse_bracket_rows(std::string_view text) {
  text = trim(text);
  auto fail = [&](const std::string& why) {
    throw InputError("malformed tableau '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    fail("expected [[...],...]");
  std::string_view body = trim(text.substr(1, text.size() - 2));
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '[') fail("expected '[' to open a row");
    const std::size_t close = body.find(']', pos);
    if (close == std::string_view::npos) fail("unterminated row");
    const std::string_view inner = body.substr(pos + 1, close - pos - 1);
    if (inner.find('[') != std::string_view::npos) fail("nested brackets");
    std::vector<std::string> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = inner.find(',', start);
      const auto item = trim(inner.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - start));
      if (item.empty()) fail("empty entry in row " + std::to_string(rows.size() + 1));
      row.emplace_back(item);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    pos = close + 1;
    while (pos < body.size() &&
           std::isspace(static_cast<unsigned char>(body[pos])))
      ++pos;
    if (pos < body.size()) {
      if (body[pos] != ',') fail("expected ',' between rows");
      ++pos;
      while (pos < body.size() &&
             std::isspace(static_cast<unsigned char>(body[pos])))
        ++pos;
      if (pos >= body.size()) fail("trailing ','");
    }
  }
  if (rows.empty()) fail("no rows");
  return rows;
}

namespace {

template <class V, class Convert>
Tableau<V> parse_against(const Partition& shape, std::string_view text,
                         Convert convert) {
  const auto rows = parse_bracket_rows(text);
  if (static_cast<int>(rows.size()) != shape.length())
    throw InputError("tableau has " + std::to_string(rows.size()) +
                     " rows but shape " + shape.to_string() + " has " +
                     std::to_string(shape.length()));
  std::vector<V> values;
  for (int i = 1; i <= shape.length(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != shape.row_length(i))
      throw InputError("tableau row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, shape needs " +
                       std::to_string(shape.row_length(i)));
    for (int j = 1; j <= shape.row_length(i); ++j)
      values.push_back(convert(row[static_cast<std::size_t>(j - 1)], Cell{i, j}));
  }
  return Tableau<V>(shape, std::move(values));
}

}  // namespace

Tableau<int> parse_int_tableau(const Partition& shape, std::string_view text) {
  return parse_against<int>(shape, text, [](const std::string& s, Cell c) {
    int v = 0;
    if (!parse_int(s, v))
      throw InputError("cell " + to_string(c) + ": '" + s +
                       "' is not an integer");
    return v;
  });
}

Tableau<double> parse_real_tableau(const Partition& shape,
                                   std::string_view text) {
  return parse_against<double>(shape, text, [](const std::string& s, Cell c) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
      throw InputError("cell " + to_string(c) + ": '" + s +
                       "' is not a real number");
    return v;
  });
}

Tableau<std::string> parse_symbol_tableau(const Partition& shape,
                                          std::string_view text) {
  return parse_against<std::string>(shape, text,
                                    [](const std::string& s, Cell) { return s; });
}

namespace detail {

SsytPlan plan_ssyt(const Partition& shape, std::span<const int> corner_bounds) {
  const auto cs = shape.cells();
  const auto cn = corners(shape);
  if (corner_bounds.size() != cn.size())
    throw InputError("expected " + std::to_string(cn.size()) +
                     " corner bounds, got " + std::to_string(corner_bounds.size()));
  const int n = static_cast<int>(cs.size());
  SsytPlan plan;
  plan.left.assign(static_cast<std::size_t>(n), -1);
  plan.above.assign(static_cast<std::size_t>(n), -1);
  plan.upper.assign(static_cast<std::size_t>(n), INT_MAX);
  for (int i = 0; i < n; ++i) {
    const Cell c = cs[static_cast<std::size_t>(i)];
    if (c.col > 1) plan.left[i] = shape.cell_index({c.row, c.col - 1});
    if (c.row > 1) plan.above[i] = shape.cell_index({c.row - 1, c.col});
  }
  for (std::size_t k = 0; k < cn.size(); ++k)
    plan.upper[shape.cell_index(cn[k])] = corner_bounds[k];
  // Entries weakly increase to the right and strictly increase downwards, so
  // each cell inherits a bound from its right and lower neighbours.
  for (int i = n - 1; i >= 0; --i) {
    const Cell c = cs[static_cast<std::size_t>(i)];
    int u = plan.upper[i];
    if (shape.contains({c.row, c.col + 1}))
      u = std::min(u, plan.upper[shape.cell_index({c.row, c.col + 1})]);
    if (shape.contains({c.row + 1, c.col}))
      u = std::min(u, plan.upper[shape.cell_index({c.row + 1, c.col})] - 1);
    plan.upper[i] = u;
    // The smallest possible entry at (i, j) is i.
    if (u < c.row) plan.feasible = false;
  }
  return plan;
}

}  // namespace detail

std::vector<Ssyt> enumerate_ssyt(const Partition& shape,
                                 std::span<const int> corner_bounds) {
  std::vector<Ssyt> out;
  for_each_ssyt(shape, corner_bounds, [&](std::span<const int> e) {
    out.emplace_back(shape, std::vector<int>(e.begin(), e.end()));
  });
  return out;
}

std::size_t count_ssyt(const Partition& shape, int max_entry) {
  std::vector<int> bounds(corners(shape).size(), max_entry);
  std::size_t count = 0;
  for_each_ssyt(shape, bounds, [&](std::span<const int>) { ++count; });
  return count;
}

std::vector<std::vector<int>> level_assignments(std::span<const Cell> cells) {
  const int n = static_cast<int>(cells.size());
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Process cells in row-major order so left/upper neighbours come first.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cells[static_cast<std::size_t>(a)] < cells[static_cast<std::size_t>(b)];
  });
  std::vector<int> left(static_cast<std::size_t>(n), -1);
  std::vector<int> above(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    const Cell c = cells[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
    for (int q = 0; q < p; ++q) {
      const Cell d = cells[static_cast<std::size_t>(order[static_cast<std::size_t>(q)])];
      if (d.row == c.row && d.col == c.col - 1) left[static_cast<std::size_t>(p)] = q;
      if (d.col == c.col && d.row == c.row - 1) above[static_cast<std::size_t>(p)] = q;
    }
  }
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  std::vector<int> used(static_cast<std::size_t>(n + 2), 0);
  std::function<void(int)> place = [&](int p) {
    if (p == n) {
      int depth = 0;
      for (int v : level) depth = std::max(depth, v);
      for (int v = 1; v <= depth; ++v)
        if (used[static_cast<std::size_t>(v)] == 0) return;
      std::vector<int> result(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q)
        result[static_cast<std::size_t>(order[static_cast<std::size_t>(q)])] =
            level[static_cast<std::size_t>(q)];
      out.push_back(std::move(result));
      return;
    }
    const auto pi = static_cast<std::size_t>(p);
    int lo = 1;
    if (left[pi] >= 0) lo = std::max(lo, level[static_cast<std::size_t>(left[pi])]);
    if (above[pi] >= 0) lo = std::max(lo, level[static_cast<std::size_t>(above[pi])] + 1);
    for (int v = lo; v <= n; ++v) {
      level[pi] = v;
      ++used[static_cast<std::size_t>(v)];
      place(p + 1);
      --used[static_cast<std::size_t>(v)];
    }
    level[pi] = 0;
  };
  place(0);
  return out;
}

std::vector<LevelMap> enumerate_level_maps(const Partition& shape) {
  const auto cs = shape.cells();
  std::vector<LevelMap> out;
  for (auto& levels : level_assignments(cs)) {
    LevelMap m;
    m.shape = shape;
    m.depth = levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
    m.level = std::move(levels);
    out.push_back(std::move(m));
  }
  return out;
}

BigInt hook_length_count(const Partition& shape) {
  const Partition conj = conjugate(shape);
  BigInt denom = 1;
  for (const Cell& c : shape.cells()) {
    const int hook = (shape.row_length(c.row) - c.col) +
                     (conj.row_length(c.col) - c.row) + 1;
    denom *= hook;
  }
  return factorial(shape.weight()) / denom;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  if (n > 0) rec(n, n);
  return out;
}

}  // namespace schurpb
