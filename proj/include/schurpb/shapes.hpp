#pragma once

// Partitions, Young diagrams, tableaux, SSYT enumeration and the expansion
// of a Schur multiple zeta value into Euler-Zagier (or zeta-star) terms.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schurpb/numeric.hpp"

namespace schurpb {

// 1-based (row, col) position in a Young diagram.
struct Cell {
  int row = 1;
  int col = 1;
  auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

class Partition {
 public:
  Partition() = default;
  // Throws InputError unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  // Comma list, e.g. "4,4,3,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  // Length of the given 1-based row; 0 outside the diagram.
  int row_length(int row) const;
  bool contains(Cell c) const;

  // Cells in row-major order; a cell's position in this list is its index.
  std::vector<Cell> cells() const;
  int cell_index(Cell c) const;

  // (h, 1^{l-1}) with h, l >= 2, i.e. exactly two corners.
  bool is_hook() const;
  int arm() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Corners in row order.
std::vector<Cell> corners(const Partition& shape);
Partition conjugate(const Partition& shape);

// An assignment of values to the cells of a diagram, stored row-major.
template <class V>
class Tableau {
 public:
  Tableau() = default;
  Tableau(Partition shape, std::vector<V> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != shape_.weight())
      throw InputError("tableau has " + std::to_string(values_.size()) +
                       " values but shape " + shape_.to_string() + " has " +
                       std::to_string(shape_.weight()) + " cells");
  }

  // Builds a tableau whose shape is read off the row lengths.
  static Tableau from_rows(const std::vector<std::vector<V>>& rows) {
    std::vector<int> lengths;
    std::vector<V> flat;
    for (const auto& r : rows) {
      lengths.push_back(static_cast<int>(r.size()));
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return Tableau(Partition(std::move(lengths)), std::move(flat));
  }

  const Partition& shape() const { return shape_; }
  const std::vector<V>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const V& operator[](std::size_t i) const { return values_[i]; }
  V& operator[](std::size_t i) { return values_[i]; }
  const V& at(Cell c) const { return values_[checked_index(c)]; }
  V& at(Cell c) { return values_[checked_index(c)]; }

  std::vector<std::vector<V>> rows() const {
    std::vector<std::vector<V>> out;
    std::size_t pos = 0;
    for (int len : shape_.parts()) {
      out.emplace_back(values_.begin() + static_cast<std::ptrdiff_t>(pos),
                       values_.begin() + static_cast<std::ptrdiff_t>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Tableau<std::invoke_result_t<F, const V&>> {
    std::vector<std::invoke_result_t<F, const V&>> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(f(v));
    return {shape_, std::move(out)};
  }

  bool operator==(const Tableau&) const = default;

 private:
  std::size_t checked_index(Cell c) const {
    if (!shape_.contains(c))
      throw InputError("cell " + schurpb::to_string(c) + " outside shape " +
                       shape_.to_string());
    return static_cast<std::size_t>(shape_.cell_index(c));
  }

  Partition shape_;
  std::vector<V> values_;
};

// Tableau on the conjugate shape with t'(j,i) = t(i,j).
template <class V>
Tableau<V> transpose(const Tableau<V>& t) {
  const Partition conj = conjugate(t.shape());
  std::vector<V> values;
  values.reserve(t.size());
  for (const Cell& c : conj.cells()) values.push_back(t.at({c.col, c.row}));
  return {conj, std::move(values)};
}

using Ssyt = Tableau<int>;
using WeightTableau = Tableau<int>;

bool is_semistandard(const Tableau<int>& t);

// Row-major bracket text, e.g. "[[2,1],[3]]"; entries are returned verbatim
// (trimmed). Throws InputError on malformed brackets.
std::vector<std::vector<std::string>> parse_bracket_rows(std::string_view text);

// Parses a bracket list against an expected shape; diagnostics name the
// offending cell.
Tableau<int> parse_int_tableau(const Partition& shape, std::string_view text);
Tableau<double> parse_real_tableau(const Partition& shape, std::string_view text);
Tableau<std::string> parse_symbol_tableau(const Partition& shape,
                                          std::string_view text);

template <class V>
std::string format_tableau(const Tableau<V>& t) {
  std::string out = "[";
  bool first_row = true;
  for (const auto& row : t.rows()) {
    out += first_row ? "[" : ",[";
    first_row = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      if constexpr (std::is_same_v<V, std::string>)
        out += row[j];
      else
        out += std::to_string(row[j]);
    }
    out += "]";
  }
  return out + "]";
}

// --- SSYT enumeration -------------------------------------------------------

namespace detail {
struct SsytPlan {
  std::vector<int> left;   // row-major index of left neighbour or -1
  std::vector<int> above;  // row-major index of upper neighbour or -1
  std::vector<int> upper;  // largest admissible entry per cell
  bool feasible = true;
};
SsytPlan plan_ssyt(const Partition& shape, std::span<const int> corner_bounds);
}  // namespace detail

// Visits every SSYT whose entry at corner c (corners() order) is at most
// corner_bounds[c]. Entries are passed row-major. Visiting order is
// lexicographic in the row-major entries.
template <class Visit>
void for_each_ssyt(const Partition& shape, std::span<const int> corner_bounds,
                   Visit&& visit) {
  if (shape.empty()) {
    std::vector<int> none;
    visit(std::span<const int>(none));
    return;
  }
  const detail::SsytPlan plan = detail::plan_ssyt(shape, corner_bounds);
  if (!plan.feasible) return;
  const int n = shape.weight();
  std::vector<int> entry(static_cast<std::size_t>(n), 0);
  auto lower = [&](int i) {
    int lo = 1;
    if (plan.left[i] >= 0) lo = std::max(lo, entry[plan.left[i]]);
    if (plan.above[i] >= 0) lo = std::max(lo, entry[plan.above[i]] + 1);
    return lo;
  };
  int i = 0;
  entry[0] = lower(0) - 1;
  while (i >= 0) {
    if (entry[i] + 1 > plan.upper[i]) {
      --i;
      continue;
    }
    ++entry[i];
    if (i + 1 == n) {
      visit(std::span<const int>(entry));
    } else {
      ++i;
      entry[i] = lower(i) - 1;
    }
  }
}

std::vector<Ssyt> enumerate_ssyt(const Partition& shape,
                                 std::span<const int> corner_bounds);

// Number of SSYT of the shape with every entry <= max_entry.
std::size_t count_ssyt(const Partition& shape, int max_entry);

// --- level maps -------------------------------------------------------------

// Surjection of the diagram onto levels 1..depth, weakly increasing along
// rows and strictly increasing down columns.
struct LevelMap {
  Partition shape;
  std::vector<int> level;  // row-major
  int depth = 0;
};

std::vector<LevelMap> enumerate_level_maps(const Partition& shape);

// Level maps of an arbitrary set of cells (e.g. a skew diagram). Constraints
// only apply between cells that are both present. Each result is the level of
// every input cell, in input order; levels are 1-based and surjective.
std::vector<std::vector<int>> level_assignments(std::span<const Cell> cells);

// --- decompositions ---------------------------------------------------------

template <class V>
struct Composition {
  std::vector<V> parts;
  int sign = 1;
  bool operator==(const Composition&) const = default;
};

template <class V, class Plus = std::plus<V>>
Composition<V> collapse(const LevelMap& map, const Tableau<V>& s,
                        Plus plus = {}) {
  std::vector<std::vector<std::size_t>> by_level(
      static_cast<std::size_t>(map.depth));
  for (std::size_t i = 0; i < map.level.size(); ++i)
    by_level[static_cast<std::size_t>(map.level[i] - 1)].push_back(i);
  Composition<V> out;
  for (const auto& cells : by_level) {
    V acc = s[cells.front()];
    for (std::size_t j = 1; j < cells.size(); ++j) acc = plus(acc, s[cells[j]]);
    out.parts.push_back(std::move(acc));
  }
  return out;
}

// One composition per level map of the shape, in enumeration order.
template <class V, class Plus = std::plus<V>>
std::vector<Composition<V>> decompose_to_mzv(const Tableau<V>& s,
                                             Plus plus = {}) {
  std::vector<Composition<V>> out;
  for (const LevelMap& map : enumerate_level_maps(s.shape()))
    out.push_back(collapse(map, s, plus));
  return out;
}

// Signed zeta-star expansion: level maps of the conjugate shape applied to
// the transposed tableau, each with sign (-1)^{|shape| - depth}.
template <class V, class Plus = std::plus<V>>
std::vector<Composition<V>> decompose_to_mzv_star(const Tableau<V>& s,
                                                  Plus plus = {}) {
  const Tableau<V> st = transpose(s);
  const int n = s.shape().weight();
  std::vector<Composition<V>> out;
  for (const LevelMap& map : enumerate_level_maps(st.shape())) {
    Composition<V> c = collapse(map, st, plus);
    c.sign = ((n - map.depth) % 2 == 0) ? 1 : -1;
    out.push_back(std::move(c));
  }
  return out;
}

// Number of standard Young tableaux (hook-length formula).
BigInt hook_length_count(const Partition& shape);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace schurpb
