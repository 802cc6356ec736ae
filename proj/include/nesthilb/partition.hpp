#pragma once

#include "nesthilb/laurent.hpp"

#include <compare>
#include <string>
#include <vector>

namespace nesthilb {

/// Cell (row, column) of a Young diagram, zero-based. The cell (a, b)
/// carries the monomial t1^a t2^b.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// Part i (zero-based); 0 beyond the length.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  bool contains(Cell c) const { return c.row >= 0 && c.col >= 0 && c.col < part(c.row); }
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  /// this ⊆ other: l(this) <= l(other) and part_i <= other.part_i.
  bool is_contained_in(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Pair inner ⊆ outer of partitions, a torus fixed point of the nested
/// Hilbert scheme of C^2.
struct NestedPair {
  Partition outer;
  Partition inner;

  /// Throws std::invalid_argument if inner is not contained in outer.
  NestedPair(Partition outer_, Partition inner_);

  friend auto operator<=>(const NestedPair&, const NestedPair&) = default;
};

/// All partitions of n in descending lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

/// All (outer ⊢ n1, inner ⊢ n2) with inner ⊆ outer; outer varies slowest,
/// both in enumerate_partitions order. Throws std::invalid_argument
/// ("empty nesting range") when n1 < n2.
std::vector<NestedPair> enumerate_nested_pairs(int n1, int n2);

/// Torus character of O/I for the monomial ideal of mu: sum of t1^row t2^col.
LaurentPoly z_character(const Partition& mu);

}  // namespace nesthilb
