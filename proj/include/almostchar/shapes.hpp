#pragma once

#include <compare>
#include <span>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "almostchar/half_laurent.hpp"
#include "almostchar/kind.hpp"

namespace almostchar {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else out of order throws InvalidInput.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// 0-based part lookup, 0 past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;

  /// Exponent notation, e.g. "2^21" for (2,2,1), "-" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct BiPartition {
  Partition alpha;
  Partition beta;

  int size() const { return alpha.size() + beta.size(); }
  BiPartition swapped() const { return {beta, alpha}; }
  bool contains(const BiPartition& inner) const {
    return alpha.contains(inner.alpha) && beta.contains(inner.beta);
  }
  /// "(alpha;beta)" in exponent notation.
  std::string to_string() const;

  friend bool operator==(const BiPartition&, const BiPartition&) = default;
  friend std::strong_ordering operator<=>(const BiPartition&, const BiPartition&) = default;
};

struct BiPartitionHash {
  std::size_t operator()(const BiPartition& b) const noexcept;
};

enum class Side { Alpha, Beta };

/// 1-indexed position in the outer Young diagram of one component.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// outer / inner, componentwise.
class SkewBiShape {
 public:
  /// Throws InvalidInput unless inner is contained in outer.
  SkewBiShape(BiPartition outer, BiPartition inner);

  const BiPartition& outer() const { return outer_; }
  const BiPartition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  /// Cells of one component, row-major.
  std::vector<Cell> cells(Side side) const;

 private:
  BiPartition outer_;
  BiPartition inner_;
};

struct StripComponent {
  Side side;
  std::vector<Cell> cells;
  int rows;
  int cols;
  bool border_strip;
};

struct StripClassification {
  std::vector<StripComponent> components;
  bool broken_border_strip;
};

/// Connected components (edge adjacency, never across alpha/beta).
StripClassification strip_classify(const SkewBiShape& x);

/// U^{m-1} * prod_Y u^{(c(Y)-1)/2} (-u^{-1/2})^{r(Y)-1} for a broken border strip, else 0.
HalfLaurent delta(const SkewBiShape& x);

/// The barred weight of a connected border strip, using the content ct (kind B)
/// or ct' (kind D) on sharp and dull corners; 0 for anything else.
HalfLaurent delta_bar(const SkewBiShape& x, Kind kind);

/// Every inner bipartition with |outer/inner| = m, ordered by inner.
std::vector<std::pair<BiPartition, SkewBiShape>> remove_strips(const BiPartition& outer, int m);

/// All sub-partitions q of p such that p/q contains no 2x2 block, paired with |p/q|.
/// These are exactly the removals that can carry a nonzero delta on one side.
std::vector<std::pair<Partition, int>> rim_removals(const Partition& p);

/// All sub-partitions of p (including p and the empty partition), lexicographic.
std::vector<Partition> subpartitions(const Partition& p);

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Ordered pairs of partitions with total size n, increasing order.
std::vector<BiPartition> bipartitions_of(int n);

}  // namespace almostchar
