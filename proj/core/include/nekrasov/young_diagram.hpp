#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace nekrasov {

/// Young diagram stored as column heights lambda_1 >= lambda_2 >= ... > 0.
/// Box (i, j) sits in column i and row j, both 1-based, and belongs to the
/// diagram iff j <= lambda_i.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless heights are positive and weakly
  /// decreasing.
  explicit YoungDiagram(std::vector<int> columns);

  const std::vector<int>& columns() const { return columns_; }
  int width() const { return static_cast<int>(columns_.size()); }
  int size() const { return size_; }
  bool empty() const { return columns_.empty(); }

  /// lambda_i, or 0 beyond the width.
  int column(int i) const { return i >= 1 && i <= width() ? columns_[i - 1] : 0; }
  /// lambda'_j, the length of row j.
  int row(int j) const;
  bool contains(int i, int j) const { return j >= 1 && j <= column(i); }

  YoungDiagram transpose() const;

  /// Boxes in column-major order: (1,1), (1,2), ..., (2,1), ...
  std::vector<std::pair<int, int>> boxes() const;

  /// lambda_i - j and lambda'_j - i for any (i, j); the values are negative
  /// when the box lies outside this diagram.
  int relative_arm(int i, int j) const { return column(i) - j; }
  int relative_leg(int i, int j) const { return row(j) - i; }

  /// "[3,1]"; the empty diagram is "[]".
  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> columns_;
  int size_ = 0;
};

/// Enumeration order: smaller size first, then reverse-lexicographic on
/// columns ([2] before [1,1]).
std::strong_ordering diagram_order(const YoungDiagram& a, const YoungDiagram& b);

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

/// Arm and leg length of a box of the diagram. Throws OutOfDiagram.
ArmLeg arm_leg(const YoungDiagram& y, int i, int j);

/// Number of boxes with l + (i-1) + (j-1) even (first) and odd (second).
std::pair<int, int> colored_sizes(const YoungDiagram& y, int color);

/// All partitions of n as diagrams, in diagram_order.
std::vector<YoungDiagram> partitions(int n);

/// All r-tuples of diagrams with total size n, lexicographic in
/// diagram_order.
std::vector<std::vector<YoungDiagram>> diagram_tuples(int r, int n);

std::string tuple_to_string(const std::vector<YoungDiagram>& ys);

}  // namespace nekrasov
