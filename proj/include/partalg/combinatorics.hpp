#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "partalg/number.hpp"

namespace partalg {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Throws unless parts are positive and weakly decreasing.
  explicit IntegerPartition(std::vector<int> parts);

  /// Reads "[6,5,3,3]" (brackets optional, "[]" for the empty partition).
  static IntegerPartition parse(std::string_view text);

  /// The one-row partition [n] (empty for n == 0).
  static IntegerPartition row(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Part i (0-based), or 0 past the end.
  int part(int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  /// Column length of column j (0-based).
  int column(int j) const noexcept;

  /// Removes one copy of the largest part.
  IntegerPartition without_first_row() const;
  bool contains(const IntegerPartition& inner) const noexcept;
  int multiplicity_of(int part_value) const noexcept;

  std::string to_string() const;

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct SkewShape {
  IntegerPartition outer;
  IntegerPartition inner;
  /// Throws unless inner fits inside outer.
  SkewShape(IntegerPartition outer_shape, IntegerPartition inner_shape);
  int size() const noexcept { return outer.size() - inner.size(); }
};

BigInt stirling2(int k, int t);
BigInt bell(int m);
/// Number of set partitions of an m-set into at most n blocks.
BigInt restricted_bell(int m, int n);

/// 1 + arm + leg of the cell at (row, col), both 0-based.
int hook_length(const IntegerPartition& lambda, int row, int col);
/// f^lambda by the hook length formula.
BigInt hook_dimension(const IntegerPartition& lambda);

/// Number of standard fillings of outer/inner, counted by peeling corners.
BigInt skew_count(const SkewShape& shape);
/// Same count from Aitken's determinant N! det[1/(outer_i - inner_j - i + j)!].
BigInt skew_count_aitken(const SkewShape& shape);
/// Every standard filling of the skew shape; entry [r][c] is 0 on inner cells.
std::vector<std::vector<std::vector<int>>> standard_skew_tableaux(
    const SkewShape& shape);

/// Kostka number K_{lambda,[n-t,1^t]} = f^{lambda/[n-t]} (0 when lambda_1 < n-t).
BigInt kostka_hook(const IntegerPartition& lambda, int t);

/// Partitions of n in reverse lexicographic order ([n] first).
std::vector<IntegerPartition> integer_partitions(int n);
/// Shapes obtained by deleting one removable corner, top row first.
std::vector<IntegerPartition> remove_box(const IntegerPartition& lambda);
/// Shapes obtained by adding one addable cell, top row first.
std::vector<IntegerPartition> add_box(const IntegerPartition& lambda);

}  // namespace partalg
