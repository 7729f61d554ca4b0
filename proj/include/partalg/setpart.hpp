#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace partalg {

/// A set partition of {1,...,m}, stored as its restricted growth string:
/// label[i] is the 0-based index of the block containing element i+1, with
/// blocks numbered in order of their minimum elements. Equality, ordering
/// and hashing all act on this canonical string.
class SetPartition {
 public:
  SetPartition() = default;

  /// Canonicalizes an arbitrary labeling: elements with equal labels share
  /// a block. labels[i] belongs to element i+1.
  static SetPartition from_labels(const std::vector<int>& labels);

  /// Validates that the blocks partition {1,...,m}.
  static SetPartition from_blocks(std::size_t m,
                                  const std::vector<std::vector<int>>& blocks);

  /// Accepts either "1,4,5|2,8|3,6,7" or a JSON array of arrays.
  static SetPartition parse(std::string_view text);
  static SetPartition from_json(const nlohmann::json& j);

  static SetPartition singletons(std::size_t m);
  static SetPartition one_block(std::size_t m);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }

  /// 0-based block index of a 1-based element.
  int block_of(int element) const { return labels_.at(element - 1); }
  bool same_block(int a, int b) const { return block_of(a) == block_of(b); }

  const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }
  std::vector<std::vector<int>> blocks() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend std::strong_ordering operator<=>(const SetPartition& a,
                                          const SetPartition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<std::uint8_t> labels_;
  std::size_t block_count_ = 0;
};

/// All set partitions of [1,m] (optionally with at most max_blocks blocks),
/// in restricted-growth-string lexicographic order.
std::vector<SetPartition> enumerate_set_partitions(
    std::size_t m, std::optional<std::size_t> max_blocks = std::nullopt);

/// Calls visit(labels, block_count) for every restricted growth string of
/// length m with at most max_blocks blocks, in lexicographic order.
void for_each_growth_string(
    std::size_t m, std::size_t max_blocks,
    const std::function<void(const std::vector<std::uint8_t>&, std::size_t)>&
        visit);

/// True iff every block of pi is contained in a block of rho.
bool is_refinement(const SetPartition& pi, const SetPartition& rho);

/// Every rho with pi <= rho (pi included), sorted.
std::vector<SetPartition> coarsenings(const SetPartition& pi);

/// Moebius function of the refinement lattice via the product formula
/// prod_i (-1)^(b_i - 1) (b_i - 1)!, where block i of rho is a union of b_i
/// blocks of pi. Throws ErrorKind::order when pi is not below rho.
long long mobius(const SetPartition& pi, const SetPartition& rho);

/// The partitions pi induces on its bottom row {1..k} and top row
/// {k+1..2k} (shifted down to {1..k}), together with |pi|.
struct PropagatingData {
  SetPartition bottom;
  SetPartition top;
  std::size_t block_count = 0;
};

PropagatingData propagating_data(const SetPartition& pi);

/// The partition induced on the given 1-based elements, relabelled 1..size.
SetPartition restrict_to(const SetPartition& pi,
                         const std::vector<int>& elements);

}  // namespace partalg

template <>
struct std::hash<partalg::SetPartition> {
  std::size_t operator()(const partalg::SetPartition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.labels()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};
