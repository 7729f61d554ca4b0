#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partalg/combinatorics.hpp"
#include "partalg/number.hpp"
#include "partalg/setpart.hpp"

namespace partalg {

// ---------------------------------------------------------------------------
// Bratteli diagram of the restriction-induction tower for (S_n, S_{n-1})

struct BratteliVertex {
  IntegerPartition shape;
  BigInt paths;  // number of paths from [n] at level 0
};

/// Levels are indexed by two_level = 2 * level. Even levels hold partitions
/// of n, odd levels partitions of n-1. Edges are implicit: one box removed
/// going down to a half level, one box added going down to an integer level.
class BratteliDiagram {
 public:
  BratteliDiagram(int n, std::vector<std::vector<BratteliVertex>> levels);

  int n() const noexcept { return n_; }
  int max_two_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<BratteliVertex>& level(int two_level) const { return levels_.at(two_level); }
  /// Path count at shape, 0 when the shape is absent from the level.
  BigInt paths_to(const IntegerPartition& shape, int two_level) const;

  /// Vertices labelled "partition:count", one rank per level.
  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  int n_;
  std::vector<std::vector<BratteliVertex>> levels_;
};

BratteliDiagram build_bratteli(int n, int max_two_level);

// ---------------------------------------------------------------------------
// vacillating tableaux

/// ([n] = lambda^(0), lambda^(1/2), ..., lambda^(k)); shapes[i] sits at
/// level i/2, so there are 2k+1 shapes.
struct VacillatingTableau {
  int n = 0;
  std::vector<IntegerPartition> shapes;

  int length() const noexcept { return static_cast<int>(shapes.size() / 2); }
  const IntegerPartition& shape() const { return shapes.back(); }
  /// Throws unless the steps alternate between removing and adding a box.
  void validate() const;
  std::string to_string() const;
  nlohmann::json to_json() const;
  /// Reads the to_string form "([3],[2],[2,1])"; n is the size of the first shape.
  static VacillatingTableau parse(std::string_view text);

  friend bool operator==(const VacillatingTableau&, const VacillatingTableau&) = default;
  friend auto operator<=>(const VacillatingTableau& a, const VacillatingTableau& b) {
    return a.shapes <=> b.shapes;
  }
};

/// All vacillating tableaux of shape lambda and length k, in lexicographic
/// order of their shape sequences.
std::vector<VacillatingTableau> enumerate_vacillating(const IntegerPartition& lambda, int k, int n);

/// (first half, second half reversed) of a tableau of shape [n] and length 2k.
std::pair<VacillatingTableau, VacillatingTableau> halves_split(const VacillatingTableau& vt);
VacillatingTableau halves_join(const VacillatingTableau& first, const VacillatingTableau& second);

// ---------------------------------------------------------------------------
// set-partition tableaux

/// Box contents, sorted; the empty vector is the zero box.
using Box = std::vector<int>;

inline int box_key(const Box& b) { return b.empty() ? 0 : b.back(); }

struct SetPartitionTableau {
  int n = 0;
  int k = 0;
  std::vector<std::vector<Box>> rows;

  IntegerPartition shape() const;
  /// Number of nonzero boxes.
  int blocks() const;
  /// The partition of [1,k] formed by the nonzero boxes (k >= 1).
  SetPartition set_partition() const;
  /// Checks conditions (i)-(iii) of the definition; throws on violation.
  void validate() const;
  /// Rows as "[0][6] / [2][4,7] / [1,3,5]".
  std::string to_string() const;
  nlohmann::json to_json() const;
  static SetPartitionTableau from_json(const nlohmann::json& j);
  /// Reads the to_string form; n is the number of boxes and k the largest entry.
  static SetPartitionTableau parse(std::string_view text);

  friend bool operator==(const SetPartitionTableau&, const SetPartitionTableau&) = default;
};

/// Every set-partition tableau of shape lambda with content {0^(n-t),1..k}.
std::vector<SetPartitionTableau> enumerate_spt(const IntegerPartition& lambda, int k, int n);

/// Schensted row insertion keyed on box maxima; a zero box has key 0 and
/// lands after the zeros already in row 1. Returns the row where the new
/// cell was created.
int schensted_insert(std::vector<std::vector<Box>>& rows, Box box);
/// Inverse of schensted_insert for the cell ending row `row`.
Box schensted_uninsert(std::vector<std::vector<Box>>& rows, int row);

/// One step of Algorithm A or B: the level reached and the tableau there.
struct BijectionStep {
  int two_level = 0;
  std::vector<std::vector<Box>> rows;
};

VacillatingTableau bijection_A(const SetPartitionTableau& spt,
                               std::vector<BijectionStep>* trace = nullptr);
SetPartitionTableau bijection_B(const VacillatingTableau& vt,
                                std::vector<BijectionStep>* trace = nullptr);

/// Plain-text trace, one level per line: "j=3.5  [2,1]  [0][0] / [1,3]".
std::string format_trace(const std::vector<BijectionStep>& steps);
std::string format_rows(const std::vector<std::vector<Box>>& rows);

}  // namespace partalg
