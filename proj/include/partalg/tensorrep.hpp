#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <unordered_map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partalg/algebra.hpp"
#include "partalg/number.hpp"
#include "partalg/setpart.hpp"

namespace partalg {

/// Default cap on the dimension n^k of the tensor space.
inline constexpr std::size_t kDefaultBudget = 20000;

/// Square sparse matrix with exact entries. Rows and columns are indexed by
/// k-tuples over [1,n] in mixed radix, leftmost factor most significant.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  explicit SparseMatrix(std::size_t dim = 0);
  static SparseMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return rows_.size(); }
  const Row& row(std::size_t r) const { return rows_.at(r); }
  Rational at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  /// Adds v at (r, c), erasing the entry if it cancels.
  void add(std::size_t r, std::size_t c, const Rational& v);

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator*=(const Rational& s);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_;
  }

  Rational trace() const;

  /// Coordinate triples "row col p/q", 0-based, one per line.
  std::string to_triples() const;
  nlohmann::json to_json(int n, int k) const;

 private:
  std::vector<Row> rows_;
};

/// Mixed-radix index of a tuple with entries in [1,n].
std::size_t tuple_index(const std::vector<int>& tuple, int n);
std::vector<int> tuple_at(std::size_t index, int n, int length);
/// The set partition of positions induced by equal entries.
SetPartition tuple_pattern(const std::vector<int>& tuple);
/// First-occurrence labeling of pi: entry j is 1 + (block of element j).
std::vector<int> standard_labeling(const SetPartition& pi);

/// n^k, or throws ErrorKind::budget when it exceeds the budget.
std::size_t checked_power(int n, int k, std::size_t budget);

/// Phi_{k,n}(e) for even two_k. Orbit keys give orbit indicators (zero when
/// |pi| > n); diagram keys give the "equal whenever same block" indicators.
SparseMatrix phi(const Element& e, std::size_t budget = kDefaultBudget);
/// Phi_{k+1/2,n}(e) for odd two_k on the n^k tuples whose frozen last
/// coordinate is n.
SparseMatrix phi_half(const Element& e, std::size_t budget = kDefaultBudget);
/// Dispatches on the parity of two_k.
SparseMatrix represent(const Element& e, std::size_t budget = kDefaultBudget);

/// Diagonal action of sigma (sigma[i-1] = image of i) on k-tuples:
/// entry [sigma(r)][r] = 1.
SparseMatrix permutation_matrix(const std::vector<int>& sigma, int k,
                                std::size_t budget = kDefaultBudget);

/// True iff m commutes with the adjacent transpositions generating S_n, or
/// S_{n-1} (permutations fixing n) when fix_last is set.
bool commutant_check(const SparseMatrix& m, int n, int k, bool fix_last = false);

// ---------------------------------------------------------------------------
// exact rank

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Rank by fraction-free elimination: rows are cleared to integers and
/// processed sparsest first.
std::size_t rank_fraction_free(const std::vector<SparseVector>& rows);

/// Reduced echelon basis over the rationals, grown one vector at a time.
/// Every pivot row vanishes on the other pivot columns, so reduction is a
/// single pass; pivots are chosen among the columns that touch the fewest
/// stored rows to limit fill-in.
class EchelonBasis {
 public:
  /// Reduces v against the basis; keeps it and returns true when independent.
  bool insert(const SparseVector& v);
  std::size_t rank() const noexcept { return pivots_.size(); }
  /// True when v lies in the span.
  bool contains(const SparseVector& v) const;

 private:
  using Row = std::map<std::size_t, Rational>;
  Row reduce(const SparseVector& v) const;

  std::unordered_map<std::size_t, Row> pivots_;  // pivot column -> row with 1 there
  // non-pivot column -> pivot columns of the rows that are nonzero there
  std::unordered_map<std::size_t, std::set<std::size_t>> occurrences_;
};

SparseVector flatten(const SparseMatrix& m);

// ---------------------------------------------------------------------------
// image and kernel

enum class ImagePath { matrices, tuples };

/// Rank of {Phi(x_pi) : |pi| <= n} over the valid keys of two_k.
std::size_t image_dimension(int two_k, int n, ImagePath path = ImagePath::tuples,
                            std::size_t budget = kDefaultBudget);
/// Rank of {Phi(d_pi)} over all valid keys; the diagram images span the same
/// centralizer.
std::size_t image_dimension_diagram(int two_k, int n, std::size_t budget = kDefaultBudget);
/// Number of valid keys of two_k with at most n blocks.
std::size_t orbit_count(int two_k, int n);
/// The orbit elements x_pi with |pi| > n.
std::vector<Element> kernel_basis(int two_k, int n);

enum class IdealMethod {
  exhaustive,  // span{d_a g d_b} over all diagram pairs
  closure,     // closure under left and right multiplication by generators
};

/// Dimension of the two-sided ideal generated by g.
std::size_t principal_ideal_dimension(const Element& g,
                                      IdealMethod method = IdealMethod::closure);

}  // namespace partalg
