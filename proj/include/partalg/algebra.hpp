#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "partalg/number.hpp"
#include "partalg/setpart.hpp"

namespace partalg {

enum class Basis { diagram, orbit };

std::string to_string(Basis basis);
Basis parse_basis(std::string_view text);

/// Number of diagram columns for the level two_k / 2, i.e. ceil(two_k / 2).
inline int columns_for(int two_k) { return (two_k + 1) / 2; }

/// True when pi is a basis label of P_{two_k/2}: a partition of
/// [1, 2 ceil(two_k/2)], and for odd two_k the last bottom and last top
/// vertices share a block.
bool is_valid_key(int two_k, const SetPartition& pi);

/// Every valid key of level two_k/2, in growth-string order.
std::vector<SetPartition> basis_keys(int two_k);

/// Finite linear combination of set partitions in the diagram or orbit basis
/// of P_{two_k/2}(n). Odd two_k denotes the half-integer algebra, realised on
/// the ground set of the next integer level.
class Element {
 public:
  using Terms = std::map<SetPartition, Rational>;

  Element(int two_k, int n, Basis basis);

  /// Sums repeated keys and drops zero coefficients.
  static Element make(Basis basis,
                      const std::vector<std::pair<SetPartition, Rational>>& terms,
                      int two_k, int n);
  static Element basis_element(int two_k, int n, Basis basis, const SetPartition& pi,
                               const Rational& coeff = 1);

  int two_k() const noexcept { return two_k_; }
  int n() const noexcept { return n_; }
  Basis basis() const noexcept { return basis_; }
  int columns() const noexcept { return columns_for(two_k_); }
  std::size_t ground_size() const noexcept { return 2 * static_cast<std::size_t>(columns()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const SetPartition& pi) const;

  /// Adds coeff * key, validating the key against two_k.
  void add_term(const SetPartition& key, const Rational& coeff);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& scalar);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  /// Same level, parameter, basis and terms.
  friend bool operator==(const Element& a, const Element& b) {
    return a.two_k_ == b.two_k_ && a.n_ == b.n_ && a.basis_ == b.basis_ &&
           a.terms_ == b.terms_;
  }

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Element from_json(const nlohmann::json& j);

 private:
  void check_compatible(const Element& other) const;

  int two_k_;
  int n_;
  Basis basis_;
  Terms terms_;
};

/// Reads the to_string form, e.g. "-1/2 d{1,2|3|4} + d{1,3|2,4}"; "x_{...}"
/// is accepted too. All terms must use one basis. A JSON object is passed to
/// from_json and must agree with two_k and n.
Element parse_element(std::string_view text, int two_k, int n);

Element to_orbit(const Element& e);
Element to_diagram(const Element& e);
Element to_basis(const Element& e, Basis basis);

/// Result of stacking `top` over `bottom`: the concatenated partition and
/// the number of components confined to the middle row.
struct Concatenation {
  SetPartition result;
  int middle_blocks = 0;
};

Concatenation concatenate(const SetPartition& top, const SetPartition& bottom);

/// Diagram-basis product; inputs in the orbit basis are converted first.
Element multiply(const Element& a, const Element& b);

enum class OrbitMode {
  abstract,  // structure constants of P_k(n) itself
  image,     // additionally set x_rho = 0 for |rho| > n
};

/// Orbit-basis product using the exact-middle-match rule; inputs in the
/// diagram basis are converted first.
Element multiply_orbit(const Element& a, const Element& b,
                       OrbitMode mode = OrbitMode::abstract);

Element identity(int two_k, int n);

/// Transposition of columns i and i+1 (1 <= i <= k-1).
Element generator_s(int i, int k, int n);
/// (1/n) times the diagram that cuts column i (1 <= i <= k).
Element generator_p(int i, int k, int n);
/// Columns i and i+1 joined into a single block (1 <= i <= k-1).
Element generator_b(int i, int k, int n);
/// p_l for l = two_l / 2 with 1 <= two_l <= 2k+1: b_i at two_l = 2i+1, and
/// the identity at two_l = 1 and two_l = 2k+1.
Element generator_p_half(int two_l, int k, int n);

struct PresentationReport {
  std::string relation;
  bool holds = false;
  /// Both sides of the relation when they differ.
  std::optional<std::pair<Element, Element>> witness;
};

/// Generators used by check_presentation. p is indexed by two_l - 1 for
/// two_l = 1..2k+1; s by i - 1.
struct GeneratorSet {
  int k = 0;
  int n = 0;
  std::vector<Element> s;
  std::vector<Element> p;

  static GeneratorSet standard(int k, int n);
};

std::vector<PresentationReport> check_presentation(const GeneratorSet& gens);
std::vector<PresentationReport> check_presentation(int k, int n);

/// The orbit element e_{k,n} for two_k > n; odd two_k gives the
/// half-integer version, which is the same set partition.
Element e_kn(int two_k, int n);
SetPartition e_kn_partition(int two_k, int n);
/// c with e_{k,n}^2 = c e_{k,n}: (-1)^(n+1-k) (n+1-k)! for n >= k > n/2,
/// and 1 for k > n (k = ceil(two_k/2)).
Rational idempotent_constant(int two_k, int n);

/// Image under P_k in P_{k+1/2} in P_{k+1} ...: new columns are vertical
/// through-strands on the right. Keeps the basis of e.
Element embed(const Element& e, int target_two_k);

}  // namespace partalg
