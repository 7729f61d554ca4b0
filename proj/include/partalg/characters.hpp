#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partalg/algebra.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/number.hpp"

namespace partalg {

/// A conjugacy class of S_n, labelled by cycle type.
struct ClassData {
  IntegerPartition delta;
  BigInt size;  // n! / z
  BigInt z;     // centralizer order
};

/// z_delta = prod_i i^{d_i} d_i! where delta has d_i parts equal to i.
BigInt centralizer_order(const IntegerPartition& delta);

/// Classes of S_n in increasing lexicographic order ([1^n] first, [n] last).
std::vector<ClassData> conjugacy_classes(int n);

/// chi_lambda(delta) by the Murnaghan-Nakayama rule. Memoized; thread-safe.
BigInt irreducible_character(const IntegerPartition& lambda, const IntegerPartition& delta);

struct CharacterTableRow {
  IntegerPartition lambda;
  std::vector<BigInt> values;  // one per class, in conjugacy_classes order
};

/// Rows in integer_partitions order ([n] first).
std::vector<CharacterTableRow> character_table(int n);
/// Header "lambda,<class>,..." then one line per row.
std::string character_table_csv(int n);

/// F(sigma^m) for sigma of cycle type delta: sum over d | m of d times the
/// number of d-cycles.
BigInt fixed_points_of_power(const IntegerPartition& delta, int m);
/// F_mu(delta) = prod_i F(sigma^{mu_i}).
BigInt fixed_point_power(const IntegerPartition& delta, const IntegerPartition& mu);

/// (1/n!) sum over sigma in S_n of F(sigma)^l, computed class by class.
Rational fixed_point_moment(int l, int n);
/// The same average taken over every permutation of S_n explicitly.
Rational fixed_point_moment_exhaustive(int l, int n);

enum class MultiplicityMethod { character, stirling_skew, bratteli };

std::string to_string(MultiplicityMethod method);
MultiplicityMethod parse_multiplicity_method(std::string_view text);

/// Multiplicity of S_n^lambda in M_n^{(x)k}.
BigInt multiplicity(const IntegerPartition& lambda, int k, int n,
                    MultiplicityMethod method = MultiplicityMethod::stirling_skew);

/// Multiplicity of S_{n-1}^mu (mu a partition of n-1) in M_n^{(x)k}
/// restricted to S_{n-1}. The character method averages (F(tau)+1)^k chi_mu
/// over S_{n-1}; stirling_skew sums S(k+1,t+1) f^{mu/[n-1-t]}; bratteli
/// counts paths to the half level k+1/2.
BigInt half_multiplicity(const IntegerPartition& mu, int k, int n,
                         MultiplicityMethod method = MultiplicityMethod::stirling_skew);

/// Diagram-basis gamma_mu in P_k(n): cycle diagrams for the parts of mu side
/// by side, then k - |mu| columns of two isolated vertices.
Element gamma_mu(const IntegerPartition& mu, int k, int n);

/// xi_lambda(gamma_mu) = n^{k-l} sum_delta F_mu(delta) chi_lambda(delta) / z_delta.
/// Refuses n < 2k, where the formula is not asserted.
Rational partition_algebra_character(const IntegerPartition& lambda, const IntegerPartition& mu,
                                     int k, int n);

/// {"lambda","mu","k","n","value"} records for every lambda of n and every
/// mu with |mu| <= k.
nlohmann::json partition_character_table_json(int k, int n);

}  // namespace partalg
