// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "partalg/algebra.hpp"
#include "partalg/characters.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/error.hpp"
#include "partalg/tableaux.hpp"
#include "partalg/tensorrep.hpp"

using namespace partalg;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

// Dimension table: rows k = 1/2 .. 6, columns B(2k,n) for n = 2..8, then B(2k).
const long kTable[12][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2, 2, 2, 2},
    {4, 5, 5, 5, 5, 5, 5, 5},
    {8, 14, 15, 15, 15, 15, 15, 15},
    {16, 41, 51, 52, 52, 52, 52, 52},
    {32, 122, 187, 202, 203, 203, 203, 203},
    {64, 365, 715, 855, 876, 877, 877, 877},
    {128, 1094, 2795, 3845, 4111, 4139, 4140, 4140},
    {256, 3281, 11051, 18002, 20648, 21110, 21146, 21147},
    {512, 9842, 43947, 86472, 109299, 115179, 115929, 115975},
    {1024, 29525, 175275, 422005, 601492, 665479, 677359, 678570},
    {2048, 88574, 700075, 2079475, 3403127, 4030523, 4189550, 4213597},
};

std::string at(int two_k, int n) {
  return "(k=" + std::to_string(two_k / 2) + (two_k % 2 ? ".5" : "") + ", n=" + std::to_string(n) + ")";
}

Outcome table() {
  int matched = 0;
  for (int two_k = 1; two_k <= 12; ++two_k) {
    for (int n = 2; n <= 8; ++n) {
      if (restricted_bell(two_k, n) != kTable[two_k - 1][n - 2])
        return {false, "B(2k,n) differs at " + at(two_k, n)};
      ++matched;
    }
    if (bell(two_k) != kTable[two_k - 1][7]) return {false, "B(2k) differs at 2k=" + std::to_string(two_k)};
    ++matched;
  }
  return {matched == 96, std::to_string(matched) + " entries match"};
}

Outcome image_rank() {
  int cases = 0;
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                      {3, 2}, {3, 3}, {3, 4}}) {
    auto rank = image_dimension(2 * k, n, ImagePath::matrices);
    if (BigInt(static_cast<unsigned long>(rank)) != restricted_bell(2 * k, n))
      return {false, "rank " + std::to_string(rank) + " at " + at(2 * k, n)};
    ++cases;
  }
  return {true, std::to_string(cases) + " ranks equal B(2k,n)"};
}

Outcome idempotents() {
  int cases = 0;
  for (int two_k = 1; two_k <= 8; ++two_k)
    for (int n = 1; n <= 7; ++n) {
      if (two_k <= n) continue;
      int k = (two_k + 1) / 2;
      Rational c = 1;
      if (k <= n) {
        int m = n + 1 - k;
        c = Rational(factorial(static_cast<unsigned long>(m))) * (m % 2 ? -1 : 1);
      }
      auto e = e_kn(two_k, n);
      if (multiply_orbit(e, e) != c * e) return {false, "e^2 != c e at " + at(two_k, n)};
      ++cases;
    }
  return {true, std::to_string(cases) + " levels"};
}

Outcome homomorphism() {
  int pairs = 0;
  for (int n : {2, 3}) {
    auto keys = basis_keys(4);
    for (const auto& p : keys)
      for (const auto& q : keys) {
        auto a = Element::basis_element(4, n, Basis::diagram, p);
        auto b = Element::basis_element(4, n, Basis::diagram, q);
        if (phi(multiply(a, b)) != phi(a) * phi(b)) return {false, "fails at " + at(4, n)};
        ++pairs;
      }
  }
  std::mt19937_64 rng(20240601);
  auto keys = basis_keys(6);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto a = Element::basis_element(6, 3, Basis::diagram, keys[pick(rng)]);
    auto b = Element::basis_element(6, 3, Basis::diagram, keys[pick(rng)]);
    if (phi(multiply(a, b)) != phi(a) * phi(b)) return {false, "fails at " + at(6, 3)};
    ++pairs;
  }
  return {pairs == 550, std::to_string(pairs) + " pairs"};
}

Outcome second_fundamental() {
  std::string note;
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}}) {
    auto dim = principal_ideal_dimension(e_kn(2 * k, n));
    BigInt expected = bell(2 * k) - restricted_bell(2 * k, n);
    if (BigInt(static_cast<unsigned long>(dim)) != expected)
      return {false, "dimension " + std::to_string(dim) + " at " + at(2 * k, n)};
    note += std::to_string(dim) + " ";
  }
  // k = 4 from the embedded e_{3,3}; about 15 s
  auto dim = principal_ideal_dimension(embed(e_kn(6, 3), 8));
  if (BigInt(static_cast<unsigned long>(dim)) != bell(8) - restricted_bell(8, 3))
    return {false, "k=4 ideal has dimension " + std::to_string(dim)};
  return {true, "dims " + note + "and " + std::to_string(dim) + " at (k=4, n=3)"};
}

Outcome multiplicities() {
  int cases = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 5; ++k) {
      BigInt squares = 0;
      for (const auto& lambda : integer_partitions(n)) {
        BigInt m = multiplicity(lambda, k, n, MultiplicityMethod::character);
        if (m != multiplicity(lambda, k, n, MultiplicityMethod::stirling_skew) ||
            m != multiplicity(lambda, k, n, MultiplicityMethod::bratteli))
          return {false, "methods disagree for " + lambda.to_string() + " at " + at(2 * k, n)};
        squares += m * m;
        ++cases;
      }
      if (squares != restricted_bell(2 * k, n)) return {false, "sum of squares at " + at(2 * k, n)};
    }
  return {true, std::to_string(cases) + " (lambda, k) cases"};
}

Outcome bijection() {
  long cases = 0;
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& lambda : integer_partitions(n)) {
        for (const auto& t : enumerate_spt(lambda, k, n)) {
          if (bijection_B(bijection_A(t)) != t) return {false, "B(A(T)) != T for " + t.to_string()};
          ++cases;
        }
        for (const auto& vt : enumerate_vacillating(lambda, k, n)) {
          if (bijection_A(bijection_B(vt)) != vt) return {false, "A(B(V)) != V for " + vt.to_string()};
          ++cases;
        }
      }
  auto v1 = bijection_A(SetPartitionTableau::parse("[0][6] / [2][4,7] / [1,3,5]"));
  if (v1.to_string() !=
      "([5],[4],[4,1],[4],[4,1],[3,1],[3,2],[3,1],[3,2],[2,2],[2,2,1],[2,1,1],[2,2,1],[2,1,1],[2,2,1])")
    return {false, "shape [2,2,1] example gives " + v1.to_string()};
  if (bijection_B(v1).set_partition().to_string() != "1,3,5|2|4,7|6")
    return {false, "shape [2,2,1] example set partition"};
  auto v2 = bijection_A(SetPartitionTableau::parse("[0][4][1,3,5][6,7][2,8]"));
  if (v2.to_string() != "([5],[4],[4,1],[4],[4,1],[3,1],[3,2],[3,1],[3,1,1],[2,1,1],[3,1,1],[3,1],"
                        "[4,1],[3,1],[4,1],[4],[5])")
    return {false, "shape [5] example gives " + v2.to_string()};
  if (bijection_B(v2).set_partition().to_string() != "1,3,5|2,8|4|6,7")
    return {false, "shape [5] example set partition"};
  return {true, std::to_string(cases) + " round trips and both worked examples"};
}

Outcome characters() {
  int cases = 0;
  for (int n : {4, 5}) {
    const int k = 2;
    for (int l = 0; l <= k; ++l)
      for (const auto& mu : integer_partitions(l)) {
        SparseMatrix g = n == 4 ? phi(gamma_mu(mu, k, n)) : SparseMatrix(0);
        for (const auto& c : conjugacy_classes(n)) {
          BigInt expected = fixed_point_power(c.delta, mu);
          for (int i = l; i < k; ++i) expected *= n;
          Rational sum = 0;
          for (const auto& lambda : integer_partitions(n))
            sum += Rational(irreducible_character(lambda, c.delta)) *
                   partition_algebra_character(lambda, mu, k, n);
          if (sum != Rational(expected))
            return {false, "bimodule identity for mu=" + mu.to_string() + ", delta=" + c.delta.to_string()};
          ++cases;
          if (n == 4) {
            std::vector<int> sigma;
            int start = 1;
            for (int r : c.delta.parts()) {
              for (int i = 0; i < r; ++i) sigma.push_back(start + (i + 1) % r);
              start += r;
            }
            if ((permutation_matrix(sigma, k) * g).trace() != Rational(expected))
              return {false, "matrix trace for mu=" + mu.to_string() + ", delta=" + c.delta.to_string()};
            ++cases;
          }
        }
      }
  }
  return {true, std::to_string(cases) + " identities"};
}

Outcome fixed_bell() {
  int cases = 0;
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= 8; ++l) {
      if (fixed_point_moment_exhaustive(l, n) != Rational(restricted_bell(l, n)))
        return {false, "l=" + std::to_string(l) + ", n=" + std::to_string(n)};
      ++cases;
    }
  return {true, std::to_string(cases) + " (l, n) pairs"};
}

Outcome presentation() {
  int relations = 0;
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}})
    for (const auto& r : check_presentation(k, n)) {
      if (!r.holds) return {false, r.relation + " fails at " + at(2 * k, n)};
      ++relations;
    }
  return {true, std::to_string(relations) + " relation instances"};
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>, double>> criteria = {
      {1, "restricted Bell table", table, 10},
      {2, "centralizer dimension by rank", image_rank, 60},
      {3, "idempotent identity", idempotents, 0},
      {4, "homomorphism property", homomorphism, 0},
      {5, "second fundamental theorem", second_fundamental, 0},
      {6, "multiplicity triple equality", multiplicities, 0},
      {7, "bijection round trips", bijection, 0},
      {8, "character identities", characters, 0},
      {9, "fixed point moments", fixed_bell, 0},
      {10, "presentation relations", presentation, 0},
  };
  int failures = 0;
  for (const auto& [id, name, run, limit] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && seconds > limit) {
      o.pass = false;
      o.note += "; exceeded " + std::to_string(static_cast<int>(limit)) + " s";
    }
    failures += !o.pass;
    std::printf("criterion %2d %-32s %s  %8.2f s  %s\n", id, name.c_str(), o.pass ? "PASS" : "FAIL",
                seconds, o.note.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
