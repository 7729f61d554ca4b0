#include "verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "partalg/algebra.hpp"
#include "partalg/characters.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/error.hpp"
#include "partalg/tableaux.hpp"
#include "partalg/tensorrep.hpp"

namespace partalg::cli {

namespace {

// A check returns an empty string on success, or a description of the first failure.
using CheckFn = std::function<std::string(const VerifyOptions&)>;

struct Check {
  std::string name;
  CheckFn run;
};

std::string at(int two_k, int n) {
  std::ostringstream s;
  s << "(k=" << two_k / 2 << (two_k % 2 ? ".5" : "") << ", n=" << n << ")";
  return s.str();
}

// -- bases ------------------------------------------------------------------

std::string check_change_of_basis(const VerifyOptions&) {
  for (int two_k = 1; two_k <= 6; ++two_k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& pi : basis_keys(two_k)) {
        auto d = Element::basis_element(two_k, n, Basis::diagram, pi);
        if (to_diagram(to_orbit(d)) != d) return "diagram round trip fails at " + at(two_k, n);
        auto x = Element::basis_element(two_k, n, Basis::orbit, pi);
        if (to_orbit(to_diagram(x)) != x) return "orbit round trip fails at " + at(two_k, n);
      }
  return {};
}

std::string check_products_agree(const VerifyOptions& opt) {
  for (int two_k = 1; two_k <= 4; ++two_k)
    for (int n = 1; n <= 4; ++n) {
      auto keys = basis_keys(two_k);
      for (const auto& p : keys)
        for (const auto& q : keys) {
          auto a = Element::basis_element(two_k, n, Basis::orbit, p);
          auto b = Element::basis_element(two_k, n, Basis::orbit, q);
          if (multiply_orbit(a, b) != to_orbit(multiply(to_diagram(a), to_diagram(b))))
            return "x{" + p.to_string() + "} x{" + q.to_string() + "} at " + at(two_k, n);
        }
    }
  std::mt19937_64 rng(opt.seed);
  auto keys = basis_keys(6);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto a = Element::basis_element(6, 3, Basis::orbit, keys[pick(rng)]);
    auto b = Element::basis_element(6, 3, Basis::orbit, keys[pick(rng)]);
    if (multiply_orbit(a, b) != to_orbit(multiply(to_diagram(a), to_diagram(b))))
      return a.to_string() + " times " + b.to_string();
  }
  return {};
}

std::string check_associativity(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  for (int two_k : {3, 4, 5, 6}) {
    auto keys = basis_keys(two_k);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int i = 0; i < 40; ++i) {
      auto a = Element::basis_element(two_k, 3, Basis::diagram, keys[pick(rng)]);
      auto b = Element::basis_element(two_k, 3, Basis::diagram, keys[pick(rng)]);
      auto c = Element::basis_element(two_k, 3, Basis::diagram, keys[pick(rng)]);
      if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
        return "at " + at(two_k, 3);
    }
  }
  return {};
}

std::string check_presentation_all(const VerifyOptions&) {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}})
    for (const auto& r : check_presentation(k, n))
      if (!r.holds) return r.relation + " fails at " + at(2 * k, n);
  return {};
}

// -- homomorphism ------------------------------------------------------------

std::string check_homomorphism(const VerifyOptions& opt) {
  for (int n : {2, 3}) {
    auto keys = basis_keys(4);
    for (const auto& p : keys)
      for (const auto& q : keys) {
        auto a = Element::basis_element(4, n, Basis::diagram, p);
        auto b = Element::basis_element(4, n, Basis::diagram, q);
        if (phi(multiply(a, b), opt.budget) != phi(a, opt.budget) * phi(b, opt.budget))
          return "d{" + p.to_string() + "} d{" + q.to_string() + "} at " + at(4, n);
      }
  }
  std::mt19937_64 rng(opt.seed);
  auto keys = basis_keys(6);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto a = Element::basis_element(6, 3, Basis::diagram, keys[pick(rng)]);
    auto b = Element::basis_element(6, 3, Basis::diagram, keys[pick(rng)]);
    if (phi(multiply(a, b), opt.budget) != phi(a, opt.budget) * phi(b, opt.budget))
      return a.to_string() + " times " + b.to_string() + " at " + at(6, 3);
  }
  return {};
}

std::string check_half_homomorphism(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  for (int two_k : {3, 5}) {
    auto keys = basis_keys(two_k);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int i = 0; i < 50; ++i) {
      auto a = Element::basis_element(two_k, 3, Basis::diagram, keys[pick(rng)]);
      auto b = Element::basis_element(two_k, 3, Basis::diagram, keys[pick(rng)]);
      if (phi_half(multiply(a, b), opt.budget) !=
          phi_half(a, opt.budget) * phi_half(b, opt.budget))
        return a.to_string() + " times " + b.to_string() + " at " + at(two_k, 3);
    }
  }
  return {};
}

std::string check_commutant(const VerifyOptions& opt) {
  for (int n : {2, 3})
    for (int two_k = 1; two_k <= 5; ++two_k) {
      int k = columns_for(two_k);
      for (const auto& pi : basis_keys(two_k)) {
        auto m = represent(Element::basis_element(two_k, n, Basis::diagram, pi), opt.budget);
        int cols = two_k % 2 ? k - 1 : k;
        if (!commutant_check(m, n, cols, two_k % 2 == 1)) return "d{" + pi.to_string() + "} at " + at(two_k, n);
      }
    }
  return {};
}

// -- idempotents -------------------------------------------------------------

std::string check_idempotents(const VerifyOptions&) {
  for (int two_k = 1; two_k <= 8; ++two_k)
    for (int n = 1; n <= 7; ++n) {
      if (two_k <= n) continue;
      auto e = e_kn(two_k, n);
      if (multiply_orbit(e, e) != idempotent_constant(two_k, n) * e)
        return "e^2 != c e at " + at(two_k, n);
    }
  auto e = e_kn(6, 3);
  if (multiply_orbit(e, e) != -e) return "(e_{3,3})^2 != -e_{3,3}";
  return {};
}

// -- kernel ------------------------------------------------------------------

std::string check_image_dimensions(const VerifyOptions& opt) {
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}, {2, 4}, {2, 5},
                      {3, 2}, {3, 3}, {3, 4}}) {
    auto rank = image_dimension(2 * k, n, ImagePath::matrices, opt.budget);
    if (BigInt(static_cast<unsigned long>(rank)) != restricted_bell(2 * k, n))
      return "rank " + std::to_string(rank) + " at " + at(2 * k, n);
  }
  return {};
}

std::string check_kernel_exact(const VerifyOptions& opt) {
  for (auto [two_k, n] : {std::pair{4, 2}, {4, 3}, {5, 3}, {6, 3}}) {
    auto kernel = kernel_basis(two_k, n);
    BigInt expected = bell(two_k) - restricted_bell(two_k, n);
    if (BigInt(static_cast<unsigned long>(kernel.size())) != expected)
      return "kernel size at " + at(two_k, n);
    for (const auto& x : kernel)
      if (!represent(x, opt.budget).is_zero()) return x.to_string() + " is not in the kernel";
  }
  return {};
}

std::string check_principal_ideals(const VerifyOptions&) {
  for (auto [k, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}}) {
    auto dim = principal_ideal_dimension(e_kn(2 * k, n));
    BigInt expected = bell(2 * k) - restricted_bell(2 * k, n);
    if (BigInt(static_cast<unsigned long>(dim)) != expected)
      return "ideal dimension " + std::to_string(dim) + " at " + at(2 * k, n) + ", expected " +
             partalg::to_string(expected);
  }
  return {};
}

// -- bijection ---------------------------------------------------------------

std::string check_round_trips(const VerifyOptions&) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& lambda : integer_partitions(n)) {
        for (const auto& t : enumerate_spt(lambda, k, n))
          if (bijection_B(bijection_A(t)) != t) return "B(A(T)) != T for " + t.to_string();
        for (const auto& vt : enumerate_vacillating(lambda, k, n))
          if (bijection_A(bijection_B(vt)) != vt) return "A(B(V)) != V for " + vt.to_string();
      }
  return {};
}

std::string check_worked_examples(const VerifyOptions&) {
  auto t1 = SetPartitionTableau::parse("[0][6] / [2][4,7] / [1,3,5]");
  auto v1 = bijection_A(t1);
  if (v1.length() != 7 || v1.shape() != IntegerPartition::parse("[2,2,1]") ||
      t1.set_partition().to_string() != "1,3,5|2|4,7|6")
    return "shape [2,2,1] example";
  auto t2 = SetPartitionTableau::parse("[0][4][1,3,5][6,7][2,8]");
  auto v2 = bijection_A(t2);
  if (v2.length() != 8 || v2.shape() != IntegerPartition::row(5) ||
      t2.set_partition().to_string() != "1,3,5|2,8|4|6,7")
    return "shape [5] example";
  auto halves = halves_split(v2);
  if (halves.first.shape() != IntegerPartition::parse("[3,1,1]")) return "shape [5] halves";
  return {};
}

// -- characters --------------------------------------------------------------

std::string check_multiplicities(const VerifyOptions&) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= 5; ++k) {
      BigInt squares = 0;
      for (const auto& lambda : integer_partitions(n)) {
        BigInt m = multiplicity(lambda, k, n, MultiplicityMethod::character);
        if (m != multiplicity(lambda, k, n, MultiplicityMethod::stirling_skew) ||
            m != multiplicity(lambda, k, n, MultiplicityMethod::bratteli))
          return "methods disagree for " + lambda.to_string() + " at " + at(2 * k, n);
        squares += m * m;
      }
      if (squares != restricted_bell(2 * k, n)) return "sum of squares at " + at(2 * k, n);
    }
  return {};
}

std::string check_half_multiplicities(const VerifyOptions&) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= 4; ++k) {
      BigInt squares = 0;
      for (const auto& mu : integer_partitions(n - 1)) {
        BigInt m = half_multiplicity(mu, k, n, MultiplicityMethod::character);
        if (m != half_multiplicity(mu, k, n, MultiplicityMethod::stirling_skew))
          return "formulas disagree for " + mu.to_string() + " at " + at(2 * k + 1, n);
        squares += m * m;
      }
      if (squares != restricted_bell(2 * k + 1, n)) return "sum of squares at " + at(2 * k + 1, n);
    }
  return {};
}

std::string check_character_identities(const VerifyOptions& opt) {
  for (int n : {4, 5}) {
    const int k = 2;
    for (int l = 0; l <= k; ++l)
      for (const auto& mu : integer_partitions(l)) {
        SparseMatrix g = n == 4 ? phi(gamma_mu(mu, k, n), opt.budget) : SparseMatrix(0);
        for (const auto& c : conjugacy_classes(n)) {
          BigInt expected = fixed_point_power(c.delta, mu);
          for (int i = l; i < k; ++i) expected *= n;
          Rational sum = 0;
          for (const auto& lambda : integer_partitions(n))
            sum += Rational(irreducible_character(lambda, c.delta)) *
                   partition_algebra_character(lambda, mu, k, n);
          if (sum != Rational(expected))
            return "bimodule trace for mu=" + mu.to_string() + " delta=" + c.delta.to_string();
          if (n == 4) {
            std::vector<int> sigma;
            int start = 1;
            for (int r : c.delta.parts()) {
              for (int i = 0; i < r; ++i) sigma.push_back(start + (i + 1) % r);
              start += r;
            }
            if ((permutation_matrix(sigma, k, opt.budget) * g).trace() != Rational(expected))
              return "matrix trace for mu=" + mu.to_string() + " delta=" + c.delta.to_string();
          }
        }
      }
  }
  return {};
}

// -- identities --------------------------------------------------------------

std::string check_fixed_bell(const VerifyOptions&) {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l <= 8; ++l)
      if (fixed_point_moment_exhaustive(l, n) != Rational(restricted_bell(l, n)))
        return "l=" + std::to_string(l) + " n=" + std::to_string(n);
  return {};
}

std::string check_bell_stabilizes(const VerifyOptions&) {
  for (int m = 0; m <= 10; ++m)
    for (int n = m; n <= 12; ++n)
      if (restricted_bell(m, n) != bell(m)) return "B(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return {};
}

std::string check_small_n_closed_forms(const VerifyOptions&) {
  // n = 2: only the identity has fixed points; n = 3: transpositions fix one point.
  for (int m = 1; m <= 14; ++m) {
    BigInt two = 1, three = 1;
    for (int i = 0; i < m - 1; ++i) two *= 2, three *= 3;
    if (restricted_bell(m, 2) != two) return "B(m,2) at m=" + std::to_string(m);
    if (restricted_bell(m, 3) != (three + 1) / 2) return "B(m,3) at m=" + std::to_string(m);
  }
  return {};
}

const std::vector<std::pair<std::string, std::vector<Check>>>& registry() {
  static const std::vector<std::pair<std::string, std::vector<Check>>> suites = {
      {"bases",
       {{"change of basis round trips", check_change_of_basis},
        {"orbit and diagram products agree", check_products_agree},
        {"associativity", check_associativity},
        {"presentation relations", check_presentation_all}}},
      {"homomorphism",
       {{"phi is multiplicative", check_homomorphism},
        {"half-level phi is multiplicative", check_half_homomorphism},
        {"images commute with the group", check_commutant}}},
      {"idempotents", {{"e squared is c e", check_idempotents}}},
      {"kernel",
       {{"image dimension by rank", check_image_dimensions},
        {"orbit kernel basis", check_kernel_exact},
        {"kernel generated by e", check_principal_ideals}}},
      {"bijection",
       {{"exhaustive round trips", check_round_trips},
        {"worked examples", check_worked_examples}}},
      {"characters",
       {{"multiplicity methods agree", check_multiplicities},
        {"half-level multiplicities", check_half_multiplicities},
        {"character identities", check_character_identities}}},
      {"identities",
       {{"fixed point moments", check_fixed_bell},
        {"restricted Bell stabilizes", check_bell_stabilizes},
        {"closed forms for n = 2, 3", check_small_n_closed_forms}}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, checks] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  std::vector<CheckResult> results;
  bool found = false;
  for (const auto& [name, checks] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    for (const auto& check : checks) {
      CheckResult r{name, check.name, CheckStatus::pass, {}, 0};
      auto start = std::chrono::steady_clock::now();
      try {
        r.detail = check.run(options);
        if (!r.detail.empty()) r.status = CheckStatus::fail;
      } catch (const Error& e) {
        r.status = e.kind() == ErrorKind::budget ? CheckStatus::skipped : CheckStatus::fail;
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results.push_back(std::move(r));
    }
  }
  if (!found) throw Error(ErrorKind::invalid_argument, "unknown suite '" + suite + "'");
  return results;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"suite", r.suite},
          {"name", r.name},
          {"status", to_string(r.status)},
          {"detail", r.detail},
          {"seconds", r.seconds}};
}

}  // namespace partalg::cli
