#include "partalg/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "partalg/error.hpp"
#include "partalg/tableaux.hpp"

namespace partalg {

namespace {

void require_size(const IntegerPartition& p, int n, const char* what) {
  if (p.size() != n)
    throw Error(ErrorKind::dimension, std::string(what) + " " + p.to_string() +
                                          " is not a partition of " + std::to_string(n));
}

// Murnaghan-Nakayama on beta-sets: a rim hook of length r is a bead moved from
// b to b - r onto an empty position, with sign (-1)^(beads jumped over).
using Beads = std::vector<int>;  // strictly decreasing

BigInt mn_recurse(const Beads& beads, const std::vector<int>& parts, std::size_t from,
                  std::map<std::pair<Beads, std::size_t>, BigInt>& memo) {
  if (from == parts.size()) return 1;
  auto key = std::make_pair(beads, from);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = parts[from];
  BigInt total = 0;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    const int target = beads[i] - r;
    if (target < 0 || std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int jumped = 0;
    for (int b : beads) jumped += b > target && b < beads[i];
    Beads next = beads;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    BigInt v = mn_recurse(next, parts, from + 1, memo);
    if (jumped % 2) total -= v;
    else total += v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> mn_cache;

Rational require_integer_sum(const Rational& q, const char* what) {
  if (q.get_den() != 1)
    throw Error(ErrorKind::invalid_argument, std::string(what) + " gave a non-integer " + to_string(q));
  return q;
}

}  // namespace

BigInt centralizer_order(const IntegerPartition& delta) {
  BigInt z = 1;
  for (int i = 1; i <= delta.size(); ++i) {
    int d = delta.multiplicity_of(i);
    for (int j = 0; j < d; ++j) z *= i;
    z *= factorial(static_cast<unsigned long>(d));
  }
  return z;
}

std::vector<ClassData> conjugacy_classes(int n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "negative n");
  auto parts = integer_partitions(n);
  std::reverse(parts.begin(), parts.end());
  std::vector<ClassData> out;
  const BigInt nf = factorial(static_cast<unsigned long>(n));
  for (auto& delta : parts) {
    BigInt z = centralizer_order(delta);
    out.push_back({delta, BigInt(nf / z), z});
  }
  return out;
}

BigInt irreducible_character(const IntegerPartition& lambda, const IntegerPartition& delta) {
  require_size(delta, lambda.size(), "class");
  auto key = std::make_pair(lambda.parts(), delta.parts());
  {
    std::lock_guard lock(mn_mutex);
    if (auto it = mn_cache.find(key); it != mn_cache.end()) return it->second;
  }
  Beads beads;
  const int len = lambda.length();
  for (int i = 0; i < len; ++i) beads.push_back(lambda.part(i) + len - 1 - i);
  std::vector<int> parts = delta.parts();  // largest first keeps the recursion shallow
  std::map<std::pair<Beads, std::size_t>, BigInt> memo;
  BigInt value = mn_recurse(beads, parts, 0, memo);
  std::lock_guard lock(mn_mutex);
  mn_cache.emplace(std::move(key), value);
  return value;
}

std::vector<CharacterTableRow> character_table(int n) {
  auto classes = conjugacy_classes(n);
  std::vector<CharacterTableRow> rows;
  for (const auto& lambda : integer_partitions(n)) {
    CharacterTableRow row{lambda, {}};
    for (const auto& c : classes) row.values.push_back(irreducible_character(lambda, c.delta));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string character_table_csv(int n) {
  std::ostringstream out;
  out << "lambda";
  for (const auto& c : conjugacy_classes(n)) out << ",\"" << c.delta.to_string() << '"';
  out << '\n';
  for (const auto& row : character_table(n)) {
    out << '"' << row.lambda.to_string() << '"';
    for (const auto& v : row.values) out << ',' << to_string(v);
    out << '\n';
  }
  return out.str();
}

BigInt fixed_points_of_power(const IntegerPartition& delta, int m) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "power must be positive");
  BigInt f = 0;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) f += d * delta.multiplicity_of(d);
  return f;
}

BigInt fixed_point_power(const IntegerPartition& delta, const IntegerPartition& mu) {
  BigInt f = 1;
  for (int part : mu.parts()) f *= fixed_points_of_power(delta, part);
  return f;
}

Rational fixed_point_moment(int l, int n) {
  Rational total = 0;
  for (const auto& c : conjugacy_classes(n)) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), BigInt(fixed_points_of_power(c.delta, 1)).get_mpz_t(),
               static_cast<unsigned long>(l));
    total += Rational(f, c.z);
  }
  total.canonicalize();
  return total;
}

Rational fixed_point_moment_exhaustive(int l, int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  BigInt sum = 0;
  do {
    long fixed = 0;
    for (int i = 0; i < n; ++i) fixed += sigma[static_cast<std::size_t>(i)] == i;
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(fixed), static_cast<unsigned long>(l));
    sum += p;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  Rational q(sum, factorial(static_cast<unsigned long>(n)));
  q.canonicalize();
  return q;
}

std::string to_string(MultiplicityMethod method) {
  switch (method) {
    case MultiplicityMethod::character: return "character";
    case MultiplicityMethod::stirling_skew: return "stirling_skew";
    case MultiplicityMethod::bratteli: return "bratteli";
  }
  return "?";
}

MultiplicityMethod parse_multiplicity_method(std::string_view text) {
  if (text == "character") return MultiplicityMethod::character;
  if (text == "stirling_skew" || text == "stirling") return MultiplicityMethod::stirling_skew;
  if (text == "bratteli") return MultiplicityMethod::bratteli;
  throw Error(ErrorKind::invalid_argument, "unknown multiplicity method '" + std::string(text) + "'");
}

BigInt multiplicity(const IntegerPartition& lambda, int k, int n, MultiplicityMethod method) {
  require_size(lambda, n, "lambda");
  if (k < 0) throw Error(ErrorKind::invalid_argument, "negative k");
  switch (method) {
    case MultiplicityMethod::character: {
      Rational total = 0;
      for (const auto& c : conjugacy_classes(n)) {
        BigInt f;
        mpz_pow_ui(f.get_mpz_t(), BigInt(fixed_points_of_power(c.delta, 1)).get_mpz_t(),
                   static_cast<unsigned long>(k));
        total += Rational(f * irreducible_character(lambda, c.delta), c.z);
      }
      total.canonicalize();
      return require_integer_sum(total, "character multiplicity").get_num();
    }
    case MultiplicityMethod::stirling_skew: {
      BigInt total = 0;
      for (int t = n - lambda.part(0); t <= n; ++t) total += stirling2(k, t) * kostka_hook(lambda, t);
      return total;
    }
    case MultiplicityMethod::bratteli:
      if (n == 1) return 1;
      return build_bratteli(n, 2 * k).paths_to(lambda, 2 * k);
  }
  return 0;
}

BigInt half_multiplicity(const IntegerPartition& mu, int k, int n, MultiplicityMethod method) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "half levels need n >= 1");
  require_size(mu, n - 1, "mu");
  if (k < 0) throw Error(ErrorKind::invalid_argument, "negative k");
  switch (method) {
    case MultiplicityMethod::character: {
      Rational total = 0;
      for (const auto& c : conjugacy_classes(n - 1)) {
        BigInt f;
        BigInt base = fixed_points_of_power(c.delta, 1) + 1;
        mpz_pow_ui(f.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
        total += Rational(f * irreducible_character(mu, c.delta), c.z);
      }
      total.canonicalize();
      return require_integer_sum(total, "half multiplicity").get_num();
    }
    case MultiplicityMethod::stirling_skew: {
      BigInt total = 0;
      for (int t = n - 1 - mu.part(0); t <= n - 1; ++t)
        total += stirling2(k + 1, t + 1) * kostka_hook(mu, t);
      return total;
    }
    case MultiplicityMethod::bratteli:
      if (n == 1) return 1;
      return build_bratteli(n, 2 * k + 1).paths_to(mu, 2 * k + 1);
  }
  return 0;
}

Element gamma_mu(const IntegerPartition& mu, int k, int n) {
  if (mu.size() > k)
    throw Error(ErrorKind::invalid_argument,
                "gamma_mu needs |mu| <= k, got " + mu.to_string() + " with k=" + std::to_string(k));
  std::vector<std::vector<int>> blocks;
  int offset = 0;
  for (int r : mu.parts()) {
    // bottom i joins top i+1 inside the cycle, bottom r wraps to top 1
    for (int i = 1; i < r; ++i) blocks.push_back({offset + i, k + offset + i + 1});
    blocks.push_back({offset + r, k + offset + 1});
    offset += r;
  }
  for (int c = offset + 1; c <= k; ++c) {
    blocks.push_back({c});
    blocks.push_back({k + c});
  }
  auto pi = SetPartition::from_blocks(2 * static_cast<std::size_t>(k), blocks);
  return Element::basis_element(2 * k, n, Basis::diagram, pi);
}

Rational partition_algebra_character(const IntegerPartition& lambda, const IntegerPartition& mu,
                                     int k, int n) {
  require_size(lambda, n, "lambda");
  if (n < 2 * k)
    throw Error(ErrorKind::invalid_argument,
                "partition algebra characters are only given for n >= 2k (k=" + std::to_string(k) +
                    ", n=" + std::to_string(n) + ")");
  if (mu.size() > k) throw Error(ErrorKind::invalid_argument, "|mu| exceeds k");
  Rational total = 0;
  for (const auto& c : conjugacy_classes(n))
    total += Rational(fixed_point_power(c.delta, mu) * irreducible_character(lambda, c.delta), c.z);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(k - mu.size()));
  total *= scale;
  total.canonicalize();
  return total;
}

nlohmann::json partition_character_table_json(int k, int n) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& lambda : integer_partitions(n))
    for (int l = 0; l <= k; ++l)
      for (const auto& mu : integer_partitions(l))
        records.push_back({{"lambda", lambda.to_string()},
                           {"mu", mu.to_string()},
                           {"k", k},
                           {"n", n},
                           {"value", to_string(partition_algebra_character(lambda, mu, k, n))}});
  return records;
}

}  // namespace partalg
