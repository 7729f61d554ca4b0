#include "partalg/tensorrep.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "partalg/error.hpp"

namespace partalg {

SparseMatrix::SparseMatrix(std::size_t dim) : rows_(dim) {}

SparseMatrix SparseMatrix::identity(std::size_t dim) {
  SparseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.rows_[i].emplace(i, 1);
  return m;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= dim() || c >= dim()) throw Error(ErrorKind::dimension, "matrix index out of range");
  if (v == 0) return;
  auto [it, inserted] = rows_[r].emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) rows_[r].erase(it);
  }
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (dim() != other.dim()) throw Error(ErrorKind::dimension, "matrix sizes differ");
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : other.rows_[r]) add(r, c, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
  if (s == 0) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& [c, v] : r) v *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::dimension, "matrix sizes differ");
  SparseMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto& target = out.rows_[r];
    for (const auto& [mid, v] : a.rows_[r])
      for (const auto& [c, w] : b.rows_[mid]) target[c] += v * w;
    std::erase_if(target, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

Rational SparseMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

std::string SparseMatrix::to_triples() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) out << r << ' ' << c << ' ' << to_string(v) << '\n';
  return out.str();
}

nlohmann::json SparseMatrix::to_json(int n, int k) const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) entries.push_back({r, c, to_string(v)});
  return {{"n", n}, {"k", k}, {"dim", dim()}, {"entries", entries}};
}

// ---------------------------------------------------------------------------
// tuples

std::size_t tuple_index(const std::vector<int>& tuple, int n) {
  std::size_t index = 0;
  for (int v : tuple) {
    if (v < 1 || v > n) throw Error(ErrorKind::invalid_argument, "tuple entry outside [1,n]");
    index = index * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1);
  }
  return index;
}

std::vector<int> tuple_at(std::size_t index, int n, int length) {
  std::vector<int> tuple(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(n)) + 1;
    index /= static_cast<std::size_t>(n);
  }
  return tuple;
}

SetPartition tuple_pattern(const std::vector<int>& tuple) { return SetPartition::from_labels(tuple); }

std::vector<int> standard_labeling(const SetPartition& pi) {
  std::vector<int> out;
  out.reserve(pi.size());
  for (auto l : pi.labels()) out.push_back(l + 1);
  return out;
}

std::size_t checked_power(int n, int k, std::size_t budget) {
  if (n < 1 || k < 0) throw Error(ErrorKind::invalid_argument, "need n >= 1 and k >= 0");
  std::size_t dim = 1;
  for (int i = 0; i < k; ++i) {
    if (dim > budget / static_cast<std::size_t>(n))
      throw Error(ErrorKind::budget, "tensor space dimension " + std::to_string(n) + "^" +
                                         std::to_string(k) + " exceeds the budget of " +
                                         std::to_string(budget));
    dim *= static_cast<std::size_t>(n);
  }
  if (dim > budget)
    throw Error(ErrorKind::budget, "tensor space dimension exceeds the budget of " +
                                       std::to_string(budget));
  return dim;
}

namespace {

// Calls visit(values) for every map blocks -> [0,n), injective when asked.
// The frozen block, if any, is pinned to value n-1.
template <typename Visit>
void for_each_assignment(std::size_t blocks, int n, bool injective, int frozen, Visit&& visit) {
  std::vector<int> values(blocks, 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  if (frozen >= 0) {
    values[static_cast<std::size_t>(frozen)] = n - 1;
    if (injective) used[static_cast<std::size_t>(n - 1)] = 1;
  }
  auto rec = [&](auto& self, std::size_t b) -> void {
    if (b == blocks) {
      visit(values);
      return;
    }
    if (static_cast<int>(b) == frozen) {
      self(self, b + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (injective && used[static_cast<std::size_t>(v)]) continue;
      values[b] = v;
      if (injective) used[static_cast<std::size_t>(v)] = 1;
      self(self, b + 1);
      if (injective) used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
}

// Adds coeff * (indicator of pi) to m. `free` is the number of unfrozen
// columns (k for Phi, k-1 for the half version).
void add_indicator(SparseMatrix& m, const SetPartition& pi, int n, int columns, int free,
                   bool injective, bool frozen_last, const Rational& coeff) {
  if (injective && static_cast<int>(pi.block_count()) > n) return;
  int frozen = frozen_last ? pi.block_of(columns) : -1;
  const auto& labels = pi.labels();
  for_each_assignment(pi.block_count(), n, injective, frozen, [&](const std::vector<int>& values) {
    std::size_t row = 0, col = 0;
    for (int j = 0; j < free; ++j) {
      col = col * static_cast<std::size_t>(n) + static_cast<std::size_t>(values[labels[j]]);
      row = row * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(values[labels[columns + j]]);
    }
    m.add(row, col, coeff);
  });
}

SparseMatrix represent_impl(const Element& e, bool half, std::size_t budget) {
  const int n = e.n();
  const int columns = e.columns();
  const int free = half ? columns - 1 : columns;
  SparseMatrix m(checked_power(n, free, budget));
  const bool orbit = e.basis() == Basis::orbit;
  for (const auto& [pi, coeff] : e.terms())
    add_indicator(m, pi, n, columns, free, orbit, half, coeff);
  return m;
}

}  // namespace

SparseMatrix phi(const Element& e, std::size_t budget) {
  if (e.two_k() % 2)
    throw Error(ErrorKind::parity, "phi needs an integer level; use phi_half for two_k=" +
                                       std::to_string(e.two_k()));
  return represent_impl(e, false, budget);
}

SparseMatrix phi_half(const Element& e, std::size_t budget) {
  if (e.two_k() % 2 == 0)
    throw Error(ErrorKind::parity, "phi_half needs a half-integer level (odd two_k)");
  return represent_impl(e, true, budget);
}

SparseMatrix represent(const Element& e, std::size_t budget) {
  return e.two_k() % 2 ? phi_half(e, budget) : phi(e, budget);
}

SparseMatrix permutation_matrix(const std::vector<int>& sigma, int k, std::size_t budget) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(sigma.size(), 0);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw Error(ErrorKind::invalid_argument, "permutation is not a bijection of [1,n]");
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
  std::size_t dim = checked_power(n, k, budget);
  SparseMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    auto t = tuple_at(r, n, k);
    for (int& v : t) v = sigma[static_cast<std::size_t>(v - 1)];
    m.add(tuple_index(t, n), r, 1);
  }
  return m;
}

bool commutant_check(const SparseMatrix& m, int n, int k, bool fix_last) {
  std::size_t dim = checked_power(n, k, std::max(m.dim(), std::size_t{1}));
  if (dim != m.dim()) throw Error(ErrorKind::dimension, "matrix does not act on n^k tuples");
  int last = fix_last ? n - 1 : n;
  for (int i = 1; i < last; ++i) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::swap(sigma[static_cast<std::size_t>(i - 1)], sigma[static_cast<std::size_t>(i)]);
    auto p = permutation_matrix(sigma, k, dim);
    if (!(p * m == m * p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// rank

namespace {

using IntVector = std::vector<std::pair<std::size_t, BigInt>>;

IntVector clear_denominators(const SparseVector& v) {
  BigInt l = 1;
  for (const auto& [c, q] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& [c, q] : v)
    if (q != 0) out.emplace_back(c, BigInt(q.get_num() * (l / q.get_den())));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void remove_content(IntVector& v) {
  BigInt g = 0;
  for (const auto& [c, z] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g > 1)
    for (auto& [c, z] : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

// a := pa * a - va * p, both sorted; result keeps only nonzero entries.
IntVector combine(const IntVector& a, const BigInt& pa, const IntVector& p, const BigInt& va) {
  IntVector out;
  out.reserve(a.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < p.size()) {
    if (j == p.size() || (i < a.size() && a[i].first < p[j].first)) {
      out.emplace_back(a[i].first, BigInt(pa * a[i].second));
      ++i;
    } else if (i == a.size() || p[j].first < a[i].first) {
      out.emplace_back(p[j].first, BigInt(-va * p[j].second));
      ++j;
    } else {
      BigInt z = pa * a[i].second - va * p[j].second;
      if (z != 0) out.emplace_back(a[i].first, std::move(z));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t rank_fraction_free(const std::vector<SparseVector>& rows) {
  std::vector<IntVector> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    auto v = clear_denominators(r);
    if (!v.empty()) work.push_back(std::move(v));
  }
  std::stable_sort(work.begin(), work.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::unordered_map<std::size_t, IntVector> pivots;
  for (auto& v : work) {
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) break;
      const IntVector& p = it->second;
      BigInt g = gcd(p.front().second, v.front().second);
      BigInt pa = p.front().second / g, va = v.front().second / g;
      v = combine(v, pa, p, va);
      remove_content(v);
    }
    if (!v.empty()) {
      remove_content(v);
      std::size_t lead = v.front().first;
      pivots.emplace(lead, std::move(v));
    }
  }
  return pivots.size();
}

EchelonBasis::Row EchelonBasis::reduce(const SparseVector& v) const {
  Row out;
  std::vector<std::pair<const Row*, Rational>> uses;
  for (const auto& [c, q] : v) {
    if (q == 0) continue;
    auto it = pivots_.find(c);
    if (it == pivots_.end())
      out[c] += q;
    else
      uses.emplace_back(&it->second, q);
  }
  for (const auto& [row, f] : uses)
    for (const auto& [c, q] : *row)
      if (!pivots_.count(c)) out[c] -= f * q;
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

bool EchelonBasis::insert(const SparseVector& v) {
  Row r = reduce(v);
  if (r.empty()) return false;
  std::size_t pivot = r.begin()->first;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& [c, q] : r) {
    auto it = occurrences_.find(c);
    std::size_t load = it == occurrences_.end() ? 0 : it->second.size();
    if (load < best) {
      best = load;
      pivot = c;
    }
  }
  const Rational lead = r.at(pivot);
  for (auto& [c, q] : r) q /= lead;

  // clear the new pivot column from every stored row
  if (auto it = occurrences_.find(pivot); it != occurrences_.end()) {
    std::set<std::size_t> holders = std::move(it->second);
    occurrences_.erase(it);
    for (std::size_t h : holders) {
      Row& row = pivots_.at(h);
      const Rational f = row.at(pivot);
      row.erase(pivot);
      for (const auto& [c, q] : r) {
        if (c == pivot) continue;
        auto [cell, fresh] = row.emplace(c, 0);
        cell->second -= f * q;
        if (cell->second == 0) {
          row.erase(cell);
          occurrences_[c].erase(h);
        } else if (fresh) {
          occurrences_[c].insert(h);
        }
      }
    }
  }
  for (const auto& [c, q] : r)
    if (c != pivot) occurrences_[c].insert(pivot);
  pivots_.emplace(pivot, std::move(r));
  return true;
}

bool EchelonBasis::contains(const SparseVector& v) const { return reduce(v).empty(); }

SparseVector flatten(const SparseMatrix& m) {
  SparseVector out;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (const auto& [c, v] : m.row(r)) out.emplace_back(r * m.dim() + c, v);
  return out;
}

// ---------------------------------------------------------------------------
// image and kernel

namespace {

std::vector<SetPartition> valid_keys(int two_k) {
  const int k = columns_for(two_k);
  std::vector<SetPartition> out;
  for (auto& pi : enumerate_set_partitions(static_cast<std::size_t>(2 * k)))
    if (is_valid_key(two_k, pi)) out.push_back(std::move(pi));
  return out;
}

}  // namespace

std::size_t image_dimension(int two_k, int n, ImagePath path, std::size_t budget) {
  const int k = columns_for(two_k);
  const bool half = two_k % 2;
  const int free = half ? k - 1 : k;
  std::size_t dim = checked_power(n, free, budget);
  auto keys = valid_keys(two_k);
  std::vector<SparseVector> rows;
  if (path == ImagePath::matrices) {
    for (const auto& pi : keys) {
      if (static_cast<int>(pi.block_count()) > n) continue;
      auto e = Element::basis_element(two_k, n, Basis::orbit, pi);
      rows.push_back(flatten(represent(e, budget)));
    }
  } else {
    // Classify every 2k-tuple by its pattern; the orbit images are the
    // indicator vectors of these classes.
    (void)checked_power(n, 2 * free, budget * budget);
    std::unordered_map<SetPartition, std::size_t> slot;
    for (const auto& pi : keys)
      if (static_cast<int>(pi.block_count()) <= n) {
        slot.emplace(pi, rows.size());
        rows.emplace_back();
      }
    std::size_t total = dim * dim;
    std::vector<int> full(static_cast<std::size_t>(2 * k));
    for (std::size_t index = 0; index < total; ++index) {
      auto t = tuple_at(index, n, 2 * free);  // row tuple then column tuple
      for (int j = 0; j < free; ++j) {
        full[static_cast<std::size_t>(k + j)] = t[static_cast<std::size_t>(j)];
        full[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(free + j)];
      }
      if (half) full[static_cast<std::size_t>(k - 1)] = full[static_cast<std::size_t>(2 * k - 1)] = n;
      auto it = slot.find(tuple_pattern(full));
      if (it == slot.end()) throw Error(ErrorKind::invalid_argument, "tuple with unknown pattern");
      rows[it->second].emplace_back(index, 1);
    }
  }
  return rank_fraction_free(rows);
}

std::size_t image_dimension_diagram(int two_k, int n, std::size_t budget) {
  std::vector<SparseVector> rows;
  for (const auto& pi : valid_keys(two_k))
    rows.push_back(flatten(represent(Element::basis_element(two_k, n, Basis::diagram, pi), budget)));
  return rank_fraction_free(rows);
}

std::size_t orbit_count(int two_k, int n) {
  std::size_t count = 0;
  for (const auto& pi : valid_keys(two_k))
    if (static_cast<int>(pi.block_count()) <= n) ++count;
  return count;
}

std::vector<Element> kernel_basis(int two_k, int n) {
  std::vector<Element> out;
  for (const auto& pi : valid_keys(two_k))
    if (static_cast<int>(pi.block_count()) > n)
      out.push_back(Element::basis_element(two_k, n, Basis::orbit, pi));
  return out;
}

namespace {

class Coordinates {
 public:
  explicit Coordinates(int two_k) : keys_(valid_keys(two_k)) {
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
  }
  std::size_t size() const { return keys_.size(); }
  const SetPartition& key(std::size_t i) const { return keys_[i]; }

  SparseVector vector_of(const Element& orbit_element) const {
    SparseVector v;
    v.reserve(orbit_element.terms().size());
    for (const auto& [pi, c] : orbit_element.terms()) v.emplace_back(index_.at(pi), c);
    return v;
  }
  Element element_of(const SparseVector& v, int two_k, int n) const {
    Element e(two_k, n, Basis::orbit);
    for (const auto& [i, c] : v) e.add_term(keys_[i], c);
    return e;
  }

 private:
  std::vector<SetPartition> keys_;
  std::unordered_map<SetPartition, std::size_t> index_;
};

// s_1..s_{k-1}, p_1 and b_1 generate P_k; the other p's are conjugates. The
// half algebra also needs b_{k-1}, which joins the frozen column.
std::vector<Element> ideal_generators(int two_k, int n) {
  const int k = columns_for(two_k);
  const bool half = two_k % 2;
  std::vector<Element> gens;
  auto keep = [&](const Element& g) {
    Element h(two_k, n, Basis::diagram);
    for (const auto& [pi, c] : g.terms()) h.add_term(pi, c);
    gens.push_back(to_orbit(h));
  };
  const int s_max = half ? k - 2 : k - 1;
  for (int i = 1; i <= s_max; ++i) keep(generator_s(i, k, n));
  if (!half || k > 1) keep(generator_p(1, k, n));
  if (k > 1) keep(generator_b(1, k, n));
  if (half && k > 2) keep(generator_b(k - 1, k, n));
  return gens;
}

}  // namespace

std::size_t principal_ideal_dimension(const Element& g_in, IdealMethod method) {
  const int two_k = g_in.two_k(), n = g_in.n();
  const Element g = to_orbit(g_in);
  if (g.is_zero()) return 0;
  Coordinates coords(two_k);
  if (method == IdealMethod::exhaustive) {
    EchelonBasis left;
    std::vector<Element> left_span;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      auto a = to_orbit(Element::basis_element(two_k, n, Basis::diagram, coords.key(i)));
      auto prod = multiply_orbit(a, g);
      if (left.insert(coords.vector_of(prod))) left_span.push_back(prod);
    }
    std::vector<Element> right_factors;
    for (std::size_t i = 0; i < coords.size(); ++i)
      right_factors.push_back(
          to_orbit(Element::basis_element(two_k, n, Basis::diagram, coords.key(i))));
    EchelonBasis ideal;
    for (const auto& l : left_span)
      for (const auto& b : right_factors) ideal.insert(coords.vector_of(multiply_orbit(l, b)));
    return ideal.rank();
  }
  auto gens = ideal_generators(two_k, n);
  EchelonBasis ideal;
  std::vector<Element> queue;
  if (ideal.insert(coords.vector_of(g))) queue.push_back(g);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element v = queue[head];
    for (const auto& s : gens) {
      for (auto prod : {multiply_orbit(s, v), multiply_orbit(v, s)}) {
        if (ideal.insert(coords.vector_of(prod))) queue.push_back(std::move(prod));
      }
    }
  }
  return ideal.rank();
}

}  // namespace partalg
