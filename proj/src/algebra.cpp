#include "partalg/algebra.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "partalg/error.hpp"

namespace partalg {

std::string to_string(Basis basis) {
  return basis == Basis::diagram ? "diagram" : "orbit";
}

Basis parse_basis(std::string_view text) {
  if (text == "diagram" || text == "d") return Basis::diagram;
  if (text == "orbit" || text == "x") return Basis::orbit;
  throw Error(ErrorKind::invalid_argument, "unknown basis '" + std::string(text) + "'");
}

bool is_valid_key(int two_k, const SetPartition& pi) {
  int k = columns_for(two_k);
  if (pi.size() != static_cast<std::size_t>(2 * k)) return false;
  if (two_k % 2 == 1 && !pi.same_block(k, 2 * k)) return false;
  return true;
}

std::vector<SetPartition> basis_keys(int two_k) {
  std::vector<SetPartition> out;
  for (auto& pi : enumerate_set_partitions(2 * static_cast<std::size_t>(columns_for(two_k))))
    if (is_valid_key(two_k, pi)) out.push_back(std::move(pi));
  return out;
}

Element::Element(int two_k, int n, Basis basis) : two_k_(two_k), n_(n), basis_(basis) {
  if (two_k < 1) throw Error(ErrorKind::invalid_argument, "two_k must be positive");
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
}

Element Element::make(Basis basis,
                      const std::vector<std::pair<SetPartition, Rational>>& terms,
                      int two_k, int n) {
  Element e(two_k, n, basis);
  for (const auto& [key, coeff] : terms) e.add_term(key, coeff);
  return e;
}

Element Element::basis_element(int two_k, int n, Basis basis, const SetPartition& pi,
                               const Rational& coeff) {
  Element e(two_k, n, basis);
  e.add_term(pi, coeff);
  return e;
}

Rational Element::coefficient(const SetPartition& pi) const {
  auto it = terms_.find(pi);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const SetPartition& key, const Rational& coeff) {
  if (key.size() != ground_size())
    throw Error(ErrorKind::dimension, "partition " + key.to_string() + " is not on [1," +
                                          std::to_string(ground_size()) + "]");
  if (!is_valid_key(two_k_, key))
    throw Error(ErrorKind::invalid_argument,
                "partition " + key.to_string() + " joins no last column for half level " +
                    std::to_string(two_k_) + "/2");
  if (coeff == 0) return;
  Rational c = coeff;
  c.canonicalize();
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Element::check_compatible(const Element& other) const {
  if (two_k_ != other.two_k_ || n_ != other.n_)
    throw Error(ErrorKind::dimension, "elements of different algebras");
  if (basis_ != other.basis_)
    throw Error(ErrorKind::invalid_argument, "elements expressed in different bases");
}

Element& Element::operator+=(const Element& other) {
  check_compatible(other);
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_compatible(other);
  for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
  return *this;
}

Element& Element::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scalar;
  return *this;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const char* symbol = basis_ == Basis::diagram ? "d" : "x";
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (c != 1) s += partalg::to_string(c) + " ";
    s += std::string(symbol) + "{" + key.to_string() + "}";
  }
  return s;
}

nlohmann::json Element::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, coeff] : terms_)
    terms.push_back({{"partition", key.to_string()}, {"coeff", partalg::to_string(coeff)}});
  return {{"two_k", two_k_}, {"n", n_}, {"basis", partalg::to_string(basis_)},
          {"terms", terms}};
}

Element Element::from_json(const nlohmann::json& j) {
  try {
    Element e(j.at("two_k").get<int>(), j.at("n").get<int>(),
              parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      const auto& coeff = t.at("coeff");
      Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>())
                                     : Rational(coeff.get<long>());
      e.add_term(SetPartition::from_json(t.at("partition")), c);
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("element JSON: ") + ex.what(), 0);
  }
}

// ---------------------------------------------------------------------------
// change of basis

Element parse_element(std::string_view text, int two_k, int n) {
  auto skip = [&](std::size_t i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return i;
  };
  std::size_t i = skip(0);
  if (i < text.size() && text[i] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), e.byte);
    }
    Element e = Element::from_json(j);
    if (e.two_k() != two_k || e.n() != n)
      throw Error(ErrorKind::dimension, "element JSON does not match the requested k and n");
    return e;
  }
  std::optional<Basis> basis;
  std::vector<std::pair<SetPartition, Rational>> terms;
  bool first = true;
  while (true) {
    i = skip(i);
    if (i == text.size()) {
      if (first) throw ParseError("empty element", i);
      break;
    }
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      i = skip(i + 1);
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    Rational coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t end = i;
      while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
        ++end;
      try {
        coeff = parse_rational(text.substr(i, end - i));
      } catch (const ParseError&) {
        throw ParseError("bad coefficient", i);
      }
      i = skip(end);
      if (i < text.size() && text[i] == '*') i = skip(i + 1);
    }
    if (i == text.size() || (text[i] != 'd' && text[i] != 'x'))
      throw ParseError("expected 'd' or 'x'", i);
    Basis b = text[i] == 'd' ? Basis::diagram : Basis::orbit;
    if (basis && *basis != b) throw ParseError("terms mix the diagram and orbit bases", i);
    basis = b;
    ++i;
    if (i < text.size() && text[i] == '_') ++i;
    if (i == text.size() || text[i] != '{') throw ParseError("expected '{'", i);
    std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) throw ParseError("missing '}'", i);
    SetPartition pi;
    try {
      pi = SetPartition::parse(text.substr(i + 1, close - i - 1));
    } catch (const ParseError& e) {
      throw ParseError(std::string("set partition: ") + e.what(), i + 1);
    }
    terms.emplace_back(pi, sign * coeff);
    i = close + 1;
  }
  for (const auto& [pi, c] : terms)
    if (!is_valid_key(two_k, pi))
      throw Error(ErrorKind::dimension, "{" + pi.to_string() + "} is not a diagram of level " +
                                            std::to_string(two_k) + "/2");
  return Element::make(*basis, terms, two_k, n);
}

Element to_orbit(const Element& e) {
  if (e.basis() == Basis::orbit) return e;
  Element out(e.two_k(), e.n(), Basis::orbit);
  for (const auto& [pi, coeff] : e.terms())
    for (const auto& rho : coarsenings(pi)) out.add_term(rho, coeff);
  return out;
}

Element to_diagram(const Element& e) {
  if (e.basis() == Basis::diagram) return e;
  Element out(e.two_k(), e.n(), Basis::diagram);
  for (const auto& [pi, coeff] : e.terms())
    for (const auto& rho : coarsenings(pi))
      out.add_term(rho, coeff * Rational(static_cast<long>(mobius(pi, rho))));
  return out;
}

Element to_basis(const Element& e, Basis basis) {
  return basis == Basis::orbit ? to_orbit(e) : to_diagram(e);
}

// ---------------------------------------------------------------------------
// products

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void check_same_algebra(const Element& a, const Element& b) {
  if (a.two_k() != b.two_k() || a.n() != b.n())
    throw Error(ErrorKind::dimension, "product of elements from different algebras (two_k " +
                                          std::to_string(a.two_k()) + "/" +
                                          std::to_string(b.two_k()) + ", n " +
                                          std::to_string(a.n()) + "/" + std::to_string(b.n()) +
                                          ")");
}

// Node layout for stacking: top row [0,k), middle row [k,2k), bottom row [2k,3k).
struct Stack {
  int k;
  UnionFind uf;

  Stack(const SetPartition& top, const SetPartition& bottom)
      : k(static_cast<int>(top.size() / 2)), uf(3 * top.size() / 2) {
    if (top.size() != bottom.size() || top.size() % 2)
      throw Error(ErrorKind::dimension, "stacking partitions of different sizes");
    std::vector<int> first(top.size(), -1);
    for (int j = 1; j <= 2 * k; ++j) {
      int node = j <= k ? k + (j - 1) : j - k - 1;
      int b = top.block_of(j);
      if (first[b] < 0)
        first[b] = node;
      else
        uf.unite(first[b], node);
    }
    std::fill(first.begin(), first.end(), -1);
    for (int j = 1; j <= 2 * k; ++j) {
      int node = j <= k ? 2 * k + (j - 1) : k + (j - k - 1);
      int b = bottom.block_of(j);
      if (first[b] < 0)
        first[b] = node;
      else
        uf.unite(first[b], node);
    }
  }

  // result element j (1-based) as a node
  int node_of(int j) const { return j <= k ? 2 * k + (j - 1) : j - k - 1; }

  Concatenation result() {
    std::vector<int> labels(2 * k);
    std::vector<char> outer(3 * k, 0);
    for (int j = 1; j <= 2 * k; ++j) {
      labels[j - 1] = uf.find(node_of(j));
      outer[labels[j - 1]] = 1;
    }
    std::vector<char> counted(3 * k, 0);
    int middle = 0;
    for (int i = k; i < 2 * k; ++i) {
      int r = uf.find(i);
      if (!outer[r] && !counted[r]) {
        counted[r] = 1;
        ++middle;
      }
    }
    return {SetPartition::from_labels(labels), middle};
  }
};

}  // namespace

Concatenation concatenate(const SetPartition& top, const SetPartition& bottom) {
  Stack stack(top, bottom);
  return stack.result();
}

Element multiply(const Element& a_in, const Element& b_in) {
  check_same_algebra(a_in, b_in);
  Element a = to_diagram(a_in);
  Element b = to_diagram(b_in);
  std::unordered_map<SetPartition, Rational> acc;
  std::vector<BigInt> powers{1};
  for (const auto& [p1, c1] : a.terms()) {
    for (const auto& [p2, c2] : b.terms()) {
      auto cat = concatenate(p1, p2);
      while (static_cast<int>(powers.size()) <= cat.middle_blocks)
        powers.push_back(powers.back() * a.n());
      Rational c = c1 * c2;
      c *= Rational(powers[cat.middle_blocks]);
      acc[cat.result] += c;
    }
  }
  Element out(a.two_k(), a.n(), Basis::diagram);
  for (auto& [key, coeff] : acc) out.add_term(key, coeff);
  return out;
}

namespace {

// Orbit product of two basis elements; calls emit(rho, coefficient).
template <typename Emit>
void orbit_basis_product(const SetPartition& p1, const PropagatingData& d1,
                         const SetPartition& p2, const PropagatingData& d2, int n,
                         OrbitMode mode, Emit&& emit) {
  if (d1.bottom != d2.top) return;
  int k = static_cast<int>(p1.size() / 2);
  Stack stack(p1, p2);
  auto cat = stack.result();
  std::vector<int> labels(cat.result.labels().begin(), cat.result.labels().end());

  // blocks of p1 inside its top row, blocks of p2 inside its bottom row,
  // each named by the label of one of its elements in the result
  std::vector<int> top_only, bottom_only;
  {
    std::vector<char> touches(p1.block_count(), 0);
    for (int j = 1; j <= k; ++j) touches[p1.block_of(j)] = 1;
    std::vector<char> seen(p1.block_count(), 0);
    for (int j = k + 1; j <= 2 * k; ++j) {
      int b = p1.block_of(j);
      if (!touches[b] && !seen[b]) {
        seen[b] = 1;
        top_only.push_back(labels[j - 1]);
      }
    }
  }
  {
    std::vector<char> touches(p2.block_count(), 0);
    for (int j = k + 1; j <= 2 * k; ++j) touches[p2.block_of(j)] = 1;
    std::vector<char> seen(p2.block_count(), 0);
    for (int j = 1; j <= k; ++j) {
      int b = p2.block_of(j);
      if (!touches[b] && !seen[b]) {
        seen[b] = 1;
        bottom_only.push_back(labels[j - 1]);
      }
    }
  }

  int base_blocks = static_cast<int>(cat.result.block_count());
  std::vector<int> relabel(labels.size());
  std::iota(relabel.begin(), relabel.end(), 0);
  std::vector<char> used(bottom_only.size(), 0);
  std::vector<int> merged(labels.size());

  auto finish = [&](int merges) {
    int blocks = base_blocks - merges;
    if (mode == OrbitMode::image && blocks > n) return;
    BigInt c = falling_factorial(n - blocks, static_cast<unsigned long>(cat.middle_blocks));
    if (c == 0) return;
    for (std::size_t i = 0; i < labels.size(); ++i) merged[i] = relabel[labels[i]];
    emit(SetPartition::from_labels(merged), c);
  };
  auto rec = [&](auto& self, std::size_t a, int merges) -> void {
    if (a == top_only.size()) {
      finish(merges);
      return;
    }
    self(self, a + 1, merges);
    for (std::size_t b = 0; b < bottom_only.size(); ++b) {
      if (used[b]) continue;
      used[b] = 1;
      relabel[bottom_only[b]] = top_only[a];
      self(self, a + 1, merges + 1);
      relabel[bottom_only[b]] = bottom_only[b];
      used[b] = 0;
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Element multiply_orbit(const Element& a_in, const Element& b_in, OrbitMode mode) {
  check_same_algebra(a_in, b_in);
  Element a = to_orbit(a_in);
  Element b = to_orbit(b_in);
  std::vector<std::pair<const SetPartition*, PropagatingData>> right;
  right.reserve(b.terms().size());
  for (const auto& [p2, c2] : b.terms()) right.emplace_back(&p2, propagating_data(p2));
  std::unordered_map<SetPartition, Rational> acc;
  for (const auto& [p1, c1] : a.terms()) {
    auto d1 = propagating_data(p1);
    for (const auto& [p2ptr, d2] : right) {
      const Rational& c2 = b.terms().at(*p2ptr);
      Rational c12 = c1 * c2;
      orbit_basis_product(p1, d1, *p2ptr, d2, a.n(), mode,
                          [&](const SetPartition& rho, const BigInt& c) {
                            acc[rho] += c12 * Rational(c);
                          });
    }
  }
  Element out(a.two_k(), a.n(), Basis::orbit);
  for (auto& [key, coeff] : acc) out.add_term(key, coeff);
  return out;
}

// ---------------------------------------------------------------------------
// generators

namespace {

std::vector<int> identity_labels(int k) {
  std::vector<int> labels(2 * k);
  for (int i = 0; i < k; ++i) labels[i] = labels[k + i] = i;
  return labels;
}

void check_level(int k, int n) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "k must be at least 1");
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be at least 1");
}

}  // namespace

Element identity(int two_k, int n) {
  int k = columns_for(two_k);
  return Element::basis_element(two_k, n, Basis::diagram,
                                SetPartition::from_labels(identity_labels(k)));
}

Element generator_s(int i, int k, int n) {
  check_level(k, n);
  if (i < 1 || i > k - 1)
    throw Error(ErrorKind::invalid_argument, "s_i needs 1 <= i <= k-1");
  auto labels = identity_labels(k);
  std::swap(labels[k + i - 1], labels[k + i]);
  return Element::basis_element(2 * k, n, Basis::diagram, SetPartition::from_labels(labels));
}

Element generator_p(int i, int k, int n) {
  check_level(k, n);
  if (i < 1 || i > k) throw Error(ErrorKind::invalid_argument, "p_i needs 1 <= i <= k");
  auto labels = identity_labels(k);
  labels[k + i - 1] = k;  // fresh block for the top vertex
  return Element::basis_element(2 * k, n, Basis::diagram, SetPartition::from_labels(labels),
                                Rational(1, n));
}

Element generator_b(int i, int k, int n) {
  check_level(k, n);
  if (i < 1 || i > k - 1)
    throw Error(ErrorKind::invalid_argument, "b_i needs 1 <= i <= k-1");
  auto labels = identity_labels(k);
  labels[i] = labels[k + i] = i - 1;
  return Element::basis_element(2 * k, n, Basis::diagram, SetPartition::from_labels(labels));
}

Element generator_p_half(int two_l, int k, int n) {
  check_level(k, n);
  if (two_l < 1 || two_l > 2 * k + 1)
    throw Error(ErrorKind::invalid_argument, "p_l needs 1/2 <= l <= k+1/2");
  if (two_l == 1 || two_l == 2 * k + 1) return identity(2 * k, n);
  if (two_l % 2 == 0) return generator_p(two_l / 2, k, n);
  return generator_b(two_l / 2, k, n);
}

GeneratorSet GeneratorSet::standard(int k, int n) {
  check_level(k, n);
  GeneratorSet g;
  g.k = k;
  g.n = n;
  for (int i = 1; i <= k - 1; ++i) g.s.push_back(generator_s(i, k, n));
  for (int two_l = 1; two_l <= 2 * k + 1; ++two_l) g.p.push_back(generator_p_half(two_l, k, n));
  return g;
}

namespace {

std::string half_name(int two_l) {
  if (two_l % 2 == 0) return std::to_string(two_l / 2);
  return std::to_string(two_l / 2) + ".5";
}

Element product(std::initializer_list<const Element*> factors) {
  auto it = factors.begin();
  Element acc = **it;
  for (++it; it != factors.end(); ++it) acc = multiply(acc, **it);
  return acc;
}

void report(std::vector<PresentationReport>& out, std::string name, const Element& lhs,
            const Element& rhs) {
  Element l = to_diagram(lhs), r = to_diagram(rhs);
  PresentationReport rep;
  rep.relation = std::move(name);
  rep.holds = l == r;
  if (!rep.holds) rep.witness = std::make_pair(l, r);
  out.push_back(std::move(rep));
}

}  // namespace

std::vector<PresentationReport> check_presentation(const GeneratorSet& g) {
  const int k = g.k;
  if (static_cast<int>(g.s.size()) != k - 1 || static_cast<int>(g.p.size()) != 2 * k + 1)
    throw Error(ErrorKind::dimension, "generator set has the wrong number of generators");
  std::vector<PresentationReport> out;
  const Element id = identity(2 * k, g.n);
  auto s = [&](int i) -> const Element& { return g.s[i - 1]; };
  auto p = [&](int two_l) -> const Element& { return g.p[two_l - 1]; };
  auto si = [](int i) { return "s_" + std::to_string(i); };
  auto pl = [](int two_l) { return "p_" + half_name(two_l); };

  // (a) Coxeter relations
  for (int i = 1; i <= k - 1; ++i)
    report(out, "a: " + si(i) + "^2 = I", product({&s(i), &s(i)}), id);
  for (int i = 1; i <= k - 1; ++i)
    for (int j = i + 2; j <= k - 1; ++j)
      report(out, "a: " + si(i) + " " + si(j) + " = " + si(j) + " " + si(i),
             product({&s(i), &s(j)}), product({&s(j), &s(i)}));
  for (int i = 1; i <= k - 2; ++i)
    report(out, "a: " + si(i) + " " + si(i + 1) + " " + si(i) + " = " + si(i + 1) + " " +
                    si(i) + " " + si(i + 1),
           product({&s(i), &s(i + 1), &s(i)}), product({&s(i + 1), &s(i), &s(i + 1)}));

  // (b) projection relations, l ranging over 1, 3/2, ..., k
  for (int l = 2; l <= 2 * k; ++l)
    report(out, "b: " + pl(l) + "^2 = " + pl(l), product({&p(l), &p(l)}), p(l));
  for (int l = 2; l <= 2 * k; ++l)
    for (int m = l + 2; m <= 2 * k; ++m)
      report(out, "b: " + pl(l) + " " + pl(m) + " = " + pl(m) + " " + pl(l),
             product({&p(l), &p(m)}), product({&p(m), &p(l)}));
  // With p_i scaled by 1/n, a sandwich between two interior generators picks
  // up exactly one factor 1/n (the unscaled diagrams satisfy e b e = e and
  // b e b = b). At the ends p_{1/2} = p_{k+1/2} = I there is no factor.
  const Rational inv_n(1, g.n);
  for (int l = 2; l <= 2 * k; ++l)
    for (int m : {l - 1, l + 1}) {
      bool interior = m >= 2 && m <= 2 * k;
      Rational c = interior ? inv_n : Rational(1);
      std::string rhs = interior ? "(1/n) " + pl(l) : pl(l);
      report(out, "b: " + pl(l) + " " + pl(m) + " " + pl(l) + " = " + rhs,
             product({&p(l), &p(m), &p(l)}), c * p(l));
    }

  // (c) mixed relations
  for (int i = 1; i <= k - 1; ++i) {
    const int pi = 2 * i, pi1 = 2 * i + 2, phalf = 2 * i + 1;
    report(out, "c: " + si(i) + " " + pl(pi) + " " + pl(pi1) + " = " + pl(pi) + " " + pl(pi1),
           product({&s(i), &p(pi), &p(pi1)}), product({&p(pi), &p(pi1)}));
    report(out, "c: " + si(i) + " " + pl(pi) + " " + si(i) + " = " + pl(pi1),
           product({&s(i), &p(pi), &s(i)}), p(pi1));
    report(out, "c: " + si(i) + " " + pl(phalf) + " = " + pl(phalf),
           product({&s(i), &p(phalf)}), p(phalf));
    report(out, "c: " + pl(phalf) + " " + si(i) + " = " + pl(phalf),
           product({&p(phalf), &s(i)}), p(phalf));
    if (i <= k - 2)
      report(out,
             "c: " + si(i) + " " + si(i + 1) + " " + pl(phalf) + " " + si(i + 1) + " " + si(i) +
                 " = " + pl(phalf + 2),
             product({&s(i), &s(i + 1), &p(phalf), &s(i + 1), &s(i)}), p(phalf + 2));
    for (int l = 2; l <= 2 * k; ++l) {
      if (l >= 2 * i - 1 && l <= 2 * i + 3) continue;
      report(out, "c: " + si(i) + " " + pl(l) + " = " + pl(l) + " " + si(i),
             product({&s(i), &p(l)}), product({&p(l), &s(i)}));
    }
  }
  return out;
}

std::vector<PresentationReport> check_presentation(int k, int n) {
  return check_presentation(GeneratorSet::standard(k, n));
}

// ---------------------------------------------------------------------------
// e_{k,n}

SetPartition e_kn_partition(int two_k, int n) {
  if (two_k < 1 || n < 1) throw Error(ErrorKind::invalid_argument, "two_k and n must be positive");
  if (two_k <= n)
    throw Error(ErrorKind::invalid_argument,
                "e_{k,n} needs 2k > n (two_k=" + std::to_string(two_k) +
                    ", n=" + std::to_string(n) + "): the kernel is zero");
  int k = columns_for(two_k);
  std::vector<int> labels(2 * k);
  int cut = k > n ? 0 : n + 1 - k;  // leading columns split into singletons
  int next = 0;
  for (int i = 0; i < k; ++i) {
    if (i < cut) {
      labels[i] = next++;
      labels[k + i] = next++;
    } else {
      labels[i] = labels[k + i] = next++;
    }
  }
  return SetPartition::from_labels(labels);
}

Element e_kn(int two_k, int n) {
  return Element::basis_element(two_k, n, Basis::orbit, e_kn_partition(two_k, n));
}

Rational idempotent_constant(int two_k, int n) {
  int k = columns_for(two_k);
  if (two_k <= n)
    throw Error(ErrorKind::invalid_argument, "idempotent constant needs 2k > n");
  if (k > n) return 1;
  int m = n + 1 - k;
  Rational c(factorial(static_cast<unsigned long>(m)));
  return m % 2 ? -c : c;
}

Element embed(const Element& e, int target_two_k) {
  if (target_two_k <= e.two_k())
    throw Error(ErrorKind::invalid_argument, "embedding target must be a larger level");
  int k0 = e.columns();
  int k1 = columns_for(target_two_k);
  Element d = to_diagram(e);
  Element out(target_two_k, e.n(), Basis::diagram);
  std::vector<int> labels(2 * k1);
  for (const auto& [pi, coeff] : d.terms()) {
    int fresh = static_cast<int>(pi.block_count());
    for (int j = 1; j <= k0; ++j) {
      labels[j - 1] = pi.block_of(j);
      labels[k1 + j - 1] = pi.block_of(k0 + j);
    }
    for (int c = k0 + 1; c <= k1; ++c) {
      labels[c - 1] = labels[k1 + c - 1] = fresh++;
    }
    out.add_term(SetPartition::from_labels(labels), coeff);
  }
  return to_basis(out, e.basis());
}

}  // namespace partalg
