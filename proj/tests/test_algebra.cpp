#include <doctest.h>

#include <map>
#include <random>

#include "partalg/algebra.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/error.hpp"

using namespace partalg;

namespace {

SetPartition sp(const char* text) { return SetPartition::parse(text); }

Element d(int two_k, int n, const char* text, Rational c = 1) {
  return Element::basis_element(two_k, n, Basis::diagram, sp(text), c);
}
Element x(int two_k, int n, const char* text, Rational c = 1) {
  return Element::basis_element(two_k, n, Basis::orbit, sp(text), c);
}

std::vector<SetPartition> keys(int two_k) {
  int k = columns_for(two_k);
  std::vector<SetPartition> out;
  for (const auto& pi : enumerate_set_partitions(2 * k))
    if (is_valid_key(two_k, pi)) out.push_back(pi);
  return out;
}

Element random_element(int two_k, int n, Basis basis, std::mt19937& rng, int terms = 3) {
  auto all = keys(two_k);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Element e(two_k, n, basis);
  for (int i = 0; i < terms; ++i) e.add_term(all[pick(rng)], Rational(coeff(rng), 1 + (i % 2)));
  return e;
}

}  // namespace

TEST_CASE("element construction") {
  Element zero = Element::make(Basis::diagram, {}, 4, 3);
  CHECK(zero.is_zero());
  auto id = identity(4, 3);
  CHECK(id.terms().size() == 1);
  CHECK(id.coefficient(sp("1,3|2,4")) == 1);
  auto e = d(4, 3, "1,2|3|4", Rational(2, 3));
  CHECK((e + Rational(-1) * e).is_zero());
  CHECK_THROWS_AS(d(4, 3, "1,2|3"), Error);
  CHECK_THROWS_AS(d(3, 3, "1,2|3|4"), Error);  // last column split in half algebra
  CHECK_NOTHROW(d(3, 3, "1|2,4|3"));
  CHECK_THROWS_AS(d(4, 3, "1|2|3|4") + d(4, 2, "1|2|3|4"), Error);
  CHECK_THROWS_AS(d(4, 3, "1|2|3|4") + x(4, 3, "1|2|3|4"), Error);
  auto made = Element::make(Basis::orbit, {{sp("1|2|3|4"), 1}, {sp("1|2|3|4"), -1}}, 4, 2);
  CHECK(made.is_zero());
}

TEST_CASE("json round trip") {
  auto e = d(4, 5, "1,2|3|4", Rational(-7, 3)) + d(4, 5, "1,3|2,4");
  auto j = e.to_json();
  CHECK(j["terms"][0]["coeff"].is_string());
  CHECK(Element::from_json(j) == e);
}

TEST_CASE("change of basis") {
  auto o = to_orbit(d(4, 3, "1|2,3|4"));
  auto expected = x(4, 3, "1|2,3|4") + x(4, 3, "1,2,3|4") + x(4, 3, "1|2,3,4") +
                  x(4, 3, "1,4|2,3") + x(4, 3, "1,2,3,4");
  CHECK(o == expected);
  auto dd = to_diagram(x(4, 3, "1|2,3|4"));
  auto expected_d = d(4, 3, "1|2,3|4") - d(4, 3, "1,2,3|4") - d(4, 3, "1|2,3,4") -
                    d(4, 3, "1,4|2,3") + Rational(2) * d(4, 3, "1,2,3,4");
  CHECK(dd == expected_d);
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    int two_k = 1 + i % 8;
    auto e = random_element(two_k, 3, Basis::diagram, rng);
    REQUIRE(to_diagram(to_orbit(e)) == e);
    auto f = random_element(two_k, 3, Basis::orbit, rng);
    REQUIRE(to_orbit(to_diagram(f)) == f);
  }
}

TEST_CASE("diagram multiplication") {
  for (int two_k = 2; two_k <= 6; two_k += 2)
    for (const auto& pi : keys(two_k)) {
      auto e = Element::basis_element(two_k, 3, Basis::diagram, pi);
      REQUIRE(multiply(identity(two_k, 3), e) == e);
      REQUIRE(multiply(e, identity(two_k, 3)) == e);
    }
  // two 8-column diagrams whose product closes two middle loops
  auto a = d(16, 3, "1,3|2|4,9,11|5,7|6,16|8,14|10|12,13,15");
  auto b = d(16, 3, "1,2,3|4,5,11|6,8|7,16|9,12|10|13,15|14");
  CHECK(multiply(a, b) == d(16, 3, "1,2,3|4,5,9,11|6,8|7,14|10|12,13,15|16", 9));
  auto cat = concatenate(sp("1,3|2|4,9,11|5,7|6,16|8,14|10|12,13,15"),
                         sp("1,2,3|4,5,11|6,8|7,16|9,12|10|13,15|14"));
  CHECK(cat.middle_blocks == 2);
  for (int i = 1; i <= 3; ++i) {
    auto p = generator_p(i, 3, 4);
    CHECK(multiply(p, p) == p);
  }
}

TEST_CASE("associativity") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    int two_k = 1 + i % 6;
    int n = 2 + i % 3;
    auto a = random_element(two_k, n, Basis::diagram, rng);
    auto b = random_element(two_k, n, Basis::diagram, rng);
    auto c = random_element(two_k, n, Basis::diagram, rng);
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("orbit multiplication examples") {
  // x_{123|456}^2 = (n-2) x_{123|456} + (n-1) x_{123456}
  for (int n = 1; n <= 6; ++n) {
    auto e = x(6, n, "1,2,3|4,5,6");
    CHECK(multiply_orbit(e, e) == x(6, n, "1,2,3|4,5,6", n - 2) + x(6, n, "1,2,3,4,5,6", n - 1));
  }
  // two top-only blocks against two bottom-only blocks
  const int n = 10;
  auto prod = multiply_orbit(x(8, n, "1|2,4|3,5|6,8|7"), x(8, n, "1,3|2,7|4|5|6,8"));
  CHECK(concatenate(sp("1|2,4|3,5|6,8|7"), sp("1,3|2,7|4|5|6,8")).result == sp("1,3|2,5|4|6,8|7"));
  CHECK(prod.terms().size() == 7);
  std::map<std::size_t, std::vector<Rational>> by_blocks;
  for (const auto& [rho, c] : prod.terms()) by_blocks[rho.block_count()].push_back(c);
  CHECK(by_blocks[5] == std::vector<Rational>{Rational((n - 5) * (n - 6))});
  CHECK(by_blocks[4] == std::vector<Rational>(4, Rational((n - 4) * (n - 5))));
  CHECK(by_blocks[3] == std::vector<Rational>(2, Rational((n - 3) * (n - 4))));
  CHECK(prod.coefficient(sp("1,3|2,5|4|6,8|7")) == (n - 5) * (n - 6));
  // middles that do not match
  CHECK(multiply_orbit(x(4, 3, "1|2|3|4"), x(4, 3, "1|2|3,4")).is_zero());
}

TEST_CASE("orbit and diagram products agree") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    int two_k = 1 + i % 6;
    int n = 2 + i % 5;
    auto a = random_element(two_k, n, Basis::diagram, rng);
    auto b = random_element(two_k, n, Basis::diagram, rng);
    REQUIRE(to_orbit(multiply(a, b)) == multiply_orbit(to_orbit(a), to_orbit(b)));
  }
  // exhaustive on basis pairs at the smallest sizes
  for (int two_k = 1; two_k <= 4; ++two_k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : keys(two_k))
        for (const auto& q : keys(two_k)) {
          auto a = Element::basis_element(two_k, n, Basis::orbit, p);
          auto b = Element::basis_element(two_k, n, Basis::orbit, q);
          REQUIRE(multiply_orbit(a, b) == to_orbit(multiply(to_diagram(a), to_diagram(b))));
        }
}

TEST_CASE("half algebra closure") {
  std::mt19937 rng(3);
  for (int two_k : {1, 3, 5}) {
    for (int i = 0; i < 20; ++i) {
      auto a = random_element(two_k, 3, Basis::diagram, rng);
      auto b = random_element(two_k, 3, Basis::diagram, rng);
      auto prod = multiply(a, b);
      for (const auto& [rho, c] : prod.terms()) REQUIRE(is_valid_key(two_k, rho));
    }
  }
}

TEST_CASE("kernel span is an ideal") {
  for (int two_k = 2; two_k <= 6; two_k += 2)
    for (int n : {2, 3}) {
      auto all = keys(two_k);
      for (const auto& p : all) {
        if (static_cast<int>(p.block_count()) <= n) continue;
        auto a = Element::basis_element(two_k, n, Basis::orbit, p);
        for (const auto& q : all) {
          auto b = Element::basis_element(two_k, n, Basis::orbit, q);
          auto left = multiply_orbit(a, b);
          auto right = multiply_orbit(b, a);
          for (const auto& [rho, c] : left.terms()) REQUIRE(static_cast<int>(rho.block_count()) > n);
          for (const auto& [rho, c] : right.terms())
            REQUIRE(static_cast<int>(rho.block_count()) > n);
        }
      }
    }
}

TEST_CASE("image mode drops large orbits") {
  auto e = x(6, 1, "1,2,3|4,5,6");
  auto abstract = multiply_orbit(e, e);
  auto image = multiply_orbit(e, e, OrbitMode::image);
  CHECK(abstract.coefficient(sp("1,2,3|4,5,6")) == -1);
  CHECK(image == x(6, 1, "1,2,3,4,5,6", 0));
}

TEST_CASE("generators") {
  CHECK_THROWS_AS(generator_s(0, 3, 2), Error);
  CHECK_THROWS_AS(generator_s(3, 3, 2), Error);
  CHECK_THROWS_AS(generator_p(4, 3, 2), Error);
  CHECK_THROWS_AS(generator_b(3, 3, 2), Error);
  CHECK(generator_s(1, 2, 3) == d(4, 3, "1,4|2,3"));
  CHECK(generator_p(1, 2, 3) == d(4, 3, "1|2,4|3", Rational(1, 3)));
  CHECK(generator_b(1, 2, 3) == d(4, 3, "1,2,3,4"));
  CHECK(generator_p_half(1, 2, 3) == identity(4, 3));
  CHECK(generator_p_half(5, 2, 3) == identity(4, 3));
  auto s = generator_s(2, 4, 3);
  auto b = generator_b(2, 4, 3);
  CHECK(multiply(s, s) == identity(8, 3));
  CHECK(multiply(s, b) == b);
  CHECK(multiply(b, s) == b);
}

TEST_CASE("presentation") {
  for (auto [k, n] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    auto reports = check_presentation(k, n);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
      INFO(r.relation);
      CHECK(r.holds);
      CHECK(!r.witness);
    }
  }
  auto g = GeneratorSet::standard(3, 3);
  g.p[3] = generator_b(1, 3, 3) + generator_b(2, 3, 3);  // corrupt p_2
  bool failed = false;
  for (const auto& r : check_presentation(g))
    if (!r.holds) {
      failed = true;
      CHECK(r.witness);
      CHECK(!(r.witness->first == r.witness->second));
    }
  CHECK(failed);
}

TEST_CASE("idempotents") {
  CHECK(e_kn_partition(10, 6).block_count() == 7);
  CHECK(idempotent_constant(10, 6) == 2);
  CHECK(idempotent_constant(8, 3) == 1);
  CHECK(idempotent_constant(6, 3) == -1);
  CHECK_THROWS_AS(e_kn(4, 4), Error);
  for (int two_k = 1; two_k <= 8; ++two_k)
    for (int n = 1; n <= 7; ++n) {
      if (two_k <= n) continue;
      auto e = e_kn(two_k, n);
      int k = columns_for(two_k);
      CHECK(e_kn_partition(two_k, n).block_count() == static_cast<std::size_t>(k > n ? k : n + 1));
      INFO("two_k=", two_k, " n=", n);
      REQUIRE(multiply_orbit(e, e) == idempotent_constant(two_k, n) * e);
    }
}

TEST_CASE("embedding") {
  for (int k = 1; k <= 3; ++k) CHECK(embed(identity(2 * k, 3), 2 * k + 2) == identity(2 * k + 2, 3));
  auto e = embed(e_kn(4, 3), 7);
  CHECK(e.basis() == Basis::orbit);
  CHECK(e.two_k() == 7);
  auto ed = to_diagram(e);
  for (const auto& [rho, c] : ed.terms()) CHECK(rho.same_block(4, 8));
  CHECK_THROWS_AS(embed(identity(4, 3), 4), Error);
  // products commute with embedding
  std::mt19937 rng(17);
  for (int i = 0; i < 20; ++i) {
    auto a = random_element(4, 3, Basis::diagram, rng);
    auto b = random_element(4, 3, Basis::diagram, rng);
    REQUIRE(embed(multiply(a, b), 6) == multiply(embed(a, 6), embed(b, 6)));
  }
}

TEST_CASE("text output") {
  auto e = d(4, 3, "1,2|3|4", Rational(-1, 2)) + d(4, 3, "1,3|2,4");
  CHECK(e.to_string() == "-1/2 d{1,2|3|4} + d{1,3|2,4}");
  CHECK(Element(4, 3, Basis::orbit).to_string() == "0");
}

TEST_CASE("sandwich relation carries one factor 1/n") {
  for (int n : {2, 3, 5}) {
    auto p1 = generator_p(1, 2, n);
    auto b1 = generator_b(1, 2, n);
    auto pbp = multiply(multiply(p1, b1), p1);
    auto bpb = multiply(multiply(b1, p1), b1);
    CHECK(pbp == Rational(1, n) * p1);
    CHECK(bpb == Rational(1, n) * b1);
    CHECK_FALSE(pbp == p1);
    CHECK_FALSE(bpb == b1);
    // the unscaled diagrams satisfy the relation without a factor
    auto e1 = Rational(n) * p1;
    CHECK(multiply(multiply(e1, b1), e1) == e1);
  }
}

TEST_CASE("parsing elements from text") {
  auto e = parse_element("-1/2 d{1,2|3|4} + d{1,3|2,4}", 4, 3);
  CHECK(e.to_string() == "-1/2 d{1,2|3|4} + d{1,3|2,4}");
  CHECK(parse_element(e.to_string(), 4, 3) == e);
  auto x = parse_element("x_{1|2,3|4}", 4, 5);
  CHECK(x.basis() == Basis::orbit);
  CHECK(parse_element("2*x{1|2,3|4} - x{1|2,3|4}", 4, 5) == x);
  CHECK(parse_element(x.to_json().dump(), 4, 5) == x);
  CHECK_THROWS_AS(parse_element("d{1|2} + x{1,2}", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_element("d{1|2", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_element("", 2, 3), ParseError);
  CHECK_THROWS_AS(parse_element("d{1|2|3}", 2, 3), Error);
  try {
    parse_element("d{1|2} q", 2, 3);
    FAIL("no throw");
  } catch (const ParseError& err) {
    CHECK(err.position() == 7);
  }
}
