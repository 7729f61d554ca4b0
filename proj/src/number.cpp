#include "partalg/number.hpp"

#include <cctype>

#include "partalg/error.hpp"

namespace partalg {

namespace {

void check_integer_digits(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character in rational", offset + i);
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    check_integer_digits(text, 0);
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return Rational(BigInt(s));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  check_integer_digits(num, 0);
  check_integer_digits(den, slash + 1);
  std::string ns(num), ds(den);
  if (ns[0] == '+') ns.erase(0, 1);
  if (ds[0] == '+') ds.erase(0, 1);
  BigInt d(ds);
  if (d == 0) throw ParseError("zero denominator", slash + 1);
  Rational q(BigInt(ns), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt falling_factorial(long m, unsigned long len) {
  BigInt r = 1;
  for (unsigned long i = 0; i < len; ++i) r *= m - static_cast<long>(i);
  return r;
}

}  // namespace partalg
