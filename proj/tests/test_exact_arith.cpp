#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <random>

#include "doctest.h"
#include "qhcp/exact_arith.hpp"

using qhcp::Rational;
using big = boost::multiprecision::cpp_rational;

namespace {

big to_big(const Rational& r) { return big(r.num()) / big(r.den()); }

bool fits(const big& b) {
  using boost::multiprecision::cpp_int;
  const cpp_int lim = std::numeric_limits<std::int64_t>::max();
  const cpp_int n = boost::multiprecision::numerator(b), d = boost::multiprecision::denominator(b);
  return n <= lim && -n <= lim && d <= lim;
}

std::int64_t brute_gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

TEST_CASE("checked arithmetic throws instead of wrapping") {
  const auto big_v = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(qhcp::checked::add(big_v, 1), qhcp::OverflowError);
  CHECK_THROWS_AS(qhcp::checked::mul(big_v / 2, 3), qhcp::OverflowError);
  CHECK_THROWS_AS(qhcp::checked::neg(std::numeric_limits<std::int64_t>::min()), qhcp::OverflowError);
  CHECK(qhcp::checked::sub(-5, 7) == -12);
  CHECK(qhcp::mod(-7, 3) == 2);
  CHECK(qhcp::lcm(4, 6) == 12);
}

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("-8/3") == Rational(-8, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), qhcp::DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), qhcp::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), qhcp::DomainError);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(-Rational(1, 4) == Rational(-1, 4));
}

TEST_CASE("rational agrees with a big-rational oracle") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> small(-2000, 2000), den(1, 2000);
  int checked_ops = 0, overflows = 0;
  Rational acc(1);
  big acc_big(1);
  for (int step = 0; step < 10000; ++step) {
    const Rational x(small(rng), den(rng));
    const big xb = to_big(x);
    const int op = static_cast<int>(rng() % 4);
    if (op == 3 && x.sign() == 0) continue;
    big expect;
    switch (op) {
      case 0: expect = acc_big + xb; break;
      case 1: expect = acc_big - xb; break;
      case 2: expect = acc_big * xb; break;
      default: expect = acc_big / xb; break;
    }
    try {
      Rational got;
      switch (op) {
        case 0: got = acc + x; break;
        case 1: got = acc - x; break;
        case 2: got = acc * x; break;
        default: got = acc / x; break;
      }
      REQUIRE(to_big(got) == expect);
      acc = got;
      acc_big = expect;
      ++checked_ops;
    } catch (const qhcp::OverflowError&) {
      REQUIRE_FALSE(fits(expect));
      ++overflows;
      acc = Rational(1);
      acc_big = 1;
    }
    if (step % 50 == 0) {
      acc = x;
      acc_big = xb;
    }
  }
  CHECK(checked_ops + overflows > 9000);
}

TEST_CASE("continued fraction examples") {
  CHECK(qhcp::hj_expand(9, 1).coefficients() == std::vector<std::int64_t>{9});
  CHECK(qhcp::hj_expand(36, 19).coefficients() == std::vector<std::int64_t>{2, 10, 2});
  CHECK(qhcp::hj_expand(9, 4).coefficients() == std::vector<std::int64_t>{3, 2, 2, 2});
  CHECK(qhcp::hj_value(qhcp::ContinuedFraction({2, 2, 3, 2, 2})) == std::pair<std::int64_t, std::int64_t>{15, 11});
  CHECK(qhcp::hj_value(qhcp::ContinuedFraction({3, 10, 2, 2})) == std::pair<std::int64_t, std::int64_t>{81, 28});
  CHECK_THROWS_AS(qhcp::hj_expand(6, 4), qhcp::DomainError);
  CHECK_THROWS_AS(qhcp::ContinuedFraction({2, 1}), qhcp::DomainError);
}

TEST_CASE("continued fraction round trip for p <= 200") {
  for (std::int64_t p = 2; p <= 200; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (brute_gcd(p, q) != 1) continue;
      const auto cf = qhcp::hj_expand(p, q);
      for (auto a : cf.coefficients()) REQUIRE(a >= 2);
      REQUIRE(qhcp::hj_value(cf) == std::pair<std::int64_t, std::int64_t>{p, q});
    }
}

TEST_CASE("square units agree with enumeration for n <= 100") {
  for (std::int64_t n = 2; n <= 100; ++n) {
    std::vector<bool> is_sq(n, false);
    for (std::int64_t x = 1; x < n; ++x)
      if (brute_gcd(x, n) == 1) is_sq[x * x % n] = true;
    for (std::int64_t c = 0; c < n; ++c) {
      if (brute_gcd(c, n) != 1) {
        REQUIRE_THROWS_AS(qhcp::is_square_unit_mod(c, n), qhcp::DomainError);
        continue;
      }
      REQUIRE(qhcp::is_square_unit_mod(c, n) == is_sq[c]);
    }
  }
  CHECK_FALSE(qhcp::is_square_unit_mod(7, 12));
  CHECK_FALSE(qhcp::is_square_unit_mod(29, 36));
  CHECK_FALSE(qhcp::is_square_unit_mod(5, 9));
}

TEST_CASE("perfect squares and factorizations") {
  for (std::int64_t k = 0; k < 3000; ++k) {
    REQUIRE(qhcp::is_perfect_square(k * k));
    REQUIRE(qhcp::exact_sqrt(k * k) == k);
    if (k > 1) REQUIRE_FALSE(qhcp::is_perfect_square(k * k + 1));
  }
  CHECK_FALSE(qhcp::is_perfect_square(-4));
  CHECK(qhcp::factor_string(84) == "2²·3·7");
  CHECK(qhcp::factor_string(1) == "1");
  CHECK(qhcp::factor_string(1024) == "2¹⁰");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 1000000);
    std::int64_t prod = 1;
    for (auto [p, e] : qhcp::factorize(n))
      for (int k = 0; k < e; ++k) prod *= p;
    REQUIRE(prod == n);
  }
}
