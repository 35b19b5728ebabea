#ifndef QHCP_EXACT_ARITH_HPP
#define QHCP_EXACT_ARITH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhcp {

/// Raised whenever a fixed-width intermediate would leave the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised on arguments outside an operation's documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
/// Narrow a 128-bit intermediate, throwing OverflowError when it does not fit.
std::int64_t narrow(__int128 v);

}  // namespace checked

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Least non-negative residue of a modulo n (n >= 1).
std::int64_t mod(std::int64_t a, std::int64_t n);

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] int sign() const { return (num_ > 0) - (num_ < 0); }

  /// "p/q", or "p" when integral.
  [[nodiscard]] std::string str() const;
  /// Parses "p", "-p", "p/q".
  static Rational parse(const std::string& text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Hirzebruch-Jung continued fraction [a_1, ..., a_l] with every a_i >= 2.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<std::int64_t> coefficients);

  [[nodiscard]] const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  [[nodiscard]] std::size_t length() const { return coefficients_.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

/// Unique all->=2 expansion of p/q for coprime 0 < q < p.
ContinuedFraction hj_expand(std::int64_t p, std::int64_t q);

/// Value of the continued fraction as a reduced pair (p, q), p > q > 0.
std::pair<std::int64_t, std::int64_t> hj_value(const ContinuedFraction& cf);

bool is_perfect_square(std::int64_t n);

/// Exact integer square root of a perfect square; throws DomainError otherwise.
std::int64_t exact_sqrt(std::int64_t n);

/// True iff some unit u mod n has u^2 == c (mod n). Requires gcd(c, n) = 1.
bool is_square_unit_mod(std::int64_t c, std::int64_t n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Renders a positive integer as "2²·3·7" ("1" for one).
std::string factor_string(std::int64_t n);

}  // namespace qhcp

#endif  // QHCP_EXACT_ARITH_HPP
