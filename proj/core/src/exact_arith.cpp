#include "qhcp/exact_arith.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace qhcp {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("int64 overflow in negation");
  return -a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("value does not fit in int64");
  return static_cast<std::int64_t>(v);
}

}  // namespace checked

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return checked::narrow(gcd128(a, b)); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = gcd(a, b);
  return checked::mul(checked::narrow(abs128(a)) / g, checked::narrow(abs128(b)));
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw DomainError("mod: modulus must be positive");
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("Rational: zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("Rational: division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = checked::narrow(n);
  r.den_ = checked::narrow(d);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) {
  __int128 n = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
  __int128 d = static_cast<__int128>(a.den_) * b.den_;
  return Rational::from_wide(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so exact products that fit are never rejected.
  std::int64_t g1 = gcd(a.num_, b.den_);
  std::int64_t g2 = gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
  __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
  return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("Rational: division by zero");
  return a * Rational::from_wide(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw DomainError("trailing characters");
      return Rational(v);
    }
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw DomainError("trailing characters");
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size()) throw DomainError("trailing characters");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw DomainError("cannot parse rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// Continued fractions

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("continued fraction must be nonempty");
  for (auto a : coefficients_)
    if (a < 2) throw DomainError("Hirzebruch-Jung coefficients must be >= 2");
}

ContinuedFraction hj_expand(std::int64_t p, std::int64_t q) {
  if (q <= 0 || q >= p) throw DomainError("hj_expand requires 0 < q < p");
  if (gcd(p, q) != 1) throw DomainError("hj_expand requires gcd(p, q) = 1");
  std::vector<std::int64_t> out;
  // p/q = a - 1/(q/r) with a = ceil(p/q), r = a*q - p.
  while (q > 0) {
    std::int64_t a = (p + q - 1) / q;
    out.push_back(a);
    std::int64_t r = checked::sub(checked::mul(a, q), p);
    p = q;
    q = r;
  }
  return ContinuedFraction(std::move(out));
}

std::pair<std::int64_t, std::int64_t> hj_value(const ContinuedFraction& cf) {
  const auto& a = cf.coefficients();
  // Evaluate from the tail: x_l = a_l / 1, x_k = a_k - 1/x_{k+1}.
  std::int64_t p = a.back();
  std::int64_t q = 1;
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    std::int64_t np = checked::sub(checked::mul(a[k], p), q);
    q = p;
    p = np;
  }
  std::int64_t g = gcd(p, q);
  return {p / g, q / g};
}

// ---------------------------------------------------------------------------
// Integer predicates

std::int64_t exact_sqrt(std::int64_t n) {
  if (n < 0) throw DomainError("exact_sqrt of negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  if (static_cast<__int128>(r) * r != n) throw DomainError(std::to_string(n) + " is not a perfect square");
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<__int128>(r) * r == n;
}

bool is_square_unit_mod(std::int64_t c, std::int64_t n) {
  if (n < 2) throw DomainError("is_square_unit_mod requires n >= 2");
  std::int64_t cr = mod(c, n);
  if (gcd(cr, n) != 1) throw DomainError("is_square_unit_mod requires gcd(c, n) = 1");
  for (std::int64_t u = 1; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    if (static_cast<std::int64_t>((static_cast<__int128>(u) * u) % n) == cr) return true;
  }
  return false;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string factor_string(std::int64_t n) {
  static const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  auto factors = factorize(n);
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e > 1) {
      for (char ch : std::to_string(e)) out += kSuperscripts[ch - '0'];
    }
  }
  return out;
}

}  // namespace qhcp
