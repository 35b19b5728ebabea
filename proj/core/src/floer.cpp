#include "qhcp/floer.hpp"

#include <algorithm>

namespace qhcp::floer {

namespace {

void check_lens(std::int64_t p, std::int64_t q) {
  if (p == 1 && q == 0) return;
  if (p < 2 || q <= 0 || q >= p) throw DomainError("lens space requires 0 < q < p or (p,q) = (1,0)");
  if (gcd(p, q) != 1) throw DomainError("lens space requires gcd(p,q) = 1");
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i) {
  check_lens(p, q);
  if (i < 0 || i >= p) throw DomainError("spin^c label out of range");
  Rational total(0);
  int sign = 1;
  while (p != 1) {
    const std::int64_t t = checked::sub(checked::add(checked::mul(2, i), 1), checked::add(p, q));
    const Rational term = Rational(1, 4) - Rational(checked::mul(t, t), checked::mul(4, checked::mul(p, q)));
    total += sign > 0 ? term : -term;
    sign = -sign;
    const std::int64_t r = p % q;
    i %= q;
    p = q;
    q = r;
  }
  return total;
}

std::vector<Rational> d_lens_all(std::int64_t p, std::int64_t q) {
  check_lens(p, q);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) out.push_back(d_lens(p, q, i));
  return out;
}

int recursion_depth(std::int64_t p, std::int64_t q) {
  check_lens(p, q);
  int steps = 0;
  while (p != 1) {
    const std::int64_t r = p % q;
    p = q;
    q = r;
    ++steps;
  }
  return steps;
}

std::vector<std::int64_t> spin_labels(std::int64_t p, std::int64_t q) {
  check_lens(p, q);
  std::vector<std::int64_t> out;
  if ((q - 1) % 2 == 0) out.push_back((q - 1) / 2);
  if ((p + q - 1) % 2 == 0) {
    const std::int64_t s = (p + q - 1) / 2;
    if (s < p) out.push_back(s);
  }
  for (auto& s : out) s = mod(s, p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> spin_d_lens(std::int64_t p, std::int64_t q) {
  std::vector<Rational> out;
  for (auto s : spin_labels(p, q)) out.push_back(d_lens(p, q, s));
  sort_unique(out);
  return out;
}

std::int64_t v_trefoil(std::int64_t s) {
  if (s < 0) throw DomainError("V_s requires s >= 0");
  return s == 0 ? 1 : 0;
}

Rational d_trefoil_surgery(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p <= 0 || q <= 0 || gcd(p, q) != 1) throw DomainError("surgery coefficient p/q needs coprime p, q > 0");
  if (i < 0 || i >= p) throw DomainError("spin^c label out of range");
  // L(p,q) with q reduced mod p; S^3 when p = 1.
  const std::int64_t lq = p == 1 ? 0 : mod(q, p);
  const Rational reversed = -d_lens(p, lq, i);
  const std::int64_t v = std::max(v_trefoil(i / q), v_trefoil((p + q + 1 - i) / q));
  return reversed - Rational(2 * v);
}

std::vector<Rational> d_trefoil_surgery_all(std::int64_t p, std::int64_t q) {
  std::vector<Rational> out;
  for (std::int64_t i = 0; i < p; ++i) out.push_back(d_trefoil_surgery(p, q, i));
  return out;
}

std::vector<Rational> spin_d_trefoil_surgery(std::int64_t k) {
  if (k < 1) throw DomainError("trefoil surgery framing must be positive");
  std::vector<Rational> out;
  const std::vector<std::int64_t> labels = k == 1 ? std::vector<std::int64_t>{0} : spin_labels(k, 1);
  for (auto s : labels) out.push_back(d_trefoil_surgery(k, 1, s));
  sort_unique(out);
  return out;
}

std::vector<Rational> attempted_sums(const std::vector<std::vector<Rational>>& sets) {
  std::vector<Rational> sums{Rational(0)};
  for (const auto& set : sets) {
    std::vector<Rational> next;
    next.reserve(sums.size() * set.size());
    for (const auto& a : sums)
      for (const auto& b : set) next.push_back(a + b);
    sort_unique(next);
    sums = std::move(next);
  }
  return sums;
}

ObstructionVerdict spin_sum_obstruction(const Configuration& config) {
  ObstructionVerdict v;
  v.filter = Filter::SpinSum;
  if (config.h1_product % 2 != 0) {
    v.outcome = Outcome::NotApplicable;
    v.note = "product of |H1| is odd";
    return v;
  }
  SpinSumEvidence ev;
  for (const auto& m : config.members) {
    auto set = spin_d_invariants(m);
    if (!set) {
      v.outcome = Outcome::NotApplicable;
      v.note = "warning: spin d-invariants unavailable for " + m.token();
      return v;
    }
    ev.spin_sets.push_back(*set);
  }
  ev.sums = attempted_sums(ev.spin_sets);
  const bool hit = std::binary_search(ev.sums.begin(), ev.sums.end(), Rational(1, 4));
  v.outcome = hit ? Outcome::Pass : Outcome::Obstructed;
  v.note = hit ? "a choice of spin structures sums to 1/4" : "no choice of spin structures sums to 1/4";
  v.evidence = std::move(ev);
  return v;
}

}  // namespace qhcp::floer
