#include "qhcp/linking.hpp"

namespace qhcp::linking {

CyclicLinkingForm::CyclicLinkingForm(std::int64_t order, std::int64_t value) : order_(order) {
  if (order < 1) throw DomainError("linking form order must be positive");
  value_ = mod(value, order);
  if (order > 1 && gcd(value_, order) != 1) throw DomainError("degenerate linking form");
}

CyclicLinkingForm CyclicLinkingForm::negated() const { return {order_, -value_}; }

std::string CyclicLinkingForm::str() const {
  if (order_ == 1) return "0";
  return std::to_string(value_) + "/" + std::to_string(order_);
}

bool isomorphic(const CyclicLinkingForm& a, const CyclicLinkingForm& b) {
  if (a.order() != b.order()) return false;
  const std::int64_t n = a.order();
  if (n == 1) return true;
  for (std::int64_t u = 1; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    const auto uu = static_cast<std::int64_t>((static_cast<__int128>(u) * u) % n);
    if (static_cast<std::int64_t>((static_cast<__int128>(a.value()) * uu) % n) == b.value()) return true;
  }
  return false;
}

CyclicLinkingForm lens_linking_form(std::int64_t p, std::int64_t q) {
  if (p == 1) return CyclicLinkingForm::trivial();
  if (q <= 0 || q >= p || gcd(p, q) != 1) throw DomainError("lens_linking_form requires coprime 0 < q < p");
  return {p, q};
}

CyclicLinkingForm surgery_linking_form(std::int64_t framing) {
  if (framing < 1) throw DomainError("surgery framing must be positive");
  if (framing == 1) return CyclicLinkingForm::trivial();
  return {framing, -1};
}

CyclicLinkingForm plumbing_linking_form(const std::vector<std::int64_t>& coefficients, std::size_t vertex) {
  const std::size_t n = coefficients.size();
  if (n == 0 || vertex >= n) throw DomainError("plumbing_linking_form: bad vertex");
  // Solve (-A) x = e_vertex by tridiagonal elimination; -A is positive definite so no pivoting.
  // x_vertex is the self-linking of the meridian.
  std::vector<Rational> upper(n, Rational(0)), rhs(n, Rational(0)), sol(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational rhs_i = Rational(i == vertex ? 1 : 0);
    const Rational diag = i == 0 ? Rational(coefficients[i]) : Rational(coefficients[i]) + upper[i - 1];
    if (diag.sign() == 0) throw DomainError("plumbing matrix is singular");
    upper[i] = Rational(-1) / diag;
    rhs[i] = (i == 0 ? rhs_i : rhs_i + rhs[i - 1]) / diag;
  }
  for (std::size_t i = n; i-- > 0;) sol[i] = i + 1 < n ? rhs[i] - upper[i] * sol[i + 1] : rhs[i];
  const Rational x = sol[vertex];
  if (x.den() == 1) return CyclicLinkingForm::trivial();
  return {x.den(), x.num()};
}

CyclicLinkingForm connected_sum_form(const std::vector<CyclicLinkingForm>& forms) {
  std::int64_t big_n = 1;
  for (const auto& f : forms) {
    if (gcd(big_n, f.order()) != 1) throw DomainError("connected_sum_form requires pairwise coprime orders");
    big_n = checked::mul(big_n, f.order());
  }
  if (big_n == 1) return CyclicLinkingForm::trivial();
  __int128 c = 0;
  for (const auto& f : forms) {
    c += static_cast<__int128>(f.value()) * (big_n / f.order());
    c %= big_n;
  }
  return {big_n, static_cast<std::int64_t>(c)};
}

std::optional<CyclicLinkingForm> reversed_link_form(const SingularityType& t) {
  if (const auto* lens = std::get_if<LensLink>(&t.link)) return lens_linking_form(lens->p, lens->q).negated();
  if (const auto* tref = std::get_if<TrefoilSurgeryLink>(&t.link)) return surgery_linking_form(-tref->framing);
  return std::nullopt;
}

ObstructionVerdict linking_obstruction(const Configuration& config) {
  ObstructionVerdict v;
  v.filter = Filter::Linking;
  std::vector<CyclicLinkingForm> forms;
  LinkingEvidence ev;
  for (const auto& m : config.members) {
    if (!m.h1.cyclic()) {
      v.outcome = Outcome::NotApplicable;
      v.note = "H1 of the link of " + m.token() + " is not cyclic";
      return v;
    }
    auto f = reversed_link_form(m);
    if (!f) {
      v.outcome = Outcome::NotApplicable;
      v.note = "no linking form available for " + m.token();
      return v;
    }
    forms.push_back(*f);
    ev.orders.push_back(f->order());
    ev.values.push_back(f->value());
  }
  CyclicLinkingForm total = CyclicLinkingForm::trivial();
  try {
    total = connected_sum_form(forms);
  } catch (const DomainError&) {
    v.outcome = Outcome::NotApplicable;
    v.note = "orders are not pairwise coprime";
    return v;
  }
  ev.order = total.order();
  ev.value = total.value();
  ev.residue = total.is_trivial() ? 0 : mod(-total.value(), total.order());
  const bool ok = total.is_trivial() || is_square_unit_mod(ev.residue, total.order());
  v.outcome = ok ? Outcome::Pass : Outcome::Obstructed;
  v.note = "composed form " + total.str() +
           (ok ? " is isomorphic to (-1/N)"
               : ", and " + std::to_string(ev.residue) + " is not a square unit mod " + std::to_string(ev.order));
  v.evidence = std::move(ev);
  return v;
}

}  // namespace qhcp::linking
