#include "qhcp/configuration.hpp"

#include <algorithm>
#include <set>

#include "qhcp/floer.hpp"
#include "qhcp/lattice.hpp"
#include "qhcp/linking.hpp"

namespace qhcp {

Configuration Configuration::from_members(std::vector<SingularityType> members) {
  Configuration c;
  std::stable_sort(members.begin(), members.end(), display_before);
  c.members = std::move(members);
  Rational dp_sum(0);
  Rational orb(3);
  for (const auto& m : c.members) {
    c.index = static_cast<int>(lcm(c.index, m.index));
    c.L += m.curve_count;
    dp_sum += m.dp_square();
    orb -= Rational(1) - Rational(1, m.group_order);
    c.h1_product = checked::mul(c.h1_product, m.det_R);
  }
  c.K2 = Rational(9 - c.L) - dp_sum;
  c.D = c.K2 * Rational(c.h1_product);
  c.e_orb = orb;
  return c;
}

std::vector<std::string> Configuration::tokens() const {
  std::vector<std::string> out;
  for (const auto& m : members) out.push_back(m.token());
  return out;
}

std::string Configuration::name() const {
  std::string out;
  for (std::size_t i = 0; i < members.size();) {
    std::size_t j = i;
    while (j < members.size() && members[j] == members[i]) ++j;
    if (j - i > 1) out += std::to_string(j - i);
    out += members[i].token();
    i = j;
  }
  return out;
}

Configuration parse_configuration(std::string_view text) {
  auto members = parse_multiset(text);
  if (members.empty()) throw DomainError("empty configuration");
  return Configuration::from_members(std::move(members));
}

std::string filter_name(Filter f) {
  switch (f) {
    case Filter::CyclicH1: return "cyclic_h1";
    case Filter::CoprimeDet: return "coprime_det";
    case Filter::Arithmetic: return "arithmetic";
    case Filter::Bmy: return "bmy";
    case Filter::Donaldson: return "donaldson";
    case Filter::Linking: return "linking";
    case Filter::SpinSum: return "spin_sum";
  }
  return "?";
}

Filter parse_filter(std::string_view name) {
  for (Filter f : default_filter_order())
    if (filter_name(f) == name) return f;
  throw DomainError("unknown filter '" + std::string(name) + "'");
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Obstructed: return "OBSTRUCTED";
    case Outcome::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

Outcome parse_outcome(std::string_view name) {
  for (Outcome o : {Outcome::Pass, Outcome::Obstructed, Outcome::NotApplicable})
    if (outcome_name(o) == name) return o;
  throw DomainError("unknown outcome '" + std::string(name) + "'");
}

const std::vector<Filter>& default_filter_order() {
  static const std::vector<Filter> order{Filter::CyclicH1, Filter::CoprimeDet, Filter::Arithmetic, Filter::Bmy,
                                         Filter::Donaldson, Filter::Linking,    Filter::SpinSum};
  return order;
}

namespace {

bool replay_group(const ObstructionVerdict& v, const GroupEvidence& ev) {
  if (ev.members.size() != ev.orders.size() || ev.members.size() != ev.groups.size()) return false;
  if (v.filter == Filter::CyclicH1) {
    bool all_cyclic = std::all_of(ev.groups.begin(), ev.groups.end(),
                                  [](const std::string& g) { return g.find('x') == std::string::npos; });
    return all_cyclic == (v.outcome == Outcome::Pass);
  }
  bool coprime = true;
  for (std::size_t i = 0; i < ev.orders.size(); ++i)
    for (std::size_t j = i + 1; j < ev.orders.size(); ++j) coprime = coprime && gcd(ev.orders[i], ev.orders[j]) == 1;
  return coprime == (v.outcome == Outcome::Pass);
}

bool replay_arithmetic(const ObstructionVerdict& v, const ArithmeticEvidence& ev, const Configuration& c) {
  if (ev.K2 != c.K2 || ev.det_product != c.h1_product) return false;
  if (ev.D != ev.K2 * Rational(ev.det_product)) return false;
  const bool square = ev.D.sign() > 0 && ev.D.is_integer() && is_perfect_square(ev.D.num());
  return square == (v.outcome == Outcome::Pass);
}

bool replay_bmy(const ObstructionVerdict& v, const BmyEvidence& ev, const Configuration& c) {
  if (ev.K2 != c.K2 || ev.e_orb != c.e_orb) return false;
  if (v.outcome == Outcome::NotApplicable) return ev.e_orb.sign() >= 0;
  const bool violates = ev.e_orb.sign() < 0 ||
                        (!ev.anti_ample_possible && ev.K2.sign() > 0 && ev.K2 > Rational(3) * ev.e_orb);
  return violates == (v.outcome == Outcome::Obstructed);
}

bool replay_donaldson(const ObstructionVerdict& v, const DonaldsonEvidence& ev) {
  std::vector<lattice::PlumbingLattice> lats;
  int n = 0;
  for (const auto& w : ev.weights) {
    lats.push_back({w});
    n += static_cast<int>(w.size());
  }
  if (ev.ambient_rank != n + 1) return false;
  std::set<std::vector<std::vector<std::int64_t>>> seen;
  bool hit = false;
  for (const auto& o : ev.orbits) {
    lattice::PlumbingEmbedding e{ev.ambient_rank, o.vectors};
    if (!lattice::verify_gram(lats, e)) return false;
    // Distinct orbits: canonical forms must differ.
    if (!seen.insert(lattice::canonical_form(e).vectors).second) return false;
    if (static_cast<int>(o.complement.size()) != ev.ambient_rank) return false;
    std::int64_t g = 0, norm = 0;
    for (auto x : o.complement) {
      g = gcd(g, x);
      norm += x * x;
    }
    if (g != 1 || -norm != o.complement_square) return false;
    for (const auto& vec : o.vectors) {
      std::int64_t dot = 0;
      for (std::size_t k = 0; k < vec.size(); ++k) dot += vec[k] * o.complement[k];
      if (dot != 0) return false;
    }
    hit = hit || o.complement_square == ev.required_square;
  }
  return hit == (v.outcome == Outcome::Pass);
}

bool replay_linking(const ObstructionVerdict& v, const LinkingEvidence& ev) {
  if (ev.orders.size() != ev.values.size()) return false;
  std::vector<linking::CyclicLinkingForm> forms;
  for (std::size_t i = 0; i < ev.orders.size(); ++i) forms.emplace_back(ev.orders[i], ev.values[i]);
  const auto total = linking::connected_sum_form(forms);
  if (total.order() != ev.order || total.value() != ev.value) return false;
  if (total.is_trivial()) return v.outcome == Outcome::Pass;
  if (ev.residue != mod(-ev.value, ev.order)) return false;
  return is_square_unit_mod(ev.residue, ev.order) == (v.outcome == Outcome::Pass);
}

bool replay_spin(const ObstructionVerdict& v, const SpinSumEvidence& ev) {
  if (floer::attempted_sums(ev.spin_sets) != ev.sums) return false;
  const bool hit = std::binary_search(ev.sums.begin(), ev.sums.end(), Rational(1, 4));
  return hit == (v.outcome == Outcome::Pass);
}

}  // namespace

bool replay(const ObstructionVerdict& v, const Configuration& config) {
  struct {
    const ObstructionVerdict& v;
    const Configuration& c;
    bool operator()(std::monostate) const { return v.outcome != Outcome::Obstructed; }
    bool operator()(const GroupEvidence& e) const { return replay_group(v, e); }
    bool operator()(const ArithmeticEvidence& e) const { return replay_arithmetic(v, e, c); }
    bool operator()(const BmyEvidence& e) const { return replay_bmy(v, e, c); }
    bool operator()(const DonaldsonEvidence& e) const { return replay_donaldson(v, e); }
    bool operator()(const LinkingEvidence& e) const { return replay_linking(v, e); }
    bool operator()(const SpinSumEvidence& e) const { return replay_spin(v, e); }
  } visitor{v, config};
  return std::visit(visitor, v.evidence);
}

}  // namespace qhcp
