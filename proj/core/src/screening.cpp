#include "qhcp/screening.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qhcp/floer.hpp"
#include "qhcp/linking.hpp"

namespace qhcp::screening {

namespace {

// No surface has more than 11 exceptional curves here: K^2 = 9 - L - sum D_p^2 > 0
// and the most negative correction in scope is -8/3.
constexpr int kMaxCurves = 11;

bool case4_family(const SingularityType& t) { return t.species == Species::A1_2 || t.species == Species::An_22; }

bool scoped_coprime(std::int64_t a, std::int64_t b) {
  const std::int64_t g = gcd(a, b);
  return g % 2 != 0 && g % 3 != 0;
}

// The case-4 tables only separate the index-3 member from the rational double
// points at the primes 2 and 3; every other pair must be fully coprime.
bool compatible(const SingularityType& a, const SingularityType& b) {
  if (a.gorenstein() != b.gorenstein()) {
    const SingularityType& special = a.gorenstein() ? b : a;
    const SingularityType& other = a.gorenstein() ? a : b;
    if (case4_family(special)) return scoped_coprime(special.det_R, other.det_R);
  }
  return gcd(a.det_R, b.det_R) == 1;
}

std::vector<SingularityType> gorenstein_pool() {
  std::vector<SingularityType> pool;
  for (int n = 1; n <= kMaxCurves; ++n) pool.push_back(lookup(Species::A, n));
  for (int n = 5; n <= kMaxCurves; n += 2) pool.push_back(lookup(Species::D, n));
  for (int n = 6; n <= 8; ++n) pool.push_back(lookup(Species::E, n));
  return pool;
}

std::vector<SingularityType> special_pool(int index) {
  std::vector<SingularityType> pool;
  if (index == 2) {
    for (int n = 1; n <= kMaxCurves; ++n) pool.push_back(lookup(Species::K, n));
  } else {
    pool.push_back(lookup(Species::A1_1, 1));
    pool.push_back(lookup(Species::A1_2, 1));
    for (int n = 3; n <= kMaxCurves; ++n) pool.push_back(lookup(Species::An_11, n));
    for (int n = 2; n <= kMaxCurves; ++n) pool.push_back(lookup(Species::An_12, n));
    for (int n = 2; n <= kMaxCurves; ++n) pool.push_back(lookup(Species::An_22, n));
    // Even n has non-cyclic H1 and D_4 has no correction term; only odd n >= 5 remain.
    for (int n = 5; n <= kMaxCurves; n += 2) {
      pool.push_back(lookup(Species::Dn_1, n));
      pool.push_back(lookup(Species::Dn_2, n));
    }
  }
  return pool;
}

bool config_less(const Configuration& a, const Configuration& b) {
  return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                                      display_before);
}

void extend(const std::vector<SingularityType>& pool, std::size_t from, std::vector<SingularityType>& chosen, int curves,
            int index, std::vector<Configuration>& out) {
  int specials = 0;
  for (const auto& m : chosen) specials += m.gorenstein() ? 0 : 1;
  if (specials > 0) {
    auto c = Configuration::from_members(chosen);
    if (c.K2.sign() > 0 && c.index == index && chosen.size() <= 4) out.push_back(c);
  }
  if (chosen.size() == 4) return;
  for (std::size_t i = from; i < pool.size(); ++i) {
    const auto& t = pool[i];
    if (curves + t.curve_count > kMaxCurves) continue;
    if (!std::all_of(chosen.begin(), chosen.end(), [&](const SingularityType& m) { return compatible(m, t); }))
      continue;
    chosen.push_back(t);
    extend(pool, i, chosen, curves + t.curve_count, index, out);
    chosen.pop_back();
  }
}

}  // namespace

int index3_case(const Configuration& c) {
  for (const auto& m : c.members) {
    switch (m.species) {
      case Species::A1_1: return 1;
      case Species::An_11: return 2;
      case Species::An_12: return 3;
      case Species::A1_2:
      case Species::An_22: return 4;
      case Species::Dn_1: return 5;
      case Species::Dn_2: return 6;
      default: break;
    }
  }
  return 0;
}

std::vector<Configuration> enumerate_candidates(int index, bool h1_trivial) {
  if (!h1_trivial) throw DomainError("only the trivial-H1 pipeline is implemented");
  std::vector<Configuration> out;
  if (index == 1) {
    for (const auto& entry : imported("K-nontrivial").entries) {
      bool coprime = true;
      for (std::size_t i = 0; i < entry.size(); ++i)
        for (std::size_t j = i + 1; j < entry.size(); ++j) coprime = coprime && gcd(entry[i].det_R, entry[j].det_R) == 1;
      if (coprime) out.push_back(Configuration::from_members(entry));
    }
  } else if (index == 2 || index == 3) {
    // Specials first in the pool so every multiset is generated once.
    std::vector<SingularityType> pool = special_pool(index);
    const auto gor = gorenstein_pool();
    pool.insert(pool.end(), gor.begin(), gor.end());
    std::vector<SingularityType> chosen;
    extend(pool, 0, chosen, 0, index, out);
  } else {
    throw DomainError("index must be 1, 2 or 3");
  }
  std::sort(out.begin(), out.end(), config_less);
  return out;
}

std::vector<Configuration> enumerate_index3_case(int case_number) {
  std::vector<Configuration> out;
  for (auto& c : enumerate_candidates(3))
    if (index3_case(c) == case_number) out.push_back(std::move(c));
  return out;
}

namespace {

GroupEvidence group_evidence(const Configuration& c) {
  GroupEvidence ev;
  for (const auto& m : c.members) {
    ev.members.push_back(m.token());
    ev.orders.push_back(m.det_R);
    ev.groups.push_back(m.h1.str());
  }
  return ev;
}

}  // namespace

ObstructionVerdict cyclic_h1_filter(const Configuration& c) {
  ObstructionVerdict v;
  v.filter = Filter::CyclicH1;
  v.outcome = Outcome::Pass;
  v.note = "every link has cyclic H1";
  for (const auto& m : c.members)
    if (!m.h1.cyclic()) {
      v.outcome = Outcome::Obstructed;
      v.note = "H1 of the link of " + m.token() + " is " + m.h1.str() + ", not cyclic";
      break;
    }
  v.evidence = group_evidence(c);
  return v;
}

ObstructionVerdict coprime_det_filter(const Configuration& c) {
  ObstructionVerdict v;
  v.filter = Filter::CoprimeDet;
  v.outcome = Outcome::Pass;
  v.note = "the |det R_p| are pairwise coprime";
  for (std::size_t i = 0; i < c.members.size() && v.outcome == Outcome::Pass; ++i)
    for (std::size_t j = i + 1; j < c.members.size(); ++j)
      if (gcd(c.members[i].det_R, c.members[j].det_R) != 1) {
        v.outcome = Outcome::Obstructed;
        v.note = "|det R| of " + c.members[i].token() + " and " + c.members[j].token() + " share the factor " +
                 std::to_string(gcd(c.members[i].det_R, c.members[j].det_R));
        break;
      }
  v.evidence = group_evidence(c);
  return v;
}

ObstructionVerdict arithmetic_filter(const Configuration& c) {
  ObstructionVerdict v;
  v.filter = Filter::Arithmetic;
  const bool square = c.D.sign() > 0 && c.D.is_integer() && is_perfect_square(c.D.num());
  v.outcome = square ? Outcome::Pass : Outcome::Obstructed;
  v.note = "D = " + c.D.str() + (square ? " is a nonzero square" : " is not a nonzero square");
  v.evidence = ArithmeticEvidence{c.K2, c.h1_product, c.D};
  return v;
}

ObstructionVerdict bmy_filter(const Configuration& c, std::optional<bool> anti_ample_impossible) {
  ObstructionVerdict v;
  v.filter = Filter::Bmy;
  BmyEvidence ev{c.K2, c.e_orb, anti_ample_impossible.has_value() && !*anti_ample_impossible};
  if (c.e_orb.sign() < 0) {
    v.outcome = Outcome::Obstructed;
    v.note = "e_orb = " + c.e_orb.str() + " < 0";
  } else if (!anti_ample_impossible) {
    v.outcome = Outcome::NotApplicable;
    v.note = "no anti-ample data; only e_orb >= 0 checked";
  } else if (*anti_ample_impossible && c.K2.sign() > 0 && c.K2 > Rational(3) * c.e_orb) {
    v.outcome = Outcome::Obstructed;
    v.note = "K must be ample, but K^2 = " + c.K2.str() + " > 3 e_orb = " + (Rational(3) * c.e_orb).str();
  } else {
    v.outcome = Outcome::Pass;
    v.note = *anti_ample_impossible ? "K^2 <= 3 e_orb" : "anti-ample canonical class is possible";
  }
  v.evidence = ev;
  return v;
}

std::optional<bool> anti_ample_impossible(const Configuration& c) {
  if (c.index != 2) return std::nullopt;
  for (const auto& entry : imported("log-del-pezzo-index2").entries)
    if (same_multiset(entry, c.members)) return false;
  return true;
}

bool realizable(const Configuration& c) {
  const auto& list = imported("realizable-index" + std::to_string(c.index));
  return std::any_of(list.entries.begin(), list.entries.end(),
                     [&](const auto& entry) { return same_multiset(entry, c.members); });
}

ObstructionVerdict run_filter(Filter f, const Configuration& c, const ScreeningOptions& options) {
  switch (f) {
    case Filter::CyclicH1: return cyclic_h1_filter(c);
    case Filter::CoprimeDet: return coprime_det_filter(c);
    case Filter::Arithmetic: return arithmetic_filter(c);
    case Filter::Bmy: return bmy_filter(c, anti_ample_impossible(c));
    case Filter::Donaldson: return lattice::donaldson_obstruction(c, options.lattice);
    case Filter::Linking: return linking::linking_obstruction(c);
    case Filter::SpinSum: return floer::spin_sum_obstruction(c);
  }
  throw DomainError("unknown filter");
}

CandidateResult screen(const Configuration& c, const ScreeningOptions& options) {
  CandidateResult r;
  r.config = c;
  r.survived = true;
  for (Filter f : options.order) {
    r.verdicts.push_back(run_filter(f, c, options));
    if (r.verdicts.back().outcome == Outcome::Obstructed) {
      if (r.survived) r.eliminated_by = f;
      r.survived = false;
      if (!options.exhaustive) break;
    }
  }
  r.realizable = realizable(c);
  return r;
}

std::vector<Configuration> ClassificationReport::survivors() const {
  std::vector<Configuration> out;
  for (const auto& r : candidates)
    if (r.survived) out.push_back(r.config);
  return out;
}

std::vector<Configuration> ClassificationReport::undecided() const {
  std::vector<Configuration> out;
  for (const auto& r : candidates)
    if (r.survived && !r.realizable) out.push_back(r.config);
  return out;
}

bool ClassificationReport::covers_realizable() const {
  const auto& list = imported("realizable-index" + std::to_string(index));
  return std::all_of(list.entries.begin(), list.entries.end(), [&](const auto& entry) {
    return std::any_of(candidates.begin(), candidates.end(),
                       [&](const CandidateResult& r) { return r.survived && same_multiset(entry, r.config.members); });
  });
}

ClassificationReport classify(int index, const ScreeningOptions& options) {
  ClassificationReport report;
  report.index = index;
  const auto configs = enumerate_candidates(index);
  report.candidates.resize(configs.size());
  const int jobs = std::max(1, options.jobs);
  ScreeningOptions inner = options;
  inner.lattice.jobs = 1;
  if (jobs == 1) {
    for (std::size_t i = 0; i < configs.size(); ++i) report.candidates[i] = screen(configs[i], inner);
    return report;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size() && !failed; i = next++) {
      try {
        report.candidates[i] = screen(configs[i], inner);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace qhcp::screening
