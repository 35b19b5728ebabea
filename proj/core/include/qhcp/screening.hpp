#ifndef QHCP_SCREENING_HPP
#define QHCP_SCREENING_HPP

#include <optional>
#include <string>
#include <vector>

#include "qhcp/configuration.hpp"
#include "qhcp/lattice.hpp"

namespace qhcp::screening {

/// Index-3 case number (1..6) of the unique index-3 member; 0 when there is none.
int index3_case(const Configuration& c);

/// Candidate configurations for index 1, 2 or 3, canonically ordered.
/// Only h1_trivial = true is supported.
std::vector<Configuration> enumerate_candidates(int index, bool h1_trivial = true);

/// Index-3 candidates whose index-3 member belongs to the given case (1..6).
std::vector<Configuration> enumerate_index3_case(int case_number);

ObstructionVerdict cyclic_h1_filter(const Configuration& c);
ObstructionVerdict coprime_det_filter(const Configuration& c);

/// D must be a positive square integer.
ObstructionVerdict arithmetic_filter(const Configuration& c);

/// anti_ample_impossible: nullopt when no anti-ample data exists (NOT_APPLICABLE
/// apart from the e_orb >= 0 check).
ObstructionVerdict bmy_filter(const Configuration& c, std::optional<bool> anti_ample_impossible);

/// Anti-ample knowledge from the imported log del Pezzo list (index 2 only).
std::optional<bool> anti_ample_impossible(const Configuration& c);

/// Membership of the imported realizable list for the configuration's index.
bool realizable(const Configuration& c);

struct ScreeningOptions {
  std::vector<Filter> order = default_filter_order();
  bool exhaustive = false;  // run every filter even after an obstruction
  int jobs = 1;
  lattice::EnumerationOptions lattice;
};

ObstructionVerdict run_filter(Filter f, const Configuration& c, const ScreeningOptions& options);

struct CandidateResult {
  Configuration config;
  std::vector<ObstructionVerdict> verdicts;
  bool survived = false;
  std::optional<Filter> eliminated_by;  // first obstruction in chain order
  bool realizable = false;
};

struct ClassificationReport {
  int index = 1;
  std::vector<CandidateResult> candidates;

  [[nodiscard]] std::vector<Configuration> survivors() const;
  /// Survivors without a realizability mark.
  [[nodiscard]] std::vector<Configuration> undecided() const;
  /// Every imported realizable type survived.
  [[nodiscard]] bool covers_realizable() const;
};

/// Screens one configuration through the chain.
CandidateResult screen(const Configuration& c, const ScreeningOptions& options);

ClassificationReport classify(int index, const ScreeningOptions& options = {});

}  // namespace qhcp::screening

#endif  // QHCP_SCREENING_HPP
