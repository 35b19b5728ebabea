#ifndef QHCP_CONFIGURATION_HPP
#define QHCP_CONFIGURATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhcp/catalog.hpp"
#include "qhcp/exact_arith.hpp"

namespace qhcp {

/// A multiset of singularity types with its derived invariants.
struct Configuration {
  std::vector<SingularityType> members;  // display order
  int index = 1;
  int L = 0;
  Rational K2;
  Rational D;
  Rational e_orb;
  std::int64_t h1_product = 1;

  /// Sorts members and computes every derived field.
  static Configuration from_members(std::vector<SingularityType> members);

  /// Concatenated tokens with multiplicities, e.g. "K1A4", "2A32A1", "A2(1,2)E7".
  [[nodiscard]] std::string name() const;
  [[nodiscard]] std::vector<std::string> tokens() const;

  friend bool operator==(const Configuration& a, const Configuration& b) { return a.members == b.members; }
};

Configuration parse_configuration(std::string_view text);

enum class Filter { CyclicH1, CoprimeDet, Arithmetic, Bmy, Donaldson, Linking, SpinSum };
enum class Outcome { Pass, Obstructed, NotApplicable };

std::string filter_name(Filter f);
Filter parse_filter(std::string_view name);
std::string outcome_name(Outcome o);
Outcome parse_outcome(std::string_view name);

/// The canonical chain order.
const std::vector<Filter>& default_filter_order();

struct GroupEvidence {
  std::vector<std::string> members;
  std::vector<std::int64_t> orders;
  std::vector<std::string> groups;  // H1 descriptors, e.g. "Z2xZ2"
  friend bool operator==(const GroupEvidence&, const GroupEvidence&) = default;
};

struct ArithmeticEvidence {
  Rational K2;
  std::int64_t det_product = 1;
  Rational D;
  friend bool operator==(const ArithmeticEvidence&, const ArithmeticEvidence&) = default;
};

struct BmyEvidence {
  Rational K2;
  Rational e_orb;
  bool anti_ample_possible = false;
  friend bool operator==(const BmyEvidence&, const BmyEvidence&) = default;
};

struct EmbeddingRecord {
  std::vector<std::vector<std::int64_t>> vectors;  // one per plumbing vertex
  std::vector<std::int64_t> complement;            // primitive orthogonal generator
  std::int64_t complement_square = 0;
  friend bool operator==(const EmbeddingRecord&, const EmbeddingRecord&) = default;
};

struct DonaldsonEvidence {
  std::vector<std::vector<std::int64_t>> weights;  // one linear chain per member
  int ambient_rank = 0;
  std::int64_t required_square = 0;
  std::vector<EmbeddingRecord> orbits;
  friend bool operator==(const DonaldsonEvidence&, const DonaldsonEvidence&) = default;
};

struct LinkingEvidence {
  std::vector<std::int64_t> orders;  // per member, form of the reversed link
  std::vector<std::int64_t> values;
  std::int64_t order = 1;            // composed
  std::int64_t value = 0;
  std::int64_t residue = 0;          // -value mod order
  friend bool operator==(const LinkingEvidence&, const LinkingEvidence&) = default;
};

struct SpinSumEvidence {
  std::vector<std::vector<Rational>> spin_sets;  // per member
  std::vector<Rational> sums;                    // every attempted sum
  friend bool operator==(const SpinSumEvidence&, const SpinSumEvidence&) = default;
};

using Evidence = std::variant<std::monostate, GroupEvidence, ArithmeticEvidence, BmyEvidence,
                              DonaldsonEvidence, LinkingEvidence, SpinSumEvidence>;

struct ObstructionVerdict {
  Filter filter = Filter::Arithmetic;
  Outcome outcome = Outcome::NotApplicable;
  Evidence evidence;
  std::string note;
  friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

/// Re-checks a verdict from its evidence alone, without re-running any search.
/// Returns true when the stored evidence supports the stored outcome.
bool replay(const ObstructionVerdict& v, const Configuration& config);

}  // namespace qhcp

#endif  // QHCP_CONFIGURATION_HPP
