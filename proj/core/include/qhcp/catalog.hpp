#ifndef QHCP_CATALOG_HPP
#define QHCP_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhcp/exact_arith.hpp"

namespace qhcp {

/// Quotient-singularity species. A2(1,2) is An_12 at n = 2.
enum class Species {
  A,      // A_n, n >= 1
  D,      // D_n, n >= 4
  E,      // E_6, E_7, E_8
  K,      // K_n, n >= 1 (index 2)
  A1_1,   // A_1(1)
  A1_2,   // A_1(2)
  An_11,  // A_n(1,1), n >= 3
  An_12,  // A_n(1,2), n >= 2
  An_22,  // A_n(2,2), n >= 2
  Dn_1,   // D_n(1), n >= 4
  Dn_2,   // D_n(2), n >= 4
};

/// First homology of a link.
struct H1Group {
  enum class Kind { Cyclic, Z2xZ2, Z6xZ2 };
  Kind kind = Kind::Cyclic;
  std::int64_t order = 1;

  [[nodiscard]] bool cyclic() const { return kind == Kind::Cyclic; }
  [[nodiscard]] std::string str() const;
  friend bool operator==(const H1Group&, const H1Group&) = default;
};

/// L(p,q), i.e. -p/q surgery on the unknot.
struct LensLink {
  std::int64_t p = 1;
  std::int64_t q = 0;
  friend bool operator==(const LensLink&, const LensLink&) = default;
};

/// framing-surgery on the left-handed trefoil. Negative framings only: the
/// orientation reversal is then +|framing| surgery on the right-handed trefoil.
struct TrefoilSurgeryLink {
  std::int64_t framing = -1;
  friend bool operator==(const TrefoilSurgeryLink&, const TrefoilSurgeryLink&) = default;
};

/// A link whose invariants are only available from tables.
struct TabulatedLink {
  std::string name;
  std::int64_t h1_order = 1;
  friend bool operator==(const TabulatedLink&, const TabulatedLink&) = default;
};

using LinkDescriptor = std::variant<LensLink, TrefoilSurgeryLink, TabulatedLink>;

std::string link_string(const LinkDescriptor& link);

struct SingularityType {
  Species species = Species::A;
  int parameter = 1;
  int index = 1;
  std::int64_t det_R = 1;
  std::int64_t group_order = 1;
  int curve_count = 0;
  std::optional<Rational> dp_square_value;
  H1Group h1;
  LinkDescriptor link;

  /// D_p^2; throws DomainError where the value is deliberately unset (D_4(1), D_4(2)).
  [[nodiscard]] Rational dp_square() const;
  [[nodiscard]] bool gorenstein() const { return index == 1; }
  [[nodiscard]] bool has_lens_link() const { return std::holds_alternative<LensLink>(link); }
  /// "A4", "K5", "E8", "A1(1)", "A2(1,2)", "D5(2)".
  [[nodiscard]] std::string token() const;

  friend bool operator==(const SingularityType& a, const SingularityType& b) {
    return a.species == b.species && a.parameter == b.parameter;
  }
};

/// Display order: higher index first, then E, D, A by decreasing parameter.
bool display_before(const SingularityType& a, const SingularityType& b);

/// Fully populated type; throws DomainError on an out-of-range parameter.
SingularityType lookup(Species species, int parameter);

/// Parses one species token such as "K5", "E7", "A10(1,1)", "D9(2)".
SingularityType parse_token(std::string_view token);

/// Parses a multiset: whitespace-separated chunks, each an optional multiplicity
/// followed by one or more concatenated tokens ("2A3 2A1", "K1A4", "A2(1,2)E7").
std::vector<SingularityType> parse_multiset(std::string_view text);

/// Spin d-invariants of the link, sorted and deduplicated.
/// nullopt means unavailable (neither computable nor tabulated).
std::optional<std::vector<Rational>> spin_d_invariants(const SingularityType& t);

struct ImportedClassification {
  std::string name;
  std::vector<std::vector<SingularityType>> entries;
};

/// Named sections of the embedded data files: "K-nontrivial" (27), "K-trivial" (31),
/// "log-del-pezzo-index2" (18), "realizable-index1|2|3".
const ImportedClassification& imported(std::string_view name);

/// Parses the plain-text table format: "[section]" headers, '#' comments,
/// one multiset per line.
std::vector<ImportedClassification> parse_classification_text(std::string_view text);

/// Multiset equality on types.
bool same_multiset(std::vector<SingularityType> a, std::vector<SingularityType> b);

}  // namespace qhcp

#endif  // QHCP_CATALOG_HPP
