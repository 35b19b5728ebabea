#ifndef QHCP_LINKING_HPP
#define QHCP_LINKING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qhcp/configuration.hpp"

namespace qhcp::linking {

/// lambda(g,g) = value/order on a generator g of Z_order. value is kept in [0, order).
class CyclicLinkingForm {
 public:
  /// Throws DomainError unless gcd(value, order) = 1 (order > 1).
  CyclicLinkingForm(std::int64_t order, std::int64_t value);
  static CyclicLinkingForm trivial() { return {1, 0}; }

  [[nodiscard]] std::int64_t order() const { return order_; }
  [[nodiscard]] std::int64_t value() const { return value_; }
  [[nodiscard]] bool is_trivial() const { return order_ == 1; }
  [[nodiscard]] CyclicLinkingForm negated() const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const CyclicLinkingForm&, const CyclicLinkingForm&) = default;

 private:
  std::int64_t order_ = 1;
  std::int64_t value_ = 0;
};

/// (c/n) and (c'/n) are isomorphic iff c' = c u^2 mod n for a unit u.
bool isomorphic(const CyclicLinkingForm& a, const CyclicLinkingForm& b);

/// Form (q/p) of L(p,q); trivial for (1,0).
CyclicLinkingForm lens_linking_form(std::int64_t p, std::int64_t q);

/// Form (-1/k) of +k surgery on a knot.
CyclicLinkingForm surgery_linking_form(std::int64_t framing);

/// Value of (-A)^{-1} at the first vertex of the linear plumbing [a_1..a_l]
/// (weights -a_i), computed by exact Gaussian elimination; vertex selects the meridian.
CyclicLinkingForm plumbing_linking_form(const std::vector<std::int64_t>& coefficients, std::size_t vertex = 0);

/// Composition on the diagonal generator; orders must be pairwise coprime.
CyclicLinkingForm connected_sum_form(const std::vector<CyclicLinkingForm>& forms);

/// Form of the orientation-reversed link -L_p, when known.
std::optional<CyclicLinkingForm> reversed_link_form(const SingularityType& t);

/// The reversed links bound Z^0, whose form must be isomorphic to (-1/N).
ObstructionVerdict linking_obstruction(const Configuration& config);

}  // namespace qhcp::linking

#endif  // QHCP_LINKING_HPP
