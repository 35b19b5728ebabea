#ifndef QHCP_FLOER_HPP
#define QHCP_FLOER_HPP

#include <cstdint>
#include <vector>

#include "qhcp/configuration.hpp"
#include "qhcp/exact_arith.hpp"

namespace qhcp::floer {

/// d(L(p,q), i) by the reciprocity recursion, bottoming out at d(L(1,0), 0) = 0.
/// Requires gcd(p,q) = 1, 0 <= i < p, and 0 < q < p or (p,q) = (1,0).
Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i);

/// All p values d(L(p,q), 0..p-1).
std::vector<Rational> d_lens_all(std::int64_t p, std::int64_t q);

/// Number of recursion steps d_lens(p,q,.) takes to reach (1,0).
int recursion_depth(std::int64_t p, std::int64_t q);

/// Integers among (q-1)/2 and (p+q-1)/2, ascending.
std::vector<std::int64_t> spin_labels(std::int64_t p, std::int64_t q);

/// d-invariants of L(p,q) at the spin labels, sorted and deduplicated.
std::vector<Rational> spin_d_lens(std::int64_t p, std::int64_t q);

/// V_s of the right-handed trefoil.
std::int64_t v_trefoil(std::int64_t s);

/// d(S^3_{p/q}(T), i) for the right-handed trefoil T.
Rational d_trefoil_surgery(std::int64_t p, std::int64_t q, std::int64_t i);

std::vector<Rational> d_trefoil_surgery_all(std::int64_t p, std::int64_t q);

/// d-invariants of +k surgery on the right-handed trefoil at the spin labels of
/// L(k,1), sorted and deduplicated.
std::vector<Rational> spin_d_trefoil_surgery(std::int64_t k);

/// Every sum of one entry from each set, sorted and deduplicated.
std::vector<Rational> attempted_sums(const std::vector<std::vector<Rational>>& sets);

/// Spin-structure d-invariant constraint on the links of a configuration:
/// some choice of spin d-invariants must sum to exactly 1/4.
ObstructionVerdict spin_sum_obstruction(const Configuration& config);

}  // namespace qhcp::floer

#endif  // QHCP_FLOER_HPP
