#ifndef QHCP_LATTICE_HPP
#define QHCP_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qhcp/configuration.hpp"

namespace qhcp::lattice {

using Vector = std::vector<std::int64_t>;

/// Linear plumbing with weights <= -2; adjacent vertices pair to +1.
struct PlumbingLattice {
  std::vector<std::int64_t> weights;

  [[nodiscard]] std::size_t rank() const { return weights.size(); }
  /// |det Gram| = numerator of the continued fraction [-w_1, ..., -w_l].
  [[nodiscard]] std::int64_t determinant() const;
  [[nodiscard]] std::string str() const;  // "-2,-10,-2"

  friend bool operator==(const PlumbingLattice&, const PlumbingLattice&) = default;
};

/// X(p,q): weights are the negated coefficients of hj_expand(p,q).
PlumbingLattice plumbing_xpq(std::int64_t p, std::int64_t q);

/// X(p, p-q) for a link L(p,q), bounded by -L(p,q).
PlumbingLattice plumbing_for_reversed_link(const SingularityType& t);

/// "-2,-10,-2"; one graph. Multiple graphs separate with ';'.
PlumbingLattice parse_graph(std::string_view text);
std::vector<PlumbingLattice> parse_graphs(std::string_view text);

/// Vectors in -Z^N, one per vertex, in the concatenated vertex order of the graphs.
struct PlumbingEmbedding {
  int ambient_rank = 0;
  std::vector<Vector> vectors;
  friend bool operator==(const PlumbingEmbedding&, const PlumbingEmbedding&) = default;
  friend auto operator<=>(const PlumbingEmbedding& a, const PlumbingEmbedding& b) { return a.vectors <=> b.vectors; }
};

struct ComplementWitness {
  Vector generator;     // primitive, first nonzero coordinate positive
  std::int64_t square;  // pairing in -Z^N, i.e. minus the Euclidean norm
};

struct EnumerationOptions {
  std::int64_t budget = 10'000'000;  // candidate extensions
  std::int64_t weight_bound = 16;
  int jobs = 1;
};

/// The search needed more candidate extensions than the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pairing matrix the embedding must realize (block diagonal over the graphs).
std::vector<std::vector<std::int64_t>> gram_matrix(const std::vector<PlumbingLattice>& lattices);

/// True iff every pairwise product of the vectors matches gram_matrix exactly.
bool verify_gram(const std::vector<PlumbingLattice>& lattices, const PlumbingEmbedding& e);

/// Signed-permutation canonical form: each ambient column's first nonzero entry made
/// positive, columns sorted lexicographically (descending).
PlumbingEmbedding canonical_form(const PlumbingEmbedding& e);

/// One canonical representative per orbit of Aut(-Z^N), sorted.
std::vector<PlumbingEmbedding> enumerate_embeddings(const std::vector<PlumbingLattice>& lattices, int ambient_rank,
                                                    const EnumerationOptions& options = {});

/// Number of candidate extensions the last enumerate_embeddings call on this thread used.
std::int64_t last_extension_count();

/// Primitive generator of the rank-1 orthogonal complement; requires rank N-1.
ComplementWitness complement_witness(const PlumbingEmbedding& e);

/// Determinant of an integer square matrix (fraction-free elimination).
std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m);

/// The strong form asks for an orbit whose complement square is -prod |H1(L_p)|.
ObstructionVerdict donaldson_obstruction(const Configuration& config, const EnumerationOptions& options = {});

}  // namespace qhcp::lattice

#endif  // QHCP_LATTICE_HPP
