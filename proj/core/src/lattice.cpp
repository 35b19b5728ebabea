#include "qhcp/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>
#include <set>
#include <thread>

namespace qhcp::lattice {

std::int64_t PlumbingLattice::determinant() const {
  std::vector<std::int64_t> a;
  for (auto w : weights) a.push_back(-w);
  return hj_value(ContinuedFraction(a)).first;
}

std::string PlumbingLattice::str() const {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights[i]);
  }
  return out;
}

PlumbingLattice plumbing_xpq(std::int64_t p, std::int64_t q) {
  PlumbingLattice lat;
  const auto cf = hj_expand(p, q);
  for (auto a : cf.coefficients()) lat.weights.push_back(-a);
  return lat;
}

PlumbingLattice plumbing_for_reversed_link(const SingularityType& t) {
  const auto* lens = std::get_if<LensLink>(&t.link);
  if (!lens) throw DomainError(t.token() + " does not have a lens space link");
  if (lens->p == 1) throw DomainError("S^3 bounds no plumbing here");
  return plumbing_xpq(lens->p, lens->p - lens->q);
}

PlumbingLattice parse_graph(std::string_view text) {
  PlumbingLattice lat;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    if (text[j] == '-' || text[j] == '+') ++j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i || (j == i + 1 && !std::isdigit(static_cast<unsigned char>(text[i]))))
      throw DomainError("cannot parse graph weights '" + std::string(text) + "'");
    const std::int64_t w = std::stoll(std::string(text.substr(i, j - i)));
    if (w > -2) throw DomainError("plumbing weights must be <= -2");
    lat.weights.push_back(w);
    i = j;
  }
  if (lat.weights.empty()) throw DomainError("empty graph");
  return lat;
}

std::vector<PlumbingLattice> parse_graphs(std::string_view text) {
  std::vector<PlumbingLattice> out;
  std::size_t start = 0;
  while (true) {
    auto semi = text.find(';', start);
    out.push_back(parse_graph(text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> gram_matrix(const std::vector<PlumbingLattice>& lattices) {
  std::size_t n = 0;
  for (const auto& l : lattices) n += l.rank();
  std::vector<std::vector<std::int64_t>> g(n, std::vector<std::int64_t>(n, 0));
  std::size_t off = 0;
  for (const auto& l : lattices) {
    for (std::size_t i = 0; i < l.rank(); ++i) {
      g[off + i][off + i] = l.weights[i];
      if (i + 1 < l.rank()) g[off + i][off + i + 1] = g[off + i + 1][off + i] = 1;
    }
    off += l.rank();
  }
  return g;
}

namespace {

std::int64_t pairing(const Vector& a, const Vector& b) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s = checked::sub(s, checked::mul(a[k], b[k]));
  return s;
}

thread_local std::int64_t g_last_extensions = 0;

struct Problem {
  int ambient = 0;
  std::vector<std::int64_t> norm;                 // Euclidean norm per vertex
  std::vector<std::vector<std::int64_t>> target;  // Euclidean dot targets
  std::vector<std::size_t> order;                 // processing order
  std::int64_t budget = 0;
  std::atomic<std::int64_t>* used = nullptr;
};

class Search {
 public:
  explicit Search(const Problem& pr) : pr_(pr), vecs_(pr.norm.size(), Vector(pr.ambient, 0)) {}

  // Candidates for the vertex at depth d, given touched prefix width u.
  void candidates(std::size_t d, int u, std::vector<Vector>& out) {
    const std::size_t v = pr_.order[d];
    placed_.clear();
    for (std::size_t k = 0; k < d; ++k) placed_.push_back(pr_.order[k]);
    // Suffix norms of placed vectors over the touched prefix.
    suffix_.assign(placed_.size(), std::vector<std::int64_t>(u + 1, 0));
    for (std::size_t j = 0; j < placed_.size(); ++j)
      for (int k = u - 1; k >= 0; --k) {
        const auto x = vecs_[placed_[j]][k];
        suffix_[j][k] = suffix_[j][k + 1] + x * x;
      }
    partial_.assign(placed_.size(), 0);
    cur_.assign(pr_.ambient, 0);
    dfs(v, 0, u, pr_.norm[v], out);
  }

  void run(std::size_t d, int u, std::set<PlumbingEmbedding>& found) {
    if (d == pr_.order.size()) {
      PlumbingEmbedding e{pr_.ambient, vecs_};
      found.insert(canonical_form(e));
      return;
    }
    std::vector<Vector> cands;
    candidates(d, u, cands);
    const std::size_t v = pr_.order[d];
    for (const auto& c : cands) {
      vecs_[v] = c;
      int nu = u;
      while (nu < pr_.ambient && c[nu] != 0) ++nu;
      run(d + 1, nu, found);
    }
    vecs_[v].assign(pr_.ambient, 0);
  }

  void place(std::size_t v, const Vector& c) { vecs_[v] = c; }

 private:
  void tick() {
    if (pr_.used->fetch_add(1, std::memory_order_relaxed) + 1 > pr_.budget)
      throw BudgetExceeded("lattice embedding search exceeded its budget of " + std::to_string(pr_.budget) +
                           " candidate extensions");
  }

  void dfs(std::size_t v, int k, int u, std::int64_t rem, std::vector<Vector>& out) {
    // Cauchy-Schwarz: the rest of the dot product is bounded by sqrt(rem * suffix).
    for (std::size_t j = 0; j < placed_.size(); ++j) {
      const std::int64_t gap = pr_.target[v][placed_[j]] - partial_[j];
      if (static_cast<__int128>(gap) * gap > static_cast<__int128>(rem) * suffix_[j][k]) return;
    }
    if (k == u) {
      new_coords(u, u, rem, rem, out);
      return;
    }
    std::int64_t lim = 0;
    while ((lim + 1) * (lim + 1) <= rem) ++lim;
    for (std::int64_t x = -lim; x <= lim; ++x) {
      tick();
      cur_[k] = x;
      for (std::size_t j = 0; j < placed_.size(); ++j) partial_[j] += x * vecs_[placed_[j]][k];
      dfs(v, k + 1, u, rem - x * x, out);
      for (std::size_t j = 0; j < placed_.size(); ++j) partial_[j] -= x * vecs_[placed_[j]][k];
    }
    cur_[k] = 0;
  }

  // Fill fresh coordinates u, u+1, ... with positive non-increasing values.
  void new_coords(int u, int k, std::int64_t rem, std::int64_t cap, std::vector<Vector>& out) {
    if (rem == 0) {
      tick();
      out.push_back(cur_);
      return;
    }
    if (k >= pr_.ambient) return;
    for (std::int64_t x = 1; x * x <= rem && x <= cap; ++x) {
      cur_[k] = x;
      new_coords(u, k + 1, rem - x * x, x, out);
    }
    cur_[k] = 0;
  }

  const Problem& pr_;
  std::vector<Vector> vecs_;
  std::vector<std::size_t> placed_;
  std::vector<std::vector<std::int64_t>> suffix_;
  std::vector<std::int64_t> partial_;
  Vector cur_;
};

}  // namespace

bool verify_gram(const std::vector<PlumbingLattice>& lattices, const PlumbingEmbedding& e) {
  const auto g = gram_matrix(lattices);
  if (g.size() != e.vectors.size()) return false;
  for (const auto& v : e.vectors)
    if (static_cast<int>(v.size()) != e.ambient_rank) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (pairing(e.vectors[i], e.vectors[j]) != g[i][j]) return false;
  return true;
}

PlumbingEmbedding canonical_form(const PlumbingEmbedding& e) {
  const int n = e.ambient_rank;
  std::vector<Vector> cols(n, Vector(e.vectors.size(), 0));
  for (std::size_t r = 0; r < e.vectors.size(); ++r)
    for (int c = 0; c < n; ++c) cols[c][r] = e.vectors[r][c];
  for (auto& col : cols) {
    auto it = std::find_if(col.begin(), col.end(), [](std::int64_t x) { return x != 0; });
    if (it != col.end() && *it < 0)
      for (auto& x : col) x = -x;
  }
  std::sort(cols.begin(), cols.end(), std::greater<>());
  PlumbingEmbedding out{n, std::vector<Vector>(e.vectors.size(), Vector(n, 0))};
  for (std::size_t r = 0; r < e.vectors.size(); ++r)
    for (int c = 0; c < n; ++c) out.vectors[r][c] = cols[c][r];
  return out;
}

std::vector<PlumbingEmbedding> enumerate_embeddings(const std::vector<PlumbingLattice>& lattices, int ambient_rank,
                                                    const EnumerationOptions& options) {
  if (ambient_rank < 1) throw DomainError("ambient rank must be positive");
  const auto g = gram_matrix(lattices);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i][i] > -2) throw DomainError("plumbing weights must be <= -2");
    if (-g[i][i] > options.weight_bound)
      throw DomainError("weight " + std::to_string(g[i][i]) + " exceeds the configured bound " +
                        std::to_string(options.weight_bound));
  }
  g_last_extensions = 0;
  if (g.empty()) return {PlumbingEmbedding{ambient_rank, {}}};
  if (g.size() > static_cast<std::size_t>(ambient_rank)) return {};

  Problem pr;
  pr.ambient = ambient_rank;
  pr.budget = options.budget;
  std::atomic<std::int64_t> used{0};
  pr.used = &used;
  const std::size_t n = g.size();
  pr.norm.resize(n);
  pr.target.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    pr.norm[i] = -g[i][i];
    for (std::size_t j = 0; j < n; ++j) pr.target[i][j] = -g[i][j];
  }
  // Heaviest vertex first; among equals prefer a neighbour of something placed.
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    auto adjacent = [&](std::size_t v) {
      for (std::size_t j = 0; j < n; ++j)
        if (done[j] && g[v][j] != 0) return true;
      return false;
    };
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (best == n || pr.norm[v] > pr.norm[best] ||
          (pr.norm[v] == pr.norm[best] && adjacent(v) && !adjacent(best)))
        best = v;
    }
    done[best] = true;
    pr.order.push_back(best);
  }

  std::set<PlumbingEmbedding> found;
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    Search s(pr);
    s.run(0, 0, found);
  } else {
    Search root(pr);
    std::vector<Vector> first;
    root.candidates(0, 0, first);
    std::vector<std::set<PlumbingEmbedding>> parts(first.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
      for (std::size_t i = next++; i < first.size() && !failed; i = next++) {
        try {
          Search s(pr);
          s.place(pr.order[0], first[i]);
          int u = 0;
          while (u < ambient_rank && first[i][u] != 0) ++u;
          s.run(1, u, parts[i]);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    for (auto& p : parts) found.insert(p.begin(), p.end());
  }
  g_last_extensions = used.load();
  return {found.begin(), found.end()};
}

std::int64_t last_extension_count() { return g_last_extensions; }

std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("integer_determinant needs a square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        checked::narrow(a[i][j]);
      }
    prev = a[k][k];
  }
  return checked::narrow(sign * a[n - 1][n - 1]);
}

ComplementWitness complement_witness(const PlumbingEmbedding& e) {
  const int n = e.ambient_rank;
  if (static_cast<int>(e.vectors.size()) != n - 1)
    throw DomainError("complement witness needs exactly N-1 embedding vectors");
  Vector g(n, 0);
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (const auto& v : e.vectors) {
      std::vector<std::int64_t> row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(v[c]);
      minor.push_back(std::move(row));
    }
    const std::int64_t d = integer_determinant(std::move(minor));
    g[j] = (j % 2 == 0) ? d : -d;
  }
  std::int64_t common = 0;
  for (auto x : g) common = gcd(common, x);
  if (common == 0) throw DomainError("embedding vectors are linearly dependent; complement rank is not 1");
  for (auto& x : g) x /= common;
  auto it = std::find_if(g.begin(), g.end(), [](std::int64_t x) { return x != 0; });
  if (*it < 0)
    for (auto& x : g) x = -x;
  std::int64_t norm = 0;
  for (auto x : g) norm = checked::add(norm, checked::mul(x, x));
  return {g, -norm};
}

ObstructionVerdict donaldson_obstruction(const Configuration& config, const EnumerationOptions& options) {
  ObstructionVerdict v;
  v.filter = Filter::Donaldson;
  DonaldsonEvidence ev;
  std::vector<PlumbingLattice> lattices;
  for (const auto& m : config.members) {
    if (!m.has_lens_link()) {
      v.outcome = Outcome::NotApplicable;
      v.note = "link of " + m.token() + " is not a lens space";
      return v;
    }
    lattices.push_back(plumbing_for_reversed_link(m));
    for (auto w : lattices.back().weights)
      if (-w > options.weight_bound) {
        v.outcome = Outcome::NotApplicable;
        v.note = "plumbing weight " + std::to_string(w) + " exceeds the configured bound";
        return v;
      }
    ev.weights.push_back(lattices.back().weights);
  }
  int n = 0;
  for (const auto& l : lattices) n += static_cast<int>(l.rank());
  ev.ambient_rank = n + 1;
  ev.required_square = -config.h1_product;
  const auto embeddings = enumerate_embeddings(lattices, ev.ambient_rank, options);
  bool hit = false;
  for (const auto& e : embeddings) {
    const auto w = complement_witness(e);
    ev.orbits.push_back({e.vectors, w.generator, w.square});
    hit = hit || w.square == ev.required_square;
  }
  if (embeddings.empty()) {
    v.outcome = Outcome::Obstructed;
    v.note = "no embedding into -Z^" + std::to_string(ev.ambient_rank);
  } else if (hit) {
    v.outcome = Outcome::Pass;
    v.note = "an orbit has complement square " + std::to_string(ev.required_square);
  } else {
    v.outcome = Outcome::Obstructed;
    v.note = std::to_string(embeddings.size()) + " orbit(s), none with complement square " +
             std::to_string(ev.required_square);
  }
  v.evidence = std::move(ev);
  return v;
}

}  // namespace qhcp::lattice
