#ifndef QHCP_TESTS_ORBIT_ORACLE_HPP
#define QHCP_TESTS_ORBIT_ORACLE_HPP

// Brute-force embedding orbits: every Gram-consistent assignment, then union-find
// under signed permutations of the ambient coordinates.

#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qhcp/lattice.hpp"

namespace qhcp::oracle {

using lattice::PlumbingLattice;
using lattice::Vector;

// Every vector of Z^n with the given squared length.
inline std::vector<Vector> vectors_of_norm(int n, std::int64_t norm) {
  std::vector<Vector> out;
  Vector cur(n, 0);
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= norm) ++bound;
  const auto rec = [&](auto&& self, int i, std::int64_t left) -> void {
    if (i == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::int64_t x = -bound; x <= bound; ++x) {
      if (x * x > left) continue;
      cur[i] = x;
      self(self, i + 1, left - x * x);
    }
    cur[i] = 0;
  };
  rec(rec, 0, norm);
  return out;
}

inline std::int64_t dot(const Vector& a, const Vector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Signed permutation: coordinate i of the image is sign[i] * v[perm[i]].
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
  Vector apply(const Vector& v) const {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = sign[i] * v[perm[i]];
    return out;
  }
};

// Adjacent transpositions and one sign change generate the whole signed-permutation group.
inline std::vector<SignedPerm> group_generators(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  SignedPerm flip{id, std::vector<int>(n, 1)};
  flip.sign[0] = -1;
  out.push_back(flip);
  for (int i = 0; i + 1 < n; ++i) {
    SignedPerm swap{id, std::vector<int>(n, 1)};
    std::swap(swap.perm[i], swap.perm[i + 1]);
    out.push_back(swap);
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// All Gram-consistent assignments, no symmetry breaking, then orbits under the signed-permutation group.
inline std::vector<std::set<std::vector<Vector>>> brute_force_orbits(const std::vector<PlumbingLattice>& lats, int n) {
  const auto gram = lattice::gram_matrix(lats);
  const std::size_t k = gram.size();
  std::vector<std::vector<Vector>> all;
  std::vector<Vector> cur;
  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      all.push_back(cur);
      return;
    }
    for (const auto& v : vectors_of_norm(n, -gram[i][i])) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = -dot(v, cur[j]) == gram[i][j];
      if (!ok) continue;
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::map<std::vector<Vector>, int> id;
  for (std::size_t i = 0; i < all.size(); ++i) id[all[i]] = static_cast<int>(i);
  UnionFind uf(all.size());
  const auto group = group_generators(n);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& g : group) {
      std::vector<Vector> img;
      for (const auto& v : all[i]) img.push_back(g.apply(v));
      uf.unite(static_cast<int>(i), id.at(img));
    }
  std::map<int, std::set<std::vector<Vector>>> orbits;
  for (std::size_t i = 0; i < all.size(); ++i) orbits[uf.find(static_cast<int>(i))].insert(all[i]);
  std::vector<std::set<std::vector<Vector>>> out;
  for (auto& [root, members] : orbits) out.push_back(std::move(members));
  return out;
}

}  // namespace qhcp::oracle

#endif  // QHCP_TESTS_ORBIT_ORACLE_HPP
