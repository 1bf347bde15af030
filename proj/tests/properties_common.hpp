// Randomized property suites shared by test_properties and the acceptance
// gate. Each suite returns true iff every trial passed.
#pragma once

#include <q4d/constructions.hpp>
#include <q4d/cover.hpp>
#include <q4d/heegaard.hpp>

#include <random>

namespace props {

using namespace q4d;

// UMV = D, unimodular transforms, diagonal nonnegative with divisibility.
inline bool snf_contract(int count, unsigned seed = 1) {
  std::mt19937 rng(seed);
  for (int t = 0; t < count; ++t) {
    int r = 1 + int(rng() % 8), c = 1 + int(rng() % 8);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = int(rng() % 19) - 9;
    SnfResult s = smith_normal_form(m);
    if (!(s.u * m * s.v == s.d)) return false;
    if (abs_det(s.u) != 1 || abs_det(s.v) != 1) return false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j && s.d.at(i, j) != 0) return false;
    int n = std::min(r, c);
    for (int i = 0; i < n; ++i)
      if (s.d.at(i, i) < 0) return false;
    for (int i = 0; i + 1 < n; ++i) {
      if (s.d.at(i, i) == 0 && s.d.at(i + 1, i + 1) != 0) return false;
      if (s.d.at(i, i) != 0 && s.d.at(i + 1, i + 1) % s.d.at(i, i) != 0) return false;
    }
  }
  return true;
}

// lattice_intersect against a membership oracle: every intersection basis
// vector lies in both inputs, and every sampled common element lies in the
// computed intersection.
inline bool intersect_oracle(int count, unsigned seed = 2) {
  std::mt19937 rng(seed);
  auto random_lattice = [&] {
    int k = 1 + int(rng() % 3);
    IntMat b(4, k);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < k; ++j) b.at(i, j) = int(rng() % 7) - 3;
    return column_span(4, b);
  };
  auto member = [](const Lattice& l, const IntMat& v) {
    return l.rank() > 0 && solve_in_span(l.basis(), v).has_value();
  };
  for (int t = 0; t < count; ++t) {
    Lattice l1 = random_lattice(), l2 = random_lattice();
    Lattice inter = lattice_intersect(l1, l2);
    for (int j = 0; j < inter.rank(); ++j) {
      IntMat v = inter.basis().col_slice(j, 1);
      if (!member(l1, v) || !member(l2, v)) return false;
    }
    for (const Lattice* src : {&l1, &l2}) {
      const Lattice* other = src == &l1 ? &l2 : &l1;
      for (int trial = 0; trial < 20; ++trial) {
        if (src->rank() == 0) break;
        std::vector<Int> coeff(src->rank());
        for (Int& x : coeff) x = int(rng() % 5) - 2;
        IntMat v(4, 1);
        v.set_col(0, src->basis().apply(coeff));
        if (member(*other, v) && !member(inter, v) && !v.is_zero()) return false;
      }
    }
  }
  return true;
}

// Full pipeline run; d o d = 0 is asserted inside the ChainComplex
// constructor, Betti duality beta1 = beta4, beta2 = beta3 checked here.
inline bool pipeline_duality(const FourPlaneDiagram& d, const PermutationRep& rho,
                             TreePolicy policy = TreePolicy::bfs_min_gen) {
  std::vector<AbelianGroup> h = branched_cover_homology(d, rho, policy);
  return h.size() == 6 && h[1].free_rank == h[4].free_rank &&
         h[2].free_rank == h[3].free_rank;
}

inline bool tree_independence(const FourPlaneDiagram& d, const PermutationRep& rho) {
  return branched_cover_homology(d, rho, TreePolicy::bfs_min_gen) ==
         branched_cover_homology(d, rho, TreePolicy::dfs_max_gen);
}

inline BraidWord random_braid(int strands, int max_len, std::mt19937& rng) {
  std::vector<std::pair<int, int>> letters;
  int len = 1 + int(rng() % max_len);
  for (int j = 0; j < len; ++j)
    letters.push_back({1 + int(rng() % (strands - 1)), rng() % 2 ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

inline bool braid_move_h1_invariance(const FourPlaneDiagram& base, int words,
                                     int max_len = 8, unsigned seed = 3) {
  std::mt19937 rng(seed);
  AbelianGroup h = h1_3manifold(base);
  for (int t = 0; t < words; ++t) {
    FourPlaneDiagram m =
        mutual_braid_move(base, random_braid(2 * base.bridges, max_len, rng));
    if (h1_3manifold(m) != h) return false;
  }
  return true;
}

inline bool braid_move_cover_invariance(const FourPlaneDiagram& base,
                                        const PermutationRep& rho, int words,
                                        int max_len = 5, unsigned seed = 4) {
  std::mt19937 rng(seed);
  std::vector<AbelianGroup> h = branched_cover_homology(base, rho);
  for (int t = 0; t < words; ++t) {
    BraidWord w = random_braid(2 * base.bridges, max_len, rng);
    FourPlaneDiagram m = mutual_braid_move(base, w);
    PermutationRep rho2 = transport_rep(rho, w);
    if (!check_extends(rho2, m)) return false;
    if (branched_cover_homology(m, rho2) != h) return false;
  }
  return true;
}

}  // namespace props
