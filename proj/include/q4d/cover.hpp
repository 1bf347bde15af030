// Branched-cover pipeline: permutation representations of the punctured
// sphere group, lifting presentations to the cover, sector Lagrangians,
// the length-six chain complex, and its homology.
#pragma once

#include <q4d/heegaard.hpp>
#include <q4d/tangle.hpp>

namespace q4d {

// rho: pi_1(S^2 minus 2b points) -> S_n. Sheets are numbered 1..n in all
// public interfaces; permutations act on 0..n-1 internally.
struct PermutationRep {
  int sheets = 1;
  std::vector<Permutation> images;  // one per puncture x_0..x_{2b-1}
  // Whether rho(x_0)...rho(x_{2b-1}) = id; a rep that fails this is not a
  // homomorphism of the sphere group and never extends.
  bool sphere_ok = true;

  PermutationRep() = default;
  // Validates image degrees; records the sphere relator condition.
  PermutationRep(int n, std::vector<Permutation> imgs);

  int punctures() const { return int(images.size()); }
  bool transitive() const;
  // Image of a word, letters applied left to right.
  Permutation of_word(const Word& w) const;
};

// Generator index of x_i on sheet j (1-based sheet).
int lifted_gen(int i, int sheet, int n);
std::string lifted_gen_name(int i, int sheet);

// Sheet-tracking lift of a relator starting on a given sheet; requires
// rho(r) = id so the lift closes up.
Word lift_relator(const Word& r, const PermutationRep& rho, int start_sheet);

enum class TreePolicy { bfs_min_gen, dfs_max_gen };

struct LiftedPresentation {
  int sheets = 1;
  int punctures = 0;
  std::vector<Word> claw;          // n-1 single-letter tree relators
  std::vector<Word> sphere_lifts;  // w_1..w_n
  std::vector<Word> branch;        // one per cycle of each rho(x_i)
  FPGroup group;                   // all of the above combined
};

// Presentation of the closed surface covering the bridge sphere, branched
// over the punctures.
LiftedPresentation lift_surface_group(int b, const PermutationRep& rho,
                                      TreePolicy policy = TreePolicy::bfs_min_gen);

// True iff rho kills every tangle relator (and the sphere relator), i.e.
// extends over all four sectors.
bool check_extends(const PermutationRep& rho, const FourPlaneDiagram& d);

// Genus of the branched cover surface by Riemann-Hurwitz.
long riemann_hurwitz_genus(int b, const PermutationRep& rho);

struct LagrangianData {
  long genus = 0;  // g~ of the covering surface
  std::array<Lattice, 4> l;
  AbelianCoords coords;  // H1 of the cover surface as Z^{2g~}
  LiftedPresentation lifted;
};

LagrangianData lagrangians(const FourPlaneDiagram& d, const PermutationRep& rho,
                           TreePolicy policy = TreePolicy::bfs_min_gen);

// Degrees 0..5: Z, Z^{2g~}, direct sums of the Lagrangians and their
// double and triple intersections, Z; boundary maps are signed inclusions.
ChainComplex quadrisection_complex(const std::array<Lattice, 4>& l, long genus);

std::vector<AbelianGroup> branched_cover_homology(
    const FourPlaneDiagram& d, const PermutationRep& rho,
    TreePolicy policy = TreePolicy::bfs_min_gen);

}  // namespace q4d
