// Trivial tangles in plat form, relator-given tangles, 4-plane diagrams,
// endpoint matchings, the central surface complex, and the validity checks.
#pragma once

#include <q4d/groups.hpp>

#include <array>
#include <optional>
#include <variant>

namespace q4d {

// Plat of a braid on 2b strands with the standard caps pairing punctures
// (0,1),(2,3),...,(2b-2,2b-1).
struct TrivialTangle {
  int bridges = 1;
  BraidWord braid;  // strand_count == 2*bridges

  TrivialTangle() : braid(2, {}) {}
  TrivialTangle(int b, BraidWord w);
};

// Tangle given by its Wirtinger relators directly (one per bridge arc),
// as in the worked 6-bridge example.
struct RelatorTangle {
  int bridges = 1;
  std::vector<Word> relators;

  RelatorTangle() : relators{{{0, 1}, {1, 1}}} {}
  RelatorTangle(int b, std::vector<Word> rels);
};

using Tangle = std::variant<TrivialTangle, RelatorTangle>;

int tangle_bridges(const Tangle& t);

// Fixed-point-free involution pairing each puncture with the other end of
// its strand. Plat: conjugate of the cap involution by the braid
// permutation. Relator form: read off the two exponent-sum-(+-1)
// generators of each relator.
Permutation tangle_matching(const Tangle& t);

// Wirtinger relators of the tangle complement: for plats, images of the
// cap words x_{2k}x_{2k+1} under the braid's Artin automorphism; for
// relator tangles, the given list.
std::vector<Word> tangle_relators(const Tangle& t);

// Relators of the mirror tangle (strand matching unchanged): each relator
// reversed, presenting the opposite (isomorphic) complement group.
std::vector<Word> mirror_relators(const Tangle& t);

struct FourPlaneDiagram {
  int bridges = 1;
  std::array<Tangle, 4> tangles;
  std::string label;
};

// Throws std::invalid_argument on bridge mismatch or malformed tangles.
void check_structure(const FourPlaneDiagram& d);

FPGroup tangle_group(const Tangle& t);

// Group of the link T_i cup mirror(T_j): relators of T_i plus mirror
// relators of T_j on the shared generators.
FPGroup link_group(const Tangle& ti, const Tangle& tj);

// Number of orbits of the two matchings on the 2b punctures = number of
// components of the link T_i cup mirror(T_j).
int pair_components(const Tangle& ti, const Tangle& tj);

// One polygonal face of the central surface: the alternating cycle of an
// orbit of two consecutive matchings. verts[k] -> verts[k+1] runs along a
// strand of tangle pair + (k mod 2), indices mod 4.
struct Face {
  int pair = 0;  // consecutive pair (pair, pair+1 mod 4)
  std::vector<int> verts;
  int orient = 1;  // +-1 once an orientation has been propagated
};

struct SurfaceComplex {
  int bridges = 0;
  std::array<Permutation, 4> matchings;
  std::vector<Face> faces;
  int c[4][4] = {};  // orbit counts for all six pairs (symmetric)
  int s[4] = {};     // component count of the triple omitting tangle i
  int chi = 0;
  int components = 0;
  bool orientable = false;
  int genus = 0;      // total genus over components (orientable case)
  int crosscaps = 0;  // total cross-cap number (non-orientable case)

  int vertex_count() const { return 2 * bridges; }
  int edge_count() const { return 4 * bridges; }
  // Edge index of the strand of tangle t containing puncture p.
  int edge_index(int t, int p) const;
  IntMat boundary1() const;  // 2b x 4b
  IntMat boundary2() const;  // 4b x faces (face orientations applied)
};

SurfaceComplex build_surface_complex(const FourPlaneDiagram& d);

struct PairCheck {
  int i = 0, j = 0;
  int components = 0;
  AbelianGroup link_abelianization;
  bool pass = false;
  // Heuristic (not part of the verdict): Tietze reached a free
  // presentation of the expected rank.
  std::optional<bool> tietze_free;
};

struct TripleCheck {
  std::array<int, 3> triple{};
  int chi = 0;
  int components = 0;
  bool pass = false;
};

struct ValidationReport {
  bool structural_ok = false;
  std::string structural_error;
  std::vector<PairCheck> pairs;      // the four consecutive pairs
  std::vector<TripleCheck> triples;  // all four triples
  long euler_identity = 0;           // 2b - 4b + sum c_ij - sum s_i
  bool euler_ok = false;
  bool pass = false;  // pairs && triples && euler
};

// Necessary-not-sufficient validity checks; set run_tietze to also run the
// free-presentation heuristic (reported, never part of the verdict).
ValidationReport validate_diagram(const FourPlaneDiagram& d, bool run_tietze = false);

}  // namespace q4d
