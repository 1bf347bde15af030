// Extended Heegaard diagrams on the central surface and H1 of the
// embedded 3-manifold.
#pragma once

#include <q4d/tangle.hpp>

namespace q4d {

// One multicurve component: an alternating cycle through two matchings.
struct HeegaardCurve {
  std::vector<int> punctures;  // in traversal order
  std::vector<Int> cycle;      // 1-chain in the edge basis Z^{4b}
};

struct ExtendedHeegaardDiagram {
  SurfaceComplex surface;
  std::array<int, 4> perm{0, 1, 2, 3};  // (i,j,k,l): alpha from T_i u T_k
  std::vector<HeegaardCurve> alpha;     // components of T_i cup mirror(T_k)
  std::vector<HeegaardCurve> beta;      // components of T_j cup mirror(T_l)
  bool q_mod2 = false;  // true when the surface is non-orientable
  IntMat q;             // rows alpha, cols beta; signed puncture counts
};

ExtendedHeegaardDiagram extract_heegaard(const FourPlaneDiagram& d,
                                         std::array<int, 4> perm = {0, 1, 2, 3});

// H1(Sigma) / <classes of all alpha and beta components>.
AbelianGroup h1_from_heegaard(const ExtendedHeegaardDiagram& h);

AbelianGroup h1_3manifold(const FourPlaneDiagram& d);

}  // namespace q4d
