#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <q4d/heegaard.hpp>

#include <algorithm>

#include "fixtures.hpp"

using namespace q4d;

TEST_CASE("1-bridge diagram: one alpha and one beta curve on a sphere") {
  auto D = fx::one_bridge_diagram();
  ExtendedHeegaardDiagram h = extract_heegaard(D);
  CHECK(h.surface.chi == 2);
  CHECK(h.alpha.size() == 1);
  CHECK(h.beta.size() == 1);
  CHECK(h.alpha[0].punctures.size() == 2);
  CHECK_FALSE(h.q_mod2);
  CHECK(h1_3manifold(D) == AbelianGroup{});
}

TEST_CASE("curves are cycles and cover each puncture once") {
  for (const FourPlaneDiagram& D : {fx::one_bridge_diagram(), fx::spun_trefoil_diagram()}) {
    ExtendedHeegaardDiagram h = extract_heegaard(D);
    IntMat d1 = h.surface.boundary1();
    std::vector<int> on_a(2 * D.bridges, 0), on_b(2 * D.bridges, 0);
    for (const auto* curves : {&h.alpha, &h.beta}) {
      for (const HeegaardCurve& c : *curves) {
        IntMat v(h.surface.edge_count(), 1);
        for (int i = 0; i < h.surface.edge_count(); ++i) v.at(i, 0) = c.cycle[i];
        CHECK((d1 * v).is_zero());
        for (int p : c.punctures) ++(curves == &h.alpha ? on_a : on_b)[p];
      }
    }
    for (int p = 0; p < 2 * D.bridges; ++p) {
      CHECK(on_a[p] == 1);
      CHECK(on_b[p] == 1);
    }
  }
}

TEST_CASE("worked 6-bridge example: embedded 3-manifold has trivial H1") {
  auto D = fx::spun_trefoil_diagram();
  CHECK(h1_3manifold(D) == AbelianGroup{});
  ExtendedHeegaardDiagram h = extract_heegaard(D);
  CHECK_FALSE(h.q_mod2);
  // alpha components = c13, beta components = c24.
  CHECK(int(h.alpha.size()) == h.surface.c[0][2]);
  CHECK(int(h.beta.size()) == h.surface.c[1][3]);
}

TEST_CASE("h1 is invariant under all spine permutations") {
  for (const FourPlaneDiagram& D : {fx::one_bridge_diagram(), fx::spun_trefoil_diagram()}) {
    AbelianGroup base = h1_3manifold(D);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      CHECK(h1_from_heegaard(extract_heegaard(D, perm)) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("bad permutation rejected") {
  CHECK_THROWS(extract_heegaard(fx::one_bridge_diagram(), {0, 1, 2, 2}));
}
