// Acceptance gate: the eight headline criteria, one pass/fail line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <q4d/io.hpp>

#include <chrono>
#include <iostream>

#include "fixtures.hpp"
#include "properties_common.hpp"

using namespace q4d;

static const std::string DATA = Q4D_TEST_DATA;

static void report(int n, const std::string& what, bool ok) {
  std::cout << "criterion " << n << " (" << what << "): " << (ok ? "PASS" : "FAIL")
            << std::endl;
  CHECK(ok);
}

static const std::vector<AbelianGroup> S5_SIGNATURE = {{1, {}}, {}, {1, {}},
                                                       {1, {}}, {}, {1, {}}};

TEST_CASE("1: worked 6-bridge example end to end from files") {
  auto start = std::chrono::steady_clock::now();
  FourPlaneDiagram d = load_diagram(DATA + "/spun_trefoil.q4d");
  PermutationRep rho = load_rho(DATA + "/spun_trefoil.rho");
  std::vector<AbelianGroup> h = branched_cover_homology(d, rho);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  report(1, "end-to-end homology (Z,0,Z,Z,0,Z) in < 10s",
         h == S5_SIGNATURE && secs < 10.0);
}

TEST_CASE("2: sector Lagrangians equal the reference lattices") {
  LagrangianData lag =
      lagrangians(fx::spun_trefoil_diagram(), PermutationRep(3, fx::spun_trefoil_rho_images()));
  bool ok = lag.genus == 4;
  for (const Lattice& l : lag.l) ok = ok && l.rank() == 4;

  // Reference vectors are written in the basis {x3^1,...,x10^1} of H1 of
  // the cover surface; convert through the abelianization map.
  IntMat basis_cols(8, 8);
  for (int k = 0; k < 8; ++k)
    basis_cols.set_col(k, lag.coords.of_word({{lifted_gen(3 + k, 1, 3), 1}}));
  auto from_rows = [&](std::vector<std::vector<long>> rows) {
    IntMat m(8, int(rows.size()));
    for (int c = 0; c < int(rows.size()); ++c) {
      std::vector<Int> v(8);
      for (int i = 0; i < 8; ++i) v[i] = rows[c][i];
      m.set_col(c, basis_cols.apply(v));
    }
    return Lattice(8, std::move(m));
  };
  std::array<Lattice, 4> expected = {
      from_rows({{1, 0, 0, 0, 0, 0, 0, 0},
                 {1, 0, 1, -1, 1, -1, 1, -1},
                 {0, 0, 1, -1, 0, 0, 0, 0},
                 {0, 0, 0, 0, 1, -1, 0, 0}}),
      from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                 {0, 0, 1, -1, 0, 0, 0, 0},
                 {0, 0, 0, 0, 1, 0, 0, -1},
                 {0, 0, 0, 0, 0, 1, -1, 0}}),
      from_rows({{1, -1, 0, 0, 0, 0, 0, 0},
                 {0, 0, 1, 0, 0, 0, 0, 0},
                 {1, -1, 1, 0, 1, -1, 1, -1},
                 {0, 0, 0, 0, 1, -1, 0, 0}}),
      from_rows({{1, 0, 0, 0, 0, 0, 0, -1},
                 {0, 1, 0, 0, 0, 0, -1, 0},
                 {0, 0, 1, 0, 0, -1, 0, 0},
                 {0, 0, 0, 1, -1, 0, 0, 0}})};
  for (int i = 0; i < 4; ++i) ok = ok && lattice_equal(lag.l[i], expected[i]);
  report(2, "four Lagrangian lattices, each rank 4", ok);
}

TEST_CASE("3: Riemann-Hurwitz genus two ways") {
  PermutationRep rho(3, fx::spun_trefoil_rho_images());
  long g = riemann_hurwitz_genus(6, rho);
  AbelianGroup ab = abelianization(lift_surface_group(6, rho).group);
  report(3, "genus 4 by formula and as half the surface H1 rank",
         g == 4 && ab.torsion.empty() && ab.free_rank == 2 * g);
}

TEST_CASE("4: trivial cover returns the homology of S^5") {
  PermutationRep triv(1, std::vector<Permutation>(2, Permutation({0})));
  std::vector<AbelianGroup> h = branched_cover_homology(fx::one_bridge_diagram(), triv);
  report(4, "n = 1 on the 1-bridge diagram gives (Z,0,0,0,0,Z)",
         h == std::vector<AbelianGroup>{{1, {}}, {}, {}, {}, {}, {1, {}}});
}

TEST_CASE("5: H1 suite for lens spaces, RP^3 and the spun trefoil") {
  bool ok = true;
  for (int p = 1; p <= 6; ++p) {
    AbelianGroup want;
    if (p > 1) want.torsion = {p};
    ok = ok && h1_3manifold(lens_diagram(p)) == want;
  }
  ok = ok && h1_3manifold(load_diagram(DATA + "/rp3.q4d")) == AbelianGroup{0, {2}};
  ok = ok && h1_3manifold(load_diagram(DATA + "/spun_trefoil.q4d")) == AbelianGroup{};
  report(5, "lens p=1..6 -> Z/p, RP^3 -> Z/2, spun trefoil -> 0", ok);
}

TEST_CASE("6: spun generator reproduces the 6-bridge tangle groups") {
  FourPlaneDiagram d = spun_diagram(fx::trefoil_plat());
  FourPlaneDiagram ref = fx::spun_trefoil_diagram();
  bool ok = d.bridges == 6;
  for (int t = 0; t < 4; ++t)
    ok = ok && relator_lists_equivalent(tangle_relators(d.tangles[t]),
                                        tangle_relators(ref.tangles[t]));
  report(6, "spun trefoil tangle groups match all four relator lists", ok);
}

TEST_CASE("7: randomized property suites") {
  FourPlaneDiagram worked = fx::spun_trefoil_diagram();
  PermutationRep rho(3, fx::spun_trefoil_rho_images());
  bool ok = props::snf_contract(500) && props::intersect_oracle(200) &&
            props::pipeline_duality(worked, rho, TreePolicy::bfs_min_gen) &&
            props::pipeline_duality(worked, rho, TreePolicy::dfs_max_gen) &&
            props::tree_independence(worked, rho) &&
            props::braid_move_h1_invariance(lens_diagram(2), 50) &&
            props::braid_move_cover_invariance(worked, rho, 50);
  report(7, "SNF, lattice intersection, duality, tree choice, braid moves", ok);
}

TEST_CASE("8: Euler identity on generator outputs; corrupted diagram fails") {
  bool ok = true;
  std::vector<FourPlaneDiagram> outputs;
  outputs.push_back(spun_diagram(BraidWord(2, {{1, 1}, {1, 1}, {1, 1}})));
  outputs.push_back(spun_diagram(fx::trefoil_plat()));
  outputs.push_back(spun_diagram(BraidWord(6, {{2, 1}, {4, 1}})));
  for (int p = 1; p <= 6; ++p) outputs.push_back(lens_diagram(p));
  outputs.push_back(sum(lens_diagram(2), lens_diagram(3), SumMode::distant));
  outputs.push_back(sum(lens_diagram(2), lens_diagram(3), SumMode::connected));
  outputs.push_back(mutual_braid_move(lens_diagram(2), BraidWord(8, {{3, 1}, {5, -1}})));
  outputs.push_back(fx::spun_trefoil_diagram());
  for (const FourPlaneDiagram& d : outputs) {
    ValidationReport rep = validate_diagram(d);
    ok = ok && rep.euler_ok && rep.pass;
  }

  // Three matchings forming a genus-1 triple surface violate the unlink
  // condition.
  FourPlaneDiagram bad;
  bad.bridges = 2;
  bad.tangles[0] = TrivialTangle(2, BraidWord(4, {}));
  bad.tangles[1] = TrivialTangle(2, BraidWord(4, {{2, 1}}));
  bad.tangles[2] = TrivialTangle(2, BraidWord(4, {{2, 1}, {3, 1}}));
  bad.tangles[3] = TrivialTangle(2, BraidWord(4, {}));
  ok = ok && !validate_diagram(bad).pass;
  report(8, "Euler identity holds on all generator outputs; corruption detected", ok);
}
