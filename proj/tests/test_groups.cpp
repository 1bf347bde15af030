#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <q4d/groups.hpp>

#include <random>

#include "fixtures.hpp"

using namespace q4d;
using fx::W;

namespace {

BraidWord random_braid(std::mt19937& rng, int strands, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen), idx(1, strands - 1), sg(0, 1);
  std::vector<std::pair<int, int>> letters;
  int n = len(rng);
  for (int k = 0; k < n; ++k) letters.push_back({idx(rng), sg(rng) ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(free_reduce(W("x0 x1 x1^-1 x0^-1")).empty());
  CHECK(free_reduce(W("x0 x1 x1^-1 x2")) == W("x0 x2"));
  CHECK(cyclic_reduce(W("x0 x1 x0^-1")) == W("x1"));
  CHECK(inverse_word(W("x0 x1^-1")) == W("x1 x0^-1"));
  CHECK(word_str(W("x3 x2^-1")) == "x3 x2^-1");
  CHECK(word_str({}) == "1");
}

TEST_CASE("braid word basics") {
  BraidWord w(4, {{2, 1}, {1, -1}});
  CHECK(w.inverse().letters == std::vector<std::pair<int, int>>({{1, 1}, {2, -1}}));
  CHECK_THROWS(BraidWord(4, {{4, 1}}));
  CHECK_THROWS(BraidWord(4, {{0, 1}}));
  // sigma_2 swaps positions 1,2.
  Permutation p = BraidWord(4, {{2, 1}}).underlying_permutation();
  CHECK(p(1) == 2);
  CHECK(p(2) == 1);
  CHECK(p(0) == 0);
}

TEST_CASE("sphere group") {
  FPGroup g1 = sphere_group(1);
  CHECK(g1.ngens == 2);
  CHECK(abelianization(g1) == AbelianGroup{1, {}});

  FPGroup g2 = tietze_simplify(sphere_group(2));
  CHECK(g2.ngens == 3);
  CHECK(g2.relators.empty());

  FPGroup g6 = sphere_group(6);
  CHECK(g6.ngens == 12);
  CHECK(g6.relators.size() == 1);
  CHECK(g6.relators[0].size() == 12);
}

TEST_CASE("artin action basics") {
  // Empty braid acts as the identity.
  Word w = W("x0 x1^-1 x2");
  CHECK(artin_image(BraidWord(4, {}), w) == w);
  // sigma_1 sends x0 to x0 x1 x0^-1.
  CHECK(artin_image(BraidWord(2, {{1, 1}}), W("x0")) == W("x0 x1 x0^-1"));
  CHECK(artin_image(BraidWord(2, {{1, 1}}), W("x1")) == W("x0"));
  // Inverse crossing.
  CHECK(artin_image(BraidWord(2, {{1, -1}}), W("x0")) == W("x1"));
  CHECK(artin_image(BraidWord(2, {{1, -1}}), W("x1")) == W("x1^-1 x0 x1"));
}

TEST_CASE("artin action reproduces the worked example's long relators") {
  // The trefoil plat's cap words map onto the two long relators of the
  // 6-bridge example's first tangle (here with b = 2 generator indices).
  BraidWord tref = fx::trefoil_plat();
  CHECK(artin_image(tref, W("x0 x1")) == W("x0 x1 x2 x1 x2 x1^-1 x2^-1 x1^-1"));
  CHECK(artin_image(tref, W("x2 x3")) == W("x1 x2 x1 x2^-1 x1^-1 x3"));
}

TEST_CASE("artin action of w then w^-1 is the identity") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord w = random_braid(rng, 8, 12);
    BraidWord both(8, {});
    both.letters = w.letters;
    auto inv = w.inverse();
    both.letters.insert(both.letters.end(), inv.letters.begin(), inv.letters.end());
    for (int g = 0; g < 8; ++g) {
      Word x = {{g, 1}};
      CHECK(artin_image(both, x) == x);
    }
  }
}

TEST_CASE("abelianization coordinates") {
  FPGroup g;
  g.ngens = 3;
  g.relators = {W("x0 x1 x2")};  // free quotient of rank 2
  AbelianCoords c = abelianization_coords(g);
  CHECK(c.free_rank == 2);
  CHECK(c.torsion_free);
  // Relator class maps to zero; generators span Z^2.
  auto z = c.of_word(W("x0 x1 x2"));
  CHECK(z == std::vector<Int>({0, 0}));
  IntMat gens(2, 3);
  for (int i = 0; i < 3; ++i) gens.set_col(i, c.of_word({{i, 1}}));
  CHECK(rank(gens) == 2);

  FPGroup t;
  t.ngens = 1;
  t.relators = {W("x0 x0")};
  CHECK_FALSE(abelianization_coords(t).torsion_free);
}

TEST_CASE("tietze simplification") {
  FPGroup g;
  g.ngens = 2;
  g.relators = {W("x1")};
  FPGroup s = tietze_simplify(g);
  CHECK(s.ngens == 1);
  CHECK(s.relators.empty());

  FPGroup h;
  h.ngens = 2;
  h.relators = {W("x0 x1")};
  FPGroup hs = tietze_simplify(h);
  CHECK(hs.ngens == 1);
  CHECK(hs.relators.empty());

  // x1 = x0^2 substituted; leaves <x0 | x0^6>.
  FPGroup k;
  k.ngens = 2;
  k.relators = {W("x0 x0 x1^-1"), W("x1 x1 x1")};
  FPGroup ks = tietze_simplify(k);
  CHECK(ks.ngens == 1);
  CHECK(abelianization(ks) == AbelianGroup{0, {6}});
}

TEST_CASE("tietze preserves abelianization on random presentations") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> ngen(1, 5), nrel(0, 5), rl(0, 6), sg(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    FPGroup g;
    g.ngens = ngen(rng);
    std::uniform_int_distribution<int> gen(0, g.ngens - 1);
    int m = nrel(rng);
    for (int k = 0; k < m; ++k) {
      Word r;
      int len = rl(rng);
      for (int i = 0; i < len; ++i) r.push_back({gen(rng), sg(rng) ? 1 : -1});
      g.relators.push_back(std::move(r));
    }
    AbelianGroup before = abelianization(g);
    FPGroup s = tietze_simplify(g);
    CHECK(abelianization(s) == before);
    CHECK(s.ngens <= g.ngens);
  }
}

TEST_CASE("relator equivalence") {
  CHECK(relators_equivalent(W("x0 x1 x2"), W("x1 x2 x0")));             // cyclic
  CHECK(relators_equivalent(W("x0 x1"), W("x1^-1 x0^-1")));             // inverse
  CHECK(relators_equivalent(W("x3 x0 x1 x3^-1"), W("x0 x1")));          // conjugate
  CHECK_FALSE(relators_equivalent(W("x0 x1"), W("x0 x1^-1")));
  CHECK(relator_lists_equivalent({W("x0 x1"), W("x2")}, {W("x2"), W("x1 x0")}));
  CHECK_FALSE(relator_lists_equivalent({W("x0")}, {W("x0"), W("x0")}));
}
