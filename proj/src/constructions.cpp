#include <q4d/constructions.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace q4d {

BraidWord braid_realizing(const Permutation& target) {
  const int n = target.degree();
  std::vector<int> arr(n);
  for (int i = 0; i < n; ++i) arr[i] = target(i);
  // Bubble sort to the identity; each recorded adjacent swap of positions
  // (j, j+1) is the letter sigma_{j+1}. Left-to-right application of the
  // recorded letters reproduces `target`.
  std::vector<std::pair<int, int>> letters;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < n; ++j)
      if (arr[j] > arr[j + 1]) {
        std::swap(arr[j], arr[j + 1]);
        letters.push_back({j + 1, 1});
        moved = true;
      }
  }
  BraidWord w(n, std::move(letters));
  if (!(w.underlying_permutation() == target))
    throw std::logic_error("braid_realizing: factorization failed");
  return w;
}

namespace {

// Plat whose strand matching is the given pairing of the 2b punctures.
TrivialTangle matching_plat(int b, const std::vector<std::pair<int, int>>& pairs) {
  if (int(pairs.size()) != b)
    throw std::invalid_argument("matching_plat: need b pairs");
  std::vector<bool> used(2 * b, false);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= 2 * b || v >= 2 * b || u == v || used[u] || used[v])
      throw std::invalid_argument("matching_plat: not a perfect pairing");
    used[u] = used[v] = true;
  }
  // sigma sends cap pair (2k, 2k+1) to the target pair; the plat matching
  // of sigma is then exactly `pairs`.
  std::vector<int> sigma(2 * b);
  for (int k = 0; k < b; ++k) {
    sigma[2 * k] = pairs[k].first;
    sigma[2 * k + 1] = pairs[k].second;
  }
  return TrivialTangle(b, braid_realizing(Permutation(sigma)));
}

std::vector<Word> relators_shifted(const Tangle& t, int shift) {
  std::vector<Word> rels = tangle_relators(t);
  for (Word& r : rels)
    for (Letter& l : r) l.gen += shift;
  return rels;
}

int occurrences(const Word& w, int gen) {
  int c = 0;
  for (const Letter& l : w) c += l.gen == gen;
  return c;
}

// Replace every letter x_gen^e by image^e (image substituted literally).
Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  for (const Letter& l : w) {
    if (l.gen != gen) {
      out.push_back(l);
      continue;
    }
    Word piece = l.sign > 0 ? image : inverse_word(image);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return free_reduce(out);
}

}  // namespace

FourPlaneDiagram spun_diagram(const BraidWord& k) {
  if (k.strand_count < 2 || k.strand_count % 2 != 0)
    throw std::invalid_argument("spun_diagram: plat needs an even strand count");
  const int b = k.strand_count / 2;
  const int B = 5 * b - 4;

  std::vector<Word> knot;  // Wirtinger relators of the knot's plat tangle
  for (int j = 0; j < b; ++j)
    knot.push_back(artin_image(k, {{2 * j, 1}, {2 * j + 1, 1}}));

  FourPlaneDiagram d;
  d.bridges = B;
  for (int t = 0; t < 4; ++t) {
    std::vector<int> ren(2 * b);
    std::iota(ren.begin(), ren.end(), 0);
    std::vector<std::pair<int, int>> arcs;
    // One 8-puncture block per inner cap of the knot plat; the block's
    // spun annulus swallows the cap's punctures in four rotated ways.
    for (int blk = 0; blk + 1 < b; ++blk) {
      const int q = 2 * b + 8 * blk;
      const int v0 = 2 * (blk + 1), v1 = 2 * (blk + 1) + 1;
      switch (t) {
        case 0:
          arcs.insert(arcs.end(), {{q, q + 7}, {q + 1, q + 2}, {q + 3, q + 4}, {q + 5, q + 6}});
          break;
        case 1:
          ren[v1] = q + 7;
          arcs.insert(arcs.end(), {{v1, q}, {q + 1, q + 2}, {q + 3, q + 6}, {q + 4, q + 5}});
          break;
        case 2:
          ren[v0] = q + 2;
          ren[v1] = q + 7;
          arcs.insert(arcs.end(), {{v0, q + 1}, {v1, q}, {q + 3, q + 4}, {q + 5, q + 6}});
          break;
        case 3:
          ren[v1] = q + 7;
          arcs.insert(arcs.end(), {{v1, q + 6}, {q, q + 5}, {q + 1, q + 4}, {q + 2, q + 3}});
          break;
      }
    }
    std::vector<Word> rels;
    for (Word r : knot) {
      for (Letter& l : r) l.gen = ren[l.gen];
      rels.push_back(std::move(r));
    }
    for (auto [u, v] : arcs) rels.push_back({{u, 1}, {v, 1}});
    d.tangles[t] = RelatorTangle(B, std::move(rels));
  }
  d.label = "spun " + std::to_string(b) + "-bridge knot";
  return d;
}

FourPlaneDiagram lens_diagram(int p) {
  if (p < 1) throw std::invalid_argument("lens_diagram: p >= 1 required");
  const int b = 2 * p;
  // Punctures 4c + 2(a-1) + (e-1) on a torus built from p square tiles;
  // red/green have slope p, blue/purple are meridians.
  std::vector<std::pair<int, int>> red, blue, green, purple;
  for (int c = 0; c < p; ++c)
    for (int x = 0; x < 2; ++x) {
      red.push_back({4 * c + 2 * x + 1, 4 * ((c + 1) % p) + 2 * x});
      green.push_back({4 * c + 2 * x, 4 * c + 2 * x + 1});
      blue.push_back({4 * c + 2 + x, 4 * ((c + 1) % p) + x});
      purple.push_back({4 * c + x, 4 * c + 2 + x});
    }
  FourPlaneDiagram d;
  d.bridges = b;
  d.tangles[0] = matching_plat(b, red);
  d.tangles[1] = matching_plat(b, blue);
  d.tangles[2] = matching_plat(b, green);
  d.tangles[3] = matching_plat(b, purple);
  d.label = "lens space L(" + std::to_string(p) + ",1)";
  return d;
}

FourPlaneDiagram sum(const FourPlaneDiagram& d1, const FourPlaneDiagram& d2,
                     SumMode mode) {
  check_structure(d1);
  check_structure(d2);
  const int b1 = d1.bridges, b2 = d2.bridges;
  FourPlaneDiagram out;

  if (mode == SumMode::distant) {
    out.bridges = b1 + b2;
    for (int t = 0; t < 4; ++t) {
      std::vector<Word> rels = tangle_relators(d1.tangles[t]);
      std::vector<Word> shifted = relators_shifted(d2.tangles[t], 2 * b1);
      rels.insert(rels.end(), shifted.begin(), shifted.end());
      out.tangles[t] = RelatorTangle(out.bridges, std::move(rels));
    }
    out.label = d1.label + " + " + d2.label + " (distant)";
    return out;
  }

  // Connected sum along the last puncture of d1 and the first of d2. The
  // merged meridians satisfy x_Q = x_P^-1 (the sphere relator of the glued
  // equator forces the sign); both are then eliminated.
  out.bridges = b1 + b2 - 1;
  const int P = 2 * b1 - 1, Q = 2 * b1;
  for (int t = 0; t < 4; ++t) {
    std::vector<Word> rels = tangle_relators(d1.tangles[t]);
    std::vector<Word> shifted = relators_shifted(d2.tangles[t], 2 * b1);
    rels.insert(rels.end(), shifted.begin(), shifted.end());
    for (Word& r : rels) r = substitute(r, Q, {{P, -1}});

    int pick = -1;
    for (int i = 0; i < int(rels.size()); ++i)
      if (occurrences(rels[i], P) == 1 &&
          (pick == -1 || rels[i].size() < rels[pick].size()))
        pick = i;
    if (pick == -1)
      throw std::runtime_error("sum: cannot eliminate the merged meridian in tangle " +
                               std::to_string(t));
    const Word& r = rels[pick];
    int at = 0;
    while (r[at].gen != P) ++at;
    // r = u x_P^e v = 1  =>  x_P = (v u)^{-e}
    Word vu(r.begin() + at + 1, r.end());
    vu.insert(vu.end(), r.begin(), r.begin() + at);
    Word image = r[at].sign > 0 ? inverse_word(vu) : vu;
    std::vector<Word> reduced;
    for (int i = 0; i < int(rels.size()); ++i)
      if (i != pick) reduced.push_back(substitute(rels[i], P, image));

    // Renumber: drop the two merged punctures P and Q.
    for (Word& w : reduced)
      for (Letter& l : w)
        l.gen = l.gen < P ? l.gen : l.gen - 2;
    out.tangles[t] = RelatorTangle(out.bridges, std::move(reduced));
  }
  out.label = d1.label + " # " + d2.label;
  return out;
}

FourPlaneDiagram mutual_braid_move(const FourPlaneDiagram& d, const BraidWord& w) {
  check_structure(d);
  if (w.strand_count != 2 * d.bridges)
    throw std::invalid_argument("mutual_braid_move: braid strand count != 2b");
  FourPlaneDiagram out;
  out.bridges = d.bridges;
  out.label = d.label;
  for (int t = 0; t < 4; ++t) {
    if (const auto* plat = std::get_if<TrivialTangle>(&d.tangles[t])) {
      std::vector<std::pair<int, int>> letters = plat->braid.letters;
      letters.insert(letters.end(), w.letters.begin(), w.letters.end());
      out.tangles[t] = TrivialTangle(d.bridges, BraidWord(w.strand_count, std::move(letters)));
    } else {
      std::vector<Word> rels;
      for (const Word& r : tangle_relators(d.tangles[t]))
        rels.push_back(free_reduce(artin_image(w, r)));
      out.tangles[t] = RelatorTangle(d.bridges, std::move(rels));
    }
  }
  return out;
}

PermutationRep transport_rep(const PermutationRep& rho, const BraidWord& w) {
  if (w.strand_count != rho.punctures())
    throw std::invalid_argument("transport_rep: braid strand count != punctures");
  BraidWord winv = w.inverse();
  std::vector<Permutation> images;
  for (int i = 0; i < rho.punctures(); ++i)
    images.push_back(rho.of_word(artin_image(winv, {{i, 1}})));
  return PermutationRep(rho.sheets, std::move(images));
}

}  // namespace q4d
