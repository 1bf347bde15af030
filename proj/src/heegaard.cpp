#include <q4d/heegaard.hpp>

#include <numeric>
#include <stdexcept>

namespace q4d {

namespace {

// Alternating cycles of two matchings, with their 1-chains.
std::vector<HeegaardCurve> multicurve(const SurfaceComplex& sc, int ta, int tb) {
  const Permutation &ma = sc.matchings[ta], &mb = sc.matchings[tb];
  const int n = sc.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<HeegaardCurve> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    HeegaardCurve c;
    c.cycle.assign(sc.edge_count(), 0);
    int cur = start, step = 0;
    do {
      seen[cur] = true;
      c.punctures.push_back(cur);
      int t = step % 2 == 0 ? ta : tb;
      int next = sc.matchings[t](cur);
      c.cycle[sc.edge_index(t, cur)] += cur < next ? 1 : -1;
      cur = next;
      ++step;
    } while (cur != start || step % 2 == 1);
    (void)ma;
    (void)mb;
    out.push_back(std::move(c));
  }
  return out;
}

// Sign of a puncture from the oriented corner of its (T1,T2)-pair face:
// the reflection parity of the vertex's edge fan. Well defined up to a
// global sign per surface component.
std::vector<int> puncture_signs(const SurfaceComplex& sc) {
  std::vector<int> eps(sc.vertex_count(), 1);
  for (const Face& f : sc.faces) {
    if (f.pair != 0) continue;
    for (size_t k = 0; k < f.verts.size(); ++k)
      eps[f.verts[k]] = f.orient * (k % 2 == 0 ? 1 : -1);
  }
  return eps;
}

}  // namespace

ExtendedHeegaardDiagram extract_heegaard(const FourPlaneDiagram& d,
                                         std::array<int, 4> perm) {
  {
    std::array<int, 4> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3})
      throw std::invalid_argument("extract_heegaard: perm must permute 0..3");
  }
  ExtendedHeegaardDiagram h;
  h.surface = build_surface_complex(d);
  h.perm = perm;
  h.alpha = multicurve(h.surface, perm[0], perm[2]);
  h.beta = multicurve(h.surface, perm[1], perm[3]);

  // Each puncture lies on exactly one component of each multicurve.
  const int n = h.surface.vertex_count();
  std::vector<int> on_alpha(n, -1), on_beta(n, -1);
  for (int r = 0; r < int(h.alpha.size()); ++r)
    for (int p : h.alpha[r].punctures) on_alpha[p] = r;
  for (int s = 0; s < int(h.beta.size()); ++s)
    for (int p : h.beta[s].punctures) on_beta[p] = s;

  h.q_mod2 = !h.surface.orientable;
  h.q = IntMat(int(h.alpha.size()), int(h.beta.size()));
  std::vector<int> eps = puncture_signs(h.surface);
  for (int p = 0; p < n; ++p)
    h.q.at(on_alpha[p], on_beta[p]) += h.q_mod2 ? 1 : eps[p];
  if (h.q_mod2)
    for (int r = 0; r < h.q.rows(); ++r)
      for (int s = 0; s < h.q.cols(); ++s)
        h.q.at(r, s) = h.q.at(r, s) % 2;
  return h;
}

AbelianGroup h1_from_heegaard(const ExtendedHeegaardDiagram& h) {
  const SurfaceComplex& sc = h.surface;
  Lattice z1 = kernel_lattice(sc.boundary1());
  IntMat d2 = sc.boundary2();
  int extra = int(h.alpha.size() + h.beta.size());
  IntMat rel(sc.edge_count(), d2.cols() + extra);
  for (int i = 0; i < sc.edge_count(); ++i)
    for (int j = 0; j < d2.cols(); ++j) rel.at(i, j) = d2.at(i, j);
  int col = d2.cols();
  for (const auto* curves : {&h.alpha, &h.beta})
    for (const HeegaardCurve& c : *curves) {
      for (int i = 0; i < sc.edge_count(); ++i) rel.at(i, col) = c.cycle[i];
      ++col;
    }
  auto coords = solve_in_span(z1.basis(), rel);
  if (!coords) throw std::logic_error("h1: relation chain is not a cycle");
  return cokernel_invariants(*coords);
}

AbelianGroup h1_3manifold(const FourPlaneDiagram& d) {
  return h1_from_heegaard(extract_heegaard(d));
}

}  // namespace q4d
