#include <q4d/cover.hpp>

#include <algorithm>
#include <stdexcept>

namespace q4d {

PermutationRep::PermutationRep(int n, std::vector<Permutation> imgs)
    : sheets(n), images(std::move(imgs)) {
  if (n < 1) throw std::invalid_argument("rep: sheets >= 1 required");
  if (images.empty() || images.size() % 2 != 0)
    throw std::invalid_argument("rep: need an even number of puncture images");
  Permutation prod = Permutation::identity(n);
  for (const Permutation& p : images) {
    if (p.degree() != n) throw std::invalid_argument("rep: image degree != sheets");
    prod = prod.then(p);
  }
  sphere_ok = prod.is_identity();
}

bool PermutationRep::transitive() const {
  std::vector<int> root(sheets);
  for (int i = 0; i < sheets; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const Permutation& p : images)
    for (int i = 0; i < sheets; ++i) root[find(i)] = find(p(i));
  int orbits = 0;
  for (int i = 0; i < sheets; ++i) orbits += find(i) == i;
  return orbits == 1;
}

Permutation PermutationRep::of_word(const Word& w) const {
  Permutation acc = Permutation::identity(sheets);
  for (const Letter& l : w) {
    const Permutation& p = images.at(l.gen);
    acc = acc.then(l.sign > 0 ? p : p.inverse());
  }
  return acc;
}

int lifted_gen(int i, int sheet, int n) { return i * n + (sheet - 1); }

std::string lifted_gen_name(int i, int sheet) {
  return "x" + std::to_string(i) + "^" + std::to_string(sheet);
}

Word lift_relator(const Word& r, const PermutationRep& rho, int start_sheet) {
  if (start_sheet < 1 || start_sheet > rho.sheets)
    throw std::invalid_argument("lift_relator: bad start sheet");
  if (!rho.of_word(r).is_identity())
    throw std::invalid_argument("lift_relator: rho(r) != id, lift does not close");
  const int n = rho.sheets;
  Word out;
  int s = start_sheet - 1;  // 0-based sheet
  for (const Letter& l : r) {
    const Permutation& p = rho.images.at(l.gen);
    if (l.sign > 0) {
      out.push_back({lifted_gen(l.gen, s + 1, n), 1});
      s = p(s);
    } else {
      s = p.inverse()(s);
      out.push_back({lifted_gen(l.gen, s + 1, n), -1});
    }
  }
  return out;
}

LiftedPresentation lift_surface_group(int b, const PermutationRep& rho,
                                      TreePolicy policy) {
  if (rho.punctures() != 2 * b)
    throw std::invalid_argument("lift: rho puncture count != 2b");
  if (!rho.sphere_ok)
    throw std::invalid_argument("lift: rho does not kill the sphere relator");
  if (!rho.transitive())
    throw std::invalid_argument("lift: rho is not transitive (cover disconnected)");
  const int n = rho.sheets;
  LiftedPresentation lp;
  lp.sheets = n;
  lp.punctures = 2 * b;

  // Spanning tree over sheets; each tree edge contributes one claw relator
  // x_i^j (the generator carried by the traversed lift of x_i).
  std::vector<bool> visited(n, false);
  visited[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    int j;
    if (policy == TreePolicy::bfs_min_gen) {
      j = frontier.front();
      frontier.erase(frontier.begin());
    } else {
      j = frontier.back();
      frontier.pop_back();
    }
    auto scan = [&](int i) {
      int k = rho.images[i](j);
      if (!visited[k]) {
        visited[k] = true;
        lp.claw.push_back({{lifted_gen(i, j + 1, n), 1}});
        frontier.push_back(k);
      }
    };
    if (policy == TreePolicy::bfs_min_gen)
      for (int i = 0; i < 2 * b; ++i) scan(i);
    else
      for (int i = 2 * b - 1; i >= 0; --i) scan(i);
  }

  Word sphere;
  for (int i = 0; i < 2 * b; ++i) sphere.push_back({i, 1});
  for (int s = 1; s <= n; ++s)
    lp.sphere_lifts.push_back(lift_relator(sphere, rho, s));

  for (int i = 0; i < 2 * b; ++i)
    for (const std::vector<int>& cyc : rho.images[i].cycles()) {
      Word w;
      for (int j : cyc) w.push_back({lifted_gen(i, j + 1, n), 1});
      lp.branch.push_back(std::move(w));
    }

  lp.group.ngens = 2 * b * n;
  for (int i = 0; i < 2 * b; ++i)
    for (int s = 1; s <= n; ++s) lp.group.names.push_back(lifted_gen_name(i, s));
  for (const auto* rels : {&lp.claw, &lp.sphere_lifts, &lp.branch})
    lp.group.relators.insert(lp.group.relators.end(), rels->begin(), rels->end());
  return lp;
}

bool check_extends(const PermutationRep& rho, const FourPlaneDiagram& d) {
  if (!rho.sphere_ok) return false;
  if (rho.punctures() != 2 * d.bridges) return false;
  Word sphere;
  for (int i = 0; i < 2 * d.bridges; ++i) sphere.push_back({i, 1});
  if (!rho.of_word(sphere).is_identity()) return false;
  for (const Tangle& t : d.tangles)
    for (const Word& r : tangle_relators(t))
      if (!rho.of_word(r).is_identity()) return false;
  return true;
}

long riemann_hurwitz_genus(int b, const PermutationRep& rho) {
  if (rho.punctures() != 2 * b)
    throw std::invalid_argument("riemann_hurwitz: rho puncture count != 2b");
  if (!rho.transitive())
    throw std::invalid_argument("riemann_hurwitz: rho is not transitive");
  const int n = rho.sheets;
  long sum = 0;
  for (const Permutation& p : rho.images) sum += n - cycle_count(p);
  if (sum % 2 != 0)
    throw std::invalid_argument("riemann_hurwitz: odd branching total (invalid rho)");
  long g = 1 - n + sum / 2;
  if (g < 0) throw std::invalid_argument("riemann_hurwitz: negative genus (invalid rho)");
  return g;
}

LagrangianData lagrangians(const FourPlaneDiagram& d, const PermutationRep& rho,
                           TreePolicy policy) {
  check_structure(d);
  if (!check_extends(rho, d))
    throw std::invalid_argument("lagrangians: rho does not extend over the sectors");
  LagrangianData out;
  out.lifted = lift_surface_group(d.bridges, rho, policy);
  out.genus = riemann_hurwitz_genus(d.bridges, rho);
  out.coords = abelianization_coords(out.lifted.group);
  if (!out.coords.torsion_free)
    throw std::logic_error("lagrangians: cover surface H1 has torsion");
  if (out.coords.free_rank != 2 * out.genus)
    throw std::logic_error("lagrangians: H1 rank disagrees with Riemann-Hurwitz");

  for (int mu = 0; mu < 4; ++mu) {
    IntMat classes(int(2 * out.genus),
                   int(tangle_relators(d.tangles[mu]).size()) * rho.sheets);
    int col = 0;
    for (const Word& r : tangle_relators(d.tangles[mu]))
      for (int s = 1; s <= rho.sheets; ++s)
        classes.set_col(col++, out.coords.of_word(lift_relator(r, rho, s)));
    Lattice l = column_span(int(2 * out.genus), classes);
    if (!lattice_equal(saturate(l), l))
      throw std::logic_error("lagrangians: sector relator lattice not saturated "
                             "(handlebody H1 would have torsion)");
    if (l.rank() != out.genus)
      throw std::logic_error("lagrangians: sector lattice rank != genus");
    out.l[mu] = std::move(l);
  }
  return out;
}

ChainComplex quadrisection_complex(const std::array<Lattice, 4>& l, long genus) {
  const int dim = int(2 * genus);
  for (const Lattice& li : l) {
    if (li.ambient_rank() != dim)
      throw std::invalid_argument("complex: lattice ambient rank != 2g");
    if (li.rank() != genus)
      throw std::invalid_argument("complex: lattice rank != g (not Lagrangian)");
  }

  const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::array<Lattice, 6> pair_l;
  for (int k = 0; k < 6; ++k)
    pair_l[k] = lattice_intersect(l[pairs[k].first], l[pairs[k].second]);
  auto pair_index = [&](int a, int b) {
    for (int k = 0; k < 6; ++k)
      if (pairs[k] == std::make_pair(a, b)) return k;
    throw std::logic_error("complex: bad pair");
  };
  // Summand i of C4 is the intersection over all j != i.
  std::array<Lattice, 4> triple_l;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> js{};
    int pos = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) js[pos++] = j;
    triple_l[i] = lattice_intersect(lattice_intersect(l[js[0]], l[js[1]]), l[js[2]]);
  }

  long r2 = 0, r3 = 0, r4 = 0;
  for (const Lattice& x : l) r2 += x.rank();
  for (const Lattice& x : pair_l) r3 += x.rank();
  for (const Lattice& x : triple_l) r4 += x.rank();
  std::vector<long> ranks = {1, dim, r2, r3, r4, 1};

  auto include = [](const Lattice& sub, const Lattice& target) {
    auto c = solve_in_span(target.basis(), sub.basis());
    if (!c) throw std::logic_error("complex: inclusion is not integral");
    return *c;
  };
  auto block_offset = [](auto& lats, int upto) {
    int off = 0;
    for (int k = 0; k < upto; ++k) off += lats[k].rank();
    return off;
  };
  auto paste = [](IntMat& m, const IntMat& blk, int r0, int c0, int sign) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) m.at(r0 + i, c0 + j) = sign * blk.at(i, j);
  };

  IntMat d1(1, dim);  // zero map to C0

  IntMat d2(dim, int(r2));
  {
    int c0 = 0;
    for (const Lattice& x : l) {
      paste(d2, x.basis(), 0, c0, 1);
      c0 += x.rank();
    }
  }

  IntMat d3{int(r2), int(r3)};
  for (int k = 0; k < 6; ++k) {
    auto [a, b] = pairs[k];
    int c0 = block_offset(pair_l, k);
    // Removing a (no smaller element of {a,b}) keeps sign +, removing b
    // flips it.
    paste(d3, include(pair_l[k], l[b]), block_offset(l, b), c0, 1);
    paste(d3, include(pair_l[k], l[a]), block_offset(l, a), c0, -1);
  }

  IntMat d4{int(r3), int(r4)};
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> js{};
    int pos = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) js[pos++] = j;
    int c0 = block_offset(triple_l, i);
    auto [a, b, c] = js;
    int sgn = 1;
    for (int drop : {a, b, c}) {
      std::array<int, 2> keep{};
      int kp = 0;
      for (int j : js)
        if (j != drop) keep[kp++] = j;
      int k = pair_index(keep[0], keep[1]);
      paste(d4, include(triple_l[i], pair_l[k]), block_offset(pair_l, k), c0, sgn);
      sgn = -sgn;
    }
  }

  IntMat d5(int(r4), 1);  // zero map from C5

  return ChainComplex(std::move(ranks), {d1, d2, d3, d4, d5});
}

std::vector<AbelianGroup> branched_cover_homology(const FourPlaneDiagram& d,
                                                  const PermutationRep& rho,
                                                  TreePolicy policy) {
  LagrangianData lag = lagrangians(d, rho, policy);
  return chain_homology(quadrisection_complex(lag.l, lag.genus));
}

}  // namespace q4d
