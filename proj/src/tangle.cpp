#include <q4d/tangle.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace q4d {

namespace {

// Union-find over the punctures; merges along the given matchings.
struct Orbits {
  std::vector<int> parent;
  explicit Orbits(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  void add_matching(const Permutation& m) {
    for (int p = 0; p < m.degree(); ++p) unite(p, m(p));
  }
  int count() {
    int c = 0;
    for (int i = 0; i < int(parent.size()); ++i) c += find(i) == i;
    return c;
  }
};

Permutation caps_matching(int b) {
  std::vector<int> img(2 * b);
  for (int k = 0; k < b; ++k) {
    img[2 * k] = 2 * k + 1;
    img[2 * k + 1] = 2 * k;
  }
  return Permutation(img);
}

}  // namespace

TrivialTangle::TrivialTangle(int b, BraidWord w) : bridges(b), braid(std::move(w)) {
  if (bridges < 1) throw std::invalid_argument("tangle: bridges >= 1 required");
  if (braid.strand_count != 2 * bridges)
    throw std::invalid_argument("tangle: braid strand count != 2b");
}

RelatorTangle::RelatorTangle(int b, std::vector<Word> rels)
    : bridges(b), relators(std::move(rels)) {
  if (bridges < 1) throw std::invalid_argument("tangle: bridges >= 1 required");
  if (int(relators.size()) != bridges)
    throw std::invalid_argument("relator tangle: need exactly b relators");
  for (const Word& r : relators)
    for (const Letter& l : r)
      if (l.gen < 0 || l.gen >= 2 * bridges)
        throw std::invalid_argument("relator tangle: generator index out of range");
}

int tangle_bridges(const Tangle& t) {
  return std::visit([](const auto& x) { return x.bridges; }, t);
}

Permutation tangle_matching(const Tangle& t) {
  if (const auto* p = std::get_if<TrivialTangle>(&t)) {
    Permutation sigma = p->braid.underlying_permutation();
    return sigma.inverse().then(caps_matching(p->bridges)).then(sigma);
  }
  const auto& rt = std::get<RelatorTangle>(t);
  std::vector<int> img(2 * rt.bridges, -1);
  for (const Word& r : rt.relators) {
    std::vector<Int> e(2 * rt.bridges);
    for (const Letter& l : r) e[l.gen] += l.sign;
    std::vector<int> ends;
    for (int i = 0; i < int(e.size()); ++i)
      if (e[i] != 0) {
        if (abs(e[i]) != 1)
          throw std::invalid_argument("relator tangle: arc relator exponent sum not +-1");
        ends.push_back(i);
      }
    if (ends.size() != 2)
      throw std::invalid_argument("relator tangle: relator does not join two punctures");
    if (img[ends[0]] != -1 || img[ends[1]] != -1)
      throw std::invalid_argument("relator tangle: puncture on two arcs");
    img[ends[0]] = ends[1];
    img[ends[1]] = ends[0];
  }
  for (int v : img)
    if (v == -1) throw std::invalid_argument("relator tangle: uncovered puncture");
  return Permutation(img);
}

std::vector<Word> tangle_relators(const Tangle& t) {
  if (const auto* p = std::get_if<TrivialTangle>(&t)) {
    std::vector<Word> out;
    for (int k = 0; k < p->bridges; ++k)
      out.push_back(artin_image(p->braid, {{2 * k, 1}, {2 * k + 1, 1}}));
    return out;
  }
  return std::get<RelatorTangle>(t).relators;
}

std::vector<Word> mirror_relators(const Tangle& t) {
  std::vector<Word> out = tangle_relators(t);
  for (Word& r : out) std::reverse(r.begin(), r.end());
  return out;
}

void check_structure(const FourPlaneDiagram& d) {
  if (d.bridges < 1) throw std::invalid_argument("diagram: bridges >= 1 required");
  for (const Tangle& t : d.tangles) {
    if (tangle_bridges(t) != d.bridges)
      throw std::invalid_argument("diagram: tangle bridge number mismatch");
    tangle_matching(t);  // throws on malformed relator tangles
  }
}

FPGroup tangle_group(const Tangle& t) {
  FPGroup g;
  g.ngens = 2 * tangle_bridges(t);
  g.relators = tangle_relators(t);
  if (std::holds_alternative<RelatorTangle>(t)) {
    AbelianGroup a = abelianization(g);
    if (a.free_rank != tangle_bridges(t) || !a.torsion.empty())
      throw std::invalid_argument("relator tangle: abelianization is not Z^b");
  }
  return g;
}

FPGroup link_group(const Tangle& ti, const Tangle& tj) {
  if (tangle_bridges(ti) != tangle_bridges(tj))
    throw std::invalid_argument("link_group: bridge number mismatch");
  FPGroup g;
  g.ngens = 2 * tangle_bridges(ti);
  g.relators = tangle_relators(ti);
  std::vector<Word> m = mirror_relators(tj);
  g.relators.insert(g.relators.end(), m.begin(), m.end());
  return g;
}

int pair_components(const Tangle& ti, const Tangle& tj) {
  if (tangle_bridges(ti) != tangle_bridges(tj))
    throw std::invalid_argument("pair_components: bridge number mismatch");
  Orbits o(2 * tangle_bridges(ti));
  o.add_matching(tangle_matching(ti));
  o.add_matching(tangle_matching(tj));
  return o.count();
}

int SurfaceComplex::edge_index(int t, int p) const {
  int lo = std::min(p, matchings[t](p));
  int local = 0;
  for (int q = 0; q < lo; ++q) local += q < matchings[t](q);
  return t * bridges + local;
}

IntMat SurfaceComplex::boundary1() const {
  IntMat d(vertex_count(), edge_count());
  for (int t = 0; t < 4; ++t)
    for (int p = 0; p < vertex_count(); ++p) {
      int q = matchings[t](p);
      if (p < q) {
        int e = edge_index(t, p);
        d.at(q, e) += 1;
        d.at(p, e) -= 1;
      }
    }
  return d;
}

IntMat SurfaceComplex::boundary2() const {
  IntMat d(edge_count(), int(faces.size()));
  for (int f = 0; f < int(faces.size()); ++f) {
    const Face& face = faces[f];
    int len = int(face.verts.size());
    for (int k = 0; k < len; ++k) {
      int t = (face.pair + k % 2) % 4;
      int a = face.verts[k], b = face.verts[(k + 1) % len];
      d.at(edge_index(t, a), f) += face.orient * (a < b ? 1 : -1);
    }
  }
  return d;
}

SurfaceComplex build_surface_complex(const FourPlaneDiagram& d) {
  check_structure(d);
  SurfaceComplex sc;
  sc.bridges = d.bridges;
  for (int t = 0; t < 4; ++t) sc.matchings[t] = tangle_matching(d.tangles[t]);
  const int n = 2 * d.bridges;

  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Orbits o(n);
      o.add_matching(sc.matchings[i]);
      o.add_matching(sc.matchings[j]);
      sc.c[i][j] = sc.c[j][i] = o.count();
    }
  for (int i = 0; i < 4; ++i) {
    Orbits o(n);
    for (int t = 0; t < 4; ++t)
      if (t != i) o.add_matching(sc.matchings[t]);
    sc.s[i] = o.count();
  }
  {
    Orbits o(n);
    for (int t = 0; t < 4; ++t) o.add_matching(sc.matchings[t]);
    sc.components = o.count();
  }

  // Faces: alternating cycles of each consecutive matching pair.
  for (int pair = 0; pair < 4; ++pair) {
    const Permutation &mi = sc.matchings[pair], &mj = sc.matchings[(pair + 1) % 4];
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      Face f;
      f.pair = pair;
      int cur = start, step = 0;
      do {
        seen[cur] = true;
        f.verts.push_back(cur);
        cur = (step % 2 == 0 ? mi : mj)(cur);
        ++step;
      } while (cur != start || step % 2 == 1);
      sc.faces.push_back(std::move(f));
    }
  }
  sc.chi = 2 * d.bridges - 4 * d.bridges + int(sc.faces.size());

  // Orientation propagation: every edge lies in exactly two face corners;
  // a consistent orientation traverses it in opposite directions.
  struct Inc {
    int face, dir;
  };
  std::vector<std::vector<Inc>> inc(sc.edge_count());
  for (int f = 0; f < int(sc.faces.size()); ++f) {
    const Face& face = sc.faces[f];
    int len = int(face.verts.size());
    for (int k = 0; k < len; ++k) {
      int t = (face.pair + k % 2) % 4;
      int a = face.verts[k], b = face.verts[(k + 1) % len];
      inc[sc.edge_index(t, a)].push_back({f, a < b ? 1 : -1});
    }
  }
  sc.orientable = true;
  std::vector<int> orient(sc.faces.size(), 0);
  for (int seed = 0; seed < int(sc.faces.size()); ++seed) {
    if (orient[seed] != 0) continue;
    orient[seed] = 1;
    std::vector<int> queue{seed};
    while (!queue.empty()) {
      int f = queue.back();
      queue.pop_back();
      const Face& face = sc.faces[f];
      int len = int(face.verts.size());
      for (int k = 0; k < len; ++k) {
        int t = (face.pair + k % 2) % 4;
        int a = face.verts[k], b = face.verts[(k + 1) % len];
        int e = sc.edge_index(t, a);
        int dir = a < b ? 1 : -1;
        for (const Inc& other : inc[e]) {
          if (other.face == f && other.dir == dir) continue;  // this corner
          int want = -orient[f] * dir * other.dir;
          if (orient[other.face] == 0) {
            orient[other.face] = want;
            queue.push_back(other.face);
          } else if (orient[other.face] != want) {
            sc.orientable = false;
          }
        }
      }
    }
  }
  for (int f = 0; f < int(sc.faces.size()); ++f) sc.faces[f].orient = orient[f];

  if (sc.orientable)
    sc.genus = (2 * sc.components - sc.chi) / 2;
  else
    sc.crosscaps = 2 * sc.components - sc.chi;
  return sc;
}

ValidationReport validate_diagram(const FourPlaneDiagram& d, bool run_tietze) {
  ValidationReport rep;
  try {
    check_structure(d);
    rep.structural_ok = true;
  } catch (const std::exception& e) {
    rep.structural_error = e.what();
    return rep;
  }
  SurfaceComplex sc = build_surface_complex(d);
  const int b = d.bridges;

  bool all = true;
  for (int p = 0; p < 4; ++p) {
    PairCheck pc;
    pc.i = p;
    pc.j = (p + 1) % 4;
    pc.components = sc.c[pc.i][pc.j];
    FPGroup lg = link_group(d.tangles[pc.i], d.tangles[pc.j]);
    pc.link_abelianization = abelianization(lg);
    pc.pass = pc.link_abelianization.free_rank == pc.components &&
              pc.link_abelianization.torsion.empty();
    if (run_tietze) {
      FPGroup s = tietze_simplify(lg);
      pc.tietze_free = s.relators.empty() && s.ngens == pc.components;
    }
    all &= pc.pass;
    rep.pairs.push_back(std::move(pc));
  }

  for (int omit = 3; omit >= 0; --omit) {
    TripleCheck tc;
    int pos = 0;
    for (int t = 0; t < 4; ++t)
      if (t != omit) tc.triple[pos++] = t;
    auto [i, j, k] = tc.triple;
    tc.chi = 2 * b - 3 * b + sc.c[i][j] + sc.c[j][k] + sc.c[i][k];
    Orbits o(2 * b);
    o.add_matching(sc.matchings[i]);
    o.add_matching(sc.matchings[j]);
    o.add_matching(sc.matchings[k]);
    tc.components = o.count();
    tc.pass = tc.chi == 2 * tc.components;
    all &= tc.pass;
    rep.triples.push_back(tc);
  }

  long sum_c = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sum_c += sc.c[i][j];
  long sum_s = sc.s[0] + sc.s[1] + sc.s[2] + sc.s[3];
  rep.euler_identity = 2L * b - 4L * b + sum_c - sum_s;
  rep.euler_ok = rep.euler_identity == 0;
  all &= rep.euler_ok;

  rep.pass = all;
  return rep;
}

}  // namespace q4d
