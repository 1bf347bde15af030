// q4dc: command-line front end for 4-plane diagrams — validation, central
// surface, Heegaard data, group presentations, branched covers, generators
// and moves. Exit codes: 0 success, 1 validation/computation failure,
// 2 usage or parse error.
#include <CLI11.hpp>
#include <json.hpp>

#include <q4d/constructions.hpp>
#include <q4d/cover.hpp>
#include <q4d/heegaard.hpp>
#include <q4d/io.hpp>

#include <fstream>
#include <iostream>

using namespace q4d;
using json = nlohmann::ordered_json;

namespace {

json ab_json(const AbelianGroup& g) {
  json t = json::array();
  for (const Int& x : g.torsion) t.push_back(x.get_si());
  return json::array({g.free_rank, t});
}

json mat_json(const IntMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).get_si());
    rows.push_back(r);
  }
  return rows;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int cmd_validate(const std::string& file, bool as_json, bool tietze) {
  FourPlaneDiagram d = load_diagram(file);
  ValidationReport rep = validate_diagram(d, tietze);
  if (as_json) {
    json j;
    j["command"] = "validate";
    j["bridges"] = d.bridges;
    j["structural_ok"] = rep.structural_ok;
    json pairs = json::array();
    for (const PairCheck& p : rep.pairs) {
      json e;
      e["pair"] = json::array({p.i, p.j});
      e["components"] = p.components;
      e["link_abelianization"] = ab_json(p.link_abelianization);
      if (p.tietze_free) e["tietze_free"] = *p.tietze_free;
      e["pass"] = p.pass;
      pairs.push_back(e);
    }
    j["pairs"] = pairs;
    json triples = json::array();
    for (const TripleCheck& t : rep.triples) {
      json e;
      e["triple"] = json::array({t.triple[0], t.triple[1], t.triple[2]});
      e["chi"] = t.chi;
      e["components"] = t.components;
      e["pass"] = t.pass;
      triples.push_back(e);
    }
    j["triples"] = triples;
    j["euler_identity"] = rep.euler_identity;
    j["euler_ok"] = rep.euler_ok;
    j["pass"] = rep.pass;
    emit(j);
  } else {
    for (const PairCheck& p : rep.pairs)
      std::cout << "pair (" << p.i + 1 << "," << p.j + 1 << "): " << p.components
                << " component(s), link H1 " << p.link_abelianization.str() << " -> "
                << (p.pass ? "ok" : "FAIL") << "\n";
    for (const TripleCheck& t : rep.triples)
      std::cout << "triple (" << t.triple[0] + 1 << "," << t.triple[1] + 1 << ","
                << t.triple[2] + 1 << "): chi " << t.chi << ", " << t.components
                << " component(s) -> " << (t.pass ? "ok" : "FAIL") << "\n";
    std::cout << "euler identity: " << rep.euler_identity
              << (rep.euler_ok ? " -> ok" : " -> FAIL") << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_surface(const std::string& file, bool as_json) {
  SurfaceComplex sc = build_surface_complex(load_diagram(file));
  if (as_json) {
    json j;
    j["command"] = "surface";
    j["bridges"] = sc.bridges;
    j["chi"] = sc.chi;
    j["components"] = sc.components;
    j["orientable"] = sc.orientable;
    if (sc.orientable)
      j["genus"] = sc.genus;
    else
      j["crosscaps"] = sc.crosscaps;
    json c = json::array();
    for (int i = 0; i < 4; ++i)
      for (int k = i + 1; k < 4; ++k)
        c.push_back(json::array({i, k, sc.c[i][k]}));
    j["c"] = c;
    j["s"] = json::array({sc.s[0], sc.s[1], sc.s[2], sc.s[3]});
    emit(j);
  } else {
    std::cout << "chi: " << sc.chi << "\ncomponents: " << sc.components
              << "\norientable: " << (sc.orientable ? "yes" : "no") << "\n";
    if (sc.orientable)
      std::cout << "genus: " << sc.genus << "\n";
    else
      std::cout << "crosscaps: " << sc.crosscaps << "\n";
    for (int i = 0; i < 4; ++i)
      for (int k = i + 1; k < 4; ++k)
        std::cout << "c_" << i + 1 << k + 1 << ": " << sc.c[i][k] << "\n";
    for (int i = 0; i < 4; ++i) std::cout << "s_" << i + 1 << ": " << sc.s[i] << "\n";
  }
  return 0;
}

int cmd_heegaard(const std::string& file, bool as_json) {
  FourPlaneDiagram d = load_diagram(file);
  ExtendedHeegaardDiagram h = extract_heegaard(d);
  AbelianGroup h1 = h1_from_heegaard(h);
  if (as_json) {
    json j;
    j["command"] = "heegaard";
    j["h1"] = ab_json(h1);
    j["alpha_count"] = h.alpha.size();
    j["beta_count"] = h.beta.size();
    j["q_mod2"] = h.q_mod2;
    j["q"] = mat_json(h.q);
    emit(j);
  } else {
    std::cout << "H1(Y): " << h1.str() << "\n";
    std::cout << "alpha curves: " << h.alpha.size() << "\nbeta curves: " << h.beta.size()
              << "\n";
    std::cout << "Q" << (h.q_mod2 ? " (mod 2)" : "") << ": " << h.q.str() << "\n";
  }
  return 0;
}

int cmd_presentations(const std::string& file, bool as_json, bool simplify) {
  FourPlaneDiagram d = load_diagram(file);
  std::array<FPGroup, 4> groups;
  for (int t = 0; t < 4; ++t) {
    groups[t] = tangle_group(d.tangles[t]);
    if (simplify) groups[t] = tietze_simplify(groups[t]);
  }
  if (as_json) {
    json j;
    j["command"] = "presentations";
    json tg = json::array();
    for (const FPGroup& g : groups) {
      json e;
      e["generators"] = g.ngens;
      json rels = json::array();
      for (const Word& r : g.relators)
        rels.push_back(word_str(r, g.names.empty() ? nullptr : &g.names));
      e["relators"] = rels;
      tg.push_back(e);
    }
    j["tangle_groups"] = tg;
    emit(j);
  } else {
    for (int t = 0; t < 4; ++t)
      std::cout << "tangle " << t + 1 << ":\n" << groups[t].str() << "\n";
  }
  return 0;
}

TreePolicy tree_policy(const std::string& s) {
  if (s == "bfs") return TreePolicy::bfs_min_gen;
  if (s == "dfs") return TreePolicy::dfs_max_gen;
  throw CLI::ValidationError("--tree must be bfs or dfs");
}

int cmd_cover(const std::string& file, const std::string& rho_file, bool as_json,
              const std::string& tree) {
  FourPlaneDiagram d = load_diagram(file);
  PermutationRep rho = load_rho(rho_file);
  if (!check_extends(rho, d)) {
    std::cerr << "error: the representation does not extend over the four sectors\n";
    return 1;
  }
  LagrangianData lag = lagrangians(d, rho, tree_policy(tree));
  std::vector<AbelianGroup> h =
      chain_homology(quadrisection_complex(lag.l, lag.genus));
  if (as_json) {
    json j;
    j["command"] = "cover";
    j["sheets"] = rho.sheets;
    j["genus"] = lag.genus;
    json ls = json::array();
    for (const Lattice& l : lag.l) ls.push_back(mat_json(l.basis()));
    j["lagrangians"] = ls;
    json hs = json::array();
    for (const AbelianGroup& g : h) hs.push_back(ab_json(g));
    j["H"] = hs;
    emit(j);
  } else {
    std::cout << "cover genus: " << lag.genus << "\n";
    for (int i = 0; i < 4; ++i)
      std::cout << "L" << i + 1 << " rank: " << lag.l[i].rank() << "\n";
    for (size_t i = 0; i < h.size(); ++i)
      std::cout << "H" << i << ": " << h[i].str() << "\n";
  }
  return 0;
}

int cmd_rh(const std::string& file, const std::string& rho_file, bool as_json) {
  FourPlaneDiagram d = load_diagram(file);
  PermutationRep rho = load_rho(rho_file);
  long g = riemann_hurwitz_genus(d.bridges, rho);
  // Independent computation: half the rank of H1 of the covering surface.
  LiftedPresentation lp = lift_surface_group(d.bridges, rho);
  AbelianGroup ab = abelianization(lp.group);
  long half = ab.free_rank / 2;
  bool agree = ab.torsion.empty() && ab.free_rank == 2 * g;
  if (as_json) {
    json j;
    j["command"] = "rh";
    j["sheets"] = rho.sheets;
    j["genus"] = g;
    j["half_h1_rank"] = half;
    j["agree"] = agree;
    emit(j);
  } else {
    std::cout << "genus: " << g << "\n";
    std::cout << "half H1 rank of lifted surface group: " << half << "\n";
    std::cout << (agree ? "agree" : "DISAGREE") << "\n";
  }
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with 4-plane diagrams of 3-manifolds in the 5-sphere"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable single-line JSON output");

  std::string file, rho_file, out, word, tree = "bfs", mode = "distant", label;
  bool tietze = false, simplify = false;
  int strands = 0, p = 0;

  auto* validate = app.add_subcommand("validate", "run the validity checks");
  validate->add_option("file", file)->required();
  validate->add_flag("--tietze", tietze, "also run the Tietze free-presentation heuristic");

  auto* surface = app.add_subcommand("surface", "central surface invariants");
  surface->add_option("file", file)->required();

  auto* heegaard = app.add_subcommand("heegaard", "extended Heegaard diagram and H1");
  heegaard->add_option("file", file)->required();

  auto* pres = app.add_subcommand("presentations", "export the tangle group presentations");
  pres->add_option("file", file)->required();
  pres->add_flag("--simplify", simplify, "Tietze-simplify before printing");

  auto* cover = app.add_subcommand("cover", "branched cover homology H0..H5");
  cover->add_option("file", file)->required();
  cover->add_option("--rho", rho_file, "representation file")->required();
  cover->add_option("--tree", tree, "spanning tree policy: bfs|dfs");

  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz genus of the cover surface");
  rh->add_option("file", file)->required();
  rh->add_option("--rho", rho_file, "representation file")->required();

  auto* gen = app.add_subcommand("gen", "generate diagrams");
  gen->require_subcommand(1);
  auto* gen_spun = gen->add_subcommand("spun", "spun knot from a plat braid");
  gen_spun->add_option("-w,--word", word, "plat braid, e.g. \"s2 s2 s2\"")->required();
  gen_spun->add_option("-n,--strands", strands, "strand count (even)")->required();
  gen_spun->add_option("-o,--out", out, "output file (default stdout)");
  auto* gen_lens = gen->add_subcommand("lens", "lens space L(p,1)");
  gen_lens->add_option("-p", p, "p >= 1")->required();
  gen_lens->add_option("-o,--out", out, "output file (default stdout)");
  auto* gen_sum = gen->add_subcommand("sum", "sum of two diagrams");
  std::vector<std::string> sum_files;
  gen_sum->add_option("files", sum_files, "two diagram files")->expected(2);
  gen_sum->add_option("--mode", mode, "connected|distant (default distant)");
  gen_sum->add_option("-o,--out", out, "output file (default stdout)");

  for (CLI::App* sc : {validate, surface, heegaard, pres, cover, rh})
    sc->add_flag("--json", as_json, "machine-readable single-line JSON output");

  auto* move = app.add_subcommand("move", "diagram-preserving moves");
  move->require_subcommand(1);
  auto* move_braid = move->add_subcommand("braid", "mutual braid move");
  move_braid->add_option("file", file)->required();
  move_braid->add_option("-w,--word", word, "2b-strand braid, e.g. \"s1 s2'\"")->required();
  move_braid->add_option("-o,--out", out, "output file (default stdout)");
  move_braid->add_option("--rho", rho_file, "representation to transport");
  std::string rho_out;
  move_braid->add_option("--rho-out", rho_out, "transported representation output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(file, as_json, tietze);
    if (*surface) return cmd_surface(file, as_json);
    if (*heegaard) return cmd_heegaard(file, as_json);
    if (*pres) return cmd_presentations(file, as_json, simplify);
    if (*cover) return cmd_cover(file, rho_file, as_json, tree);
    if (*rh) return cmd_rh(file, rho_file, as_json);
    if (*gen_spun) {
      if (strands < 2 || strands % 2 != 0)
        throw ParseError("--strands must be even and >= 2");
      write_out(out, serialize_diagram(spun_diagram(parse_braid(word, strands))));
      return 0;
    }
    if (*gen_lens) {
      write_out(out, serialize_diagram(lens_diagram(p)));
      return 0;
    }
    if (*gen_sum) {
      if (mode != "connected" && mode != "distant")
        throw ParseError("--mode must be connected or distant");
      FourPlaneDiagram d = sum(load_diagram(sum_files[0]), load_diagram(sum_files[1]),
                               mode == "connected" ? SumMode::connected : SumMode::distant);
      write_out(out, serialize_diagram(d));
      return 0;
    }
    if (*move_braid) {
      FourPlaneDiagram d = load_diagram(file);
      BraidWord w = parse_braid(word, 2 * d.bridges);
      write_out(out, serialize_diagram(mutual_braid_move(d, w)));
      if (!rho_file.empty()) {
        PermutationRep rho = transport_rep(load_rho(rho_file), w);
        if (rho_out.empty())
          std::cout << serialize_rho(rho);
        else
          write_out(rho_out, serialize_rho(rho));
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
