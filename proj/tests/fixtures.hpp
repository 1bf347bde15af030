// Shared test fixtures: the worked 6-bridge spun-trefoil example and small
// helpers for building words and tangles inline.
#pragma once

#include <q4d/tangle.hpp>

#include <sstream>
#include <string>

namespace fx {

// Parse "x1 x2^-1 x3" into a word.
inline q4d::Word W(const std::string& s) {
  q4d::Word w;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    q4d::Letter l;
    size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    if (base.empty() || base[0] != 'x') throw std::runtime_error("bad token " + tok);
    l.gen = std::stoi(base.substr(1));
    l.sign = 1;
    if (caret != std::string::npos) {
      int e = std::stoi(tok.substr(caret + 1));
      if (e != 1 && e != -1) throw std::runtime_error("bad exponent in " + tok);
      l.sign = e;
    }
    w.push_back(l);
  }
  return w;
}

inline q4d::RelatorTangle spun_trefoil_tangle(int i) {
  using q4d::Word;
  std::vector<std::vector<std::string>> lists = {
      {"x4 x11", "x5 x6", "x7 x8", "x9 x10", "x1 x2 x1 x2^-1 x1^-1 x3",
       "x0 x1 x2 x1 x2 x1^-1 x2^-1 x1^-1"},
      {"x3 x4", "x5 x6", "x7 x10", "x8 x9", "x1 x2 x1 x2^-1 x1^-1 x11",
       "x0 x1 x2 x1 x2 x1^-1 x2^-1 x1^-1"},
      {"x2 x5", "x3 x4", "x7 x8", "x9 x10", "x1 x6 x1 x6^-1 x1^-1 x11",
       "x0 x1 x6 x1 x6 x1^-1 x6^-1 x1^-1"},
      {"x3 x10", "x4 x9", "x5 x8", "x6 x7", "x1 x2 x1 x2^-1 x1^-1 x11",
       "x0 x1 x2 x1 x2 x1^-1 x2^-1 x1^-1"}};
  std::vector<Word> rels;
  for (const std::string& s : lists.at(i)) rels.push_back(W(s));
  return q4d::RelatorTangle(6, std::move(rels));
}

inline q4d::FourPlaneDiagram spun_trefoil_diagram() {
  q4d::FourPlaneDiagram d;
  d.bridges = 6;
  for (int i = 0; i < 4; ++i) d.tangles[i] = spun_trefoil_tangle(i);
  d.label = "spun trefoil, 6 bridges";
  return d;
}

// The trefoil as a 2-bridge plat: three positive crossings of the middle
// two strands.
inline q4d::BraidWord trefoil_plat() {
  return q4d::BraidWord(4, {{2, 1}, {2, 1}, {2, 1}});
}

inline q4d::FourPlaneDiagram one_bridge_diagram() {
  q4d::FourPlaneDiagram d;
  d.bridges = 1;
  for (int i = 0; i < 4; ++i) d.tangles[i] = q4d::TrivialTangle(1, q4d::BraidWord(2, {}));
  d.label = "1-bridge";
  return d;
}

// Permutation images for the worked 6-bridge example; include
// q4d/cover.hpp before using.
inline std::vector<q4d::Permutation> spun_trefoil_rho_images() {
  q4d::Permutation t12({1, 0, 2}), t13({2, 1, 0});
  std::vector<q4d::Permutation> imgs(12, t13);
  imgs[0] = imgs[1] = t12;
  return imgs;
}

}  // namespace fx
