#include <q4d/groups.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace q4d {

Word inverse_word(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->sign});
  return r;
}

Word free_reduce(Word w) {
  Word r;
  for (const Letter& l : w) {
    if (!r.empty() && r.back().gen == l.gen && r.back().sign == -l.sign)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

std::string word_str(const Word& w, const std::vector<std::string>* names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w) {
    if (!first) os << " ";
    first = false;
    if (names && l.gen < int(names->size()))
      os << (*names)[l.gen];
    else
      os << "x" << l.gen;
    if (l.sign < 0) os << "^-1";
  }
  return os.str();
}

BraidWord::BraidWord(int strands, std::vector<std::pair<int, int>> l)
    : strand_count(strands), letters(std::move(l)) {
  for (auto [i, s] : letters) {
    if (i < 1 || i >= strand_count)
      throw std::invalid_argument("braid letter index out of range");
    if (s != 1 && s != -1) throw std::invalid_argument("braid letter sign must be +-1");
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.strand_count = strand_count;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.push_back({it->first, -it->second});
  return r;
}

Permutation BraidWord::underlying_permutation() const {
  // Track where each initial position ends up; sign of a crossing does not
  // affect the underlying permutation.
  std::vector<int> pos(strand_count);
  for (int i = 0; i < strand_count; ++i) pos[i] = i;
  for (auto [i, s] : letters) std::swap(pos[i - 1], pos[i]);
  // pos[p] = initial strand now at position p; we want images of positions.
  std::vector<int> img(strand_count);
  for (int p = 0; p < strand_count; ++p) img[pos[p]] = p;
  return Permutation(img);
}

std::string FPGroup::gen_name(int i) const {
  if (i < int(names.size())) return names[i];
  return "x" + std::to_string(i);
}

std::string FPGroup::str() const {
  std::ostringstream os;
  os << "generators:";
  for (int i = 0; i < ngens; ++i) os << " " << gen_name(i);
  os << "\nrelators:\n";
  for (const Word& r : relators) {
    const std::vector<std::string>* nm = names.empty() ? nullptr : &names;
    os << "  " << word_str(r, nm) << "\n";
  }
  return os.str();
}

IntMat exponent_matrix(int ngens, const std::vector<Word>& relators) {
  IntMat m(ngens, int(relators.size()));
  for (int c = 0; c < int(relators.size()); ++c)
    for (const Letter& l : relators[c]) m.at(l.gen, c) += l.sign;
  return m;
}

AbelianGroup abelianization(const FPGroup& g) {
  return cokernel_invariants(exponent_matrix(g.ngens, g.relators));
}

std::vector<Int> AbelianCoords::of_word(const Word& w) const {
  std::vector<Int> e(proj.cols());
  for (const Letter& l : w) e[l.gen] += l.sign;
  return proj.apply(e);
}

AbelianCoords abelianization_coords(const FPGroup& g) {
  IntMat m = exponent_matrix(g.ngens, g.relators);
  SnfResult s = smith_normal_form(m);
  AbelianCoords c;
  c.proj = IntMat(0, g.ngens);
  int r = 0;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    if (s.d.at(t, t) == 0) break;
    ++r;
    if (s.d.at(t, t) >= 2) c.torsion_free = false;
  }
  c.free_rank = g.ngens - r;
  // Rows r.. of U are coordinates on the free quotient: U*m has those rows
  // zero, so they kill every relator class.
  IntMat proj(int(c.free_rank), g.ngens);
  for (int i = 0; i < c.free_rank; ++i)
    for (int j = 0; j < g.ngens; ++j) proj.at(i, j) = s.u.at(r + i, j);
  c.proj = std::move(proj);
  return c;
}

FPGroup sphere_group(int b) {
  if (b < 1) throw std::invalid_argument("sphere_group: b >= 1 required");
  FPGroup g;
  g.ngens = 2 * b;
  Word r;
  for (int i = 0; i < 2 * b; ++i) r.push_back({i, 1});
  g.relators.push_back(std::move(r));
  return g;
}

namespace {

// Substitute the single-letter rule of one braid generator into a word.
Word apply_braid_letter(const Word& w, int index, int sign) {
  const int a = index - 1, b = index;  // punctures the crossing involves
  Word out;
  for (const Letter& l : w) {
    Word img;
    if (sign > 0) {
      if (l.gen == a)
        img = {{a, 1}, {b, 1}, {a, -1}};
      else if (l.gen == b)
        img = {{a, 1}};
      else
        img = {{l.gen, 1}};
    } else {
      if (l.gen == a)
        img = {{b, 1}};
      else if (l.gen == b)
        img = {{b, -1}, {a, 1}, {b, 1}};
      else
        img = {{l.gen, 1}};
    }
    if (l.sign < 0) img = inverse_word(img);
    out.insert(out.end(), img.begin(), img.end());
  }
  return free_reduce(std::move(out));
}

}  // namespace

Word artin_image(const BraidWord& w, const Word& word) {
  Word cur = word;
  for (auto [i, s] : w.letters) cur = apply_braid_letter(cur, i, s);
  return cur;
}

namespace {

// Remove generator `g` after substituting `repl` for it everywhere.
void substitute_and_drop(FPGroup& p, int g, const Word& repl) {
  for (Word& r : p.relators) {
    Word out;
    for (const Letter& l : r) {
      if (l.gen == g) {
        Word img = l.sign > 0 ? repl : inverse_word(repl);
        out.insert(out.end(), img.begin(), img.end());
      } else {
        out.push_back(l);
      }
    }
    r = free_reduce(std::move(out));
  }
  for (Word& r : p.relators)
    for (Letter& l : r)
      if (l.gen > g) --l.gen;
  if (g < int(p.names.size())) p.names.erase(p.names.begin() + g);
  --p.ngens;
}

}  // namespace

FPGroup tietze_simplify(FPGroup g, int budget) {
  for (int pass = 0; pass < budget; ++pass) {
    for (Word& r : g.relators) r = cyclic_reduce(std::move(r));
    std::erase_if(g.relators, [](const Word& r) { return r.empty(); });

    // Eliminate a generator that occurs exactly once (either sign) in some
    // relator: the relator solves for it. Prefer the shortest defining
    // relator to limit growth of the others.
    int best_k = -1, best_p = -1;
    for (size_t k = 0; k < g.relators.size(); ++k) {
      const Word& r = g.relators[k];
      for (size_t p = 0; p < r.size(); ++p) {
        int occ = 0;
        for (const Letter& l : r) occ += l.gen == r[p].gen;
        if (occ != 1) continue;
        if (best_k < 0 || r.size() < g.relators[best_k].size()) {
          best_k = int(k);
          best_p = int(p);
        }
        break;
      }
    }
    if (best_k < 0) break;
    Word r = g.relators[best_k];
    Letter piv = r[best_p];
    Word u(r.begin(), r.begin() + best_p), w(r.begin() + best_p + 1, r.end());
    // u x^s w = 1  ->  x^s = u^-1 w^-1.
    Word repl = free_reduce([&] {
      Word v = inverse_word(u);
      Word wi = inverse_word(w);
      v.insert(v.end(), wi.begin(), wi.end());
      return piv.sign > 0 ? v : inverse_word(v);
    }());
    g.relators.erase(g.relators.begin() + best_k);
    substitute_and_drop(g, piv.gen, repl);
  }
  for (Word& r : g.relators) r = cyclic_reduce(std::move(r));
  std::erase_if(g.relators, [](const Word& r) { return r.empty(); });
  return g;
}

bool relators_equivalent(const Word& a, const Word& b) {
  Word x = cyclic_reduce(a), y = cyclic_reduce(b);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (int invert = 0; invert < 2; ++invert) {
    Word cand = invert ? cyclic_reduce(inverse_word(y)) : y;
    for (size_t rot = 0; rot < cand.size(); ++rot) {
      std::rotate(cand.begin(), cand.begin() + 1, cand.end());
      if (cand == x) return true;
    }
  }
  return false;
}

bool relator_lists_equivalent(std::vector<Word> a, std::vector<Word> b) {
  if (a.size() != b.size()) return false;
  for (const Word& x : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j)
      if (relators_equivalent(x, b[j])) {
        b.erase(b.begin() + j);
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace q4d
