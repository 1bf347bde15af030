// Words in free groups, braid words, finitely presented groups,
// abelianization, the Artin action on punctured-disk generators, and
// heuristic Tietze simplification.
#pragma once

#include <q4d/algebra.hpp>

#include <string>
#include <vector>

namespace q4d {

// One letter x_gen^sign of a word in a free group; sign is +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word free_reduce(Word w);
// Cyclically reduced representative (free reduction + trimming matching
// first/last letters). Conjugates share one such class.
Word cyclic_reduce(Word w);

// "x0 x3^-1 x2" with generator names x0..; custom names optional.
std::string word_str(const Word& w, const std::vector<std::string>* names = nullptr);

// Braid word on strand_count strands; letters are (generator index in
// 1..strand_count-1, sign).
struct BraidWord {
  int strand_count = 0;
  std::vector<std::pair<int, int>> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<std::pair<int, int>> l);  // validates indices

  BraidWord inverse() const;  // reversed word with inverted letters
  // Underlying permutation of strand positions 0..strand_count-1,
  // letters applied left to right.
  Permutation underlying_permutation() const;
};

struct FPGroup {
  int ngens = 0;
  std::vector<Word> relators;
  std::vector<std::string> names;  // may be empty -> x0, x1, ...

  std::string gen_name(int i) const;
  std::string str() const;  // one relator per line, export format
};

// Column i of the result is unused; exponent matrix has one row per
// generator and one column per relator.
IntMat exponent_matrix(int ngens, const std::vector<Word>& relators);

AbelianGroup abelianization(const FPGroup& g);

// Coordinates on the free part of the abelianization: a free_rank x ngens
// integer matrix sending a word's exponent vector to its class in
// Z^free_rank. Only meaningful when the abelianization is free; callers
// that require freeness should check `torsion_free`.
struct AbelianCoords {
  long free_rank = 0;
  bool torsion_free = true;
  IntMat proj;  // free_rank x ngens

  std::vector<Int> of_word(const Word& w) const;
};

AbelianCoords abelianization_coords(const FPGroup& g);

// <x_0..x_{2b-1} | x_0 x_1 ... x_{2b-1}>, the 2b-punctured sphere group.
FPGroup sphere_group(int b);

// Image of `word` under the Artin automorphism of the braid word: letters
// are applied left to right; sigma_i sends x_{i-1} -> x_{i-1} x_i x_{i-1}^-1
// and x_i -> x_{i-1} (0-indexed punctures i-1 and i).
Word artin_image(const BraidWord& w, const Word& word);

// Best-effort presentation shrinking: free/cyclic reduction, trivial
// relator removal, elimination of generators defined by relators of length
// 1 or 2 and of generators occurring exactly once overall. `budget` caps
// the number of elimination passes.
FPGroup tietze_simplify(FPGroup g, int budget = 100);

// Equality of relators up to cyclic permutation, inversion, and
// conjugation; relator lists compared as multisets.
bool relators_equivalent(const Word& a, const Word& b);
bool relator_lists_equivalent(std::vector<Word> a, std::vector<Word> b);

}  // namespace q4d
