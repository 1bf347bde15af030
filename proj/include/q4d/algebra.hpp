// Exact integer linear algebra: matrices over GMP integers, Smith normal
// form, lattices, abelian group invariants, chain complexes, permutations.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace q4d {

using Int = mpz_class;

// Dense integer matrix, row-major. All arithmetic is exact.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  IntMat operator*(const IntMat& o) const;
  bool operator==(const IntMat& o) const = default;

  bool is_zero() const;
  IntMat transposed() const;
  std::vector<Int> col(int c) const;
  void set_col(int c, const std::vector<Int>& v);
  std::vector<Int> apply(const std::vector<Int>& v) const;  // M*v

  // Columns [c0, c1) as a new matrix.
  IntMat col_slice(int c0, int c1) const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

struct SnfResult {
  IntMat u, d, v;  // u*m*v == d, u and v unimodular, d diagonal d1|d2|...
};

// Smith normal form. Pivot: smallest absolute value, ties row-major.
SnfResult smith_normal_form(const IntMat& m);

int rank(const IntMat& m);

// |det| of a square matrix (product of SNF invariant factors).
Int abs_det(const IntMat& m);

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // d1|d2|..., each >= 2

  bool operator==(const AbelianGroup& o) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string str() const;
};

// Z^rows / column-span(m).
AbelianGroup cokernel_invariants(const IntMat& m);

// Finitely generated subgroup of Z^ambient; basis columns linearly independent.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int ambient, IntMat basis);  // checks independence

  static Lattice zero(int ambient) { return Lattice(ambient, IntMat(ambient, 0)); }
  static Lattice full(int ambient) { return Lattice(ambient, IntMat::identity(ambient)); }

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const std::vector<Int>& v) const;

 private:
  int ambient_ = 0;
  IntMat basis_;
};

// Solve basis * x = rhs (one column per target) over the integers.
// Requires every rhs column to lie in the integer column span; returns
// nullopt otherwise.
std::optional<IntMat> solve_in_span(const IntMat& basis, const IntMat& rhs);

// Saturated basis of {v : m*v = 0}.
Lattice kernel_lattice(const IntMat& m);

// Basis of the integer column span (drops dependent columns exactly).
Lattice column_span(int ambient, const IntMat& cols);

// Smallest saturated lattice containing L.
Lattice saturate(const Lattice& l);

Lattice lattice_intersect(const Lattice& a, const Lattice& b);

bool lattice_equal(const Lattice& a, const Lattice& b);

// Permutation of {0..n-1}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return int(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  bool is_identity() const;
  Permutation inverse() const;
  // this then o:  (this.then(o))(i) == o(this(i))
  Permutation then(const Permutation& o) const;
  std::vector<std::vector<int>> cycles() const;  // fixed points included
  bool operator==(const Permutation& o) const = default;

 private:
  std::vector<int> img_;
};

// Number of orbits on {0..n-1}, fixed points included.
int cycle_count(const Permutation& p);

// Sequence of free modules Z^{r0},...,Z^{rk} with boundaries
// d_i : C_i -> C_{i-1}; boundary(i) has shape r_{i-1} x r_i.
class ChainComplex {
 public:
  // boundaries[i-1] is d_i, i = 1..k. Checks d_{i} * d_{i+1} == 0.
  ChainComplex(std::vector<long> ranks, std::vector<IntMat> boundaries);

  size_t degrees() const { return ranks_.size(); }
  long rank(size_t i) const { return ranks_[i]; }
  const IntMat& boundary(size_t i) const { return boundaries_[i - 1]; }  // d_i

 private:
  std::vector<long> ranks_;
  std::vector<IntMat> boundaries_;
};

// H_i = ker(d_i) / im(d_{i+1}) for each degree.
std::vector<AbelianGroup> chain_homology(const ChainComplex& c);

}  // namespace q4d
