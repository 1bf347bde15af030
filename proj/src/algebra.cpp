#include "q4d/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace q4d {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Int> IntMat::col(int c) const {
  std::vector<Int> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

void IntMat::set_col(int c, const std::vector<Int>& v) {
  for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
  std::vector<Int> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

IntMat IntMat::col_slice(int c0, int c1) const {
  IntMat r(rows_, c1 - c0);
  for (int i = 0; i < rows_; ++i)
    for (int j = c0; j < c1; ++j) r.at(i, j - c0) = at(i, j);
  return r;
}

std::string IntMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "]";
  }
  return os.str();
}

namespace {

struct SnfWork {
  IntMat d, u, v;

  void swap_rows(int a, int b) {
    for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, const Int& f) {  // row_dst += f*row_src
    for (int j = 0; j < d.cols(); ++j) d.at(dst, j) += f * d.at(src, j);
    for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += f * u.at(src, j);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int i = 0; i < d.rows(); ++i) d.at(i, dst) += f * d.at(i, src);
    for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += f * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < d.cols(); ++j) d.at(r, j) = -d.at(r, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMat& m) {
  SnfWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  const int n = std::min(m.rows(), m.cols());

  for (int t = 0; t < n; ++t) {
    bool block_zero = false;
    for (;;) {
      // Pivot: smallest absolute value among nonzero entries of the
      // remaining block, ties broken row-major. Re-picking the global
      // minimum after every pass keeps coefficient growth in check.
      int pr = -1, pc = -1;
      for (int i = t; i < w.d.rows(); ++i)
        for (int j = t; j < w.d.cols(); ++j) {
          const Int& x = w.d.at(i, j);
          if (x == 0) continue;
          if (pr < 0 || mpz_cmpabs(x.get_mpz_t(), w.d.at(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) {
        block_zero = true;
        break;
      }
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clear = true;
      for (int i = t + 1; i < w.d.rows(); ++i) {
        if (w.d.at(i, t) == 0) continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);  // truncated division is fine here
        if (q != 0) w.add_row(i, t, -q);
        clear &= w.d.at(i, t) == 0;
      }
      for (int j = t + 1; j < w.d.cols(); ++j) {
        if (w.d.at(t, j) == 0) continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        if (q != 0) w.add_col(j, t, -q);
        clear &= w.d.at(t, j) == 0;
      }
      if (clear) break;
      // Nonzero remainders are all smaller than the pivot, so the next
      // pivot strictly shrinks: this loop terminates.
    }
    if (block_zero) break;
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }

  // Enforce the divisibility chain d_t | d_{t+1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = 0; t + 1 < n; ++t) {
      const Int &a = w.d.at(t, t), &b = w.d.at(t + 1, t + 1);
      if (a == 0 && b != 0) {  // move the nonzero entry forward
        w.swap_rows(t, t + 1);
        w.swap_cols(t, t + 1);
        changed = true;
        continue;
      }
      if (a == 0 || b % a == 0) continue;
      // Mix the two diagonal positions and rediagonalize the 2x2 block.
      w.add_col(t, t + 1, 1);
      for (;;) {
        Int q = w.d.at(t + 1, t) / w.d.at(t, t);
        if (q != 0) w.add_row(t + 1, t, -q);
        if (w.d.at(t + 1, t) == 0) break;
        w.swap_rows(t, t + 1);
      }
      Int q = w.d.at(t, t + 1) / w.d.at(t, t);
      w.add_col(t + 1, t, -q);
      if (w.d.at(t, t + 1) != 0) throw std::logic_error("snf: 2x2 fixup failed");
      if (w.d.at(t, t) < 0) w.negate_row(t);
      if (w.d.at(t + 1, t + 1) < 0) w.negate_row(t + 1);
      changed = true;
    }
  }
  return {std::move(w.u), std::move(w.d), std::move(w.v)};
}

int rank(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  int r = 0;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t)
    if (s.d.at(t, t) != 0) ++r;
  return r;
}

Int abs_det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("abs_det: not square");
  SnfResult s = smith_normal_form(m);
  Int p = 1;
  for (int t = 0; t < m.rows(); ++t) p *= s.d.at(t, t);
  return abs(p);
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel_invariants(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  AbelianGroup g;
  int r = 0;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t) {
    const Int& d = s.d.at(t, t);
    if (d == 0) continue;
    ++r;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.free_rank = m.rows() - r;
  return g;
}

Lattice::Lattice(int ambient, IntMat basis) : ambient_(ambient), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_) throw std::invalid_argument("lattice: basis row count != ambient rank");
  if (q4d::rank(basis_) != basis_.cols()) throw std::invalid_argument("lattice: basis columns dependent");
}

bool Lattice::contains(const std::vector<Int>& v) const {
  IntMat rhs(ambient_, 1);
  rhs.set_col(0, v);
  return solve_in_span(basis_, rhs).has_value();
}

std::optional<IntMat> solve_in_span(const IntMat& basis, const IntMat& rhs) {
  if (basis.rows() != rhs.rows()) throw std::invalid_argument("solve_in_span: shape mismatch");
  SnfResult s = smith_normal_form(basis);
  const int n = std::min(basis.rows(), basis.cols());
  IntMat ub = s.u * rhs;
  IntMat z(basis.cols(), rhs.cols());
  for (int c = 0; c < rhs.cols(); ++c) {
    for (int i = 0; i < basis.rows(); ++i) {
      const Int& d = (i < n) ? s.d.at(i, i) : Int(0);
      if (d == 0) {
        if (ub.at(i, c) != 0) return std::nullopt;  // outside rational span
      } else {
        if (ub.at(i, c) % d != 0) return std::nullopt;  // rational, not integral
        z.at(i, c) = ub.at(i, c) / d;
      }
    }
  }
  return s.v * z;
}

Lattice kernel_lattice(const IntMat& m) {
  SnfResult s = smith_normal_form(m);
  int r = 0;
  for (int t = 0; t < std::min(m.rows(), m.cols()); ++t)
    if (s.d.at(t, t) != 0) ++r;
  // Columns of V past the rank span the kernel; V unimodular, so saturated.
  return Lattice(m.cols(), s.v.col_slice(r, m.cols()));
}

Lattice column_span(int ambient, const IntMat& cols) {
  if (cols.rows() != ambient) throw std::invalid_argument("column_span: shape mismatch");
  // Column-style Hermite reduction through SNF of the transpose would lose
  // the original span; instead select a maximal independent set and reduce
  // the rest into it via integer row ops on the transpose.
  SnfResult s = smith_normal_form(cols.transposed());
  int r = 0;
  for (int t = 0; t < std::min(cols.rows(), cols.cols()); ++t)
    if (s.d.at(t, t) != 0) ++r;
  // Rows of U^{-1}... avoid inversions: U * cols^T = D * V^{-1}; the first r
  // rows of (U * cols^T) span the row lattice of cols^T, i.e. the column
  // lattice of cols.
  IntMat ut = s.u * cols.transposed();
  IntMat basis = ut.transposed().col_slice(0, r);
  return Lattice(ambient, std::move(basis));
}

Lattice saturate(const Lattice& l) {
  if (l.rank() == 0) return l;
  Lattice left = kernel_lattice(l.basis().transposed());
  if (left.rank() == 0) return Lattice::full(l.ambient_rank());
  return kernel_lattice(left.basis().transposed());
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw std::invalid_argument("lattice_intersect: ambient rank mismatch");
  const int m = a.ambient_rank(), p = a.rank(), q = b.rank();
  IntMat ab(m, p + q);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < p; ++j) ab.at(i, j) = a.basis().at(i, j);
    for (int j = 0; j < q; ++j) ab.at(i, p + j) = -b.basis().at(i, j);
  }
  Lattice ker = kernel_lattice(ab);
  IntMat basis(m, ker.rank());
  for (int c = 0; c < ker.rank(); ++c) {
    std::vector<Int> x(p);
    for (int j = 0; j < p; ++j) x[j] = ker.basis().at(j, c);
    basis.set_col(c, a.basis().apply(x));
  }
  return Lattice(m, std::move(basis));
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  return solve_in_span(a.basis(), b.basis()).has_value() &&
         solve_in_span(b.basis(), a.basis()).has_value();
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= int(img_.size()) || seen[x])
      throw std::invalid_argument("permutation: not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::then(const Permutation& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> v(img_.size());
  for (int i = 0; i < degree(); ++i) v[i] = o(img_[i]);
  return Permutation(std::move(v));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int cycle_count(const Permutation& p) { return int(p.cycles().size()); }

ChainComplex::ChainComplex(std::vector<long> ranks, std::vector<IntMat> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() + 1 != ranks_.size())
    throw std::invalid_argument("chain complex: need one boundary per adjacent pair");
  for (size_t i = 0; i < boundaries_.size(); ++i) {
    if (boundaries_[i].rows() != ranks_[i] || boundaries_[i].cols() != ranks_[i + 1])
      throw std::invalid_argument("chain complex: boundary shape mismatch");
    if (i > 0 && !(boundaries_[i - 1] * boundaries_[i]).is_zero())
      throw std::invalid_argument("chain complex: d o d != 0");
  }
}

std::vector<AbelianGroup> chain_homology(const ChainComplex& c) {
  std::vector<AbelianGroup> h(c.degrees());
  for (size_t i = 0; i < c.degrees(); ++i) {
    // ker(d_i); d_i is absent at the bottom degree (treated as the zero map).
    Lattice ker;
    if (i == 0) {
      ker = Lattice::full(int(c.rank(0)));
    } else {
      ker = kernel_lattice(c.boundary(i));
    }
    IntMat img(int(c.rank(i)), 0);
    if (i + 1 < c.degrees()) img = c.boundary(i + 1);
    auto coords = solve_in_span(ker.basis(), img);
    if (!coords) throw std::logic_error("chain_homology: image not inside kernel");
    h[i] = cokernel_invariants(*coords);
  }
  return h;
}

}  // namespace q4d
