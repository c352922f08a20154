#include "pathhom/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "pathhom/errors.hpp"

namespace pathhom {

void ExactVector::set(size_t i, const Scalar& v, const Ring& ring) {
  if (i >= size) throw contract_error("vector index out of range");
  const Scalar n = ring.norm(v);
  if (n == 0)
    entries.erase(i);
  else
    entries[i] = n;
}

size_t ExactMatrix::entry_count() const {
  size_t n = 0;
  for (const auto& r : row_) n += r.size();
  return n;
}

void ExactMatrix::set(size_t r, size_t c, const Scalar& v, const Ring& ring) {
  if (r >= rows_ || c >= cols_) throw contract_error("matrix index out of range");
  const Scalar n = ring.norm(v);
  if (n == 0)
    row_[r].erase(c);
  else
    row_[r][c] = n;
}

void ExactMatrix::add_to(size_t r, size_t c, const Scalar& v, const Ring& ring) {
  set(r, c, ring.add(at(r, c), v), ring);
}

Scalar ExactMatrix::at(size_t r, size_t c) const {
  if (r >= rows_ || c >= cols_) throw contract_error("matrix index out of range");
  auto it = row_[r].find(c);
  return it == row_[r].end() ? Scalar(0) : it->second;
}

ExactVector ExactMatrix::col(size_t c) const {
  ExactVector v(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    auto it = row_[r].find(c);
    if (it != row_[r].end()) v.entries[r] = it->second;
  }
  return v;
}

ExactMatrix ExactMatrix::from_columns(size_t rows, const std::vector<ExactVector>& cols,
                                      const Ring& ring) {
  ExactMatrix m(rows, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size != rows) throw contract_error("column size mismatch");
    for (const auto& [r, v] : cols[c].entries) m.set(r, c, v, ring);
  }
  return m;
}

ExactMatrix ExactMatrix::times(const ExactMatrix& rhs, const Ring& ring) const {
  if (cols_ != rhs.rows_) throw contract_error("dimension mismatch in product");
  ExactMatrix out(rows_, rhs.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (const auto& [k, a] : row_[r])
      for (const auto& [c, b] : rhs.row_[k]) out.add_to(r, c, ring.mul(a, b), ring);
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

namespace {

// Reduced row echelon form over a field, in place on sparse rows.
// Pivot choice: columns left to right, then the unused row of smallest
// index with a nonzero entry, so the result is deterministic and the pivot
// columns are the lexicographically smallest possible set.
struct Rref {
  std::vector<std::map<size_t, Scalar>> rows;
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, col), col increasing
};

// Dense elimination for narrow matrices; same pivot rule as the sparse
// path so results are identical.
Rref rref_dense(const ExactMatrix& m, const Ring& field) {
  std::vector<std::vector<Scalar>> a(m.rows(), std::vector<Scalar>(m.cols(), Scalar(0)));
  for (size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) a[r][c] = v;

  Rref out;
  std::vector<bool> used(m.rows(), false);
  for (size_t c = 0; c < m.cols(); ++c) {
    size_t pr = m.rows();
    for (size_t r = 0; r < m.rows(); ++r)
      if (!used[r] && a[r][c] != 0) { pr = r; break; }
    if (pr == m.rows()) continue;
    used[pr] = true;
    out.pivots.emplace_back(pr, c);
    const Scalar s = field.inv(a[pr][c]);
    for (size_t j = 0; j < m.cols(); ++j)
      if (a[pr][j] != 0) a[pr][j] = field.mul(a[pr][j], s);
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || a[r][c] == 0) continue;
      const Scalar f = a[r][c];
      for (size_t j = 0; j < m.cols(); ++j)
        if (a[pr][j] != 0) a[r][j] = field.sub(a[r][j], field.mul(f, a[pr][j]));
    }
  }
  out.rows.resize(m.rows());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (a[r][c] != 0) out.rows[r][c] = a[r][c];
  return out;
}

constexpr size_t kDenseColumnLimit = 64;

Rref rref(const ExactMatrix& m, const Ring& field) {
  if (m.cols() <= kDenseColumnLimit) return rref_dense(m, field);
  Rref out;
  out.rows.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) out.rows.push_back(m.row(r));
  std::vector<bool> used(m.rows(), false);

  for (size_t c = 0; c < m.cols(); ++c) {
    size_t pr = m.rows();
    for (size_t r = 0; r < m.rows(); ++r) {
      if (used[r]) continue;
      auto it = out.rows[r].find(c);
      if (it != out.rows[r].end()) { pr = r; break; }
    }
    if (pr == m.rows()) continue;
    used[pr] = true;
    out.pivots.emplace_back(pr, c);

    // scale pivot row to a unit leading entry
    {
      const Scalar s = field.inv(out.rows[pr][c]);
      for (auto& [cc, v] : out.rows[pr]) v = field.mul(v, s);
    }
    // clear the column everywhere else
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      auto it = out.rows[r].find(c);
      if (it == out.rows[r].end()) continue;
      const Scalar f = it->second;
      for (const auto& [cc, v] : out.rows[pr]) {
        auto jt = out.rows[r].find(cc);
        const Scalar cur = jt == out.rows[r].end() ? Scalar(0) : jt->second;
        const Scalar nv = field.sub(cur, field.mul(f, v));
        if (nv == 0) {
          if (jt != out.rows[r].end()) out.rows[r].erase(jt);
        } else if (jt != out.rows[r].end()) {
          jt->second = nv;
        } else {
          out.rows[r][cc] = nv;
        }
      }
    }
  }
  return out;
}

using DenseInt = std::vector<std::vector<Int>>;

DenseInt dense_int(const ExactMatrix& m) {
  DenseInt a(m.rows(), std::vector<Int>(m.cols(), 0));
  for (size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) {
      if (boost::multiprecision::denominator(v) != 1)
        throw contract_error("integer routine on non-integer matrix");
      a[r][c] = boost::multiprecision::numerator(v);
    }
  return a;
}

// Row-style Hermite normal form of a full-row-rank integer matrix:
// echelon rows with positive pivots, entries above each pivot reduced into
// [0, pivot). Unique, hence usable as a canonical form for lattices.
DenseInt hnf_rows(DenseInt a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    // gcd-reduce the column below pr to a single nonzero entry at pr
    while (true) {
      size_t best = rows;
      for (size_t r = pr; r < rows; ++r)
        if (a[r][c] != 0 && (best == rows || abs(a[r][c]) < abs(a[best][c]))) best = r;
      if (best == rows) break;
      std::swap(a[pr], a[best]);
      bool clean = true;
      for (size_t r = pr + 1; r < rows; ++r) {
        if (a[r][c] == 0) continue;
        const Int q = a[r][c] / a[pr][c];
        for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[pr][j];
        if (a[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[pr][c] == 0) continue;
    if (a[pr][c] < 0)
      for (size_t j = 0; j < cols; ++j) a[pr][j] = -a[pr][j];
    for (size_t r = 0; r < pr; ++r) {
      // floor division so the reduced entry lands in [0, pivot)
      Int q = a[r][c] / a[pr][c];
      if (a[r][c] - q * a[pr][c] < 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[pr][j];
    }
    ++pr;
  }
  return a;
}

}  // namespace

std::vector<ExactVector> kernel_basis(const ExactMatrix& m, const Ring& field) {
  if (!field.is_field()) throw contract_error("kernel_basis needs a field");
  const Rref red = rref(m, field);

  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [r, c] : red.pivots) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(m.cols());
    v.entries[f] = Scalar(1);
    for (const auto& [r, c] : red.pivots) {
      auto it = red.rows[r].find(f);
      if (it != red.rows[r].end()) v.entries[c] = field.neg(it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t rank(const ExactMatrix& m, const Ring& ring) {
  const Ring field = ring.is_field() ? ring : Ring::rationals();
  return rref(m, field).pivots.size();
}

std::vector<ExactVector> hermite_kernel(const ExactMatrix& m) {
  const size_t rows = m.rows(), cols = m.cols();
  DenseInt a = dense_int(m);
  // unimodular column operations, mirrored on u (starts as identity)
  DenseInt u(cols, std::vector<Int>(cols, 0));
  for (size_t j = 0; j < cols; ++j) u[j][j] = 1;

  auto col_sub = [&](size_t dst, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t r = 0; r < rows; ++r) a[r][dst] -= q * a[r][src];
    for (size_t r = 0; r < cols; ++r) u[r][dst] -= q * u[r][src];
  };
  auto col_swap = [&](size_t x, size_t y) {
    if (x == y) return;
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][x], a[r][y]);
    for (size_t r = 0; r < cols; ++r) std::swap(u[r][x], u[r][y]);
  };

  size_t pc = 0;  // first still-active column
  for (size_t r = 0; r < rows && pc < cols; ++r) {
    while (true) {
      size_t best = cols;
      for (size_t j = pc; j < cols; ++j)
        if (a[r][j] != 0 && (best == cols || abs(a[r][j]) < abs(a[r][best]))) best = j;
      if (best == cols) break;  // row already clear on active columns
      col_swap(pc, best);
      bool clean = true;
      for (size_t j = pc + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        col_sub(j, pc, a[r][j] / a[r][pc]);
        if (a[r][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][pc] != 0) ++pc;
  }

  // columns pc.. of a are zero; the matching columns of u span the kernel
  // lattice. Canonicalize that basis via HNF on its transpose.
  const size_t k = cols - pc;
  DenseInt kt(k, std::vector<Int>(cols, 0));
  for (size_t j = 0; j < k; ++j)
    for (size_t r = 0; r < cols; ++r) kt[j][r] = u[r][pc + j];
  kt = hnf_rows(std::move(kt));

  std::vector<ExactVector> basis;
  for (size_t j = 0; j < k; ++j) {
    ExactVector v(cols);
    for (size_t r = 0; r < cols; ++r)
      if (kt[j][r] != 0) v.entries[r] = Scalar(kt[j][r]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Int> smith_normal_form(const ExactMatrix& m) {
  DenseInt a = dense_int(m);
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<Int> factors;

  for (size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      size_t bi = rows, bj = cols;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) { bi = i; bj = j; }
      if (bi == rows) goto done;  // submatrix is zero
      std::swap(a[t], a[bi]);
      for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][bj]);

      bool dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) dirty = true;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // corner must divide the rest of the submatrix for d_t | d_{t+1}
      bool fixed = true;
      for (size_t i = t + 1; i < rows && fixed; ++i)
        for (size_t j = t + 1; j < cols && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
            fixed = false;
          }
      if (fixed) break;
    }
    factors.push_back(abs(a[t][t]));
  }
done:
  return factors;
}

std::vector<Scalar> express_in_basis(const ExactVector& v,
                                     const std::vector<ExactVector>& basis, const Ring& ring) {
  const size_t n = v.size;
  for (const auto& b : basis)
    if (b.size != n) throw contract_error("basis vector size mismatch");
  const Ring field = ring.is_field() ? ring : Ring::rationals();

  // solve [B | v] by elimination; the augmented column may not pivot
  ExactMatrix aug(n, basis.size() + 1);
  for (size_t j = 0; j < basis.size(); ++j)
    for (const auto& [r, s] : basis[j].entries) aug.set(r, j, s, field);
  for (const auto& [r, s] : v.entries) aug.set(r, basis.size(), s, field);

  const Rref red = rref(aug, field);
  std::vector<Scalar> coords(basis.size(), Scalar(0));
  for (const auto& [r, c] : red.pivots) {
    if (c == basis.size()) throw not_in_span_error("vector not in span of basis");
    auto it = red.rows[r].find(basis.size());
    if (it != red.rows[r].end()) coords[c] = it->second;
  }
  if (red.pivots.size() != basis.size()) {
    // a dependent "basis" breaks the uniqueness the callers rely on
    throw contract_error("express_in_basis: basis is linearly dependent");
  }
  if (ring.kind == RingKind::Integers)
    for (const auto& c : coords)
      if (boost::multiprecision::denominator(c) != 1)
        throw not_in_span_error("vector not in integer span of basis");
  return coords;
}

}  // namespace pathhom
