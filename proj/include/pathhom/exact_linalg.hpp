#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "pathhom/ring.hpp"

namespace pathhom {

// Sparse column vector with exact entries. Entries are kept nonzero and
// normalized for the ring that produced them.
struct ExactVector {
  size_t size = 0;
  std::map<size_t, Scalar> entries;

  ExactVector() = default;
  explicit ExactVector(size_t n) : size(n) {}

  Scalar at(size_t i) const {
    auto it = entries.find(i);
    return it == entries.end() ? Scalar(0) : it->second;
  }
  void set(size_t i, const Scalar& v, const Ring& ring);
  bool is_zero() const { return entries.empty(); }
  bool operator==(const ExactVector& o) const { return size == o.size && entries == o.entries; }
};

// Sparse matrix, row-major. Deterministic iteration everywhere: rows by
// index, entries by column. Construction is cheap; the solvers below copy
// into whatever layout they need.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), row_(rows) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t entry_count() const;

  void set(size_t r, size_t c, const Scalar& v, const Ring& ring);
  void add_to(size_t r, size_t c, const Scalar& v, const Ring& ring);
  Scalar at(size_t r, size_t c) const;
  const std::map<size_t, Scalar>& row(size_t r) const { return row_[r]; }

  ExactVector col(size_t c) const;
  static ExactMatrix from_columns(size_t rows, const std::vector<ExactVector>& cols,
                                  const Ring& ring);

  ExactMatrix times(const ExactMatrix& rhs, const Ring& ring) const;
  bool is_zero() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<size_t, Scalar>> row_;
};

// Basis of the right kernel over a field, in reduced echelon form: one
// vector per free column of the reduced matrix, unit entry at that column,
// supported otherwise only on pivot columns. Deterministic.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m, const Ring& field);

// Basis of the integer kernel lattice (saturated: it spans ker over Q and
// any integer kernel vector is an integer combination). Computed by
// unimodular column reduction, then put in Hermite normal form.
std::vector<ExactVector> hermite_kernel(const ExactMatrix& m);

// Rank over the fraction field (so over Q when ring = Integers).
size_t rank(const ExactMatrix& m, const Ring& ring);

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, positive,
// one per unit of rank.
std::vector<Int> smith_normal_form(const ExactMatrix& m);

// Coordinates of v in the given independent basis. Throws not_in_span_error
// when v is outside the span (or, over the integers, outside the lattice).
std::vector<Scalar> express_in_basis(const ExactVector& v,
                                     const std::vector<ExactVector>& basis, const Ring& ring);

}  // namespace pathhom
