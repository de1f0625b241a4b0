#pragma once
#include "cosetcat/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cosetcat {

// Dense matrix over Rat. Vectors are columns; operators act by left
// multiplication, so "apply f then g" is the product g * f.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a; // row-major

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RatMat identity(int n);
  static RatMat zero(int r, int c) { return RatMat(r, c); }

  bool is_identity() const;
  bool is_zero() const;
  RatMat transpose() const;
  Rat trace() const;

  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

RatMat operator*(const RatMat& x, const RatMat& y);
RatMat operator+(const RatMat& x, const RatMat& y);
RatMat operator-(const RatMat& x, const RatMat& y);
RatMat operator*(const Rat& c, const RatMat& x);
RatVec apply(const RatMat& m, const RatVec& v);

// Kronecker-style pairing: out[i * w.rows + j] = v[i] * w[j].
RatVec tensor_vec(const RatVec& v, const RatVec& w);

// Gaussian elimination (exact). Returns rank; optionally records pivot columns.
int rref_in_place(RatMat& m, std::vector<int>* pivot_cols = nullptr);
int rank(RatMat m);

// Basis of { x : m x = 0 }.
std::vector<RatVec> nullspace(const RatMat& m);

// Inverse of a square matrix; throws Error{DimensionMismatch} if not square,
// Error{InvalidInput} if singular.
RatMat inverse(const RatMat& m);

// True iff target lies in the span of the given vectors.
bool in_span(const std::vector<RatVec>& vecs, const RatVec& target);

// Incremental exact row reduction for large sparse homogeneous systems A x = 0.
// Rows are fed one at a time; memory stays proportional to rank * ncols.
class SparseRowReducer {
public:
  explicit SparseRowReducer(int ncols) : ncols_(ncols) {}

  // row: (column, coefficient) pairs, any order, duplicates allowed.
  void add_row(const std::vector<std::pair<int, Rat>>& row);

  int rank() const { return static_cast<int>(pivots_.size()); }
  std::vector<RatVec> nullspace() const;

private:
  int ncols_;
  // pivot column -> reduced sparse row (sorted by column, leading coeff 1)
  std::map<int, std::map<int, Rat>> pivots_;
};

} // namespace cosetcat
