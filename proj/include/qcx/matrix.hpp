#pragma once

#include "qcx/gf.hpp"
#include "qcx/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace qcx {

/// Dense row-major matrix over GF(Q).
class Mat {
 public:
  Mat(FieldPtr field, std::size_t rows, std::size_t cols);
  Mat(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Mat identity(FieldPtr field, std::size_t n);
  static Mat from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);
  static Mat row_vector(FieldPtr field, std::vector<Elem> v);
  /// Row i holds x^i a(x) mod x^n - 1; rows <= n.
  static Mat circulant(const RingPoly& a, std::size_t rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem>& entries() const noexcept { return data_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Elem e) { data_[i * cols_ + j] = e; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Elem> row_vec(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

  bool is_zero() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  Mat conj_transpose() const;
  Mat transpose() const;
  /// Entry-wise Frobenius.
  Mat conj() const;
  Mat block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  Mat operator-() const;

  bool operator==(const Mat& other) const;

  /// One line per row, entries separated by single spaces (field tokens).
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Echelon {
  Mat reduced;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination taking the first nonzero entry as pivot.
Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Throws PreconditionError("singular-matrix") for non-square or singular input.
Mat inverse(const Mat& m);
/// Basis (as rows) of the right nullspace {v : M v^T = 0}.
Mat nullspace(const Mat& m);
/// True when `v` lies in the row space of `m`.
bool in_rowspace(const Mat& m, std::span<const Elem> v);

/// Hermitian inner product sum u_i^q v_i.
Elem hermitian_inner(const Field& f, std::span<const Elem> u, std::span<const Elem> v);

/// det(xI - M), monic of degree rows, via Hessenberg reduction.
Poly char_poly(const Mat& m);

/// dim(C cap C^{perp_h}) for the row space C of a full-row-rank G, computed
/// as k - rank(G G^dagger). Throws PreconditionError("not-full-rank").
std::size_t hull_dim(const Mat& g);
/// The same quantity as an explicit intersection of the row space with the
/// nullspace of conj(G).
std::size_t hull_dim_by_intersection(const Mat& g);

}  // namespace qcx
