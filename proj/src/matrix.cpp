#include "qcx/matrix.hpp"

#include "qcx/errors.hpp"

#include <stdexcept>

namespace qcx {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, kZero) {}

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  for (Elem e : data_)
    if (e.digit >= field_->order()) throw std::invalid_argument("matrix entry outside field");
}

Mat Mat::identity(FieldPtr field, std::size_t n) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, kOne);
  return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  std::vector<Elem> data;
  data.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return Mat(std::move(field), rows.size(), cols, std::move(data));
}

Mat Mat::row_vector(FieldPtr field, std::vector<Elem> v) {
  const std::size_t n = v.size();
  return Mat(std::move(field), 1, n, std::move(v));
}

Mat Mat::circulant(const RingPoly& a, std::size_t rows) {
  const std::size_t n = a.n();
  if (rows > n) throw std::invalid_argument("circulant has at most n rows");
  Mat m(a.field(), rows, n);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, (i + j) % n, a[j]);
  return m;
}

bool Mat::is_zero() const {
  for (Elem e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Mat Mat::conj_transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, field_->conj(at(i, j)));
  return t;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Mat Mat::conj() const {
  Mat c = *this;
  for (auto& e : c.data_) e = field_->conj(e);
  return c;
}

Mat Mat::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b.set(i, j, at(r0 + i, c0 + j));
  return b;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  const Field& F = *a.field_;
  Mat r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Elem y = b.at(k, j);
        if (!y.is_zero()) r.set(i, j, F.add(r.at(i, j), F.mul(x, y)));
      }
    }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Mat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
  return r;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.data_) e = field_->neg(e);
  return r;
}

bool Mat::operator==(const Mat& other) const {
  return same_field(field_, other.field_) && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Mat::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += field_->to_string(at(i, j));
    }
    out += '\n';
  }
  return out;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  std::vector<Elem> data = a.entries();
  data.insert(data.end(), b.entries().begin(), b.entries().end());
  return Mat(a.field(), a.rows() + b.rows(), a.cols(), std::move(data));
}

Echelon rref(const Mat& m) {
  const Field& F = *m.field();
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < r.cols() && prow < r.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < r.rows() && r.at(sel, c).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != prow)
      for (std::size_t j = 0; j < r.cols(); ++j) {
        const Elem t = r.at(sel, j);
        r.set(sel, j, r.at(prow, j));
        r.set(prow, j, t);
      }
    const Elem inv = F.inv(r.at(prow, c));
    for (std::size_t j = c; j < r.cols(); ++j) r.set(prow, j, F.mul(r.at(prow, j), inv));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == prow) continue;
      const Elem factor = r.at(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < r.cols(); ++j) r.set(i, j, F.sub(r.at(i, j), F.mul(factor, r.at(prow, j))));
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw PreconditionError("singular-matrix", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  auto [r, pivots] = rref(hstack(m, Mat::identity(m.field(), n)));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionError("singular-matrix", "matrix is singular");
  return r.block(0, n, n, n);
}

Mat nullspace(const Mat& m) {
  const Field& F = *m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), kZero);
    v[free] = kOne;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return Mat::from_rows(m.field(), basis, m.cols());
}

bool in_rowspace(const Mat& m, std::span<const Elem> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("vector length mismatch");
  const Mat row = Mat::row_vector(m.field(), {v.begin(), v.end()});
  return rank(vstack(m, row)) == rank(m);
}

Elem hermitian_inner(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner product length mismatch");
  Elem acc = kZero;
  for (std::size_t i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(f.conj(u[i]), v[i]));
  return acc;
}

Poly char_poly(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly needs a square matrix");
  const Field& F = *m.field();
  const std::size_t n = m.rows();
  Mat h = m;

  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h.at(piv, j).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) {
        const Elem t = h.at(piv, c);
        h.set(piv, c, h.at(j + 1, c));
        h.set(j + 1, c, t);
      }
      for (std::size_t r = 0; r < n; ++r) {
        const Elem t = h.at(r, piv);
        h.set(r, piv, h.at(r, j + 1));
        h.set(r, j + 1, t);
      }
    }
    const Elem inv = F.inv(h.at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const Elem u = F.mul(h.at(i, j), inv);
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) h.set(i, c, F.sub(h.at(i, c), F.mul(u, h.at(j + 1, c))));
      for (std::size_t r = 0; r < n; ++r) h.set(r, j + 1, F.add(h.at(r, j + 1), F.mul(u, h.at(r, i))));
    }
  }

  const FieldPtr& fp = m.field();
  std::vector<Poly> p{Poly(fp, {kOne})};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly pk = Poly(fp, {F.neg(h.at(k - 1, k - 1)), kOne}) * p[k - 1];
    Elem t = kOne;
    for (std::size_t i = 1; i < k; ++i) {
      t = F.mul(t, h.at(k - i, k - i - 1));
      const Elem c = F.mul(t, h.at(k - i - 1, k - 1));
      if (!c.is_zero()) pk = pk - p[k - i - 1].scaled(c);
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

std::size_t hull_dim(const Mat& g) {
  const std::size_t k = g.rows();
  if (rank(g) != k) throw PreconditionError("not-full-rank", "generator matrix does not have full row rank");
  return k - rank(g * g.conj_transpose());
}

std::size_t hull_dim_by_intersection(const Mat& g) {
  const std::size_t k = rank(g);
  const Mat dual = nullspace(g.conj());
  if (dual.rows() == 0) return 0;
  return k + dual.rows() - rank(vstack(g, dual));
}

}  // namespace qcx
