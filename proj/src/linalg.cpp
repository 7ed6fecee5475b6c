#include "lck/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lck {

namespace {

bool any_float(const Matrix& a) { return !a.is_exact(); }

void swap_rows(Matrix& m, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

}  // namespace

Echelon rref(const Matrix& a, bool track_transform) {
  Echelon e{a, {}, track_transform ? Matrix::identity(a.rows()) : Matrix()};
  Matrix& m = e.reduced;
  const bool floating = any_float(a);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = m.rows();
    if (floating) {
      double best = tolerance();
      for (std::size_t r = row; r < m.rows(); ++r) {
        const double v = std::abs(m(r, col).to_double());
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
    } else {
      for (std::size_t r = row; r < m.rows(); ++r) {
        if (!m(r, col).is_zero()) {
          pivot = r;
          break;
        }
      }
    }
    if (pivot == m.rows()) {
      if (floating) {
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = Scalar::floating(0.0);
      }
      continue;
    }
    swap_rows(m, row, pivot);
    if (track_transform) swap_rows(e.transform, row, pivot);
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    if (track_transform) {
      for (std::size_t j = 0; j < e.transform.cols(); ++j) e.transform(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) {
        if (r != row && floating) m(r, col) = Scalar::floating(0.0);
        continue;
      }
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
      if (floating) m(r, col) = Scalar::floating(0.0);
      if (track_transform) {
        for (std::size_t j = 0; j < e.transform.cols(); ++j) {
          if (!e.transform(row, j).is_zero()) e.transform(r, j) -= f * e.transform(row, j);
        }
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(cols, a.cols());
}

Scalar determinant(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix m(a);
  const std::size_t n = m.rows();
  const bool floating = any_float(a);
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if (floating) {
      double best = 0.0;
      for (std::size_t r = col; r < n; ++r) {
        const double v = std::abs(m(r, col).to_double());
        if (v > best) {
          best = v;
          pivot = r;
        }
      }
    } else {
      for (std::size_t r = col; r < n; ++r) {
        if (!m(r, col).is_zero()) {
          pivot = r;
          break;
        }
      }
    }
    if (pivot == n) return floating ? Scalar::floating(0.0) : Scalar(0);
    if (pivot != col) {
      swap_rows(m, pivot, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_exact() && m(r, col).is_zero()) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const Echelon e = rref(a, true);
  if (e.pivots.size() != a.rows()) throw DomainError("matrix is singular");
  return e.transform;
}

Vector solve(const Matrix& a, const Vector& b) { return inverse(a) * b; }

bool is_positive_definite(const Matrix& s) {
  if (!s.square()) return false;
  for (std::size_t k = 1; k <= s.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = s(i, j);
    if (determinant(minor).sign() <= 0) return false;
  }
  return true;
}

Vector AffineSolution::point(const Vector& coords) const {
  if (coords.size() != basis.cols()) throw DimensionMismatch("affine coordinate count mismatch");
  return particular + basis * coords;
}

AffineSolution solve_affine(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(aug, true);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    const std::size_t bad = e.pivots.size() - 1;
    throw InfeasibleSystem("linear system is infeasible", e.transform.row(bad));
  }
  AffineSolution sol{Vector(a.cols()), Matrix()};
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    cols.push_back(std::move(v));
  }
  sol.basis = Matrix::from_columns(cols, a.cols());
  return sol;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  const Echelon e = rref(Matrix::from_rows(vectors, ambient));
  Matrix basis(e.pivots.size(), ambient);
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = e.reduced(i, j);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
  return span(vs, ambient);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector outside the ambient space");
  auto vs = basis();
  vs.push_back(v);
  return rank(Matrix::from_rows(vs, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  return (*this + other).dim() == dim();
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  auto vs = basis();
  for (auto& v : other.basis()) vs.push_back(std::move(v));
  return span(vs, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different spaces");
  // a*x = b*y  <=>  [A | -B] (x;y) = 0
  const std::size_t da = dim();
  const std::size_t db = other.dim();
  if (da == 0 || db == 0) return Subspace(ambient_);
  Matrix m(ambient_, da + db);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t j = 0; j < da; ++j) m(i, j) = basis_(j, i);
    for (std::size_t j = 0; j < db; ++j) m(i, da + j) = -other.basis_(j, i);
  }
  const Matrix ker = nullspace(m);
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    Vector v(ambient_);
    for (std::size_t j = 0; j < da; ++j) {
      for (std::size_t i = 0; i < ambient_; ++i) v[i] += ker(j, k) * basis_(j, i);
    }
    vs.push_back(std::move(v));
  }
  return span(vs, ambient_);
}

Subspace Subspace::orthogonal_complement(const Matrix& gram) const {
  if (gram.rows() != ambient_ || !gram.square()) throw DimensionMismatch("Gram matrix shape mismatch");
  if (dim() == 0) return whole(ambient_);
  const Matrix constraints = basis_ * gram;  // rows: w^T g
  const Matrix ker = nullspace(constraints);
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < ker.cols(); ++k) vs.push_back(ker.col(k));
  return span(vs, ambient_);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

}  // namespace lck
