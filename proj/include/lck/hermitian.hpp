#pragma once

#include "lck/lie_algebra.hpp"
#include "lck/matrix.hpp"

namespace lck {

/// Metric g (Gram matrix in the algebra's basis) and almost complex structure
/// J (matrix acting on column vectors). Construction checks that g is
/// symmetric positive definite, J^2 = -1 and J^T g J = g.
class HermitianStructure {
 public:
  HermitianStructure(Matrix gram, Matrix complex_structure);

  const Matrix& g() const { return g_; }
  const Matrix& J() const { return j_; }
  const Matrix& g_inverse() const { return g_inv_; }
  std::size_t dim() const { return g_.rows(); }

  Scalar inner(const Vector& x, const Vector& y) const { return bilinear(g_, x, y); }
  Vector apply_J(const Vector& x) const { return j_ * x; }
  /// Metric dual of a covector: g^{-1} alpha.
  Vector sharp(const Vector& covector) const { return g_inv_ * covector; }
  /// Metric dual of a vector: g x.
  Vector flat(const Vector& x) const { return g_ * x; }

  HermitianStructure to_backend(Backend b) const;
  /// Same structure written in the basis given by the columns of p.
  HermitianStructure change_basis(const Matrix& p) const;
  /// Structure with g multiplied by a positive factor.
  HermitianStructure scaled(const Scalar& factor) const;

 private:
  Matrix g_;
  Matrix j_;
  Matrix g_inv_;
};

/// Standard structure on K^{2m}: g = Id, J e_{2i} = e_{2i+1}.
HermitianStructure standard_hermitian(std::size_t dim);

/// Orthogonal direct sum.
HermitianStructure direct_sum(const HermitianStructure& a, const HermitianStructure& b);

}  // namespace lck
