#include "lck/hermitian.hpp"

#include <sstream>

#include "lck/errors.hpp"
#include "lck/linalg.hpp"

namespace lck {

namespace {

std::string first_bad_entry(const char* what, const Matrix& residual) {
  for (std::size_t i = 0; i < residual.rows(); ++i) {
    for (std::size_t j = 0; j < residual.cols(); ++j) {
      if (!residual(i, j).is_zero()) {
        std::ostringstream os;
        os << what << " fails at entry (" << i << "," << j << ") with residual " << residual(i, j);
        return os.str();
      }
    }
  }
  return what;
}

}  // namespace

HermitianStructure::HermitianStructure(Matrix gram, Matrix complex_structure)
    : g_(std::move(gram)), j_(std::move(complex_structure)) {
  if (!g_.square() || !j_.square() || g_.rows() != j_.rows()) {
    throw DimensionMismatch("metric and complex structure must be square of equal size");
  }
  if (g_.rows() % 2 != 0) throw InvariantViolation("almost complex structure needs even dimension");
  const Matrix asym = g_ - g_.transpose();
  if (!asym.is_zero()) throw InvariantViolation(first_bad_entry("metric symmetry", asym));
  if (!is_positive_definite(g_)) throw InvariantViolation("metric is not positive definite");
  const Matrix jsq = j_ * j_ + Matrix::identity(dim());
  if (!jsq.is_zero()) throw InvariantViolation(first_bad_entry("J^2 = -Id", jsq));
  const Matrix compat = j_.transpose() * g_ * j_ - g_;
  if (!compat.is_zero()) throw InvariantViolation(first_bad_entry("g(JX,JY) = g(X,Y)", compat));
  g_inv_ = inverse(g_);
}

HermitianStructure HermitianStructure::to_backend(Backend b) const {
  return HermitianStructure(g_.to_backend(b), j_.to_backend(b));
}

HermitianStructure HermitianStructure::change_basis(const Matrix& p) const {
  return HermitianStructure(p.transpose() * g_ * p, inverse(p) * j_ * p);
}

HermitianStructure HermitianStructure::scaled(const Scalar& factor) const {
  if (factor.sign() <= 0) throw DomainError("metric scale factor must be positive");
  return HermitianStructure(factor * g_, j_);
}

HermitianStructure standard_hermitian(std::size_t dim) {
  if (dim % 2 != 0) throw DomainError("standard Hermitian structure needs even dimension");
  Matrix j(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; i += 2) {
    j(i + 1, i) = 1;
    j(i, i + 1) = -1;
  }
  return HermitianStructure(Matrix::identity(dim), std::move(j));
}

HermitianStructure direct_sum(const HermitianStructure& a, const HermitianStructure& b) {
  return HermitianStructure(Matrix::direct_sum(a.g(), b.g()), Matrix::direct_sum(a.J(), b.J()));
}

}  // namespace lck
