#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lck/errors.hpp"
#include "lck/matrix.hpp"

namespace lck {

/// Reduced row echelon form. When tracked, `transform * input == reduced`.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  Matrix transform;
};

/// Gauss-Jordan elimination. Exact on rational input; partial pivoting with
/// tolerance() on floating input.
Echelon rref(const Matrix& a, bool track_transform = false);
std::size_t rank(const Matrix& a);
/// Basis of the right kernel, one column per free variable.
Matrix nullspace(const Matrix& a);
Scalar determinant(const Matrix& a);
/// Throws DomainError when singular.
Matrix inverse(const Matrix& a);
/// Unique solution of a x = b for square nonsingular a.
Vector solve(const Matrix& a, const Vector& b);
/// Exact positive-definiteness test through leading principal minors.
bool is_positive_definite(const Matrix& symmetric);

/// Raised by solve_affine when a x = b has no solution. `certificate` is a
/// row vector y with y a = 0 and y b != 0.
class InfeasibleSystem : public Error {
 public:
  InfeasibleSystem(const std::string& what, Vector certificate)
      : Error(what), certificate_(std::move(certificate)) {}
  const Vector& certificate() const { return certificate_; }

 private:
  Vector certificate_;
};

/// x = particular + basis * t, t arbitrary.
struct AffineSolution {
  Vector particular;
  Matrix basis;

  std::size_t dimension() const { return basis.cols(); }
  Vector point(const Vector& coords) const;
};

AffineSolution solve_affine(const Matrix& a, const Vector& b);

/// Linear subspace of K^n kept as a canonical basis: the rows of a reduced
/// row echelon matrix, i.e. the reduced column echelon form of the basis
/// matrix. Two subspaces are equal iff their canonical bases coincide.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Canonical basis vectors as rows.
  const Matrix& basis_rows() const { return basis_; }
  std::vector<Vector> basis() const;
  /// Basis vectors as columns (ambient x dim).
  Matrix basis_matrix() const { return basis_.transpose(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Orthogonal complement with respect to the Gram matrix g.
  Subspace orthogonal_complement(const Matrix& gram) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_;
  Matrix basis_;
};

}  // namespace lck
