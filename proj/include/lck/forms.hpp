#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lck/hermitian.hpp"
#include "lck/lie_algebra.hpp"
#include "lck/matrix.hpp"

namespace lck {

using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing k-tuples from [0, n) in lexicographic order.
std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k);

/// Alternating k-linear form on K^dim. Coefficients are stored on strictly
/// increasing index tuples in lexicographic order; evaluation uses the
/// determinant convention, so for 1-forms (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X).
class KForm {
 public:
  KForm(std::size_t dim, std::size_t degree);
  static KForm constant(std::size_t dim, const Scalar& value);
  /// The 1-form x -> sum_i coeffs[i] x^i.
  static KForm covector(const Vector& coeffs);
  /// The 2-form (x, y) -> x^T m y; m must be antisymmetric.
  static KForm from_matrix(const Matrix& antisymmetric);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient on the i-th increasing tuple (lexicographic position).
  const Scalar& at(std::size_t position) const { return coeffs_[position]; }
  Scalar& at(std::size_t position) { return coeffs_[position]; }
  const Scalar& coefficient(std::span<const std::size_t> increasing) const;
  void set(std::span<const std::size_t> increasing, const Scalar& value);

  /// Value on basis vectors in any order (antisymmetrised, 0 on repeats).
  Scalar on_basis(std::span<const std::size_t> indices) const;
  /// Value on arbitrary vectors.
  Scalar operator()(std::span<const Vector> vectors) const;
  Scalar operator()(const Vector& x) const;
  Scalar operator()(const Vector& x, const Vector& y) const;

  /// Components of a 1-form.
  Vector as_covector() const;
  /// Antisymmetric matrix of a 2-form, m(i,j) = alpha(e_i, e_j).
  Matrix as_matrix() const;

  bool is_zero() const;
  /// Lexicographically first increasing tuple with a nonzero coefficient.
  std::optional<IndexTuple> first_nonzero() const;
  KForm to_backend(Backend b) const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& s, KForm a);
  friend bool operator==(const KForm& a, const KForm& b);

  /// Lexicographic position of an increasing tuple.
  std::size_t position(std::span<const std::size_t> increasing) const;

 private:
  void check_compatible(const KForm& o) const;

  std::size_t dim_;
  std::size_t degree_;
  std::vector<Scalar> coeffs_;
};

KForm wedge(const KForm& a, const KForm& b);
/// Chevalley-Eilenberg differential
/// d a(X0..Xk) = sum_{i<j} (-1)^{i+j} a([Xi,Xj], X0, ^i, ^j, ..., Xk).
KForm ce_differential(const LieAlgebra& alg, const KForm& a);
/// Contraction in the first slot.
KForm interior(const KForm& a, const Vector& x);
/// (i_J a)(X1..Xk) = sum_i a(X1, .., J Xi, .., Xk).
KForm interior_J(const HermitianStructure& h, const KForm& a);

/// Levi-Civita connection of an invariant metric:
/// nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
class Connection {
 public:
  explicit Connection(std::size_t dim) : dim_(dim), gamma_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[(i * dim_ + j) * dim_ + k]; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return gamma_[(i * dim_ + j) * dim_ + k]; }
  Vector covariant(std::size_t i, std::size_t j) const;
  /// nabla_x y for arbitrary invariant fields.
  Vector covariant(const Vector& x, const Vector& y) const;

 private:
  std::size_t dim_;
  std::vector<Scalar> gamma_;
};

/// Koszul formula 2g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
Connection levi_civita(const LieAlgebra& alg, const HermitianStructure& h);
/// Torsion T(e_i,e_j) = nabla_i e_j - nabla_j e_i - [e_i,e_j]; first nonzero.
std::optional<TupleViolation> check_torsion_free(const LieAlgebra& alg, const Connection& nabla);
/// g(nabla_i e_j, e_k) + g(e_j, nabla_i e_k); first nonzero.
std::optional<TupleViolation> check_metric_compatible(const HermitianStructure& h, const Connection& nabla);

/// Covariant derivative of an invariant form along e_i:
/// (nabla_i a)(Y1..Yk) = -sum_s a(.., nabla_i Y_s, ..).
KForm covariant_derivative(const Connection& nabla, const KForm& a, std::size_t i);
/// delta a = -sum_{ij} g^{ij} (nabla_{e_i} a)(e_j, ...). Degree must be >= 1.
KForm codifferential(const LieAlgebra& alg, const HermitianStructure& h, const KForm& a);
KForm codifferential(const HermitianStructure& h, const Connection& nabla, const KForm& a);

/// (L_x g)(Y, Z) = -g([x,Y],Z) - g(Y,[x,Z]) as a symmetric matrix.
Matrix lie_derivative_metric(const LieAlgebra& alg, const HermitianStructure& h, const Vector& x);
/// (L_x J)(Y) = [x, JY] - J[x, Y] as a matrix.
Matrix lie_derivative_J(const LieAlgebra& alg, const HermitianStructure& h, const Vector& x);

}  // namespace lck
