#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lck/linalg.hpp"
#include "lck/matrix.hpp"

namespace lck {

/// Raw structure constants c_{ij}^k with [e_i, e_j] = sum_k c_{ij}^k e_k.
/// No invariants are enforced; LieAlgebra validates.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }
  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  StructureConstants to_backend(Backend b) const;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

  std::size_t dim_;
  std::vector<Scalar> c_;
};

/// Outcome of an exhaustive identity check over basis tuples: empty when the
/// identity holds, otherwise the lexicographically first violating tuple and
/// the residual vector there.
struct TupleViolation {
  std::vector<std::size_t> indices;
  Vector residual;
};

std::optional<TupleViolation> check_antisymmetry(const StructureConstants& c);
/// Cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] over i<j<k.
std::optional<TupleViolation> check_jacobi(const StructureConstants& c);

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis. Construction rejects antisymmetry and Jacobi violations.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureConstants constants);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return c_.dim(); }
  const StructureConstants& constants() const { return c_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const { return c_.bracket_basis(i, j); }
  /// Matrix of ad_x = [x, .].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;
  bool is_abelian() const;
  LieAlgebra to_backend(Backend b) const;
  /// Structure constants in the basis given by the columns of p.
  LieAlgebra change_basis(const Matrix& p) const;

 private:
  StructureConstants c_;
};

/// Always holds for a constructed LieAlgebra; kept for symmetry with the raw
/// overload.
std::optional<TupleViolation> check_jacobi(const LieAlgebra& a);

/// Span of [x, y] for x in a, y in b.
Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b);
Subspace derived_subalgebra(const LieAlgebra& alg);
/// Dimensions of g, g^(1), g^(2), ... until the series stabilises.
std::vector<std::size_t> derived_series(const LieAlgebra& alg);
bool is_solvable(const LieAlgebra& alg);
bool is_unimodular(const LieAlgebra& alg);
/// trace(ad_x).
Scalar ad_trace(const LieAlgebra& alg, const Vector& x);
bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);
bool is_ideal(const LieAlgebra& alg, const Subspace& s);
/// [s, s] = 0.
bool is_abelian_subspace(const LieAlgebra& alg, const Subspace& s);

/// Direct sum of two Lie algebras (basis of a followed by basis of b).
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace lck
