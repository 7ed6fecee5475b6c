#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lck/hermitian.hpp"
#include "lck/lie_algebra.hpp"
#include "lck/matrix.hpp"

namespace lck {

/// A Lie algebra together with a Hermitian structure on it.
struct HermitianLieAlgebra {
  LieAlgebra alg;
  HermitianStructure h;
};

/// Kähler Lie algebra h (dim 2n) with two derivations u, v and a constant c.
/// Construction checks that h is Kähler and that u, v are derivations; the
/// matrix conditions are left to check_triple.
class KahlerTriple {
 public:
  KahlerTriple(LieAlgebra h, HermitianStructure hs, Matrix u, Matrix v, Scalar c);

  const LieAlgebra& h() const { return h_; }
  const HermitianStructure& hs() const { return hs_; }
  const Matrix& u() const { return u_; }
  const Matrix& v() const { return v_; }
  const Scalar& c() const { return c_; }
  std::size_t n() const { return h_.dim() / 2; }

  KahlerTriple to_backend(Backend b) const;
  /// Same triple written in the basis given by the columns of p.
  KahlerTriple change_basis(const Matrix& p) const;

 private:
  LieAlgebra h_;
  HermitianStructure hs_;
  Matrix u_;
  Matrix v_;
  Scalar c_;
};

/// x^* = g^{-1} x^T g.
Matrix adjoint(const HermitianStructure& h, const Matrix& x);

/// True iff x[A,B] = [xA,B] + [A,xB] on all basis pairs.
bool is_derivation(const LieAlgebra& alg, const Matrix& x);

struct ConditionResidual {
  std::string name;
  Matrix residual;
  bool holds() const { return residual.is_zero(); }
  Scalar norm() const { return residual.max_abs(); }
};

struct TripleReport {
  /// [u,v] = cv, [v + uJ, J] = 0, v*J + Jv = 0, J + u*J + Ju = 0.
  std::vector<ConditionResidual> conditions;
  /// [v + Ju, J], reported for comparison with the integrability condition.
  ConditionResidual alternative_integrability;
  bool abelian = false;

  bool in_H() const;
  bool in_A() const { return abelian && in_H(); }
  /// The two conditions characterising d Omega = theta ^ Omega.
  bool lcs_conditions_hold() const { return conditions[2].holds() && conditions[3].holds(); }
  bool integrability_holds() const { return conditions[1].holds(); }
};

TripleReport check_triple(const KahlerTriple& t);

/// Basis (U, V, h basis); [U,V] = cV, [U,X] = uX, [V,X] = vX, [X,Y] = [X,Y]_h;
/// g = Id on <U,V> plus g_h, J U = V. Throws InvariantViolation on a Jacobi
/// failure.
HermitianLieAlgebra semidirect(const KahlerTriple& t);

/// A_{n,c} -> A_{n,target}. Passes through the normalised class c = 1 with
/// u -> u/c + (1-c)/(2c) Id, v -> v/c. Requires abelian h and nonzero c, target.
KahlerTriple correspondence(const KahlerTriple& t, const Scalar& target);

struct Dim4Class {
  enum class Tag { family_gb, d4 };
  Tag tag;
  /// Parameter of the family; zero for d4.
  Scalar b;
  /// Adapted basis vector Y (family) or X in ker v (d4); the adapted basis is
  /// (x, Jx), orthogonal with equal squared norms.
  Vector x;
  Scalar norm_sq;

  std::string label() const;
};

/// Classifies a member of A_{1,1}. Exact for any rational metric on h.
Dim4Class classify_dim4(const KahlerTriple& t);

/// Equal tags, and equal b for the family (compared literally).
bool triples_isomorphic_dim4(const KahlerTriple& a, const KahlerTriple& b);

/// r_{2,c}: [U,V] = cV, g = Id, JU = V.
HermitianLieAlgebra build_r2c(const Scalar& c);
/// u = [[-1/2, -b], [b, -1/2]], v = 0, c = 1 on abelian h of dim 2.
KahlerTriple build_gb(const Scalar& b);
/// u = [[0, 0], [0, -1]], v = [[0, 1], [0, 0]], c = 1 on abelian h of dim 2.
KahlerTriple build_d4();
/// h abelian of dim 2n, per block u = diag((n-1)/2, -(n+1)/2), v = [[0, n], [0, 0]], c = n.
KahlerTriple build_dim(long n);
/// h = <A, B>, [A,B] = A, JA = B; uA = -A, uB = 0, vA = 0, vB = -A, c = -1.
KahlerTriple build_counterexample();

/// Abelian h of dim 2n with g = Id and the standard J.
HermitianLieAlgebra abelian_kahler(std::size_t dim);

}  // namespace lck
