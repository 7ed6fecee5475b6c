#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lck/construct.hpp"
#include "lck/linalg.hpp"

namespace lck {

/// Unknowns are the entries of u (row-major) followed by those of v.
/// The linear block collects [v + uJ, J] = 0, v*J + Jv = 0, J + u*J + Ju = 0,
/// the derivation equations when h is not abelian, and any extra rows.
class ConstraintSystem {
 public:
  struct Options {
    bool fix_v_zero = false;
    /// Additional equations extra_rows * x = extra_rhs.
    Matrix extra_rows;
    Vector extra_rhs;
  };

  ConstraintSystem(LieAlgebra h, HermitianStructure hs, Scalar c);
  ConstraintSystem(LieAlgebra h, HermitianStructure hs, Scalar c, Options opts);

  const LieAlgebra& h() const { return h_; }
  const HermitianStructure& hs() const { return hs_; }
  const Scalar& c() const { return c_; }
  /// dim h
  std::size_t m() const { return h_.dim(); }
  std::size_t unknowns() const { return 2 * m() * m(); }

  const Matrix& linear() const { return a_; }
  const Vector& rhs() const { return b_; }

  Vector pack(const Matrix& u, const Matrix& v) const;
  Matrix unpack_u(const Vector& x) const;
  Matrix unpack_v(const Vector& x) const;
  /// Linear block residual a x - b.
  Vector linear_residual(const Vector& x) const;
  /// [u, v] - c v.
  Matrix bilinear_residual(const Vector& x) const;

 private:
  LieAlgebra h_;
  HermitianStructure hs_;
  Scalar c_;
  Matrix a_;
  Vector b_;
};

/// Exact affine solution set of the linear block. Throws InfeasibleSystem.
AffineSolution solve_linear(const ConstraintSystem& sys);

struct SearchOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  /// Largest residual entry accepted before rounding is attempted.
  double tol = 1e-8;
  std::size_t threads = 1;
  long max_denominator = 1000000;
  /// Denominator used for free parameters after a block is snapped.
  long parameter_denominator = 12;
  std::size_t max_sweeps = 300;
  bool require_v_nonzero = false;
};

struct SearchHit {
  std::size_t sample;
  KahlerTriple triple;
};

/// Samples the affine solution set, minimises |[u,v] - cv|^2 by coordinate
/// descent, rounds to rationals and keeps exactly verified triples only.
/// Results are deduplicated and ordered by sample index.
std::vector<SearchHit> search_bilinear(const ConstraintSystem& sys, const SearchOptions& opts);

/// Best rational approximation with denominator at most max_den.
mpq_class limit_denominator(double x, long max_den);

struct NilpotentEnumeration {
  /// v = 0: affine family of u (row-major entries, in the given basis).
  AffineSolution v_zero_family;
  std::vector<KahlerTriple> family_samples;
  /// rank(v) = 1, in the adapted basis (w, Jw) with w = e_0; at most one.
  std::vector<KahlerTriple> rank_one;
};

/// Exact case split for nilpotent v on abelian h of dim 2.
NilpotentEnumeration enumerate_nilpotent_v_dim2(const LieAlgebra& h, const HermitianStructure& hs, const Scalar& c,
                                                const std::vector<Scalar>& sample_parameters);

}  // namespace lck
