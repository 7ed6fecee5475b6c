#include <gtest/gtest.h>

#include "generators.hpp"
#include "lck/construct.hpp"
#include "lck/errors.hpp"
#include "lck/lie_algebra.hpp"
#include "lck/linalg.hpp"

using namespace lck;
using lck::testing::Rng;

TEST(Scalar, ParsesCanonically) {
  EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
  EXPECT_EQ(Scalar::parse("-10/5").str(), "-2");
  EXPECT_EQ(Scalar::parse("+7").str(), "7");
  EXPECT_EQ(Scalar::parse("0/9").str(), "0");
  EXPECT_EQ(Scalar::parse(" 3 ").str(), "3");
}

TEST(Scalar, RejectsMalformed) {
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", "a", "1/-2", "--1"}) {
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
  }
}

TEST(Scalar, ExactArithmetic) {
  const Scalar a = Scalar::rational(1, 3), b = Scalar::rational(1, 6);
  EXPECT_EQ((a + b).str(), "1/2");
  EXPECT_EQ((a * b).str(), "1/18");
  EXPECT_EQ((a / b).str(), "2");
  EXPECT_EQ(Scalar::rational(9, 4).sqrt().str(), "3/2");
  EXPECT_FALSE(Scalar(2).sqrt().is_exact());
  EXPECT_THROW(a / Scalar(0), DomainError);
}

TEST(Scalar, FloatingComparisonUsesTolerance) {
  const double saved = tolerance();
  set_tolerance(1e-9);
  EXPECT_TRUE(Scalar::floating(1e-12).is_zero());
  EXPECT_FALSE(Scalar::floating(1e-6).is_zero());
  EXPECT_TRUE(Scalar::floating(0.5 + 1e-12) == Scalar::rational(1, 2));
  EXPECT_FALSE((Scalar::floating(0.5) + Scalar(1)).is_exact());
  set_tolerance(saved);
}

TEST(Linalg, RankNullspaceDeterminant) {
  const Matrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(a), 2u);
  const Matrix k = nullspace(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE(is_zero(a * k.col(0)));
  EXPECT_TRUE(determinant(a).is_zero());
  // det of an upper triangular matrix is the product of its diagonal
  const Matrix t{{2, 5, 7}, {0, Scalar::rational(1, 3), 1}, {0, 0, -3}};
  EXPECT_EQ(determinant(t), Scalar(-2));
}

TEST(Linalg, InverseProperty) {
  Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = static_cast<std::size_t>(lck::testing::uniform(rng, 1, 5));
    const Matrix p = lck::testing::random_invertible(rng, n);
    EXPECT_TRUE(inverse(p) * p == Matrix::identity(n));
    EXPECT_TRUE(p * inverse(p) == Matrix::identity(n));
  }
  EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), DomainError);
}

TEST(Linalg, AffineSolutionAndCertificate) {
  const Matrix a{{1, 1, 0}, {0, 1, 1}};
  const Vector b{Scalar(1), Scalar(2)};
  const AffineSolution s = solve_affine(a, b);
  EXPECT_EQ(s.dimension(), 1u);
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Vector x = s.point(lck::testing::random_vector(rng, 1));
    EXPECT_TRUE(is_zero(a * x - b));
  }
  const Matrix inc{{1, 1}, {2, 2}};
  try {
    solve_affine(inc, Vector{Scalar(1), Scalar(3)});
    FAIL() << "expected InfeasibleSystem";
  } catch (const InfeasibleSystem& e) {
    const Vector& y = e.certificate();
    // y A = 0 and y b != 0
    EXPECT_TRUE(y[0] + 2 * y[1] == Scalar(0));
    EXPECT_FALSE((y[0] * 1 + y[1] * 3).is_zero());
  }
}

TEST(Subspace, CanonicalEquality) {
  const Subspace a = Subspace::span({Vector{1, 1, 0}, Vector{0, 1, 1}}, 3);
  const Subspace b = Subspace::span({Vector{1, 2, 1}, Vector{1, 0, -1}}, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  const Subspace perp = a.orthogonal_complement(Matrix::identity(3));
  ASSERT_EQ(perp.dim(), 1u);
  EXPECT_TRUE(perp.contains(Vector{1, -1, 1}));
}

TEST(LieAlgebra, BracketExamples) {
  const HermitianLieAlgebra r2 = build_r2c(Scalar(1));
  EXPECT_EQ(r2.alg.bracket(unit_vector(2, 0), unit_vector(2, 1)), unit_vector(2, 1));
  // d4 basis (U, V, X, JX): [V, JX] = X
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  EXPECT_EQ(d4.alg.bracket(unit_vector(4, 1), unit_vector(4, 3)), unit_vector(4, 2));
  EXPECT_EQ(d4.alg.bracket(unit_vector(4, 0), unit_vector(4, 1)), unit_vector(4, 1));
  EXPECT_EQ(d4.alg.bracket(unit_vector(4, 0), unit_vector(4, 3)), -unit_vector(4, 3));
  EXPECT_TRUE(is_zero(LieAlgebra::abelian(3).bracket(Vector{1, 2, 3}, Vector{4, 5, 6})));
  EXPECT_THROW(d4.alg.bracket(Vector{1, 2}, Vector{1, 2}), DimensionMismatch);
}

TEST(LieAlgebra, JacobiCorruptionIsReported) {
  // so(3)-type constants c_01^2 = c_12^0 = c_20^1 = 1 satisfy Jacobi.
  StructureConstants sc(3);
  sc.set_bracket(0, 1, unit_vector(3, 2));
  sc.set_bracket(1, 2, unit_vector(3, 0));
  sc.set_bracket(2, 0, unit_vector(3, 1));
  EXPECT_FALSE(check_jacobi(sc).has_value());
  // Adding c_01^0 = 1: cyclic sum at (0,1,2) is
  // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = [e0+e2, e2] + 0 + 0 = [e0,e2] = -e1.
  sc(0, 1, 0) = 1;
  sc(1, 0, 0) = -1;
  const auto v = check_jacobi(sc);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(v->residual, (Vector{0, -1, 0}));
  EXPECT_THROW(LieAlgebra{sc}, InvariantViolation);
}

TEST(LieAlgebra, AntisymmetryViolationRejected) {
  StructureConstants sc(2);
  sc(0, 1, 1) = 1;
  EXPECT_TRUE(check_antisymmetry(sc).has_value());
  EXPECT_THROW(LieAlgebra{sc}, InvariantViolation);
}

TEST(LieAlgebra, DerivedSeriesExamples) {
  EXPECT_EQ(derived_series(LieAlgebra::abelian(4)), (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(derived_series(build_r2c(Scalar(1)).alg), (std::vector<std::size_t>{2, 1, 0}));
  // d4: [g,g] = <V, X, JX>; inside it only [V, JX] = X survives, then 0.
  EXPECT_EQ(derived_series(semidirect(build_d4()).alg), (std::vector<std::size_t>{4, 3, 1, 0}));
  EXPECT_EQ(derived_series(lck::testing::so3()), (std::vector<std::size_t>{3}));
  EXPECT_FALSE(is_solvable(lck::testing::sl2()));
  EXPECT_TRUE(is_solvable(lck::testing::heisenberg(2)));
}

TEST(LieAlgebra, UnimodularExamples) {
  EXPECT_TRUE(is_unimodular(LieAlgebra::abelian(3)));
  EXPECT_TRUE(is_unimodular(semidirect(build_d4()).alg));
  const LieAlgebra ce = semidirect(build_counterexample()).alg;
  EXPECT_FALSE(is_unimodular(ce));
  // trace ad_U = c + trace u = -1 + (-1)
  EXPECT_EQ(ad_trace(ce, unit_vector(4, 0)), Scalar(-2));
}

TEST(LieAlgebra, DerivedSubalgebraExamples) {
  EXPECT_EQ(derived_subalgebra(LieAlgebra::abelian(3)).dim(), 0u);
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  const Subspace uperp = Subspace::span({unit_vector(4, 0)}, 4).orthogonal_complement(d4.h.g());
  EXPECT_EQ(derived_subalgebra(d4.alg), uperp);
  const HermitianLieAlgebra ce = semidirect(build_counterexample());
  const Subspace dce = derived_subalgebra(ce.alg);
  EXPECT_EQ(dce, Subspace::span({unit_vector(4, 1), unit_vector(4, 2)}, 4));  // <V, A>
}

TEST(LieAlgebraProperty, DerivedSeriesStrictlyDecreasing) {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const LieAlgebra a = lck::testing::random_lie_algebra(rng);
    const auto s = derived_series(a);
    ASSERT_FALSE(s.empty());
    EXPECT_EQ(s.front(), a.dim());
    for (std::size_t k = 1; k < s.size(); ++k) EXPECT_LT(s[k], s[k - 1]);
    EXPECT_EQ(is_solvable(a), s.back() == 0);
  }
}

TEST(LieAlgebraProperty, UnimodularMatchesRandomTraces) {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    const LieAlgebra a = lck::testing::random_lie_algebra(rng);
    bool all_zero = true;
    for (int k = 0; k < 20; ++k) all_zero = all_zero && ad_trace(a, lck::testing::random_vector(rng, a.dim())).is_zero();
    EXPECT_EQ(is_unimodular(a), all_zero);
  }
}

TEST(LieAlgebraProperty, BasisChangePreservesInvariants) {
  Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const LieAlgebra a = lck::testing::random_lie_algebra(rng);
    const Matrix p = lck::testing::random_invertible(rng, a.dim());
    const LieAlgebra b = a.change_basis(p);
    EXPECT_EQ(derived_series(a), derived_series(b));
    EXPECT_EQ(is_unimodular(a), is_unimodular(b));
    // bracket is natural: p [x, y]_b = [p x, p y]_a
    const Vector x = lck::testing::random_vector(rng, a.dim()), y = lck::testing::random_vector(rng, a.dim());
    EXPECT_EQ(p * b.bracket(x, y), a.bracket(p * x, p * y));
  }
}

TEST(LieAlgebraProperty, FloatBackendAgrees) {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const LieAlgebra a = lck::testing::random_lie_algebra(rng);
    const LieAlgebra f = a.to_backend(Backend::floating);
    const Vector x = lck::testing::random_vector(rng, a.dim()), y = lck::testing::random_vector(rng, a.dim());
    const Vector ex = a.bracket(x, y);
    const Vector fx = f.bracket(to_backend(x, Backend::floating), to_backend(y, Backend::floating));
    for (std::size_t k = 0; k < ex.size(); ++k) EXPECT_NEAR(ex[k].to_double(), fx[k].to_double(), 1e-9);
    EXPECT_EQ(is_unimodular(a), is_unimodular(f));
    EXPECT_EQ(derived_series(a), derived_series(f));
  }
}
