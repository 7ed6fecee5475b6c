#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "lck/analysis.hpp"
#include "lck/construct.hpp"
#include "lck/errors.hpp"
#include "lck/forms.hpp"

using namespace lck;
using lck::testing::Rng;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

int permutation_sign(std::vector<std::size_t> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

Scalar factorial(std::size_t k) {
  Scalar f(1);
  for (std::size_t i = 2; i <= k; ++i) f *= Scalar(static_cast<long>(i));
  return f;
}

// (a ^ b)(X_1..X_{k+l}) = 1/(k! l!) sum over all permutations, on basis vectors.
Scalar wedge_oracle(const KForm& a, const KForm& b, const std::vector<std::size_t>& idx) {
  const std::size_t k = a.degree(), l = b.degree();
  std::vector<std::size_t> p(k + l);
  std::iota(p.begin(), p.end(), 0);
  Scalar sum(0);
  do {
    std::vector<std::size_t> ia, ib;
    for (std::size_t s = 0; s < k; ++s) ia.push_back(idx[p[s]]);
    for (std::size_t s = 0; s < l; ++s) ib.push_back(idx[p[k + s]]);
    const Scalar va = k == 0 ? a.at(0) : a.on_basis(ia);
    const Scalar vb = l == 0 ? b.at(0) : b.on_basis(ib);
    sum += Scalar(permutation_sign(p)) * va * vb;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum / (factorial(k) * factorial(l));
}

// Induced inner product on k-forms for k = 1, 2.
Scalar form_inner(const HermitianStructure& h, const KForm& a, const KForm& b) {
  const Matrix& gi = h.g_inverse();
  const std::size_t n = h.dim();
  Scalar s(0);
  if (a.degree() == 1) return bilinear(gi, a.as_covector(), b.as_covector());
  const Matrix A = a.as_matrix(), B = b.as_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s += gi(i, k) * gi(j, l) * A(i, j) * B(k, l);
  return s / Scalar(2);
}

// Random Hermitian structure on an even-dimensional algebra.
HermitianStructure random_hermitian(Rng& rng, std::size_t dim) {
  return standard_hermitian(dim).change_basis(lck::testing::random_invertible(rng, dim, 1));
}

LieAlgebra random_even_algebra(Rng& rng) {
  LieAlgebra a = lck::testing::random_lie_algebra(rng);
  if (a.dim() % 2 == 1) a = direct_sum(a, LieAlgebra::abelian(1));
  return a;
}

}  // namespace

TEST(Wedge, Examples) {
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  const LeeData lee = lee_data(d4.alg, d4.h);
  EXPECT_TRUE(wedge(lee.theta, lee.theta).is_zero());
  EXPECT_EQ(wedge(lee.eta, lee.theta)(e(4, 0), e(4, 1)), Scalar(-1));
  const KForm omega = fundamental_form(d4.h);
  EXPECT_EQ(wedge(lee.theta, omega)(std::vector<Vector>{e(4, 0), e(4, 2), e(4, 3)}), Scalar(-1));
  EXPECT_THROW(wedge(KForm(3, 1), KForm(4, 1)), DimensionMismatch);
  EXPECT_TRUE(wedge(KForm::covector(Vector{1, 0}), KForm::from_matrix(Matrix{{0, 1}, {-1, 0}})).is_zero());
}

TEST(WedgeProperty, MatchesPermutationOracle) {
  Rng rng(31);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = static_cast<std::size_t>(lck::testing::uniform(rng, 2, 5));
    const std::size_t k = static_cast<std::size_t>(lck::testing::uniform(rng, 0, 2));
    const std::size_t l = static_cast<std::size_t>(lck::testing::uniform(rng, 1, std::min<long>(3, static_cast<long>(n - k))));
    const KForm a = lck::testing::random_form(rng, n, k), b = lck::testing::random_form(rng, n, l);
    const KForm w = wedge(a, b);
    for (const auto& idx : increasing_tuples(n, k + l)) EXPECT_EQ(w.coefficient(idx), wedge_oracle(a, b, idx));
  }
}

TEST(WedgeProperty, GradedCommutativeAndAssociative) {
  Rng rng(32);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 5;
    const std::size_t k = static_cast<std::size_t>(lck::testing::uniform(rng, 1, 2));
    const std::size_t l = static_cast<std::size_t>(lck::testing::uniform(rng, 1, 2));
    const KForm a = lck::testing::random_form(rng, n, k), b = lck::testing::random_form(rng, n, l), c = lck::testing::random_form(rng, n, 1);
    const Scalar sign = (k * l) % 2 == 0 ? Scalar(1) : Scalar(-1);
    EXPECT_EQ(wedge(a, b), sign * wedge(b, a));
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(KForm, EvaluationIsAntisymmetric) {
  Rng rng(33);
  const KForm f = lck::testing::random_form(rng, 5, 3);
  const std::vector<std::size_t> idx{0, 2, 4}, swapped{2, 0, 4}, repeated{1, 1, 3};
  EXPECT_EQ(f.on_basis(swapped), -f.on_basis(idx));
  EXPECT_TRUE(f.on_basis(repeated).is_zero());
  EXPECT_TRUE(KForm(3, 4).is_zero());
  EXPECT_EQ(KForm(3, 4).size(), 0u);
}

TEST(Differential, Examples) {
  Rng rng(34);
  EXPECT_TRUE(ce_differential(LieAlgebra::abelian(4), lck::testing::random_form(rng, 4, 2)).is_zero());
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  const LeeData lee = lee_data(d4.alg, d4.h);
  EXPECT_TRUE(ce_differential(d4.alg, lee.theta).is_zero());
  EXPECT_EQ(ce_differential(d4.alg, lee.eta)(e(4, 0), e(4, 1)), Scalar(-1));
}

TEST(DifferentialProperty, OneFormsMatchBracketFormula) {
  Rng rng(35);
  for (int it = 0; it < 40; ++it) {
    const LieAlgebra a = lck::testing::random_lie_algebra(rng);
    const KForm alpha = lck::testing::random_form(rng, a.dim(), 1);
    const KForm da = ce_differential(a, alpha);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(da(e(a.dim(), i), e(a.dim(), j)), -alpha(a.bracket_basis(i, j)));
  }
}

TEST(DifferentialProperty, SquareIsZero) {
  Rng rng(36);
  for (int it = 0; it < 200; ++it) {
    const LieAlgebra a = lck::testing::random_lie_algebra(rng);
    const std::size_t k = static_cast<std::size_t>(lck::testing::uniform(rng, 0, std::min<long>(3, static_cast<long>(a.dim()))));
    const KForm f = lck::testing::random_form(rng, a.dim(), k);
    EXPECT_TRUE(ce_differential(a, ce_differential(a, f)).is_zero()) << "iteration " << it;
  }
}

TEST(Connection, R2Christoffels) {
  const HermitianLieAlgebra r2 = build_r2c(Scalar(1));
  const Connection nabla = levi_civita(r2.alg, r2.h);
  const Vector U = e(2, 0), V = e(2, 1);
  EXPECT_EQ(nabla.covariant(V, V), U);
  EXPECT_EQ(nabla.covariant(V, U), -V);
  EXPECT_TRUE(is_zero(nabla.covariant(U, U)));
  EXPECT_TRUE(is_zero(nabla.covariant(U, V)));
  const Connection flat = levi_civita(LieAlgebra::abelian(4), standard_hermitian(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_TRUE(is_zero(flat.covariant(i, j)));
}

// Oracle: the unique torsion-free metric connection, as the solution of one
// dense linear system in all n^3 Christoffel symbols.
TEST(Connection, MatchesDenseLinearSolve) {
  Rng rng(37);
  std::vector<HermitianLieAlgebra> cases{semidirect(build_d4()), semidirect(build_counterexample())};
  for (int i = 0; i < 4; ++i) cases.push_back(lck::testing::random_lck_instance(rng));
  for (const auto& a : cases) {
    const std::size_t n = a.alg.dim();
    const auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector r(n * n * n);
          r[idx(i, j, k)] += 1;
          r[idx(j, i, k)] -= 1;
          rows.push_back(r);
          rhs.push_back(a.alg.constant(i, j, k));
          Vector m(n * n * n);
          for (std::size_t l = 0; l < n; ++l) {
            m[idx(i, j, l)] += a.h.g()(l, k);
            m[idx(i, k, l)] += a.h.g()(j, l);
          }
          rows.push_back(m);
          rhs.push_back(Scalar(0));
        }
    const AffineSolution sol = solve_affine(Matrix::from_rows(rows, n * n * n), rhs);
    ASSERT_EQ(sol.dimension(), 0u);
    const Connection nabla = levi_civita(a.alg, a.h);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(nabla(i, j, k), sol.particular[idx(i, j, k)]);
  }
}

TEST(ConnectionProperty, TorsionFreeAndMetric) {
  Rng rng(38);
  for (int it = 0; it < 60; ++it) {
    const LieAlgebra a = random_even_algebra(rng);
    const HermitianStructure h = random_hermitian(rng, a.dim());
    const Connection nabla = levi_civita(a, h);
    EXPECT_FALSE(check_torsion_free(a, nabla).has_value());
    EXPECT_FALSE(check_metric_compatible(h, nabla).has_value());
  }
}

TEST(Codifferential, Examples) {
  Rng rng(39);
  EXPECT_TRUE(codifferential(LieAlgebra::abelian(4), standard_hermitian(4), lck::testing::random_form(rng, 4, 1)).is_zero());
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  EXPECT_TRUE(codifferential(d4.alg, d4.h, lee_data(d4.alg, d4.h).theta).is_zero());
  const HermitianLieAlgebra ce = semidirect(build_counterexample());
  const KForm dt = codifferential(ce.alg, ce.h, lee_data(ce.alg, ce.h).theta);
  EXPECT_EQ(dt.at(0), Scalar(-2));
  EXPECT_THROW(codifferential(d4.alg, d4.h, KForm::constant(4, Scalar(1))), DomainError);
}

// On unimodular algebras delta is the algebraic adjoint of d.
TEST(CodifferentialProperty, AdjointOfDOnUnimodular) {
  Rng rng(40);
  int checked = 0;
  for (int it = 0; it < 200 && checked < 40; ++it) {
    const LieAlgebra a = random_even_algebra(rng);
    if (!is_unimodular(a)) continue;
    ++checked;
    const HermitianStructure h = random_hermitian(rng, a.dim());
    const KForm beta = lck::testing::random_form(rng, a.dim(), 1);
    const KForm alpha = lck::testing::random_form(rng, a.dim(), 2);
    EXPECT_EQ(form_inner(h, ce_differential(a, beta), alpha), form_inner(h, beta, codifferential(a, h, alpha)));
    EXPECT_TRUE(codifferential(a, h, beta).is_zero());
  }
  EXPECT_GE(checked, 20);
}

TEST(CodifferentialProperty, DeltaThetaIsTraceAdU) {
  Rng rng(41);
  for (int it = 0; it < 30; ++it) {
    const HermitianLieAlgebra a = lck::testing::random_lck_instance(rng);
    const LeeData lee = lee_data(a.alg, a.h);
    EXPECT_EQ(codifferential(a.alg, a.h, lee.theta).at(0), ad_trace(a.alg, lee.U));
  }
}

TEST(Interior, Examples) {
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  const LeeData lee = lee_data(d4.alg, d4.h);
  EXPECT_EQ(interior(wedge(lee.theta, lee.eta), lee.U), lee.eta);
  EXPECT_EQ(interior(fundamental_form(d4.h), lee.V), lee.theta);
  EXPECT_TRUE(interior(KForm(4, 2), lee.U).is_zero());
  EXPECT_THROW(interior(KForm::constant(4, Scalar(1)), lee.U), DomainError);
  EXPECT_EQ(interior_J(d4.h, lee.eta), lee.theta);
  EXPECT_EQ(interior_J(d4.h, lee.theta), Scalar(-1) * lee.eta);
  EXPECT_TRUE(interior_J(d4.h, ce_differential(d4.alg, lee.eta)).is_zero());
}

TEST(InteriorProperty, DoubleJOnOneForms) {
  Rng rng(42);
  for (int it = 0; it < 50; ++it) {
    const std::size_t dim = 2 * static_cast<std::size_t>(lck::testing::uniform(rng, 1, 3));
    const HermitianStructure h = random_hermitian(rng, dim);
    const KForm t = lck::testing::random_form(rng, dim, 1);
    EXPECT_EQ(interior_J(h, interior_J(h, t)), Scalar(-1) * t);
  }
}

TEST(LieDerivative, Examples) {
  Rng rng(43);
  const Vector x = lck::testing::random_vector(rng, 4);
  EXPECT_TRUE(lie_derivative_metric(LieAlgebra::abelian(4), standard_hermitian(4), x).is_zero());
  EXPECT_TRUE(lie_derivative_J(LieAlgebra::abelian(4), standard_hermitian(4), x).is_zero());
  const HermitianLieAlgebra r2 = build_r2c(Scalar(1));
  EXPECT_EQ(lie_derivative_metric(r2.alg, r2.h, e(2, 0))(1, 1), Scalar(-2));
  const HermitianLieAlgebra d4 = semidirect(build_d4());
  EXPECT_FALSE(lie_derivative_metric(d4.alg, d4.h, e(4, 1)).is_zero());
  // (L_U J)(X) = [U, JX] - J[U, X] = -JX
  EXPECT_EQ(lie_derivative_J(d4.alg, d4.h, e(4, 0)).col(2), -e(4, 3));
}

TEST(LieDerivativeProperty, LieVAndKillingOnLckInstances) {
  Rng rng(44);
  for (int it = 0; it < 40; ++it) {
    const HermitianLieAlgebra a = lck::testing::random_lck_instance(rng);
    const LeeData lee = lee_data(a.alg, a.h);
    const Matrix lg = lie_derivative_metric(a.alg, a.h, lee.V);
    const Matrix lj = lie_derivative_J(a.alg, a.h, lee.V);
    // (L_V g)(Y, Z) = g(Y, ((L_V J) J) Z) on basis vectors
    for (std::size_t y = 0; y < a.alg.dim(); ++y)
      for (std::size_t z = 0; z < a.alg.dim(); ++z)
        EXPECT_EQ(lg(y, z), a.h.inner(e(a.alg.dim(), y), lj * (a.h.J() * e(a.alg.dim(), z))));
    EXPECT_EQ(lg.is_zero(), lj.is_zero());
  }
}

TEST(LieDerivative, KillingAntiLeeOnVaismanExample) {
  // R + heis(3) with [e1, e2] = e3, J e1 = e2, J e3 = e0
  StructureConstants sc(4);
  sc.set_bracket(1, 2, e(4, 3));
  Matrix J(4, 4);
  J(2, 1) = 1;
  J(1, 2) = -1;
  J(0, 3) = 1;
  J(3, 0) = -1;
  const LieAlgebra alg(sc);
  const HermitianStructure h(Matrix::identity(4), J);
  ASSERT_TRUE(is_lck(alg, h).holds());
  const LeeData lee = lee_data(alg, h);
  ASSERT_FALSE(is_zero(lee.V));
  EXPECT_TRUE(lie_derivative_metric(alg, h, lee.V).is_zero());
  EXPECT_TRUE(lie_derivative_J(alg, h, lee.V).is_zero());
  EXPECT_TRUE(is_zero(alg.bracket(lee.U, lee.V)));
}

TEST(FormsProperty, FloatBackendAgrees) {
  // metric entries reach ~1e3 after two random basis changes
  const double saved = tolerance();
  set_tolerance(1e-7);
  Rng rng(45);
  for (int it = 0; it < 30; ++it) {
    const HermitianLieAlgebra a = lck::testing::random_lck_instance(rng);
    const LieAlgebra fa = a.alg.to_backend(Backend::floating);
    const HermitianStructure fh = a.h.to_backend(Backend::floating);
    const KForm omega = fundamental_form(a.h);
    const KForm d_exact = ce_differential(a.alg, omega);
    const KForm d_float = ce_differential(fa, fundamental_form(fh));
    for (std::size_t p = 0; p < d_exact.size(); ++p) EXPECT_NEAR(d_exact.at(p).to_double(), d_float.at(p).to_double(), 1e-7);
    const Connection ne = levi_civita(a.alg, a.h), nf = levi_civita(fa, fh);
    const std::size_t n = a.alg.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(ne(i, j, k).to_double(), nf(i, j, k).to_double(), 1e-7);
    EXPECT_FALSE(check_torsion_free(fa, nf).has_value());
    EXPECT_FALSE(check_metric_compatible(fh, nf).has_value());
  }
  set_tolerance(saved);
}
