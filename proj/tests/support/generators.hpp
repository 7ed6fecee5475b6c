#pragma once

// Hand-rolled random generators for property tests. Everything is exact and
// driven by std::mt19937_64 so failures reproduce from the seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lck/construct.hpp"
#include "lck/forms.hpp"
#include "lck/linalg.hpp"

namespace lck::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Scalar rational(Rng& rng, long range = 5, long max_den = 4) {
  return Scalar::rational(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

inline Scalar nonzero_rational(Rng& rng, long range = 5, long max_den = 4) {
  for (;;) {
    Scalar s = rational(rng, range, max_den);
    if (!s.is_zero()) return s;
  }
}

inline Vector random_vector(Rng& rng, std::size_t n, long range = 3, long max_den = 3) {
  Vector v(n);
  for (auto& x : v) x = rational(rng, range, max_den);
  return v;
}

inline Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range = 3, long max_den = 2) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(rng, range, max_den);
  return m;
}

/// Invertible matrix with small rational entries.
inline Matrix random_invertible(Rng& rng, std::size_t n, long range = 2) {
  for (;;) {
    Matrix p = random_matrix(rng, n, n, range, 2);
    for (std::size_t i = 0; i < n; ++i) p(i, i) += Scalar(2);
    if (!determinant(p).is_zero()) return p;
  }
}

/// Invertible matrix commuting with the standard J on K^{2m}: blocks a + bJ.
inline Matrix random_complex_linear(Rng& rng, std::size_t dim) {
  Matrix p(dim, dim);
  for (std::size_t bi = 0; bi < dim / 2; ++bi) {
    for (std::size_t bj = 0; bj < dim / 2; ++bj) {
      const Scalar a = rational(rng, 2, 2) + (bi == bj ? Scalar(3) : Scalar(0));
      const Scalar b = rational(rng, 2, 2);
      p(2 * bi, 2 * bj) = a;
      p(2 * bi, 2 * bj + 1) = -b;
      p(2 * bi + 1, 2 * bj) = b;
      p(2 * bi + 1, 2 * bj + 1) = a;
    }
  }
  if (determinant(p).is_zero()) return Matrix::identity(dim);
  return p;
}

/// Rational rotation from a Pythagorean parametrisation.
inline Matrix random_rotation2(Rng& rng) {
  const long a = uniform(rng, 1, 9), b = uniform(rng, 0, 9);
  const long d = a * a + b * b;
  const Scalar cs = Scalar::rational(a * a - b * b, d), sn = Scalar::rational(2 * a * b, d);
  return Matrix{{cs, -sn}, {sn, cs}};
}

inline LieAlgebra heisenberg(std::size_t k) {
  const std::size_t n = 2 * k + 1;
  StructureConstants sc(n);
  for (std::size_t i = 0; i < k; ++i) sc.set_bracket(i, k + i, unit_vector(n, n - 1));
  return LieAlgebra(std::move(sc));
}

inline LieAlgebra so3() {
  StructureConstants sc(3);
  sc.set_bracket(0, 1, unit_vector(3, 2));
  sc.set_bracket(1, 2, unit_vector(3, 0));
  sc.set_bracket(2, 0, unit_vector(3, 1));
  return LieAlgebra(std::move(sc));
}

inline LieAlgebra sl2() {
  // [h, e] = 2e, [h, f] = -2f, [e, f] = h
  StructureConstants sc(3);
  sc.set_bracket(0, 1, Vector{0, 2, 0});
  sc.set_bracket(0, 2, Vector{0, 0, -2});
  sc.set_bracket(1, 2, Vector{1, 0, 0});
  return LieAlgebra(std::move(sc));
}

/// R x_D R^k: [e_0, e_j] = D e_j for j >= 1.
inline LieAlgebra semidirect_line(const Matrix& d) {
  const std::size_t k = d.rows(), n = k + 1;
  StructureConstants sc(n);
  for (std::size_t j = 0; j < k; ++j) {
    Vector b(n);
    for (std::size_t i = 0; i < k; ++i) b[1 + i] = d(i, j);
    sc.set_bracket(0, 1 + j, b);
  }
  return LieAlgebra(std::move(sc));
}

/// A Lie algebra of dimension 2..7 from one of several families, optionally
/// a direct sum, in a random rational basis.
inline LieAlgebra random_lie_algebra(Rng& rng) {
  const auto base = [&]() -> LieAlgebra {
    switch (uniform(rng, 0, 4)) {
      case 0:
        return LieAlgebra::abelian(static_cast<std::size_t>(uniform(rng, 1, 3)));
      case 1:
        return heisenberg(static_cast<std::size_t>(uniform(rng, 1, 2)));
      case 2:
        return uniform(rng, 0, 1) ? so3() : sl2();
      default: {
        const std::size_t k = static_cast<std::size_t>(uniform(rng, 1, 3));
        return semidirect_line(random_matrix(rng, k, k, 2, 2));
      }
    }
  };
  LieAlgebra a = base();
  if (uniform(rng, 0, 2) == 0) a = direct_sum(a, base());
  return a.change_basis(random_invertible(rng, a.dim()));
}

inline KForm random_form(Rng& rng, std::size_t dim, std::size_t degree) {
  KForm f(dim, degree);
  for (std::size_t p = 0; p < f.size(); ++p) f.at(p) = rational(rng, 3, 3);
  return f;
}

/// Random element of A_{1,1}: family g_b or d4, in a random J-compatible basis.
inline KahlerTriple random_a11(Rng& rng) {
  KahlerTriple t = uniform(rng, 0, 3) == 0 ? build_d4() : build_gb(rational(rng, 6, 4));
  return t.change_basis(random_complex_linear(rng, 2));
}

/// Direct sum of triples with the same c.
inline KahlerTriple direct_sum(const KahlerTriple& a, const KahlerTriple& b) {
  return KahlerTriple(lck::direct_sum(a.h(), b.h()), lck::direct_sum(a.hs(), b.hs()), Matrix::direct_sum(a.u(), b.u()),
                      Matrix::direct_sum(a.v(), b.v()), a.c());
}

/// Random element of A_{n,c} (c != 0): sum of n mapped A_{1,1} blocks, then a
/// random basis change of h.
inline KahlerTriple random_anc(Rng& rng, std::size_t n, const Scalar& c) {
  KahlerTriple t = correspondence(random_a11(rng), c);
  for (std::size_t i = 1; i < n; ++i) t = direct_sum(t, correspondence(random_a11(rng), c));
  return t.change_basis(random_invertible(rng, 2 * n, 1));
}

/// Random valid LCK instance: the semidirect product of a random valid
/// triple (abelian or the non-abelian counterexample), in a random basis.
inline HermitianLieAlgebra random_lck_instance(Rng& rng) {
  KahlerTriple t = build_counterexample();
  if (uniform(rng, 0, 4) != 0) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
    Scalar c = nonzero_rational(rng, 4, 2);
    t = random_anc(rng, n, c);
  }
  HermitianLieAlgebra a = semidirect(t);
  const Matrix p = random_invertible(rng, a.alg.dim(), 1);
  return HermitianLieAlgebra{a.alg.change_basis(p), a.h.change_basis(p)};
}

}  // namespace lck::testing
