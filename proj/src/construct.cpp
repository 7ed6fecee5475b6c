#include "lck/construct.hpp"

#include <sstream>

#include "lck/analysis.hpp"
#include "lck/errors.hpp"
#include "lck/linalg.hpp"

namespace lck {

KahlerTriple::KahlerTriple(LieAlgebra h, HermitianStructure hs, Matrix u, Matrix v, Scalar c)
    : h_(std::move(h)), hs_(std::move(hs)), u_(std::move(u)), v_(std::move(v)), c_(std::move(c)) {
  const std::size_t d = h_.dim();
  if (hs_.dim() != d) throw DimensionMismatch("triple: metric and algebra dimensions differ");
  if (u_.rows() != d || u_.cols() != d || v_.rows() != d || v_.cols() != d) {
    throw DimensionMismatch("triple: u and v must be dim x dim");
  }
  const Verdict k = is_kahler(h_, hs_);
  if (!k.holds()) throw InvariantViolation("triple: h is not Kähler (" + k.witness->what + ")");
  if (!is_derivation(h_, u_)) throw InvariantViolation("triple: u is not a derivation");
  if (!is_derivation(h_, v_)) throw InvariantViolation("triple: v is not a derivation");
}

KahlerTriple KahlerTriple::to_backend(Backend b) const {
  return KahlerTriple(h_.to_backend(b), hs_.to_backend(b), u_.to_backend(b), v_.to_backend(b), c_.to_backend(b));
}

KahlerTriple KahlerTriple::change_basis(const Matrix& p) const {
  const Matrix pinv = inverse(p);
  return KahlerTriple(h_.change_basis(p), hs_.change_basis(p), pinv * u_ * p, pinv * v_ * p, c_);
}

Matrix adjoint(const HermitianStructure& h, const Matrix& x) { return h.g_inverse() * x.transpose() * h.g(); }

bool is_derivation(const LieAlgebra& alg, const Matrix& x) {
  if (alg.is_abelian()) return true;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      const Vector r = x * alg.bracket_basis(i, j) - alg.bracket(x * ei, ej) - alg.bracket(ei, x * ej);
      if (!is_zero(r)) return false;
    }
  }
  return true;
}

bool TripleReport::in_H() const {
  for (const auto& c : conditions)
    if (!c.holds()) return false;
  return true;
}

TripleReport check_triple(const KahlerTriple& t) {
  const Matrix& u = t.u();
  const Matrix& v = t.v();
  const Matrix& J = t.hs().J();
  TripleReport r;
  r.conditions.push_back({"[u,v] = cv", commutator(u, v) - t.c() * v});
  r.conditions.push_back({"[v + uJ, J] = 0", commutator(v + u * J, J)});
  r.conditions.push_back({"v*J + Jv = 0", adjoint(t.hs(), v) * J + J * v});
  r.conditions.push_back({"J + u*J + Ju = 0", J + adjoint(t.hs(), u) * J + J * u});
  r.alternative_integrability = {"[v + Ju, J] = 0", commutator(v + J * u, J)};
  r.abelian = t.h().is_abelian();
  return r;
}

HermitianLieAlgebra semidirect(const KahlerTriple& t) {
  const std::size_t m = t.h().dim();
  const std::size_t d = m + 2;
  StructureConstants sc(d);
  Vector uv(d);
  uv[1] = t.c();
  sc.set_bracket(0, 1, uv);
  for (std::size_t j = 0; j < m; ++j) {
    Vector bu(d), bv(d);
    for (std::size_t k = 0; k < m; ++k) {
      bu[2 + k] = t.u()(k, j);
      bv[2 + k] = t.v()(k, j);
    }
    sc.set_bracket(0, 2 + j, bu);
    sc.set_bracket(1, 2 + j, bv);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector b(d);
      for (std::size_t k = 0; k < m; ++k) b[2 + k] = t.h().constant(i, j, k);
      sc.set_bracket(2 + i, 2 + j, b);
    }
  }
  Matrix j2(2, 2);
  j2(1, 0) = 1;
  j2(0, 1) = -1;
  const Matrix g = Matrix::direct_sum(Matrix::identity(2), t.hs().g());
  const Matrix J = Matrix::direct_sum(j2, t.hs().J());
  return HermitianLieAlgebra{LieAlgebra(std::move(sc)), HermitianStructure(g, J)};
}

KahlerTriple correspondence(const KahlerTriple& t, const Scalar& target) {
  if (t.c().is_zero()) throw DomainError("correspondence needs c != 0");
  if (target.is_zero()) throw DomainError("correspondence target must be nonzero");
  if (!t.h().is_abelian()) throw DomainError("correspondence needs abelian h");
  const std::size_t m = t.h().dim();
  const Matrix id = Matrix::identity(m);
  const Scalar one(1), two(2);
  const Scalar& c = t.c();
  const Matrix u1 = (one / c) * t.u() + ((one - c) / (two * c)) * id;
  const Matrix v1 = (one / c) * t.v();
  const Matrix u2 = target * u1 - ((one - target) / two) * id;
  const Matrix v2 = target * v1;
  return KahlerTriple(t.h(), t.hs(), u2, v2, target);
}

std::string Dim4Class::label() const {
  if (tag == Tag::d4) return "D4";
  std::ostringstream os;
  os << "FamilyGb(" << b << ")";
  return os.str();
}

Dim4Class classify_dim4(const KahlerTriple& t) {
  if (t.h().dim() != 2) throw DomainError("classify_dim4 needs dim h = 2");
  const TripleReport rep = check_triple(t);
  if (!rep.in_A()) throw InvariantViolation("classify_dim4: triple is not in A_{1,c}");
  if (!(t.c() == Scalar(1))) throw InvariantViolation("classify_dim4: triple needs c = 1");
  const HermitianStructure& hs = t.hs();
  const Matrix& u = t.u();
  const Matrix& v = t.v();
  const Scalar half = Scalar::rational(1, 2);

  if (v.is_zero()) {
    const Vector y = unit_vector(2, 0);
    const Vector jy = hs.apply_J(y);
    const Scalar nsq = hs.inner(y, y);
    const Scalar diag = hs.inner(u * y, y) / nsq;
    if (!(diag == -half)) throw InvariantViolation("classify_dim4: g(uY, Y) / |Y|^2 differs from -1/2");
    const Scalar b = hs.inner(u * y, jy) / nsq;
    if (!is_zero(u * y - (-half * y + b * jy)) || !is_zero(u * jy - (-b * y - half * jy))) {
      throw InvariantViolation("classify_dim4: u does not have the family shape");
    }
    return Dim4Class{Dim4Class::Tag::family_gb, b, y, nsq};
  }

  const std::size_t r = rank(v);
  if (r != 1) throw InvariantViolation("classify_dim4: v has rank 2");
  const Matrix ker = nullspace(v);
  Vector x = ker.col(0);
  if (x[first_nonzero(x)].sign() < 0) x = -x;
  const Vector jx = hs.apply_J(x);
  if (!is_zero(u * x) || !is_zero(u * jx + jx) || !is_zero(v * x) || !is_zero(v * jx - x)) {
    throw InvariantViolation("classify_dim4: u, v do not match the rank-one normal form");
  }
  return Dim4Class{Dim4Class::Tag::d4, Scalar(0), x, hs.inner(x, x)};
}

bool triples_isomorphic_dim4(const KahlerTriple& a, const KahlerTriple& b) {
  const Dim4Class ca = classify_dim4(a);
  const Dim4Class cb = classify_dim4(b);
  if (ca.tag != cb.tag) return false;
  return ca.tag == Dim4Class::Tag::d4 || ca.b == cb.b;
}

HermitianLieAlgebra build_r2c(const Scalar& c) {
  StructureConstants sc(2);
  sc.set_bracket(0, 1, Vector{Scalar(0), c});
  return HermitianLieAlgebra{LieAlgebra(std::move(sc)), standard_hermitian(2)};
}

HermitianLieAlgebra abelian_kahler(std::size_t dim) {
  return HermitianLieAlgebra{LieAlgebra::abelian(dim), standard_hermitian(dim)};
}

KahlerTriple build_gb(const Scalar& b) {
  const Scalar half = Scalar::rational(-1, 2);
  const Matrix u{{half, -b}, {b, half}};
  return KahlerTriple(LieAlgebra::abelian(2), standard_hermitian(2), u, Matrix(2, 2), Scalar(1));
}

KahlerTriple build_d4() {
  const Matrix u{{0, 0}, {0, -1}};
  const Matrix v{{0, 1}, {0, 0}};
  return KahlerTriple(LieAlgebra::abelian(2), standard_hermitian(2), u, v, Scalar(1));
}

KahlerTriple build_dim(long n) {
  if (n < 1) throw DomainError("build_dim needs n >= 1");
  const Matrix ub{{Scalar::rational(n - 1, 2), 0}, {0, Scalar::rational(-(n + 1), 2)}};
  const Matrix vb{{0, Scalar(n)}, {0, 0}};
  Matrix u = ub, v = vb;
  for (long i = 1; i < n; ++i) {
    u = Matrix::direct_sum(u, ub);
    v = Matrix::direct_sum(v, vb);
  }
  const std::size_t dim = static_cast<std::size_t>(2 * n);
  return KahlerTriple(LieAlgebra::abelian(dim), standard_hermitian(dim), u, v, Scalar(n));
}

KahlerTriple build_counterexample() {
  StructureConstants sc(2);
  sc.set_bracket(0, 1, Vector{Scalar(1), Scalar(0)});
  const Matrix u{{-1, 0}, {0, 0}};
  const Matrix v{{0, -1}, {0, 0}};
  return KahlerTriple(LieAlgebra(std::move(sc)), standard_hermitian(2), u, v, Scalar(-1));
}

}  // namespace lck
