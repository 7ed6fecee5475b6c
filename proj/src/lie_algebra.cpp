#include "lck/lie_algebra.hpp"

#include <sstream>

#include "lck/errors.hpp"

namespace lck {

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  if (v.size() != dim_) throw DimensionMismatch("bracket value has wrong length");
  for (std::size_t k = 0; k < dim_; ++k) {
    (*this)(i, j, k) = v[k];
    (*this)(j, i, k) = -v[k];
  }
}

Vector StructureConstants::bracket_basis(std::size_t i, std::size_t j) const {
  Vector r(dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = (*this)(i, j, k);
  return r;
}

Vector StructureConstants::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket operands must have length dim");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_exact() && x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || (y[j].is_exact() && y[j].is_zero())) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = (*this)(i, j, k);
        if (c.is_exact() && c.is_zero()) continue;
        r[k] += xy * c;
      }
    }
  }
  return r;
}

StructureConstants StructureConstants::to_backend(Backend b) const {
  StructureConstants out(*this);
  for (auto& x : out.c_) x = x.to_backend(b);
  return out;
}

std::optional<TupleViolation> check_antisymmetry(const StructureConstants& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector sum = c.bracket_basis(i, j) + c.bracket_basis(j, i);
      if (!is_zero(sum)) return TupleViolation{{i, j}, std::move(sum)};
    }
  }
  return std::nullopt;
}

std::optional<TupleViolation> check_jacobi(const StructureConstants& c) {
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector cyc = c.bracket(c.bracket_basis(i, j), ek) + c.bracket(c.bracket_basis(j, k), ei) +
                     c.bracket(c.bracket_basis(k, i), ej);
        if (!is_zero(cyc)) return TupleViolation{{i, j, k}, std::move(cyc)};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string describe(const char* what, const TupleViolation& v) {
  std::ostringstream os;
  os << what << " fails at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
  os << ") with residual [";
  for (std::size_t i = 0; i < v.residual.size(); ++i) os << (i ? ", " : "") << v.residual[i];
  os << "]";
  return os.str();
}

}  // namespace

LieAlgebra::LieAlgebra(StructureConstants constants) : c_(std::move(constants)) {
  if (c_.dim() == 0) throw DomainError("Lie algebra dimension must be positive");
  if (auto v = check_antisymmetry(c_)) throw InvariantViolation(describe("antisymmetry", *v));
  if (auto v = check_jacobi(c_)) throw InvariantViolation(describe("Jacobi identity", *v));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(StructureConstants(dim)); }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return c_.bracket(x, y); }

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket(x, unit_vector(n, j)));
  return Matrix::from_columns(cols, n);
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c_(i, j, k);
  return m;
}

bool LieAlgebra::is_abelian() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_zero(c_.bracket_basis(i, j))) return false;
  return true;
}

LieAlgebra LieAlgebra::to_backend(Backend b) const { return LieAlgebra(c_.to_backend(b)); }

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
  const std::size_t n = dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change must be dim x dim");
  const Matrix pinv = inverse(p);
  StructureConstants out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set_bracket(i, j, pinv * bracket(p.col(i), p.col(j)));
    }
  }
  return LieAlgebra(std::move(out));
}

std::optional<TupleViolation> check_jacobi(const LieAlgebra& a) { return check_jacobi(a.constants()); }

Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  std::vector<Vector> images;
  const auto ba = a.basis();
  const auto bb = b.basis();
  for (const auto& x : ba)
    for (const auto& y : bb) images.push_back(alg.bracket(x, y));
  return Subspace::span(images, alg.dim());
}

Subspace derived_subalgebra(const LieAlgebra& alg) {
  std::vector<Vector> images;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) images.push_back(alg.bracket_basis(i, j));
  return Subspace::span(images, alg.dim());
}

std::vector<std::size_t> derived_series(const LieAlgebra& alg) {
  std::vector<std::size_t> dims{alg.dim()};
  Subspace current = Subspace::whole(alg.dim());
  while (true) {
    Subspace next = bracket_span(alg, current, current);
    if (next.dim() == current.dim()) break;
    dims.push_back(next.dim());
    if (next.dim() == 0) break;
    current = std::move(next);
  }
  return dims;
}

bool is_solvable(const LieAlgebra& alg) { return derived_series(alg).back() == 0; }

Scalar ad_trace(const LieAlgebra& alg, const Vector& x) { return alg.ad(x).trace(); }

bool is_unimodular(const LieAlgebra& alg) {
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (!alg.ad_basis(i).trace().is_zero()) return false;
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) { return s.contains(bracket_span(alg, s, s)); }

bool is_ideal(const LieAlgebra& alg, const Subspace& s) {
  return s.contains(bracket_span(alg, Subspace::whole(alg.dim()), s));
}

bool is_abelian_subspace(const LieAlgebra& alg, const Subspace& s) { return bracket_span(alg, s, s).dim() == 0; }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  StructureConstants c(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c(i, j, k) = a.constant(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c(na + i, na + j, na + k) = b.constant(i, j, k);
  return LieAlgebra(std::move(c));
}

}  // namespace lck
