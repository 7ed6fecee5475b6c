#include "lck/forms.hpp"

#include <algorithm>

#include "lck/errors.hpp"
#include "lck/linalg.hpp"

namespace lck {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

bool structurally_zero(const Scalar& s) { return s.is_exact() && s.is_zero(); }

}  // namespace

std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

KForm::KForm(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), coeffs_(binomial(dim, degree)) {}

KForm KForm::constant(std::size_t dim, const Scalar& value) {
  KForm f(dim, 0);
  f.coeffs_[0] = value;
  return f;
}

KForm KForm::covector(const Vector& coeffs) {
  KForm f(coeffs.size(), 1);
  f.coeffs_ = coeffs;
  return f;
}

KForm KForm::from_matrix(const Matrix& m) {
  if (!m.square()) throw DimensionMismatch("2-form matrix must be square");
  if (!(m + m.transpose()).is_zero()) throw InvariantViolation("2-form matrix is not antisymmetric");
  KForm f(m.rows(), 2);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.rows(); ++j) f.coeffs_[pos++] = m(i, j);
  return f;
}

std::size_t KForm::position(std::span<const std::size_t> idx) const {
  if (idx.size() != degree_) throw DimensionMismatch("index tuple length differs from form degree");
  std::size_t pos = 0;
  std::size_t prev = 0;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    const std::size_t start = t == 0 ? 0 : prev + 1;
    if (idx[t] < start || idx[t] >= dim_) throw DomainError("index tuple is not strictly increasing");
    for (std::size_t v = start; v < idx[t]; ++v) pos += binomial(dim_ - v - 1, degree_ - t - 1);
    prev = idx[t];
  }
  return pos;
}

const Scalar& KForm::coefficient(std::span<const std::size_t> increasing) const {
  return coeffs_[position(increasing)];
}

void KForm::set(std::span<const std::size_t> increasing, const Scalar& value) {
  coeffs_[position(increasing)] = value;
}

Scalar KForm::on_basis(std::span<const std::size_t> indices) const {
  IndexTuple idx(indices.begin(), indices.end());
  const int sign = sort_with_sign(idx);
  if (sign == 0) return Scalar(0);
  const Scalar& c = coeffs_[position(idx)];
  return sign > 0 ? c : -c;
}

Scalar KForm::operator()(std::span<const Vector> vectors) const {
  if (vectors.size() != degree_) throw DimensionMismatch("wrong number of arguments for form");
  for (const auto& v : vectors) {
    if (v.size() != dim_) throw DimensionMismatch("argument vector has wrong length");
  }
  if (degree_ == 0) return coeffs_[0];
  const auto tuples = increasing_tuples(dim_, degree_);
  Scalar total;
  Matrix minor(degree_, degree_);
  for (std::size_t p = 0; p < tuples.size(); ++p) {
    if (coeffs_[p].is_zero()) continue;
    for (std::size_t s = 0; s < degree_; ++s)
      for (std::size_t t = 0; t < degree_; ++t) minor(s, t) = vectors[s][tuples[p][t]];
    total += coeffs_[p] * determinant(minor);
  }
  return total;
}

Scalar KForm::operator()(const Vector& x) const {
  const Vector args[] = {x};
  return (*this)(std::span<const Vector>(args));
}

Scalar KForm::operator()(const Vector& x, const Vector& y) const {
  const Vector args[] = {x, y};
  return (*this)(std::span<const Vector>(args));
}

Vector KForm::as_covector() const {
  if (degree_ != 1) throw DomainError("as_covector needs a 1-form");
  return coeffs_;
}

Matrix KForm::as_matrix() const {
  if (degree_ != 2) throw DomainError("as_matrix needs a 2-form");
  Matrix m(dim_, dim_);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      m(i, j) = coeffs_[pos];
      m(j, i) = -coeffs_[pos];
      ++pos;
    }
  }
  return m;
}

bool KForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::optional<IndexTuple> KForm::first_nonzero() const {
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (!coeffs_[p].is_zero()) return increasing_tuples(dim_, degree_)[p];
  }
  return std::nullopt;
}

KForm KForm::to_backend(Backend b) const {
  KForm f(*this);
  for (auto& c : f.coeffs_) c = c.to_backend(b);
  return f;
}

void KForm::check_compatible(const KForm& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw DimensionMismatch("forms of different dimension or degree");
}

KForm& KForm::operator+=(const KForm& o) {
  check_compatible(o);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  check_compatible(o);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) coeffs_[p] -= o.coeffs_[p];
  return *this;
}

KForm operator*(const Scalar& s, KForm a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

bool operator==(const KForm& a, const KForm& b) {
  if (a.dim_ != b.dim_ || a.degree_ != b.degree_) return false;
  return (a - b).is_zero();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms on different spaces");
  const std::size_t n = a.dim(), p = a.degree(), q = b.degree();
  KForm out(n, p + q);
  if (p + q > n) return out;
  const auto targets = increasing_tuples(n, p + q);
  const auto splits = increasing_tuples(p + q, p);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const IndexTuple& k = targets[t];
    Scalar sum;
    for (const auto& split : splits) {
      IndexTuple left, right;
      std::size_t inversions = 0;
      std::size_t s = 0;
      for (std::size_t pos = 0; pos < k.size(); ++pos) {
        if (s < split.size() && split[s] == pos) {
          left.push_back(k[pos]);
          inversions += right.size();
          ++s;
        } else {
          right.push_back(k[pos]);
        }
      }
      const Scalar& ca = a.coefficient(left);
      if (ca.is_zero()) continue;
      const Scalar& cb = b.coefficient(right);
      if (cb.is_zero()) continue;
      if (inversions % 2 == 0) {
        sum += ca * cb;
      } else {
        sum -= ca * cb;
      }
    }
    out.at(t) = sum;
  }
  return out;
}

KForm ce_differential(const LieAlgebra& alg, const KForm& a) {
  if (alg.dim() != a.dim()) throw DimensionMismatch("form and algebra dimensions differ");
  const std::size_t n = a.dim(), k = a.degree();
  KForm out(n, k + 1);
  if (k + 1 > n) return out;
  const auto tuples = increasing_tuples(n, k + 1);
  IndexTuple args(k);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const IndexTuple& x = tuples[t];
    Scalar sum;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        // remaining arguments after dropping slots i and j
        std::size_t r = 1;
        for (std::size_t s = 0; s < x.size(); ++s) {
          if (s != i && s != j) args[r++] = x[s];
        }
        Scalar term;
        for (std::size_t m = 0; m < n; ++m) {
          const Scalar& c = alg.constant(x[i], x[j], m);
          if (structurally_zero(c) || c.is_zero()) continue;
          if (k == 0) continue;
          args[0] = m;
          const Scalar v = a.on_basis(args);
          if (!v.is_zero()) term += c * v;
        }
        if ((i + j) % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
    }
    out.at(t) = sum;
  }
  return out;
}

KForm interior(const KForm& a, const Vector& x) {
  if (a.degree() == 0) throw DomainError("interior product of a 0-form");
  if (x.size() != a.dim()) throw DimensionMismatch("vector length differs from form dimension");
  const std::size_t n = a.dim(), k = a.degree();
  KForm out(n, k - 1);
  const auto tuples = increasing_tuples(n, k - 1);
  IndexTuple args(k);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::copy(tuples[t].begin(), tuples[t].end(), args.begin() + 1);
    Scalar sum;
    for (std::size_t m = 0; m < n; ++m) {
      if (x[m].is_zero()) continue;
      args[0] = m;
      sum += x[m] * a.on_basis(args);
    }
    out.at(t) = sum;
  }
  return out;
}

KForm interior_J(const HermitianStructure& h, const KForm& a) {
  if (a.degree() == 0) throw DomainError("i_J of a 0-form");
  if (h.dim() != a.dim()) throw DimensionMismatch("form and structure dimensions differ");
  const std::size_t n = a.dim(), k = a.degree();
  const Matrix& J = h.J();
  KForm out(n, k);
  const auto tuples = increasing_tuples(n, k);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    IndexTuple args = tuples[t];
    Scalar sum;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t orig = args[s];
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& jm = J(m, orig);
        if (jm.is_zero()) continue;
        args[s] = m;
        sum += jm * a.on_basis(args);
      }
      args[s] = orig;
    }
    out.at(t) = sum;
  }
  return out;
}

Vector Connection::covariant(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

Vector Connection::covariant(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("connection operands have wrong length");
  Vector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) r[k] += w * (*this)(i, j, k);
    }
  }
  return r;
}

Connection levi_civita(const LieAlgebra& alg, const HermitianStructure& h) {
  const std::size_t n = alg.dim();
  if (h.dim() != n) throw DimensionMismatch("metric and algebra dimensions differ");
  const Matrix& g = h.g();
  // gb(i,j,l) = g([e_i, e_j], e_l)
  std::vector<Scalar> gb(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector b = alg.bracket_basis(i, j);
      const Vector gbv = g * b;
      for (std::size_t l = 0; l < n; ++l) gb[(i * n + j) * n + l] = gbv[l];
    }
  }
  auto G = [&](std::size_t i, std::size_t j, std::size_t l) -> const Scalar& { return gb[(i * n + j) * n + l]; };
  const Scalar half = Scalar::rational(1, 2);
  Connection nabla(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector rhs(n);
      for (std::size_t l = 0; l < n; ++l) rhs[l] = half * (G(i, j, l) - G(j, l, i) + G(l, i, j));
      const Vector gamma = h.g_inverse() * rhs;
      for (std::size_t k = 0; k < n; ++k) nabla(i, j, k) = gamma[k];
    }
  }
  return nabla;
}

std::optional<TupleViolation> check_torsion_free(const LieAlgebra& alg, const Connection& nabla) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector t = nabla.covariant(i, j) - nabla.covariant(j, i) - alg.bracket_basis(i, j);
      if (!lck::is_zero(t)) return TupleViolation{{i, j}, std::move(t)};
    }
  }
  return std::nullopt;
}

std::optional<TupleViolation> check_metric_compatible(const HermitianStructure& h, const Connection& nabla) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const Scalar r = h.inner(nabla.covariant(i, j), unit_vector(n, k)) +
                         h.inner(unit_vector(n, j), nabla.covariant(i, k));
        if (!r.is_zero()) return TupleViolation{{i, j, k}, Vector{r}};
      }
    }
  }
  return std::nullopt;
}

KForm covariant_derivative(const Connection& nabla, const KForm& a, std::size_t i) {
  const std::size_t n = a.dim(), k = a.degree();
  KForm out(n, k);
  if (k == 0) return out;
  const auto tuples = increasing_tuples(n, k);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    IndexTuple args = tuples[t];
    Scalar sum;
    for (std::size_t s = 0; s < k; ++s) {
      const std::size_t orig = args[s];
      for (std::size_t m = 0; m < n; ++m) {
        const Scalar& gam = nabla(i, orig, m);
        if (gam.is_zero()) continue;
        args[s] = m;
        sum += gam * a.on_basis(args);
      }
      args[s] = orig;
    }
    out.at(t) = -sum;
  }
  return out;
}

KForm codifferential(const HermitianStructure& h, const Connection& nabla, const KForm& a) {
  if (a.degree() == 0) throw DomainError("codifferential of a 0-form");
  const std::size_t n = a.dim(), k = a.degree();
  if (h.dim() != n || nabla.dim() != n) throw DimensionMismatch("form and structure dimensions differ");
  std::vector<KForm> derivs;
  derivs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) derivs.push_back(covariant_derivative(nabla, a, i));
  const Matrix& ginv = h.g_inverse();
  KForm out(n, k - 1);
  const auto tuples = increasing_tuples(n, k - 1);
  IndexTuple args(k);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::copy(tuples[t].begin(), tuples[t].end(), args.begin() + 1);
    Scalar sum;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (ginv(i, j).is_zero()) continue;
        args[0] = j;
        sum += ginv(i, j) * derivs[i].on_basis(args);
      }
    }
    out.at(t) = -sum;
  }
  return out;
}

KForm codifferential(const LieAlgebra& alg, const HermitianStructure& h, const KForm& a) {
  return codifferential(h, levi_civita(alg, h), a);
}

Matrix lie_derivative_metric(const LieAlgebra& alg, const HermitianStructure& h, const Vector& x) {
  const Matrix ad = alg.ad(x);
  return -(ad.transpose() * h.g() + h.g() * ad);
}

Matrix lie_derivative_J(const LieAlgebra& alg, const HermitianStructure& h, const Vector& x) {
  const Matrix ad = alg.ad(x);
  return ad * h.J() - h.J() * ad;
}

}  // namespace lck
