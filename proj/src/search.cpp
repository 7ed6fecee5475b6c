#include "lck/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "lck/errors.hpp"

namespace lck {

namespace {

Matrix unit_matrix(std::size_t m, std::size_t i, std::size_t j) {
  Matrix e(m, m);
  e(i, j) = 1;
  return e;
}

void append_entries(std::vector<Scalar>& out, const Matrix& r) {
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) out.push_back(r(i, j));
}

/// Affine matrix-valued conditions L(u, v) = 0, flattened.
std::vector<Scalar> linear_conditions(const LieAlgebra& h, const HermitianStructure& hs, const Matrix& u,
                                      const Matrix& v) {
  const Matrix& J = hs.J();
  std::vector<Scalar> out;
  append_entries(out, commutator(v + u * J, J));
  append_entries(out, adjoint(hs, v) * J + J * v);
  append_entries(out, J + adjoint(hs, u) * J + J * u);
  if (!h.is_abelian()) {
    const std::size_t m = h.dim();
    for (const Matrix* x : {&u, &v}) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          const Vector ei = unit_vector(m, i), ej = unit_vector(m, j);
          const Vector r = *x * h.bracket_basis(i, j) - h.bracket(*x * ei, ej) - h.bracket(ei, *x * ej);
          out.insert(out.end(), r.begin(), r.end());
        }
      }
    }
  }
  return out;
}

/// Columns of the linear map obtained by probing with unit inputs; returns
/// (A, b) with L(x) = A x - b.
template <typename F>
std::pair<Matrix, Vector> assemble(std::size_t unknowns, F&& eval) {
  const std::vector<Scalar> base = eval(Vector(unknowns));
  Matrix a(base.size(), unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    Vector x(unknowns);
    x[k] = 1;
    const std::vector<Scalar> col = eval(x);
    for (std::size_t r = 0; r < base.size(); ++r) a(r, k) = col[r] - base[r];
  }
  Vector b(base.size());
  for (std::size_t r = 0; r < base.size(); ++r) b[r] = -base[r];
  return {std::move(a), std::move(b)};
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  Matrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

Vector concat(Vector a, const Vector& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ConstraintSystem::ConstraintSystem(LieAlgebra h, HermitianStructure hs, Scalar c)
    : ConstraintSystem(std::move(h), std::move(hs), std::move(c), Options{}) {}

ConstraintSystem::ConstraintSystem(LieAlgebra h, HermitianStructure hs, Scalar c, Options opts)
    : h_(std::move(h)), hs_(std::move(hs)), c_(std::move(c)) {
  if (hs_.dim() != h_.dim()) throw DimensionMismatch("constraint system: metric and algebra dimensions differ");
  const std::size_t n = unknowns();
  auto [a, b] = assemble(n, [&](const Vector& x) { return linear_conditions(h_, hs_, unpack_u(x), unpack_v(x)); });
  if (opts.fix_v_zero) {
    const std::size_t mm = m() * m();
    Matrix fix(mm, n);
    for (std::size_t k = 0; k < mm; ++k) fix(k, mm + k) = 1;
    a = stack(a, fix);
    b = concat(b, Vector(mm));
  }
  if (opts.extra_rows.rows() > 0) {
    if (opts.extra_rows.cols() != n || opts.extra_rhs.size() != opts.extra_rows.rows()) {
      throw DimensionMismatch("constraint system: extra equations have wrong shape");
    }
    a = stack(a, opts.extra_rows);
    b = concat(b, opts.extra_rhs);
  }
  a_ = std::move(a);
  b_ = std::move(b);
}

Vector ConstraintSystem::pack(const Matrix& u, const Matrix& v) const {
  const std::size_t mm = m();
  if (u.rows() != mm || u.cols() != mm || v.rows() != mm || v.cols() != mm) {
    throw DimensionMismatch("pack: u and v must be dim h x dim h");
  }
  Vector x;
  x.reserve(unknowns());
  append_entries(x, u);
  append_entries(x, v);
  return x;
}

Matrix ConstraintSystem::unpack_u(const Vector& x) const {
  const std::size_t mm = m();
  if (x.size() != unknowns()) throw DimensionMismatch("unpack: wrong vector length");
  Matrix u(mm, mm);
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) u(i, j) = x[i * mm + j];
  return u;
}

Matrix ConstraintSystem::unpack_v(const Vector& x) const {
  const std::size_t mm = m();
  if (x.size() != unknowns()) throw DimensionMismatch("unpack: wrong vector length");
  Matrix v(mm, mm);
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t j = 0; j < mm; ++j) v(i, j) = x[mm * mm + i * mm + j];
  return v;
}

Vector ConstraintSystem::linear_residual(const Vector& x) const { return a_ * x - b_; }

Matrix ConstraintSystem::bilinear_residual(const Vector& x) const {
  const Matrix v = unpack_v(x);
  return commutator(unpack_u(x), v) - c_ * v;
}

AffineSolution solve_linear(const ConstraintSystem& sys) { return solve_affine(sys.linear(), sys.rhs()); }

mpq_class limit_denominator(double x, long max_den) {
  if (!std::isfinite(x)) throw DomainError("cannot rationalise a non-finite value");
  if (max_den < 1) throw DomainError("denominator bound must be positive");
  const mpq_class exact(x);
  if (exact.get_den() <= max_den) return exact;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > max_den) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
    if (d == 0) break;
  }
  const mpz_class k = (mpz_class(max_den) - q0) / q1;
  const mpq_class b1(p0 + k * p1, q0 + k * q1);
  const mpq_class b2(p1, q1);
  mpq_class c1 = b1, c2 = b2;
  c1.canonicalize();
  c2.canonicalize();
  return abs(c2 - exact) <= abs(c1 - exact) ? c2 : c1;
}

namespace {

struct DenseAffine {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> p;
  std::vector<double> basis;  // n x k row-major
};

struct Candidate {
  std::vector<double> x;
  double residual = 0;
};

using Dense = std::vector<double>;

void mat_commutator(const double* a, const double* b, double* out, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0;
      for (std::size_t l = 0; l < m; ++l) s += a[i * m + l] * b[l * m + j] - b[i * m + l] * a[l * m + j];
      out[i * m + j] = s;
    }
  }
}

/// Real roots of a3 s^3 + a2 s^2 + a1 s + a0.
std::vector<double> cubic_roots(double a3, double a2, double a1, double a0) {
  std::vector<double> roots;
  const double scale = std::max({std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
  if (scale == 0) return roots;
  if (std::abs(a3) <= 1e-14 * scale) {
    if (std::abs(a2) <= 1e-14 * scale) {
      if (a1 != 0) roots.push_back(-a0 / a1);
      return roots;
    }
    const double disc = a1 * a1 - 4 * a2 * a0;
    if (disc >= 0) {
      const double sq = std::sqrt(disc);
      roots.push_back((-a1 + sq) / (2 * a2));
      roots.push_back((-a1 - sq) / (2 * a2));
    }
    return roots;
  }
  const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
  const double q = (3 * c - b * b) / 9;
  const double r = (9 * b * c - 27 * d - 2 * b * b * b) / 54;
  const double disc = q * q * q + r * r;
  const double shift = -b / 3;
  if (disc > 0) {
    const double sq = std::sqrt(disc);
    roots.push_back(shift + std::cbrt(r + sq) + std::cbrt(r - sq));
  } else if (q == 0) {
    roots.push_back(shift);
  } else {
    const double theta = std::acos(std::clamp(r / std::sqrt(-q * q * q), -1.0, 1.0));
    const double t = 2 * std::sqrt(-q);
    const double pi = std::acos(-1.0);
    roots.push_back(shift + t * std::cos(theta / 3));
    roots.push_back(shift + t * std::cos((theta + 2 * pi) / 3));
    roots.push_back(shift + t * std::cos((theta + 4 * pi) / 3));
  }
  return roots;
}

class Minimizer {
 public:
  Minimizer(const DenseAffine& aff, std::size_t m, double c) : aff_(aff), m_(m), c_(c) {}

  /// Coordinate descent over the free coordinates; frozen coordinates keep
  /// their starting value.
  Candidate run(std::vector<double> t, const std::vector<bool>& free, std::size_t max_sweeps) const {
    const std::size_t mm = m_ * m_;
    Dense x = point(t);
    Dense r0(mm), r1(mm), r2(mm), tmp(mm), du(mm), dv(mm);
    double f = objective(x, r0, tmp);
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
      const double before = f;
      for (std::size_t k = 0; k < aff_.k; ++k) {
        if (!free[k]) continue;
        for (std::size_t e = 0; e < mm; ++e) {
          du[e] = aff_.basis[e * aff_.k + k];
          dv[e] = aff_.basis[(mm + e) * aff_.k + k];
        }
        const double* u0 = x.data();
        const double* v0 = x.data() + mm;
        residual(u0, v0, r0, tmp);
        // r1 = [du, v0] + [u0, dv] - c dv
        mat_commutator(du.data(), v0, r1.data(), m_);
        mat_commutator(u0, dv.data(), tmp.data(), m_);
        for (std::size_t e = 0; e < mm; ++e) r1[e] += tmp[e] - c_ * dv[e];
        mat_commutator(du.data(), dv.data(), r2.data(), m_);
        double q4 = 0, q3 = 0, q2 = 0, q1 = 0;
        for (std::size_t e = 0; e < mm; ++e) {
          q4 += r2[e] * r2[e];
          q3 += 2 * r1[e] * r2[e];
          q2 += r1[e] * r1[e] + 2 * r0[e] * r2[e];
          q1 += 2 * r0[e] * r1[e];
        }
        double best_s = 0, best_val = 0;
        for (double s : cubic_roots(4 * q4, 3 * q3, 2 * q2, q1)) {
          if (!std::isfinite(s)) continue;
          const double val = s * (q1 + s * (q2 + s * (q3 + s * q4)));
          if (val < best_val) {
            best_val = val;
            best_s = s;
          }
        }
        if (best_s != 0) {
          t[k] += best_s;
          for (std::size_t e = 0; e < aff_.n; ++e) x[e] += best_s * aff_.basis[e * aff_.k + k];
        }
      }
      x = point(t);
      f = objective(x, r0, tmp);
      if (f < 1e-30 || before - f <= 1e-15 * (1 + before)) break;
    }
    Candidate cand;
    cand.x = std::move(x);
    cand.residual = 0;
    residual(cand.x.data(), cand.x.data() + mm, r0, tmp);
    for (double e : r0) cand.residual = std::max(cand.residual, std::abs(e));
    return cand;
  }

  Dense point(const std::vector<double>& t) const {
    Dense x(aff_.p);
    for (std::size_t e = 0; e < aff_.n; ++e) {
      double s = 0;
      for (std::size_t k = 0; k < aff_.k; ++k) s += aff_.basis[e * aff_.k + k] * t[k];
      x[e] += s;
    }
    return x;
  }

 private:
  void residual(const double* u, const double* v, Dense& r, Dense& /*tmp*/) const {
    mat_commutator(u, v, r.data(), m_);
    for (std::size_t e = 0; e < m_ * m_; ++e) r[e] -= c_ * v[e];
  }

  double objective(const Dense& x, Dense& r, Dense& tmp) const {
    residual(x.data(), x.data() + m_ * m_, r, tmp);
    double f = 0;
    for (double e : r) f += e * e;
    return f;
  }

  const DenseAffine& aff_;
  std::size_t m_;
  double c_;
};

std::vector<long> denominator_ladder(long max_den) {
  std::vector<long> out;
  for (long d : {1L, 2L, 3L, 4L, 6L, 8L, 12L, 24L, 60L, 120L, 840L, 10000L, 1000000L}) {
    if (d <= max_den) out.push_back(d);
  }
  if (out.empty() || out.back() != max_den) out.push_back(max_den);
  return out;
}

std::optional<KahlerTriple> verify(const ConstraintSystem& sys, const Matrix& u, const Matrix& v) {
  try {
    KahlerTriple t(sys.h(), sys.hs(), u, v, sys.c());
    if (check_triple(t).in_H()) return t;
  } catch (const Error&) {
  }
  return std::nullopt;
}

/// Rounds a block of entries with the given bound; empty if any entry moves by
/// more than snap.
std::optional<Matrix> snap_block(const double* entries, std::size_t m, long den, double snap) {
  Matrix out(m, m);
  for (std::size_t e = 0; e < m * m; ++e) {
    const mpq_class q = limit_denominator(entries[e], den);
    if (std::abs(q.get_d() - entries[e]) > snap) return std::nullopt;
    out(e / m, e % m) = Scalar(q);
  }
  return out;
}

/// Fixes one block (u or v) to the given rational matrix and solves the
/// remaining, now linear, conditions for the other block exactly. The free
/// parameters of the solution set are chosen near the numerical point.
std::optional<KahlerTriple> complete_block(const ConstraintSystem& sys, const Matrix& fixed, bool fixed_is_v,
                                           const double* numeric_other, long param_den) {
  const std::size_t m = sys.m();
  const std::size_t mm = m * m;
  const std::size_t n = sys.unknowns();
  const std::size_t off_fixed = fixed_is_v ? mm : 0;
  const std::size_t off_free = fixed_is_v ? 0 : mm;
  const Matrix& a = sys.linear();
  // linear block restricted to the free block
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row(mm);
    Scalar b = sys.rhs()[r];
    for (std::size_t e = 0; e < mm; ++e) {
      row[e] = a(r, off_free + e);
      const Scalar& coef = a(r, off_fixed + e);
      if (!coef.is_zero()) b -= coef * fixed(e / m, e % m);
    }
    rows.push_back(std::move(row));
    rhs.push_back(b);
  }
  // [u, v] - c v = 0 is linear in the free block
  for (std::size_t e = 0; e < mm; ++e) {
    const Matrix x = unit_matrix(m, e / m, e % m);
    const Matrix r = fixed_is_v ? commutator(x, fixed) : commutator(fixed, x) - sys.c() * x;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t row = a.rows() + i * m + j;
        if (rows.size() <= row) {
          rows.emplace_back(mm);
          rhs.emplace_back(0);
        }
        rows[row][e] = r(i, j);
      }
    }
  }
  if (fixed_is_v) {
    const Matrix cv = sys.c() * fixed;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) rhs[a.rows() + i * m + j] = cv(i, j);
  }
  (void)n;
  AffineSolution sol;
  try {
    sol = solve_affine(Matrix::from_rows(rows, mm), rhs);
  } catch (const InfeasibleSystem&) {
    return std::nullopt;
  }
  Vector coords(sol.dimension());
  if (sol.dimension() > 0) {
    // least-squares coordinates of the numerical point, in floating point
    const std::size_t k = sol.dimension();
    Matrix gram(k, k);
    Vector proj(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        double s = 0;
        for (std::size_t e = 0; e < mm; ++e) s += sol.basis(e, i).to_double() * sol.basis(e, j).to_double();
        gram(i, j) = Scalar::floating(s);
      }
      double s = 0;
      for (std::size_t e = 0; e < mm; ++e) {
        s += sol.basis(e, i).to_double() * (numeric_other[e] - sol.particular[e].to_double());
      }
      proj[i] = Scalar::floating(s);
    }
    Vector t;
    try {
      t = solve(gram, proj);
    } catch (const Error&) {
      t = Vector(k, Scalar::floating(0));
    }
    for (std::size_t i = 0; i < k; ++i) coords[i] = Scalar(limit_denominator(t[i].to_double(), param_den));
  }
  const Vector other = sol.point(coords);
  Matrix om(m, m);
  for (std::size_t e = 0; e < mm; ++e) om(e / m, e % m) = other[e];
  return fixed_is_v ? verify(sys, om, fixed) : verify(sys, fixed, om);
}

constexpr long kCompletionDenominator = 840;

std::optional<KahlerTriple> round_candidate(const ConstraintSystem& sys, const Candidate& cand, const SearchOptions& o) {
  const std::size_t m = sys.m();
  const std::size_t mm = m * m;
  const double* u = cand.x.data();
  const double* v = cand.x.data() + mm;
  double scale = 1;
  for (double e : cand.x) scale = std::max(scale, std::abs(e));
  const double snap = std::max(1e-6, 100 * o.tol) * scale;
  const Matrix& J = sys.hs().J();
  for (long den : denominator_ladder(o.max_denominator)) {
    // exact completion gets expensive with large denominators
    // each block has one condition of its own; snaps violating it are discarded
    auto vr = snap_block(v, m, den, snap);
    if (vr && !(adjoint(sys.hs(), *vr) * J + J * *vr).is_zero()) vr.reset();
    auto ur = snap_block(u, m, den, snap);
    if (ur && !(J + adjoint(sys.hs(), *ur) * J + J * *ur).is_zero()) ur.reset();
    if (den <= kCompletionDenominator) {
      if (vr) {
        if (auto t = complete_block(sys, *vr, true, u, o.parameter_denominator)) return t;
      }
      if (ur) {
        if (auto t = complete_block(sys, *ur, false, v, o.parameter_denominator)) return t;
      }
    }
    if (ur && vr) {
      if (auto t = verify(sys, *ur, *vr)) return t;
    }
  }
  return std::nullopt;
}

std::string canonical_key(const KahlerTriple& t) {
  std::string key;
  for (const Matrix* x : {&t.u(), &t.v()}) {
    for (std::size_t i = 0; i < x->rows(); ++i) {
      for (std::size_t j = 0; j < x->cols(); ++j) {
        key += (*x)(i, j).str();
        key += ',';
      }
    }
    key += ';';
  }
  return key;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
  return std::mt19937_64(seq);
}

std::optional<KahlerTriple> run_sample(const ConstraintSystem& sys, const DenseAffine& aff, const SearchOptions& o,
                                       std::size_t index) {
  auto rng = sample_rng(o.seed, index);
  std::uniform_int_distribution<int> numer(-8, 8);
  std::uniform_int_distribution<int> denom(1, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> t(aff.k);
  std::vector<bool> free(aff.k, true);
  // sparse starts: a random subset of coordinates is frozen at zero or at a
  // small rational value
  static constexpr double kFreeze[] = {0.0, 0.35, 0.6, 0.8};
  const double freeze_prob = kFreeze[index % 4];
  for (std::size_t k = 0; k < aff.k; ++k) {
    const double r = unit(rng);
    const double value = static_cast<double>(numer(rng)) / denom(rng);
    if (r < freeze_prob) {
      free[k] = false;
      t[k] = unit(rng) < 0.7 ? 0.0 : value;
    } else {
      t[k] = value;
    }
  }
  const Minimizer mz(aff, sys.m(), sys.c().to_double());
  const Candidate cand = mz.run(std::move(t), free, o.max_sweeps);
  if (!(cand.residual <= o.tol)) return std::nullopt;
  auto triple = round_candidate(sys, cand, o);
  if (triple && o.require_v_nonzero && triple->v().is_zero()) return std::nullopt;
  return triple;
}

}  // namespace

std::vector<SearchHit> search_bilinear(const ConstraintSystem& sys, const SearchOptions& opts) {
  if (opts.samples == 0) return {};
  const AffineSolution sol = solve_linear(sys);
  DenseAffine aff;
  aff.n = sys.unknowns();
  aff.k = sol.dimension();
  aff.p.resize(aff.n);
  aff.basis.resize(aff.n * aff.k);
  for (std::size_t e = 0; e < aff.n; ++e) {
    aff.p[e] = sol.particular[e].to_double();
    for (std::size_t k = 0; k < aff.k; ++k) aff.basis[e * aff.k + k] = sol.basis(e, k).to_double();
  }

  std::vector<std::optional<KahlerTriple>> slots(opts.samples);
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.threads, opts.samples));
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < opts.samples; i += workers) slots[i] = run_sample(sys, aff, opts, i);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  std::vector<SearchHit> hits;
  std::map<std::string, bool> seen;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    if (!seen.emplace(canonical_key(*slots[i]), true).second) continue;
    hits.push_back(SearchHit{i, std::move(*slots[i])});
  }
  return hits;
}

NilpotentEnumeration enumerate_nilpotent_v_dim2(const LieAlgebra& h, const HermitianStructure& hs, const Scalar& c,
                                                const std::vector<Scalar>& sample_parameters) {
  if (h.dim() != 2) throw DomainError("enumeration needs dim h = 2");
  if (!h.is_abelian()) throw DomainError("enumeration needs abelian h");

  NilpotentEnumeration out;
  {
    ConstraintSystem::Options o;
    o.fix_v_zero = true;
    const ConstraintSystem sys(h, hs, c, o);
    out.v_zero_family = solve_linear(sys);
    for (const Scalar& p : sample_parameters) {
      Vector coords(out.v_zero_family.dimension());
      if (!coords.empty()) coords[0] = p;
      const Vector x = out.v_zero_family.point(coords);
      out.family_samples.emplace_back(h, hs, sys.unpack_u(x), sys.unpack_v(x), c);
    }
  }

  // adapted basis (w, Jw), w = e_0; ker v = <w>, v Jw = s w
  const Vector w = unit_vector(2, 0);
  const Matrix p = Matrix::from_columns({w, hs.apply_J(w)}, 2);
  const Matrix pinv = inverse(p);
  const HermitianStructure hs_a = hs.change_basis(p);
  const ConstraintSystem sys(h, hs_a, c);
  const Matrix& a = sys.linear();
  // unknowns: u entries (4) and s
  Matrix rows(a.rows() + 4, 5);
  Vector rhs(a.rows() + 4);
  const std::size_t v01 = 4 + 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t e = 0; e < 4; ++e) rows(r, e) = a(r, e);
    rows(r, 4) = a(r, v01);
    rhs[r] = sys.rhs()[r];
  }
  // [u, E01] = c E01 (s != 0 divided out)
  const Matrix e01 = unit_matrix(2, 0, 1);
  for (std::size_t e = 0; e < 4; ++e) {
    const Matrix r = commutator(unit_matrix(2, e / 2, e % 2), e01);
    for (std::size_t k = 0; k < 4; ++k) rows(a.rows() + k, e) = r(k / 2, k % 2);
  }
  for (std::size_t k = 0; k < 4; ++k) rhs[a.rows() + k] = c * e01(k / 2, k % 2);
  try {
    const AffineSolution sol = solve_affine(rows, rhs);
    const Vector& y = sol.particular;
    bool s_forced_zero = y[4].is_zero();
    for (std::size_t k = 0; k < sol.dimension() && s_forced_zero; ++k) s_forced_zero = sol.basis(4, k).is_zero();
    if (!s_forced_zero) {
      Vector pt = y;
      if (pt[4].is_zero()) pt = sol.point(Vector(sol.dimension(), Scalar(1)));
      const Matrix ua{{pt[0], pt[1]}, {pt[2], pt[3]}};
      const Matrix va = pt[4] * e01;
      out.rank_one.emplace_back(h, hs, p * ua * pinv, p * va * pinv, c);
    }
  } catch (const InfeasibleSystem&) {
  }
  return out;
}

}  // namespace lck
