#include "lck/analysis.hpp"

#include <sstream>

#include "lck/errors.hpp"
#include "lck/linalg.hpp"

namespace lck {

namespace {

std::optional<Witness> vector_witness(const std::string& what, std::vector<std::size_t> indices, const Vector& v) {
  const std::size_t k = first_nonzero(v);
  if (k == v.size()) return std::nullopt;
  indices.push_back(k);
  return Witness{what, std::move(indices), v[k]};
}

Verdict from_witness(std::optional<Witness> w) { return w ? Verdict::fail(std::move(*w)) : Verdict::pass(); }

std::string format_scalar(const Scalar& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace

std::string to_string(VerdictState s) {
  switch (s) {
    case VerdictState::holds:
      return "holds";
    case VerdictState::fails:
      return "fails";
    case VerdictState::not_applicable:
      return "not applicable";
  }
  return "?";
}

std::string describe(const Witness& w) {
  std::ostringstream os;
  os << w.what << " at (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? ", " : "") << w.indices[i];
  os << ") = " << w.residual;
  return os.str();
}

std::string describe(const Verdict& v) {
  switch (v.state) {
    case VerdictState::holds:
      return "holds";
    case VerdictState::fails:
      return v.witness ? "fails: " + describe(*v.witness) : "fails";
    case VerdictState::not_applicable:
      return "not applicable: " + v.reason;
  }
  return "?";
}

KForm fundamental_form(const HermitianStructure& h) { return KForm::from_matrix(h.g() * h.J()); }

LeeData lee_data(const LieAlgebra& alg, const HermitianStructure& h) {
  if (alg.dim() != h.dim()) throw DimensionMismatch("algebra and structure dimensions differ");
  if (h.dim() < 4) throw DomainError("anti-Lee form needs dim = 2n + 2 with n >= 1");
  const std::size_t n = h.dim() / 2 - 1;
  const KForm omega = fundamental_form(h);
  KForm eta = Scalar::rational(1, static_cast<long>(n)) * codifferential(alg, h, omega);
  KForm theta = interior_J(h, eta);
  Vector U = h.sharp(theta.as_covector());
  Vector V = h.sharp(eta.as_covector());
  Scalar norm_sq = h.inner(U, U);
  return LeeData{std::move(theta), std::move(eta), std::move(U), std::move(V), std::move(norm_sq), n};
}

Vector nijenhuis(const LieAlgebra& alg, const HermitianStructure& h, const Vector& x, const Vector& y) {
  const Vector jx = h.apply_J(x), jy = h.apply_J(y);
  return -alg.bracket(x, y) + alg.bracket(jx, jy) - h.apply_J(alg.bracket(jx, y)) - h.apply_J(alg.bracket(x, jy));
}

std::optional<Witness> nijenhuis_witness(const LieAlgebra& alg, const HermitianStructure& h) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto w = vector_witness("N_J", {i, j}, nijenhuis(alg, h, unit_vector(n, i), unit_vector(n, j)));
      if (w) return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> form_witness(const std::string& what, const KForm& f) {
  const auto idx = f.first_nonzero();
  if (!idx) return std::nullopt;
  return Witness{what, *idx, f.coefficient(*idx)};
}

Verdict is_hermitian(const LieAlgebra& alg, const HermitianStructure& h) { return from_witness(nijenhuis_witness(alg, h)); }

Verdict is_kahler(const LieAlgebra& alg, const HermitianStructure& h) {
  if (auto w = form_witness("d Omega", ce_differential(alg, fundamental_form(h)))) return Verdict::fail(*w);
  return from_witness(nijenhuis_witness(alg, h));
}

KForm lcs_residual(const LieAlgebra& alg, const HermitianStructure& h, const KForm& theta) {
  const KForm omega = fundamental_form(h);
  return ce_differential(alg, omega) - wedge(theta, omega);
}

Verdict is_lcs_with_lee_form(const LieAlgebra& alg, const HermitianStructure& h, const KForm& theta) {
  if (auto w = form_witness("d theta", ce_differential(alg, theta))) return Verdict::fail(*w);
  return from_witness(form_witness("d Omega - theta ^ Omega", lcs_residual(alg, h, theta)));
}

Verdict is_lck(const LieAlgebra& alg, const HermitianStructure& h, const LeeData& lee) {
  return is_lcs_with_lee_form(alg, h, lee.theta);
}

Verdict is_lck(const LieAlgebra& alg, const HermitianStructure& h) { return is_lck(alg, h, lee_data(alg, h)); }

Verdict is_integrable_lck(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  Verdict lck = is_lck(alg, h, lee);
  if (!lck.holds()) return lck;
  if (is_zero(lee.V)) return Verdict::not_applicable("anti-Lee vector vanishes");
  if (auto w = nijenhuis_witness(alg, h)) return Verdict::fail(*w);
  return from_witness(form_witness("eta ^ d eta", wedge(lee.eta, ce_differential(alg, lee.eta))));
}

Verdict is_vaisman(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  Verdict lck = is_lck(alg, h, lee);
  if (!lck.holds()) return lck;
  const Connection nabla = levi_civita(alg, h);
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (auto w = vector_witness("nabla U", {i}, nabla.covariant(unit_vector(n, i), lee.U))) return Verdict::fail(*w);
  }
  return Verdict::pass();
}

Verdict is_lcs_first_kind(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  if (auto w = form_witness("d theta", ce_differential(alg, lee.theta))) return Verdict::fail(*w);
  const KForm deta = ce_differential(alg, lee.eta);
  const std::size_t r = rank(deta.as_matrix());
  if (r != 2 * lee.n) return Verdict::fail(Witness{"rank d eta", {}, Scalar(static_cast<long>(r))});
  KForm top = wedge(lee.theta, lee.eta);
  for (std::size_t i = 0; i < lee.n; ++i) top = wedge(top, deta);
  if (top.is_zero()) return Verdict::fail(Witness{"theta ^ eta ^ (d eta)^n", {}, Scalar(0)});
  return Verdict::pass();
}

Verdict is_gauduchon(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  const Scalar dt = codifferential(alg, h, lee.theta).at(0);
  if (!dt.is_zero()) return Verdict::fail(Witness{"delta theta", {}, dt});
  return Verdict::pass();
}

Scalar theorem_delta_residual(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  const Scalar dt = codifferential(alg, h, lee.theta).at(0);
  const KForm deta = ce_differential(alg, lee.eta);
  const Scalar n(static_cast<long>(lee.n));
  return lee.norm_sq * dt + deta(lee.U, lee.V) + n * lee.norm_sq * lee.norm_sq;
}

DetaCheck theorem_deta_check(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  if (lee.norm_sq.is_zero()) throw DomainError("Lee form vanishes");
  const Scalar dt = codifferential(alg, h, lee.theta).at(0);
  const Scalar n(static_cast<long>(lee.n));
  const Scalar coeff = dt / lee.norm_sq + n;
  KForm form_residual = ce_differential(alg, lee.eta) - coeff * wedge(lee.eta, lee.theta);
  Vector bracket_residual = alg.bracket(lee.U, lee.V) - (dt + n * lee.norm_sq) * lee.V;
  return DetaCheck{dt, coeff, std::move(form_residual), std::move(bracket_residual)};
}

KForm sss_residual(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  const KForm deta = ce_differential(alg, lee.eta);
  return (lee.norm_sq * lee.norm_sq) * deta - deta(lee.U, lee.V) * wedge(lee.theta, lee.eta);
}

std::optional<Scalar> normalized_bracket_constant(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  if (lee.norm_sq.is_zero()) return std::nullopt;
  const Vector b = alg.bracket(lee.U, lee.V);
  const std::size_t k = first_nonzero(lee.V);
  const Scalar kappa = b[k] / lee.V[k];
  if (!is_zero(b - kappa * lee.V)) return std::nullopt;
  return kappa / lee.norm_sq;
}

HermitianStructure rescale_metric(const LieAlgebra& alg, const HermitianStructure& h) {
  const LeeData lee = lee_data(alg, h);
  if (lee.norm_sq.is_zero()) throw DomainError("cannot normalise a vanishing Lee form");
  return h.scaled(lee.norm_sq);
}

std::vector<Claim> structural_theorem_suite(const LieAlgebra& alg, const HermitianStructure& h) {
  std::vector<Claim> claims;
  const std::size_t dim = alg.dim();
  const LeeData lee = lee_data(alg, h);
  const Subspace lee_plane = Subspace::span({lee.U, lee.V}, dim);
  const Subspace ideal = lee_plane.orthogonal_complement(h.g());
  const auto ideal_basis = ideal.basis();

  {
    std::optional<Witness> w;
    for (std::size_t i = 0; i < dim && !w; ++i) {
      for (std::size_t a = 0; a < ideal_basis.size() && !w; ++a) {
        const Vector b = alg.bracket(unit_vector(dim, i), ideal_basis[a]);
        if (ideal.contains(b)) continue;
        Scalar r = h.inner(b, lee.U);
        if (r.is_zero()) r = h.inner(b, lee.V);
        w = Witness{"[e_i, y_a] leaves <U,V>^perp", {i, a}, r};
      }
    }
    claims.push_back({"lee_plane_complement_is_ideal", from_witness(w)});
  }
  {
    std::optional<Witness> w;
    for (std::size_t a = 0; a < ideal_basis.size() && !w; ++a) {
      const Vector jy = h.apply_J(ideal_basis[a]);
      if (!ideal.contains(jy)) {
        Scalar r = h.inner(jy, lee.U);
        if (r.is_zero()) r = h.inner(jy, lee.V);
        w = Witness{"J y_a leaves <U,V>^perp", {a}, r};
      }
    }
    claims.push_back({"lee_plane_complement_is_J_invariant", from_witness(w)});
  }
  {
    const KForm domega = ce_differential(alg, fundamental_form(h));
    std::optional<Witness> w;
    const std::size_t m = ideal_basis.size();
    for (std::size_t a = 0; a < m && !w; ++a)
      for (std::size_t b = a + 1; b < m && !w; ++b)
        for (std::size_t c = b + 1; c < m && !w; ++c) {
          const Vector args[] = {ideal_basis[a], ideal_basis[b], ideal_basis[c]};
          const Scalar r = domega(std::span<const Vector>(args));
          if (!r.is_zero()) w = Witness{"d omega on <U,V>^perp", {a, b, c}, r};
        }
    claims.push_back({"restricted_form_closed", from_witness(w)});
  }
  {
    std::optional<Witness> w;
    for (std::size_t a = 0; a < ideal_basis.size() && !w; ++a)
      for (std::size_t b = a + 1; b < ideal_basis.size() && !w; ++b)
        w = vector_witness("N_J on <U,V>^perp", {a, b}, nijenhuis(alg, h, ideal_basis[a], ideal_basis[b]));
    claims.push_back({"restricted_J_integrable", from_witness(w)});
  }
  {
    const Vector b = alg.bracket(lee.U, lee.V);
    Verdict v = lee_plane.contains(b) ? Verdict::pass()
                                      : Verdict::fail(Witness{"[U,V] outside <U,V>", {}, h.inner(b, b)});
    claims.push_back({"lee_plane_is_subalgebra", std::move(v)});
  }

  const Subspace u_perp = Subspace::span({lee.U}, dim).orthogonal_complement(h.g());
  const Subspace derived = derived_subalgebra(alg);
  const bool unimodular = is_unimodular(alg);
  {
    const auto c = normalized_bracket_constant(alg, h);
    std::ostringstream obs;
    obs << "observed dim [g,g] = " << derived.dim() << ", dim U^perp = " << u_perp.dim();
    if (!c) {
      claims.push_back({"derived_algebra_is_U_perp", Verdict::not_applicable("[U,V] is not a multiple of V; " + obs.str())});
    } else if (c->sign() == 0 || *c <= Scalar(-1)) {
      claims.push_back({"derived_algebra_is_U_perp",
                        Verdict::not_applicable("normalised constant c = " + format_scalar(*c) +
                                                " violates c > -1, c != 0; " + obs.str())});
    } else if (derived == u_perp) {
      claims.push_back({"derived_algebra_is_U_perp", Verdict::pass()});
    } else {
      claims.push_back({"derived_algebra_is_U_perp",
                        Verdict::fail(Witness{"dim [g,g] vs dim U^perp", {derived.dim(), u_perp.dim()},
                                              Scalar(static_cast<long>(u_perp.dim()) - static_cast<long>(derived.dim()))})});
    }
  }

  if (!unimodular) {
    const std::string why = "algebra is not unimodular";
    claims.push_back({"unimodular_implies_solvable", Verdict::not_applicable(why)});
    claims.push_back({"unimodular_ideal_is_abelian", Verdict::not_applicable(why)});
    claims.push_back({"unimodular_bracket_UV_is_nV", Verdict::not_applicable(why)});
    return claims;
  }
  {
    const auto series = derived_series(alg);
    Verdict v = series.back() == 0 ? Verdict::pass()
                                   : Verdict::fail(Witness{"derived series stabilises above 0", {series.size() - 1},
                                                           Scalar(static_cast<long>(series.back()))});
    claims.push_back({"unimodular_implies_solvable", std::move(v)});
  }
  {
    std::optional<Witness> w;
    for (std::size_t a = 0; a < ideal_basis.size() && !w; ++a)
      for (std::size_t b = a + 1; b < ideal_basis.size() && !w; ++b)
        w = vector_witness("[y_a, y_b]", {a, b}, alg.bracket(ideal_basis[a], ideal_basis[b]));
    claims.push_back({"unimodular_ideal_is_abelian", from_witness(w)});
  }
  {
    const Scalar n(static_cast<long>(lee.n));
    const Vector r = alg.bracket(lee.U, lee.V) - (n * lee.norm_sq) * lee.V;
    claims.push_back({"unimodular_bracket_UV_is_nV", from_witness(vector_witness("[U,V] - n|theta|^2 V", {}, r))});
  }
  return claims;
}

StructureReport analyze(const LieAlgebra& alg, const HermitianStructure& h) {
  StructureReport r;
  r.hermitian = is_hermitian(alg, h);
  r.kahler = is_kahler(alg, h);
  {
    std::optional<Witness> w;
    for (std::size_t i = 0; i < alg.dim() && !w; ++i) {
      const Scalar t = alg.ad_basis(i).trace();
      if (!t.is_zero()) w = Witness{"trace ad_{e_i}", {i}, t};
    }
    r.unimodular = from_witness(w);
  }
  {
    const auto series = derived_series(alg);
    r.solvable = series.back() == 0 ? Verdict::pass()
                                    : Verdict::fail(Witness{"derived series stabilises above 0", {series.size() - 1},
                                                            Scalar(static_cast<long>(series.back()))});
  }
  if (alg.dim() < 4) {
    const std::string why = "anti-Lee form needs dim >= 4";
    r.lck = r.vaisman = r.integrable_lck = r.lcs_first_kind = r.gauduchon = Verdict::not_applicable(why);
    return r;
  }
  r.lee = lee_data(alg, h);
  r.lck = is_lck(alg, h, *r.lee);
  r.vaisman = is_vaisman(alg, h);
  r.integrable_lck = is_integrable_lck(alg, h);
  r.lcs_first_kind = is_lcs_first_kind(alg, h);
  r.gauduchon = is_gauduchon(alg, h);
  if (r.integrable_lck.holds()) {
    r.delta_residual = theorem_delta_residual(alg, h);
    r.deta = theorem_deta_check(alg, h);
    r.claims = structural_theorem_suite(alg, h);
  }
  return r;
}

}  // namespace lck
