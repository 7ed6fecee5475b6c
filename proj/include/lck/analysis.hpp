#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lck/forms.hpp"
#include "lck/hermitian.hpp"
#include "lck/lie_algebra.hpp"

namespace lck {

/// Violating evaluation: basis indices and the residual value there.
struct Witness {
  std::string what;
  std::vector<std::size_t> indices;
  Scalar residual;
};

enum class VerdictState { holds, fails, not_applicable };

struct Verdict {
  VerdictState state = VerdictState::holds;
  std::optional<Witness> witness;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {VerdictState::fails, std::move(w), {}}; }
  static Verdict not_applicable(std::string why) { return {VerdictState::not_applicable, std::nullopt, std::move(why)}; }
  bool holds() const { return state == VerdictState::holds; }
  bool fails() const { return state == VerdictState::fails; }
};

std::string to_string(VerdictState s);
/// "what at (i, j) = r".
std::string describe(const Witness& w);
/// State plus witness or reason.
std::string describe(const Verdict& v);

struct LeeData {
  KForm theta;
  KForm eta;
  Vector U;
  Vector V;
  Scalar norm_sq;
  std::size_t n;
};

/// Omega(X, Y) = g(X, JY).
KForm fundamental_form(const HermitianStructure& h);

/// eta = (1/n) delta Omega, theta = i_J eta, U = theta^#, V = eta^#.
/// Throws DomainError unless dim = 2n + 2 with n >= 1.
LeeData lee_data(const LieAlgebra& alg, const HermitianStructure& h);

/// N(X,Y) = -[X,Y] + [JX,JY] - J[JX,Y] - J[X,JY].
Vector nijenhuis(const LieAlgebra& alg, const HermitianStructure& h, const Vector& x, const Vector& y);

/// First basis pair (i<j) with N(e_i, e_j) != 0; the residual is the first
/// nonzero component.
std::optional<Witness> nijenhuis_witness(const LieAlgebra& alg, const HermitianStructure& h);

/// First increasing index tuple where the form is nonzero.
std::optional<Witness> form_witness(const std::string& what, const KForm& f);

/// J integrable (g and J compatibility is enforced by HermitianStructure).
Verdict is_hermitian(const LieAlgebra& alg, const HermitianStructure& h);
/// d Omega = 0 and N_J = 0.
Verdict is_kahler(const LieAlgebra& alg, const HermitianStructure& h);
/// d Omega - theta ^ Omega for a caller-supplied theta.
KForm lcs_residual(const LieAlgebra& alg, const HermitianStructure& h, const KForm& theta);

/// d theta = 0 and d Omega = theta ^ Omega for a prescribed Lee form.
Verdict is_lcs_with_lee_form(const LieAlgebra& alg, const HermitianStructure& h, const KForm& theta);

/// d theta = 0 and d Omega = theta ^ Omega.
Verdict is_lck(const LieAlgebra& alg, const HermitianStructure& h);
Verdict is_lck(const LieAlgebra& alg, const HermitianStructure& h, const LeeData& lee);
/// LCK, N_J = 0 and eta ^ d eta = 0. Not applicable when V = 0.
Verdict is_integrable_lck(const LieAlgebra& alg, const HermitianStructure& h);
/// LCK and nabla_{e_i} U = 0 for all i.
Verdict is_vaisman(const LieAlgebra& alg, const HermitianStructure& h);
/// d theta = 0, rank d eta = 2n and theta ^ eta ^ (d eta)^n != 0.
Verdict is_lcs_first_kind(const LieAlgebra& alg, const HermitianStructure& h);
/// delta theta = 0.
Verdict is_gauduchon(const LieAlgebra& alg, const HermitianStructure& h);

/// |theta|^2 delta theta + d eta(U, V) + n |theta|^4.
Scalar theorem_delta_residual(const LieAlgebra& alg, const HermitianStructure& h);

struct DetaCheck {
  Scalar delta_theta;
  /// delta theta / |theta|^2 + n
  Scalar coefficient;
  /// d eta - coefficient * (eta ^ theta)
  KForm form_residual;
  /// [U, V] - (delta theta + n |theta|^2) V; the gradient term vanishes for
  /// invariant structures.
  Vector bracket_residual;
  bool holds() const { return form_residual.is_zero() && lck::is_zero(bracket_residual); }
};

/// Throws DomainError when theta = 0.
DetaCheck theorem_deta_check(const LieAlgebra& alg, const HermitianStructure& h);

/// |theta|^4 d eta - d eta(U, V) theta ^ eta.
KForm sss_residual(const LieAlgebra& alg, const HermitianStructure& h);

/// [U, V] = kappa V with kappa / |theta|^2 the value after normalising
/// |theta| = 1. Empty when [U, V] is not a multiple of V or theta = 0.
std::optional<Scalar> normalized_bracket_constant(const LieAlgebra& alg, const HermitianStructure& h);

/// Multiplies g by |theta|^2 so that |theta| = 1 afterwards.
HermitianStructure rescale_metric(const LieAlgebra& alg, const HermitianStructure& h);

struct Claim {
  std::string name;
  Verdict verdict;
};

/// Structural consequences of integrable LCK: the ideal <U,V>^perp, the
/// subalgebra <U,V>, [g,g] = U^perp, and the unimodular refinements.
std::vector<Claim> structural_theorem_suite(const LieAlgebra& alg, const HermitianStructure& h);

struct StructureReport {
  Verdict hermitian;
  Verdict kahler;
  Verdict lck;
  Verdict vaisman;
  Verdict integrable_lck;
  Verdict lcs_first_kind;
  Verdict gauduchon;
  Verdict unimodular;
  Verdict solvable;
  std::optional<LeeData> lee;
  /// Diagnostic residuals when lee data exist.
  std::optional<Scalar> delta_residual;
  std::optional<DetaCheck> deta;
  std::vector<Claim> claims;
};

StructureReport analyze(const LieAlgebra& alg, const HermitianStructure& h);

}  // namespace lck
