#include "lck/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lck/analysis.hpp"
#include "lck/document.hpp"
#include "lck/errors.hpp"
#include "lck/forms.hpp"
#include "lck/search.hpp"

namespace lck {

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome ok(std::string detail = {}) { return {CheckStatus::pass, std::move(detail)}; }
Outcome bad(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }
Outcome skip(std::string why) { return {CheckStatus::skipped, std::move(why)}; }
Outcome expect(bool cond, std::string detail) { return cond ? ok() : bad(std::move(detail)); }

Outcome from_verdict(const Verdict& v) {
  switch (v.state) {
    case VerdictState::holds:
      return ok();
    case VerdictState::fails:
      return bad(describe(v));
    case VerdictState::not_applicable:
      return skip(v.reason);
  }
  return bad("unknown verdict");
}

Outcome from_form(const std::string& what, const KForm& f) {
  const auto w = form_witness(what, f);
  return w ? bad(describe(*w)) : ok();
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

class Runner {
 public:
  explicit Runner(const VerifyOptions& opts) : opts_(opts) {}

  bool enabled(const std::string& group) const { return !opts_.only || *opts_.only == group; }

  template <class F>
  void run(const std::string& group, const std::string& name, F&& f) {
    CheckResult r{group, name, CheckStatus::pass, {}};
    try {
      Outcome o = f();
      r.status = o.status;
      r.detail = std::move(o.detail);
    } catch (const Error& e) {
      r.status = CheckStatus::fail;
      r.detail = std::string("error: ") + e.what();
    }
    if (opts_.on_result) opts_.on_result(r);
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const VerifyOptions& opts_;
  std::vector<CheckResult> results_;
};

HermitianLieAlgebra change_basis(const HermitianLieAlgebra& a, const Matrix& p) {
  return HermitianLieAlgebra{a.alg.change_basis(p), a.h.change_basis(p)};
}

/// R + heis(3): [e1, e2] = e3, J e1 = e2, J e3 = e0.
HermitianLieAlgebra vaisman_example() {
  StructureConstants sc(4);
  sc.set_bracket(1, 2, unit_vector(4, 3));
  Matrix J(4, 4);
  J(2, 1) = 1;
  J(1, 2) = -1;
  J(0, 3) = 1;
  J(3, 0) = -1;
  return HermitianLieAlgebra{LieAlgebra(std::move(sc)), HermitianStructure(Matrix::identity(4), J)};
}

Matrix skew_basis(std::size_t dim) {
  Matrix p = Matrix::identity(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) p(i, i + 1) = Scalar::rational(1, 2);
  p(dim - 1, dim - 1) = 2;
  return p;
}

Matrix rotation2() { return Matrix{{Scalar::rational(3, 5), Scalar::rational(-4, 5)}, {Scalar::rational(4, 5), Scalar::rational(3, 5)}}; }

KForm lee_plane_form(std::size_t dim) { return KForm::covector(unit_vector(dim, 0)); }

// ---- groups ----

void forms_group(Runner& r, const std::vector<CorpusEntry>& corpus) {
  const std::string g = "forms";
  for (const auto& e : corpus) {
    const LieAlgebra& alg = e.algebra.alg;
    const HermitianStructure& h = e.algebra.h;
    const std::string tag = " [" + e.name + "]";
    r.run(g, "lck" + tag, [&] { return from_verdict(is_lck(alg, h)); });
    r.run(g, "i_U Omega = -eta" + tag, [&] {
      const LeeData lee = lee_data(alg, h);
      return from_form("i_U Omega + eta", interior(fundamental_form(h), lee.U) + lee.eta);
    });
    r.run(g, "i_V Omega = theta" + tag, [&] {
      const LeeData lee = lee_data(alg, h);
      return from_form("i_V Omega - theta", interior(fundamental_form(h), lee.V) - lee.theta);
    });
    r.run(g, "i_J d eta = 0" + tag, [&] {
      const LeeData lee = lee_data(alg, h);
      return from_form("i_J d eta", interior_J(h, ce_differential(alg, lee.eta)));
    });
    r.run(g, "L_V g = g((L_V J) J)" + tag, [&] {
      const LeeData lee = lee_data(alg, h);
      const Matrix lg = lie_derivative_metric(alg, h, lee.V);
      const Matrix lj = lie_derivative_J(alg, h, lee.V);
      const Matrix diff = lg - h.g() * lj * h.J();
      return expect(diff.is_zero(), "max residual " + str(diff.max_abs()));
    });
    r.run(g, "V Killing implies L_V J = 0 and [U,V] = 0" + tag, [&] {
      const LeeData lee = lee_data(alg, h);
      if (!lie_derivative_metric(alg, h, lee.V).is_zero()) return skip("V is not Killing");
      if (!lie_derivative_J(alg, h, lee.V).is_zero()) return bad("L_V J != 0");
      return expect(is_zero(alg.bracket(lee.U, lee.V)), "[U,V] != 0");
    });
  }
}

void residuals_group(Runner& r, const std::vector<CorpusEntry>& corpus) {
  const std::string g = "residuals";
  for (const auto& e : corpus) {
    if (!e.integrable) continue;
    const LieAlgebra& alg = e.algebra.alg;
    const HermitianStructure& h = e.algebra.h;
    const std::string tag = " [" + e.name + "]";
    r.run(g, "|theta|^4 d eta = d eta(U,V) theta ^ eta" + tag, [&] { return from_form("residual", sss_residual(alg, h)); });
    r.run(g, "|theta|^2 delta theta + d eta(U,V) + n |theta|^4 = 0" + tag, [&] {
      const Scalar res = theorem_delta_residual(alg, h);
      return expect(res.is_zero(), "residual " + str(res));
    });
    r.run(g, "d eta = (delta theta / |theta|^2 + n) eta ^ theta" + tag, [&] {
      const DetaCheck d = theorem_deta_check(alg, h);
      if (const auto w = form_witness("d eta - k eta ^ theta", d.form_residual)) return bad(describe(*w));
      return expect(is_zero(d.bracket_residual), "[U,V] residual nonzero");
    });
    r.run(g, "Gauduchon with |theta| = 1: d eta = n eta ^ theta, [U,V] = nV" + tag, [&] {
      if (!is_gauduchon(alg, h).holds()) return skip("delta theta != 0");
      const HermitianStructure hn = rescale_metric(alg, h);
      const LeeData lee = lee_data(alg, hn);
      if (!(lee.norm_sq == Scalar(1))) return bad("rescaled |theta|^2 = " + str(lee.norm_sq));
      const Scalar n(static_cast<unsigned long>(lee.n));
      const KForm res = ce_differential(alg, lee.eta) - n * wedge(lee.eta, lee.theta);
      if (const auto w = form_witness("d eta - n eta ^ theta", res)) return bad(describe(*w));
      return expect(is_zero(alg.bracket(lee.U, lee.V) - n * lee.V), "[U,V] != nV");
    });
  }
}

void structure_group(Runner& r, const std::vector<CorpusEntry>& corpus) {
  const std::string g = "structure";
  for (const auto& e : corpus) {
    const LieAlgebra& alg = e.algebra.alg;
    const HermitianStructure& h = e.algebra.h;
    const std::string tag = " [" + e.name + "]";
    r.run(g, "vaisman and integrable lck exclusive" + tag, [&] {
      const bool v = is_vaisman(alg, h).holds();
      const bool i = is_integrable_lck(alg, h).holds();
      return expect(!(v && i), "both flags hold");
    });
    if (!e.integrable) {
      r.run(g, "vaisman" + tag, [&] { return from_verdict(is_vaisman(alg, h)); });
      continue;
    }
    r.run(g, "integrable lck" + tag, [&] { return from_verdict(is_integrable_lck(alg, h)); });
    std::vector<Claim> claims;
    r.run(g, "structural suite evaluates" + tag, [&] {
      claims = structural_theorem_suite(alg, h);
      return ok();
    });
    for (const Claim& c : claims) {
      r.run(g, c.name + tag, [&] { return from_verdict(c.verdict); });
    }
  }
  r.run(g, "d4: every structural claim applies and holds", [&] {
    const HermitianLieAlgebra a = semidirect(build_d4());
    for (const Claim& c : structural_theorem_suite(a.alg, a.h)) {
      if (!c.verdict.holds()) return bad(c.name + " " + describe(c.verdict));
    }
    return ok();
  });
}

void conditions_group(Runner& r) {
  const std::string g = "conditions";
  std::vector<std::pair<std::string, KahlerTriple>> passing;
  passing.emplace_back("d4", build_d4());
  for (const char* b : {"0", "1", "-2", "7/2"}) passing.emplace_back(std::string("gb(") + b + ")", build_gb(Scalar::parse(b)));
  for (long n = 1; n <= 3; ++n) passing.emplace_back("dim(n=" + std::to_string(n) + ")", build_dim(n));
  passing.emplace_back("counterexample", build_counterexample());
  passing.emplace_back("d4 at c=-1/2", correspondence(build_d4(), Scalar::rational(-1, 2)));
  passing.emplace_back("gb(7/2) at c=5", correspondence(build_gb(Scalar::rational(7, 2)), Scalar(5)));

  for (const auto& entry : passing) {
    const std::string& name = entry.first;
    const KahlerTriple& t = entry.second;
    r.run(g, "conditions hold [" + name + "]", [&] {
      const TripleReport rep = check_triple(t);
      for (const auto& c : rep.conditions) {
        if (!c.holds()) return bad(c.name + " residual " + str(c.norm()));
      }
      return ok();
    });
    r.run(g, "semidirect is integrable lck with U = theta^# [" + name + "]", [&] {
      const HermitianLieAlgebra a = semidirect(t);
      const Verdict v = is_integrable_lck(a.alg, a.h);
      if (!v.holds()) return bad(describe(v));
      const LeeData lee = lee_data(a.alg, a.h);
      return expect(lee.U == unit_vector(a.alg.dim(), 0) && lee.V == unit_vector(a.alg.dim(), 1),
                    "Lee vector differs from U");
    });
  }

  const std::vector<KahlerTriple> mixed = condition_test_triples(20, 7);
  std::size_t int_fail = 0, lcs_fail = 0, all_pass = 0;
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    const KahlerTriple& t = mixed[i];
    const TripleReport rep = check_triple(t);
    int_fail += !rep.integrability_holds();
    lcs_fail += !rep.lcs_conditions_hold();
    all_pass += rep.in_H();
    const std::string tag = " [mixed #" + std::to_string(i) + "]";
    r.run(g, "N_J != 0 iff [v + uJ, J] != 0" + tag, [&] {
      const HermitianLieAlgebra a = semidirect(t);
      const bool n_nonzero = nijenhuis_witness(a.alg, a.h).has_value();
      return expect(n_nonzero == !rep.integrability_holds(),
                    std::string("N_J ") + (n_nonzero ? "nonzero" : "zero") + ", condition " +
                        (rep.integrability_holds() ? "holds" : "fails"));
    });
    r.run(g, "d Omega - theta ^ Omega != 0 iff LCS conditions fail" + tag, [&] {
      const HermitianLieAlgebra a = semidirect(t);
      const bool res_nonzero = !lcs_residual(a.alg, a.h, lee_plane_form(a.alg.dim())).is_zero();
      return expect(res_nonzero == !rep.lcs_conditions_hold(),
                    std::string("residual ") + (res_nonzero ? "nonzero" : "zero") + ", conditions " +
                        (rep.lcs_conditions_hold() ? "hold" : "fail"));
    });
    if (rep.in_H()) {
      r.run(g, "passing triple gives integrable lck" + tag, [&] {
        const HermitianLieAlgebra a = semidirect(t);
        return from_verdict(is_integrable_lck(a.alg, a.h));
      });
    }
  }
  r.run(g, "mixed triples cover every case", [&] {
    return expect(int_fail > 0 && lcs_fail > 0 && all_pass > 0,
                  "integrability failures " + std::to_string(int_fail) + ", lcs failures " + std::to_string(lcs_fail) +
                      ", passing " + std::to_string(all_pass));
  });

  r.run(g, "u = v = 0, c = 1: theta = U^flat fails at (U, X, JX)", [&] {
    const KahlerTriple t(LieAlgebra::abelian(2), standard_hermitian(2), Matrix(2, 2), Matrix(2, 2), Scalar(1));
    const HermitianLieAlgebra a = semidirect(t);
    const Verdict v = is_lcs_with_lee_form(a.alg, a.h, lee_plane_form(4));
    if (!v.fails()) return bad("expected a failure, got " + describe(v));
    return expect(v.witness->indices == std::vector<std::size_t>{0, 2, 3}, "witness " + describe(v));
  });

  for (const char* c : {"-1", "0", "1/2", "2"}) {
    r.run(g, std::string("r_{2,c} is Kahler [c=") + c + "]", [&] {
      const HermitianLieAlgebra a = build_r2c(Scalar::parse(c));
      return from_verdict(is_kahler(a.alg, a.h));
    });
  }

  const auto round_trip = [&](const std::string& name, const KahlerTriple& t, const Scalar& via) {
    r.run(g, "correspondence round trip [" + name + " via c=" + str(via) + "]", [&] {
      const KahlerTriple mid = correspondence(t, via);
      if (!check_triple(mid).in_A()) return bad("image is not in A_{n,c}");
      const KahlerTriple back = correspondence(mid, t.c());
      return expect(back.u().identical(t.u()) && back.v().identical(t.v()) && back.c().identical(t.c()),
                    "round trip differs");
    });
  };
  round_trip("d4", build_d4(), Scalar(2));
  round_trip("dim(n=3)", build_dim(3), Scalar(1));
  round_trip("gb(-2)", build_gb(Scalar(-2)), Scalar::rational(-1, 3));
}

void counterexample_group(Runner& r) {
  const std::string g = "counterexample";
  const KahlerTriple t = build_counterexample();
  const HermitianLieAlgebra a = semidirect(t);
  const std::size_t d = a.alg.dim();
  r.run(g, "triple in H_{1,-1}, h not abelian", [&] {
    const TripleReport rep = check_triple(t);
    return expect(rep.in_H() && !rep.in_A(), "expected H but not A");
  });
  r.run(g, "semidirect is integrable lck", [&] { return from_verdict(is_integrable_lck(a.alg, a.h)); });
  r.run(g, "trace ad_U = -2", [&] {
    const Scalar tr = ad_trace(a.alg, unit_vector(d, 0));
    return expect(tr == Scalar(-2), "trace " + str(tr));
  });
  r.run(g, "not unimodular", [&] { return expect(!is_unimodular(a.alg), "unimodular"); });
  r.run(g, "dim [g,g] = 2 < 3 = dim U^perp", [&] {
    const Subspace derived = derived_subalgebra(a.alg);
    const Subspace uperp = Subspace::span({unit_vector(d, 0)}, d).orthogonal_complement(a.h.g());
    return expect(derived.dim() == 2 && uperp.dim() == 3 && uperp.contains(derived),
                  "dim [g,g] = " + std::to_string(derived.dim()) + ", dim U^perp = " + std::to_string(uperp.dim()));
  });
  r.run(g, "[g,g] = U^perp claim not applicable", [&] {
    for (const Claim& c : structural_theorem_suite(a.alg, a.h)) {
      if (c.name == "derived_algebra_is_U_perp") {
        return expect(c.verdict.state == VerdictState::not_applicable, describe(c.verdict));
      }
    }
    return bad("claim missing");
  });
  r.run(g, "d eta = -eta ^ theta", [&] {
    const DetaCheck dc = theorem_deta_check(a.alg, a.h);
    return expect(dc.holds() && dc.coefficient == Scalar(-1) && dc.delta_theta == Scalar(-2),
                  "coefficient " + str(dc.coefficient) + ", delta theta " + str(dc.delta_theta));
  });
}

void dim4_group(Runner& r) {
  const std::string g = "dim4";
  for (const char* b : {"0", "1", "-2", "7/2"}) {
    const Scalar bs = Scalar::parse(b);
    const KahlerTriple t = build_gb(bs);
    const std::string tag = std::string(" [b=") + b + "]";
    r.run(g, "gb classifies as FamilyGb" + tag, [&] {
      const Dim4Class c = classify_dim4(t);
      return expect(c.tag == Dim4Class::Tag::family_gb && c.b.identical(bs), "got " + c.label());
    });
    r.run(g, "gb invariant under rotation" + tag, [&] {
      const Dim4Class c = classify_dim4(t.change_basis(rotation2()));
      return expect(c.tag == Dim4Class::Tag::family_gb && c.b.identical(bs), "got " + c.label());
    });
    r.run(g, "gb invariant under skew basis change" + tag, [&] {
      const Dim4Class c = classify_dim4(t.change_basis(skew_basis(2)));
      return expect(c.tag == Dim4Class::Tag::family_gb && c.b.identical(bs), "got " + c.label());
    });
    r.run(g, "gb semidirect is unimodular integrable lck" + tag, [&] {
      const HermitianLieAlgebra a = semidirect(t);
      const Verdict v = is_integrable_lck(a.alg, a.h);
      if (!v.holds()) return from_verdict(v);
      return expect(is_unimodular(a.alg), "not unimodular");
    });
  }
  r.run(g, "d4 classifies as D4", [&] {
    const Dim4Class c = classify_dim4(build_d4());
    return expect(c.tag == Dim4Class::Tag::d4, "got " + c.label());
  });
  r.run(g, "d4 invariant under rotation and skew basis change", [&] {
    const Dim4Class c1 = classify_dim4(build_d4().change_basis(rotation2()));
    const Dim4Class c2 = classify_dim4(build_d4().change_basis(skew_basis(2)));
    return expect(c1.tag == Dim4Class::Tag::d4 && c2.tag == Dim4Class::Tag::d4, "got " + c1.label() + ", " + c2.label());
  });
  r.run(g, "isomorphism agrees with parameter equality", [&] {
    const KahlerTriple g3 = build_gb(Scalar(3));
    const bool same = triples_isomorphic_dim4(g3, g3.change_basis(rotation2()));
    const bool diff = triples_isomorphic_dim4(g3, build_gb(Scalar(4)));
    const bool mixed = triples_isomorphic_dim4(build_d4(), build_gb(Scalar(0)));
    return expect(same && !diff && !mixed, "unexpected isomorphism verdict");
  });
  r.run(g, "nilpotent v enumeration at c = 1", [&] {
    const std::vector<Scalar> params{Scalar(0), Scalar(1), Scalar(-2), Scalar::rational(7, 2)};
    const NilpotentEnumeration en = enumerate_nilpotent_v_dim2(LieAlgebra::abelian(2), standard_hermitian(2), Scalar(1), params);
    if (en.v_zero_family.dimension() != 1) return bad("v = 0 family has dimension " + std::to_string(en.v_zero_family.dimension()));
    for (const KahlerTriple& t : en.family_samples) {
      if (classify_dim4(t).tag != Dim4Class::Tag::family_gb) return bad("family sample not in the family");
    }
    if (en.rank_one.size() != 1) return bad("rank one solutions: " + std::to_string(en.rank_one.size()));
    return expect(classify_dim4(en.rank_one[0]).tag == Dim4Class::Tag::d4, "rank one solution is not D4");
  });
}

void builders_group(Runner& r) {
  const std::string g = "builders";
  for (long n = 1; n <= 5; ++n) {
    const std::string tag = " [n=" + std::to_string(n) + "]";
    const KahlerTriple t = build_dim(n);
    const Scalar ns(n);
    r.run(g, "triple in A_{n,n}" + tag, [&] {
      return expect(check_triple(t).in_A() && t.c() == ns && t.n() == static_cast<std::size_t>(n), "not in A_{n,n}");
    });
    r.run(g, "trace u = -n" + tag, [&] { return expect(t.u().trace() == -ns, "trace " + str(t.u().trace())); });
    const HermitianLieAlgebra a = semidirect(t);
    r.run(g, "semidirect is integrable lck" + tag, [&] { return from_verdict(is_integrable_lck(a.alg, a.h)); });
    r.run(g, "unimodular and solvable" + tag, [&] {
      const auto series = derived_series(a.alg);
      return expect(is_unimodular(a.alg) && is_solvable(a.alg) && series.size() <= 4 && series.back() == 0,
                    "derived series length " + std::to_string(series.size()));
    });
    r.run(g, "[U,V] = nV" + tag, [&] {
      const std::size_t d = a.alg.dim();
      return expect(is_zero(a.alg.bracket(unit_vector(d, 0), unit_vector(d, 1)) - ns * unit_vector(d, 1)), "[U,V] != nV");
    });
    r.run(g, "structural claims hold" + tag, [&] {
      for (const Claim& c : structural_theorem_suite(a.alg, a.h)) {
        if (!c.verdict.holds()) return bad(c.name + " " + describe(c.verdict));
      }
      return ok();
    });
  }
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::skipped:
      return "N/A";
  }
  return "?";
}

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> groups{"forms", "residuals", "structure", "conditions", "counterexample", "dim4", "builders"};
  return groups;
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;
  const auto add = [&](std::string name, const KahlerTriple& t) { out.push_back({std::move(name), semidirect(t), true}); };
  add("d4", build_d4());
  for (const char* b : {"0", "1", "-2", "7/2"}) add(std::string("gb(") + b + ")", build_gb(Scalar::parse(b)));
  add("dim(n=2)", build_dim(2));
  add("dim(n=3)", build_dim(3));
  add("counterexample", build_counterexample());
  add("d4 at c=2", correspondence(build_d4(), Scalar(2)));
  add("gb(1) at c=-1/2", correspondence(build_gb(Scalar(1)), Scalar::rational(-1, 2)));
  out.push_back({"d4, skew basis", change_basis(semidirect(build_d4()), skew_basis(4)), true});
  out.push_back({"counterexample, skew basis", change_basis(semidirect(build_counterexample()), skew_basis(4)), true});
  out.push_back({"R + heis(3)", vaisman_example(), false});
  return out;
}

CorpusEntry load_corpus_entry(const std::string& name, const std::string& text) {
  if (looks_like_triple(text)) return CorpusEntry{name, semidirect(parse_triple_document(text).triple), true};
  return CorpusEntry{name, parse_algebra_document(text).algebra, true};
}

std::vector<KahlerTriple> condition_test_triples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const auto small = [&] { return Scalar::rational(pick(-6, 6), pick(1, 2)); };
  const std::vector<Scalar> cs{Scalar(1), Scalar(2), Scalar(-1), Scalar::rational(1, 2), Scalar(3)};
  std::vector<KahlerTriple> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Scalar c = cs[i % cs.size()];
    const std::size_t blocks = 1 + i % 2;
    Matrix u, v;
    for (std::size_t b = 0; b < blocks; ++b) {
      Matrix ub(2, 2), vb(2, 2);
      const Scalar half = Scalar::rational(1, 2);
      switch (i % 5 == 4 ? 3 : (i + b) % 4) {
        case 0:  // v = 0, u arbitrary
          for (std::size_t k = 0; k < 4; ++k) ub(k / 2, k % 2) = small();
          break;
        case 1: {  // u = diag(a, a - c), v = s E01
          const Scalar a = small();
          ub = Matrix{{a, 0}, {0, a - c}};
          vb(0, 1) = small();
          break;
        }
        case 2: {  // u = pI + qJ, v = 0
          const Scalar p = small(), q = small();
          ub = Matrix{{p, -q}, {q, p}};
          break;
        }
        default:  // all conditions hold
          ub = Matrix{{(c - 1) * half, 0}, {0, -(c + 1) * half}};
          vb(0, 1) = c;
          break;
      }
      u = b == 0 ? ub : Matrix::direct_sum(u, ub);
      v = b == 0 ? vb : Matrix::direct_sum(v, vb);
    }
    const std::size_t dim = 2 * blocks;
    out.emplace_back(LieAlgebra::abelian(dim), standard_hermitian(dim), u, v, c);
  }
  return out;
}

std::vector<CheckResult> run_verify_suite(const VerifyOptions& opts) {
  const auto& groups = verify_groups();
  if (opts.only && std::find(groups.begin(), groups.end(), *opts.only) == groups.end()) {
    throw ParseError("unknown group '" + *opts.only + "'");
  }
  std::vector<CorpusEntry> corpus = builtin_corpus();
  corpus.insert(corpus.end(), opts.extra_corpus.begin(), opts.extra_corpus.end());
  Runner r(opts);
  if (r.enabled("forms")) forms_group(r, corpus);
  if (r.enabled("residuals")) residuals_group(r, corpus);
  if (r.enabled("structure")) structure_group(r, corpus);
  if (r.enabled("conditions")) conditions_group(r);
  if (r.enabled("counterexample")) counterexample_group(r);
  if (r.enabled("dim4")) dim4_group(r);
  if (r.enabled("builders")) builders_group(r);
  return r.take();
}

}  // namespace lck
