// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "lck/analysis.hpp"
#include "lck/construct.hpp"
#include "lck/search.hpp"
#include "lck/verify.hpp"

using namespace lck;
using lck::testing::Rng;

namespace {

// All residuals must be exactly zero under the exact backend.
constexpr const char* kTolerance = "exact";
constexpr double kTimeBudgetSeconds = 10.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Tally {
 public:
  void require(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && first_.empty()) first_ = what;
    ok_ = ok_ && cond;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (!ok_) os << "; first failure: " << first_;
    return {ok_, os.str()};
  }

 private:
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::string first_;
};

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

HermitianLieAlgebra in_random_basis(Rng& rng, const HermitianLieAlgebra& a) {
  const Matrix p = lck::testing::random_invertible(rng, a.alg.dim(), 1);
  return {a.alg.change_basis(p), a.h.change_basis(p)};
}

Outcome verify_suite() {
  const auto rs = run_verify_suite({});
  std::size_t pass = 0, fail = 0;
  std::string first;
  for (const auto& r : rs) {
    pass += r.status == CheckStatus::pass;
    if (r.status == CheckStatus::fail) {
      if (fail++ == 0) first = r.group + ": " + r.name;
    }
  }
  std::ostringstream os;
  os << pass << " passed, " << fail << " failed";
  if (fail) os << "; first failure: " << first;
  return {fail == 0 && pass > 0, os.str()};
}

Outcome theorem_residuals() {
  Tally t;
  std::size_t corpus = 0, searched = 0;
  for (const CorpusEntry& c : builtin_corpus()) {
    if (!c.integrable) continue;
    ++corpus;
    t.require(theorem_delta_residual(c.algebra.alg, c.algebra.h).is_zero(), c.name + ": delta");
    const DetaCheck d = theorem_deta_check(c.algebra.alg, c.algebra.h);
    t.require(d.form_residual.is_zero(), c.name + ": d eta form");
    t.require(is_zero(d.bracket_residual), c.name + ": d eta bracket");
  }
  struct Run {
    std::size_t n;
    Scalar c;
    std::uint64_t seed;
    std::size_t samples;
  };
  const std::vector<Run> runs{{1, Scalar(1), 1, 200},  {1, Scalar(2), 2, 200},
                              {1, Scalar::rational(-1, 2), 3, 200}, {1, Scalar(5), 4, 200},
                              {2, Scalar(1), 5, 300},  {2, Scalar(2), 6, 300}};
  Rng rng(2);
  for (const Run& run : runs) {
    SearchOptions o;
    o.samples = run.samples;
    o.seed = run.seed;
    const ConstraintSystem sys(LieAlgebra::abelian(2 * run.n), standard_hermitian(2 * run.n), run.c);
    for (const SearchHit& hit : search_bilinear(sys, o)) {
      ++searched;
      const HermitianLieAlgebra a = in_random_basis(rng, semidirect(hit.triple));
      const std::string name = "search n=" + std::to_string(run.n) + " c=" + run.c.str() + " #" + std::to_string(hit.sample);
      t.require(theorem_delta_residual(a.alg, a.h).is_zero(), name + ": delta");
      const DetaCheck d = theorem_deta_check(a.alg, a.h);
      t.require(d.form_residual.is_zero(), name + ": d eta form");
      t.require(is_zero(d.bracket_residual), name + ": d eta bracket");
    }
  }
  t.require(searched >= 100, "fewer than 100 search triples");
  return t.outcome(std::to_string(corpus) + " corpus + " + std::to_string(searched) + " search instances");
}

Outcome condition_equivalence() {
  Tally t;
  std::size_t violating = 0, passing = 0;
  for (const KahlerTriple& tr : condition_test_triples(60, 7)) {
    const TripleReport r = check_triple(tr);
    const bool all = r.integrability_holds() && r.lcs_conditions_hold();
    if (!all && violating == 20) continue;
    const HermitianLieAlgebra a = semidirect(tr);
    const std::string name = "triple " + std::to_string(violating + passing);
    const bool nij = nijenhuis_witness(a.alg, a.h).has_value();
    t.require(nij == !r.integrability_holds(), name + ": N_J vs [v + uJ, J]");
    const KForm res = lcs_residual(a.alg, a.h, KForm::covector(e(a.alg.dim(), 0)));
    t.require(res.is_zero() == r.lcs_conditions_hold(), name + ": d Omega - theta ^ Omega vs LCS conditions");
    if (all) {
      ++passing;
      t.require(is_integrable_lck(a.alg, a.h).holds(), name + ": integrable LCK");
    } else {
      ++violating;
      if (!r.integrability_holds()) t.require(nij, name + ": Nijenhuis witness");
      if (!r.lcs_conditions_hold()) t.require(form_witness("lcs", res).has_value(), name + ": LCS witness");
    }
  }
  t.require(violating == 20, "fewer than 20 violating triples");
  t.require(passing > 0, "no passing triple");
  return t.outcome(std::to_string(violating) + " violating, " + std::to_string(passing) + " passing");
}

Outcome unimodularity() {
  Tally t;
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(1 + i % 4);
    const KahlerTriple tr = i % 25 == 0 ? build_dim(static_cast<long>(n)) : lck::testing::random_anc(rng, n, Scalar(n));
    const std::string name = "instance " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
    t.require(check_triple(tr).in_A(), name + ": in A_{n,n}");
    t.require(tr.u().trace() == Scalar(-static_cast<long>(n)), name + ": trace u = -n");
    const HermitianLieAlgebra a = semidirect(tr);
    const std::size_t d = a.alg.dim();
    t.require(is_unimodular(a.alg), name + ": unimodular");
    const auto series = derived_series(a.alg);
    t.require(series.back() == 0 && series.size() <= 4, name + ": derived series reaches 0 within 3 steps");
    const Subspace uperp = Subspace::span({e(d, 0)}, d).orthogonal_complement(a.h.g());
    t.require(derived_subalgebra(a.alg) == uperp, name + ": [g,g] = U^perp");
    const Subspace ideal = Subspace::span({e(d, 0), e(d, 1)}, d).orthogonal_complement(a.h.g());
    t.require(is_ideal(a.alg, ideal), name + ": <U,V>^perp ideal");
    t.require(is_abelian_subspace(a.alg, ideal), name + ": <U,V>^perp abelian");
    bool j_invariant = true;
    for (const Vector& y : ideal.basis()) j_invariant = j_invariant && ideal.contains(a.h.apply_J(y));
    t.require(j_invariant, name + ": <U,V>^perp J-invariant");
  }
  return t.outcome("200 instances, n = 1..4");
}

Outcome classification() {
  Tally t;
  Rng rng(5);
  const auto orthonormal = [&]() {
    Matrix p = lck::testing::random_rotation2(rng);
    if (lck::testing::uniform(rng, 0, 1)) p = p * Matrix{{1, 0}, {0, -1}};
    return p;
  };
  for (int i = 0; i < 100; ++i) {
    const Scalar b = lck::testing::rational(rng, 20, 17);
    const Dim4Class k = classify_dim4(build_gb(b).change_basis(orthonormal()));
    t.require(k.tag == Dim4Class::Tag::family_gb && k.b == b, "b = " + b.str() + " recovered");
  }
  for (int i = 0; i < 20; ++i) {
    t.require(classify_dim4(build_d4().change_basis(orthonormal())).tag == Dim4Class::Tag::d4, "d4 identified");
  }
  const std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(-1), Scalar::rational(7, 2), Scalar(-2)};
  for (int i = 0; i < 60; ++i) {
    const std::size_t x = static_cast<std::size_t>(lck::testing::uniform(rng, 0, 5));
    const std::size_t y = static_cast<std::size_t>(lck::testing::uniform(rng, 0, 5));
    // index 5 stands for d4
    const KahlerTriple a = (x == 5 ? build_d4() : build_gb(pool[x])).change_basis(orthonormal());
    const KahlerTriple b = (y == 5 ? build_d4() : build_gb(pool[y])).change_basis(orthonormal());
    t.require(triples_isomorphic_dim4(a, b) == (x == y), "isomorphism " + std::to_string(x) + " vs " + std::to_string(y));
  }
  return t.outcome("100 random b, 20 d4, 60 pairs");
}

Outcome correspondence_round_trip() {
  Tally t;
  Rng rng(6);
  const std::vector<Scalar> cs{Scalar(-1), Scalar::rational(1, 2), Scalar(2), Scalar(5)};
  for (int i = 0; i < 50; ++i) {
    const KahlerTriple base = lck::testing::random_a11(rng).change_basis(lck::testing::random_invertible(rng, 2));
    for (const Scalar& c : cs) {
      const KahlerTriple s = correspondence(base, c);
      const KahlerTriple one = correspondence(s, Scalar(1));
      const KahlerTriple back = correspondence(one, c);
      const std::string name = "triple " + std::to_string(i) + " c = " + c.str();
      t.require(check_triple(s).in_A() && check_triple(one).in_A() && check_triple(back).in_A(), name + ": check_triple");
      t.require(back.u() == s.u() && back.v() == s.v() && back.c() == s.c(), name + ": round trip");
    }
  }
  return t.outcome("50 triples x 4 values of c");
}

Outcome counterexample() {
  Tally t;
  const KahlerTriple tr = build_counterexample();
  const HermitianLieAlgebra a = semidirect(tr);
  t.require(check_triple(tr).in_H() && !check_triple(tr).in_A(), "in H, not in A");
  t.require(is_integrable_lck(a.alg, a.h).holds(), "integrable LCK");
  const Scalar tr_u = ad_trace(a.alg, e(4, 0));
  t.require(tr_u == Scalar(-2), "trace ad_U = -2");
  t.require(!is_unimodular(a.alg), "not unimodular");
  const Subspace derived = derived_subalgebra(a.alg);
  const Subspace uperp = Subspace::span({e(4, 0)}, 4).orthogonal_complement(a.h.g());
  t.require(derived.dim() == 2 && uperp.dim() == 3, "dim [g,g] = 2 < 3 = dim U^perp");
  bool contained = true;
  for (const Vector& x : derived.basis()) contained = contained && uperp.contains(x);
  t.require(contained, "[g,g] inside U^perp");
  return t.outcome("trace ad_U = " + tr_u.str() + ", dim [g,g] = " + std::to_string(derived.dim()) +
                   ", dim U^perp = " + std::to_string(uperp.dim()));
}

Outcome infrastructure() {
  Tally t;
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const HermitianLieAlgebra a = lck::testing::random_lck_instance(rng);
    const std::size_t d = a.alg.dim();
    const std::string name = "instance " + std::to_string(i);
    const std::size_t k = static_cast<std::size_t>(lck::testing::uniform(rng, 0, 3));
    const KForm f = lck::testing::random_form(rng, d, k);
    t.require(ce_differential(a.alg, ce_differential(a.alg, f)).is_zero(), name + ": d d = 0");
    const Connection nabla = levi_civita(a.alg, a.h);
    t.require(!check_torsion_free(a.alg, nabla).has_value(), name + ": torsion-free");
    t.require(!check_metric_compatible(a.h, nabla).has_value(), name + ": metric");
    const LeeData lee = lee_data(a.alg, a.h);
    t.require(interior_J(a.h, ce_differential(a.alg, lee.eta)).is_zero(), name + ": i_J d eta = 0");
    const KForm omega = fundamental_form(a.h);
    t.require(interior(omega, lee.U) == Scalar(-1) * lee.eta, name + ": i_U Omega = -eta");
    t.require(interior(omega, lee.V) == lee.theta, name + ": i_V Omega = theta");
  }
  return t.outcome("200 instances");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden example suite", verify_suite},
      {"theorem residuals", theorem_residuals},
      {"condition equivalence", condition_equivalence},
      {"unimodular A_{n,n}", unimodularity},
      {"dimension-4 classification", classification},
      {"correspondence round trip", correspondence_round_trip},
      {"counterexample separation", counterexample},
      {"infrastructure properties", infrastructure},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kTimeBudgetSeconds) {
      o.ok = false;
      o.detail += "; over time budget";
    }
    failed += !o.ok;
    std::printf("%s %zu %s: %s (tolerance %s, %.2f s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), kTolerance, secs);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed ? 1 : 0;
}
