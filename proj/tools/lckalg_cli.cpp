#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lck/analysis.hpp"
#include "lck/construct.hpp"
#include "lck/document.hpp"
#include "lck/errors.hpp"
#include "lck/search.hpp"
#include "lck/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lck::ParseError("cannot write '" + path + "'");
  out << text;
}

/// Renders, then parses back so every emitted document is re-validated.
std::string checked_render(const lck::AlgebraDocument& doc) {
  std::string text = lck::render(doc);
  lck::parse_algebra_document(text);
  return text;
}

std::string checked_render(const lck::TripleDocument& doc) {
  std::string text = lck::render(doc);
  lck::parse_triple_document(text);
  return text;
}

lck::AlgebraDocument semidirect_document(const lck::TripleDocument& t) {
  return {lck::semidirect_basis_names(t.basis), lck::semidirect(t.triple)};
}

lck::AlgebraDocument load_algebra(const std::string& path) {
  const std::string text = lck::read_file(path);
  if (lck::looks_like_triple(text)) return semidirect_document(lck::parse_triple_document(text));
  return lck::parse_algebra_document(text);
}

/// Inline "a,b;c,d" or a path to a JSON file holding a matrix of rationals.
lck::Matrix load_matrix(const std::string& arg) {
  if (!fs::exists(arg)) return lck::parse_inline_matrix(arg);
  const json doc = [&] {
    try {
      return json::parse(lck::read_file(arg));
    } catch (const json::parse_error& e) {
      throw lck::ParseError(arg + ": " + e.what());
    }
  }();
  if (!doc.is_array() || doc.empty()) throw lck::ParseError(arg + ": expected an array of rows");
  std::vector<lck::Vector> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw lck::ParseError(arg + ": expected an array of rows");
    lck::Vector r;
    for (const auto& e : row) r.push_back(e.is_string() ? lck::Scalar::parse(e.get<std::string>()) : lck::Scalar(static_cast<long>(e.get<long long>())));
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw lck::ParseError(arg + ": ragged matrix");
  return lck::Matrix::from_rows(rows, rows[0].size());
}

std::string matrix_text(const lck::Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  os << "]";
  return os.str();
}

json verdict_json(const lck::Verdict& v) {
  json out{{"state", lck::to_string(v.state)}};
  if (v.witness) {
    out["witness"] = {{"what", v.witness->what}, {"indices", v.witness->indices}, {"residual", v.witness->residual.str()}};
  }
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

json vector_json(const lck::Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<std::pair<std::string, const lck::Verdict*>> flags(const lck::StructureReport& r) {
  return {{"hermitian", &r.hermitian},           {"kahler", &r.kahler},
          {"lck", &r.lck},                       {"vaisman", &r.vaisman},
          {"integrable_lck", &r.integrable_lck}, {"lcs_first_kind", &r.lcs_first_kind},
          {"gauduchon", &r.gauduchon},           {"unimodular", &r.unimodular},
          {"solvable", &r.solvable}};
}

std::string report_json(const lck::StructureReport& r) {
  json out;
  json fl;
  for (const auto& [name, v] : flags(r)) fl[name] = verdict_json(*v);
  out["flags"] = std::move(fl);
  if (r.lee) {
    out["lee"] = {{"theta", vector_json(r.lee->theta.as_covector())},
                  {"eta", vector_json(r.lee->eta.as_covector())},
                  {"U", vector_json(r.lee->U)},
                  {"V", vector_json(r.lee->V)},
                  {"norm_sq", r.lee->norm_sq.str()}};
  }
  if (r.delta_residual) out["delta_residual"] = r.delta_residual->str();
  if (r.deta) {
    out["deta"] = {{"delta_theta", r.deta->delta_theta.str()},
                   {"coefficient", r.deta->coefficient.str()},
                   {"holds", r.deta->holds()}};
  }
  json claims = json::array();
  for (const auto& c : r.claims) {
    json cj = verdict_json(c.verdict);
    cj["name"] = c.name;
    claims.push_back(std::move(cj));
  }
  out["claims"] = std::move(claims);
  return out.dump(2) + "\n";
}

std::string report_text(const lck::StructureReport& r) {
  std::ostringstream os;
  for (const auto& [name, v] : flags(r)) {
    os << std::left << std::setw(16) << name << lck::describe(*v) << "\n";
  }
  if (r.lee) {
    os << "theta           " << matrix_text(lck::Matrix::from_rows({r.lee->theta.as_covector()}, r.lee->U.size())) << "\n";
    os << "|theta|^2       " << r.lee->norm_sq << "\n";
  }
  if (r.delta_residual) os << "delta residual  " << *r.delta_residual << "\n";
  if (r.deta) {
    os << "d eta check     " << (r.deta->holds() ? "holds" : "fails") << " (coefficient " << r.deta->coefficient << ")\n";
  }
  for (const auto& c : r.claims) os << "claim " << c.name << ": " << lck::describe(c.verdict) << "\n";
  return os.str();
}

lck::TripleDocument example_triple(const std::string& name, const std::optional<std::string>& b, const std::optional<long>& n) {
  if (name == "d4") return {lck::default_basis_names(2), lck::build_d4()};
  if (name == "gb") {
    if (!b) throw lck::ParseError("example gb needs --b");
    return {lck::default_basis_names(2), lck::build_gb(lck::Scalar::parse(*b))};
  }
  if (name == "dim") {
    if (!n) throw lck::ParseError("example dim needs --n");
    if (*n < 1) throw lck::ParseError("--n must be >= 1");
    return {lck::default_basis_names(static_cast<std::size_t>(2 * *n)), lck::build_dim(*n)};
  }
  throw lck::ParseError("unknown example '" + name + "' (gb, d4, dim)");
}

std::vector<lck::CorpusEntry> load_corpus(const std::vector<std::string>& paths) {
  std::vector<lck::CorpusEntry> out;
  for (const auto& p : paths) {
    std::vector<fs::path> files;
    if (fs::is_directory(p)) {
      for (const auto& e : fs::directory_iterator(p))
        if (e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
    } else {
      files.emplace_back(p);
    }
    for (const auto& f : files) {
      try {
        out.push_back(lck::load_corpus_entry(f.filename().string(), lck::read_file(f.string())));
      } catch (const lck::Error& e) {
        throw lck::InvariantViolation("corpus file " + f.string() + ": " + e.what());
      }
    }
  }
  return out;
}

int run_verify(const std::optional<std::string>& only, const std::vector<std::string>& corpus_paths) {
  lck::VerifyOptions opts;
  opts.only = only;
  try {
    opts.extra_corpus = load_corpus(corpus_paths);
  } catch (const lck::InvariantViolation& e) {
    std::cout << "FAIL corpus: " << e.what() << "\n";
    std::cerr << "first failure: corpus: " << e.what() << "\n";
    return kExitInvariant;
  }
  opts.on_result = [](const lck::CheckResult& r) {
    std::cout << lck::to_string(r.status) << " " << r.group << ": " << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  };
  const auto results = lck::run_verify_suite(opts);
  std::size_t passed = 0, skipped = 0, failed = 0;
  const lck::CheckResult* first = nullptr;
  for (const auto& r : results) {
    if (r.status == lck::CheckStatus::pass) ++passed;
    if (r.status == lck::CheckStatus::skipped) ++skipped;
    if (r.status == lck::CheckStatus::fail) {
      ++failed;
      if (!first) first = &r;
    }
  }
  std::cout << passed << " passed, " << skipped << " not applicable, " << failed << " failed\n";
  if (first) {
    std::cerr << "first failure: " << first->group << ": " << first->name << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra LCK structure toolkit", "lckalg"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  std::string path, report = "text", out, triple_out, name, h_path, u_arg, v_arg, c_arg, to_c;
  std::optional<std::string> b, only, h_opt;
  std::optional<long> n_opt;
  long n = 1;
  std::string search_c = "1";
  std::size_t samples = 1000, threads = 1;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::vector<std::string> corpus;

  auto* check = app.add_subcommand("check", "analyse an algebra or triple document");
  check->add_option("path", path, "document")->required();
  check->add_option("--report", report, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* example = app.add_subcommand("example", "emit a built-in example (gb, d4, dim)");
  example->add_option("name", name, "gb|d4|dim")->required();
  example->add_option("--b", b, "family parameter for gb");
  example->add_option("--n", n_opt, "n for dim");
  example->add_option("-o", out, "algebra document output");
  example->add_option("--triple-out", triple_out, "triple document output");

  auto* sd = app.add_subcommand("semidirect", "build r_{2,c} x_{u,v} h");
  sd->add_option("--c", c_arg, "constant c")->required();
  sd->add_option("--h", h_path, "algebra document of h")->required();
  sd->add_option("--u", u_arg, "matrix file or inline rows 'a,b;c,d'")->required();
  sd->add_option("--v", v_arg, "matrix file or inline rows")->required();
  sd->add_option("-o", out, "output");

  auto* cls = app.add_subcommand("classify4", "classify a triple in A_{1,1}");
  cls->add_option("path", path, "triple document")->required();

  auto* cor = app.add_subcommand("correspond", "map a triple in A_{n,c} to A_{n,c'}");
  cor->add_option("--to-c", to_c, "target constant")->required();
  cor->add_option("path", path, "triple document")->required();
  cor->add_option("-o", out, "output");

  auto* se = app.add_subcommand("search", "sample valid triples numerically");
  se->add_option("--n", n, "dim h / 2")->check(CLI::PositiveNumber);
  se->add_option("--c", search_c, "constant c");
  se->add_option("--samples", samples, "number of starts");
  se->add_option("--seed", seed, "random seed");
  se->add_option("--tol", tol, "acceptance residual before rounding");
  se->add_option("--threads", threads, "worker threads");
  se->add_option("--h", h_opt, "algebra document of h (default abelian)");

  auto* vp = app.add_subcommand("verify-paper", "run the built-in verification suite");
  vp->add_option("--only", only, "forms|residuals|structure|conditions|counterexample|dim4|builders");
  vp->add_option("--corpus", corpus, "extra algebra or triple documents (files or directories)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    const lck::Backend backend = lck::backend_from_env();
    if (check->parsed()) {
      const lck::AlgebraDocument doc = load_algebra(path);
      const lck::LieAlgebra alg = doc.algebra.alg.to_backend(backend);
      const lck::HermitianStructure hs = doc.algebra.h.to_backend(backend);
      const lck::StructureReport rep = lck::analyze(alg, hs);
      std::cout << (report == "json" ? report_json(rep) : report_text(rep));
    } else if (example->parsed()) {
      const lck::TripleDocument t = example_triple(name, b, n_opt);
      write_output(out, checked_render(semidirect_document(t)));
      if (!triple_out.empty()) write_output(triple_out, checked_render(t));
    } else if (sd->parsed()) {
      const lck::AlgebraDocument h = load_algebra(h_path);
      lck::TripleDocument t{h.basis, lck::KahlerTriple(h.algebra.alg, h.algebra.h, load_matrix(u_arg), load_matrix(v_arg),
                                                       lck::Scalar::parse(c_arg))};
      write_output(out, checked_render(semidirect_document(t)));
    } else if (cls->parsed()) {
      const lck::TripleDocument t = lck::parse_triple_document(lck::read_file(path));
      lck::KahlerTriple triple = t.triple;
      if (backend == lck::Backend::floating) triple = triple.to_backend(backend);
      std::cout << lck::classify_dim4(triple).label() << "\n";
    } else if (cor->parsed()) {
      const lck::TripleDocument t = lck::parse_triple_document(lck::read_file(path));
      const lck::KahlerTriple mapped = lck::correspondence(t.triple, lck::Scalar::parse(to_c));
      if (!lck::check_triple(mapped).in_A()) throw lck::InvariantViolation("correspondence output fails check_triple");
      write_output(out, checked_render(lck::TripleDocument{t.basis, mapped}));
    } else if (se->parsed()) {
      const std::size_t dim = static_cast<std::size_t>(2 * n);
      lck::HermitianLieAlgebra h = lck::abelian_kahler(dim);
      if (h_opt) {
        h = lck::load_corpus_entry(*h_opt, lck::read_file(*h_opt)).algebra;
        if (lck::looks_like_triple(lck::read_file(*h_opt))) throw lck::ParseError("--h expects an algebra document");
        if (h.alg.dim() != dim) throw lck::DimensionMismatch("--h has dim " + std::to_string(h.alg.dim()) + ", expected 2n");
      }
      const lck::Scalar c = lck::Scalar::parse(search_c);
      const lck::ConstraintSystem sys(h.alg, h.h, c);
      lck::SearchOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      opts.tol = tol;
      opts.threads = threads;
      const auto hits = lck::search_bilinear(sys, opts);
      for (const auto& hit : hits) {
        std::cout << "sample " << hit.sample << ": u = " << matrix_text(hit.triple.u()) << ", v = " << matrix_text(hit.triple.v());
        if (n == 1 && hit.triple.h().is_abelian() && !c.is_zero()) {
          const lck::KahlerTriple one = c == lck::Scalar(1) ? hit.triple : lck::correspondence(hit.triple, lck::Scalar(1));
          std::cout << ", class " << lck::classify_dim4(one).label();
        }
        std::cout << "\n";
      }
      std::cout << hits.size() << " valid triples from " << samples << " samples\n";
    } else if (vp->parsed()) {
      return run_verify(only, corpus);
    }
  } catch (const lck::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lck::DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kExitParse;
  } catch (const lck::Error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
