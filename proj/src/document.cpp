#include "lck/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lck/errors.hpp"

namespace lck {

using nlohmann::json;

namespace {

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_backend(Backend::exact).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json algebra_json(const std::vector<std::string>& basis, const HermitianLieAlgebra& a) {
  const std::size_t n = a.alg.dim();
  json doc;
  doc["dim"] = n;
  doc["basis"] = basis;
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = a.alg.constant(i, j, k);
        if (!c.is_zero()) terms.push_back({{"k", k}, {"coeff", c.to_backend(Backend::exact).str()}});
      }
      if (!terms.empty()) brackets.push_back({{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  }
  doc["brackets"] = std::move(brackets);
  doc["metric"] = matrix_json(a.h.g());
  doc["J"] = matrix_json(a.h.J());
  return doc;
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::size_t parse_index(const json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<long long>() < 0) field_error(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

Scalar parse_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Scalar(static_cast<long>(v.get<long long>()));
  if (!v.is_string()) field_error(field, "expected a rational string \"p/q\"");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.what());
  }
}

Matrix parse_matrix(const json& v, std::size_t n, const std::string& field) {
  if (!v.is_array() || v.size() != n) field_error(field, "expected " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != n) field_error(rf, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_rational(v[i][j], rf + "[" + std::to_string(j) + "]");
  }
  return m;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

AlgebraDocument algebra_from_json(const json& doc, const std::string& path) {
  const auto sub = [&](const std::string& k) { return path.empty() ? k : path + "." + k; };
  const std::size_t n = parse_index(require(doc, "dim", path), sub("dim"));
  if (n == 0) field_error(sub("dim"), "must be positive");
  std::vector<std::string> basis;
  if (auto it = doc.find("basis"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) field_error(sub("basis"), "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) field_error(sub("basis") + "[" + std::to_string(i) + "]", "expected a string");
      basis.push_back((*it)[i].get<std::string>());
    }
  } else {
    basis = default_basis_names(n);
  }
  StructureConstants sc(n);
  const json& brackets = require(doc, "brackets", path);
  if (!brackets.is_array()) field_error(sub("brackets"), "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < brackets.size(); ++r) {
    const std::string bf = sub("brackets") + "[" + std::to_string(r) + "]";
    const json& b = brackets[r];
    const std::size_t i = parse_index(require(b, "i", bf), bf + ".i");
    const std::size_t j = parse_index(require(b, "j", bf), bf + ".j");
    if (i >= n || j >= n) field_error(bf, "index out of range");
    if (i >= j) field_error(bf, "brackets must be given with i < j");
    if (!seen.emplace(i, j).second) field_error(bf, "duplicate bracket");
    const json& terms = require(b, "terms", bf);
    if (!terms.is_array()) field_error(bf + ".terms", "expected an array");
    Vector val(n);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tf = bf + ".terms[" + std::to_string(t) + "]";
      const std::size_t k = parse_index(require(terms[t], "k", tf), tf + ".k");
      if (k >= n) field_error(tf + ".k", "index out of range");
      val[k] += parse_rational(require(terms[t], "coeff", tf), tf + ".coeff");
    }
    sc.set_bracket(i, j, val);
  }
  const Matrix g = parse_matrix(require(doc, "metric", path), n, sub("metric"));
  const Matrix J = parse_matrix(require(doc, "J", path), n, sub("J"));
  LieAlgebra alg(std::move(sc));
  HermitianStructure h(g, J);
  return AlgebraDocument{std::move(basis), HermitianLieAlgebra{std::move(alg), std::move(h)}};
}

}  // namespace

std::vector<std::string> default_basis_names(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> semidirect_basis_names(const std::vector<std::string>& h_basis) {
  std::vector<std::string> out{"U", "V"};
  out.insert(out.end(), h_basis.begin(), h_basis.end());
  return out;
}

std::string render(const AlgebraDocument& doc) { return algebra_json(doc.basis, doc.algebra).dump(2) + "\n"; }

std::string render(const TripleDocument& doc) {
  const KahlerTriple& t = doc.triple;
  json out;
  out["h"] = algebra_json(doc.basis, HermitianLieAlgebra{t.h(), t.hs()});
  out["u"] = matrix_json(t.u());
  out["v"] = matrix_json(t.v());
  out["c"] = t.c().to_backend(Backend::exact).str();
  out["n"] = t.n();
  return out.dump(2) + "\n";
}

AlgebraDocument parse_algebra_document(std::string_view text) { return algebra_from_json(parse_json(text), ""); }

TripleDocument parse_triple_document(std::string_view text) {
  const json doc = parse_json(text);
  AlgebraDocument h = algebra_from_json(require(doc, "h", ""), "h");
  const std::size_t dim = h.algebra.alg.dim();
  if (dim % 2 != 0) field_error("h.dim", "must be even");
  const Matrix u = parse_matrix(require(doc, "u", ""), dim, "u");
  const Matrix v = parse_matrix(require(doc, "v", ""), dim, "v");
  const Scalar c = parse_rational(require(doc, "c", ""), "c");
  const std::size_t n = parse_index(require(doc, "n", ""), "n");
  if (n * 2 != dim) field_error("n", "must equal dim h / 2 = " + std::to_string(dim / 2));
  return TripleDocument{std::move(h.basis), KahlerTriple(std::move(h.algebra.alg), std::move(h.algebra.h), u, v, c)};
}

bool looks_like_triple(std::string_view text) {
  const json doc = parse_json(text);
  return doc.is_object() && doc.contains("h");
}

Matrix parse_inline_matrix(std::string_view text) {
  std::vector<Vector> rows;
  std::string s(text);
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) {
    Vector r;
    std::stringstream rs(row);
    std::string entry;
    while (std::getline(rs, entry, ',')) {
      const auto b = entry.find_first_not_of(" \t");
      const auto e = entry.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError("empty matrix entry in '" + s + "'");
      r.push_back(Scalar::parse(entry.substr(b, e - b + 1)));
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParseError("ragged matrix '" + s + "'");
  }
  return Matrix::from_rows(rows, cols);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lck
