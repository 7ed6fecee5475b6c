#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lck/construct.hpp"

namespace lck {

/// Algebra file: dim, basis names, brackets for i < j, metric and J as
/// matrices of rational strings.
struct AlgebraDocument {
  std::vector<std::string> basis;
  HermitianLieAlgebra algebra;
};

/// Triple file: the algebra h plus u, v, c and n = dim h / 2.
struct TripleDocument {
  std::vector<std::string> basis;
  KahlerTriple triple;
};

/// e0, e1, ... (or a custom prefix).
std::vector<std::string> default_basis_names(std::size_t dim, const std::string& prefix = "e");
/// U, V, then the names of the h basis.
std::vector<std::string> semidirect_basis_names(const std::vector<std::string>& h_basis);

std::string render(const AlgebraDocument& doc);
std::string render(const TripleDocument& doc);

/// Throws ParseError (syntax, missing or malformed fields) or
/// InvariantViolation (Jacobi, metric, J, Kähler, derivation failures).
AlgebraDocument parse_algebra_document(std::string_view text);
TripleDocument parse_triple_document(std::string_view text);

/// True when the text is a triple document (has an "h" field).
bool looks_like_triple(std::string_view text);

/// "0,0;0,-1" style inline matrix, rows separated by ';'.
Matrix parse_inline_matrix(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace lck
