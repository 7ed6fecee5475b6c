#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lck/construct.hpp"

namespace lck {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string group;
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct CorpusEntry {
  std::string name;
  HermitianLieAlgebra algebra;
  /// Expected to be integrable LCK; otherwise only LCK is asserted.
  bool integrable = true;
};

/// forms, residuals, structure, conditions, counterexample, dim4, builders.
const std::vector<std::string>& verify_groups();

/// Semidirect products of the built-in triples plus a few basis changes,
/// and one Vaisman (non-integrable) LCK algebra.
std::vector<CorpusEntry> builtin_corpus();

/// Loads an algebra or triple document; triples are replaced by their
/// semidirect product.
CorpusEntry load_corpus_entry(const std::string& name, const std::string& text);

/// Triples on abelian h with [u,v] = cv and the remaining conditions mixed,
/// deterministic in the seed.
std::vector<KahlerTriple> condition_test_triples(std::size_t count, std::uint64_t seed);

struct VerifyOptions {
  std::optional<std::string> only;
  std::vector<CorpusEntry> extra_corpus;
  /// Called after every check.
  std::function<void(const CheckResult&)> on_result;
};

/// Throws ParseError for an unknown group.
std::vector<CheckResult> run_verify_suite(const VerifyOptions& opts);

std::string to_string(CheckStatus s);

}  // namespace lck
