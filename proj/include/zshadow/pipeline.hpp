#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "zshadow/builder.hpp"
#include "zshadow/cwe.hpp"
#include "zshadow/jacobi.hpp"

namespace zshadow {

struct SeedSpec {
  std::string name;
  std::filesystem::path file;  // relative to the manifest
  int m;
  std::size_t n;
  TypeVerdict expected;
  /// Shadow vectors for generalized shadows, as "a,b,c" strings.
  std::vector<std::string> generalized;
};

struct CorpusManifest {
  std::filesystem::path directory;
  std::vector<SeedSpec> seeds;

  /// Throws ParseError on malformed JSON or missing fields.
  static CorpusManifest load(const std::filesystem::path& path);
};

struct DecompositionReport {
  ShadowMode mode;
  std::string s;
  std::optional<CosetDecomposition> dec;
  std::optional<OrthogonalityTable> table;
  std::optional<ShadowWeightReport> weights;
  std::optional<CosetSumReport> sums;
  std::string error;

  bool passed() const;
};

struct CweOutcome {
  bool computed = false;
  bool printed_equal = false;
  bool ordered_equal = false;
  std::vector<CweDifference> printed_diff;
  std::vector<CweDifference> ordered_diff;
};

struct JacobiOutcome {
  bool computed = false;
  std::optional<ModularityReport> report;
  std::optional<ExponentReport> exponents;
};

struct ConstructionReport {
  ShadowMode mode;
  std::string s;
  std::string case_id;
  std::optional<ExtensionCertificate> cert;
  CweOutcome cwe;
  JacobiOutcome jacobi;
  std::string error;

  bool cwe_passed() const { return !cwe.computed || cwe.printed_equal || cwe.ordered_equal; }
  bool jacobi_passed() const;
  bool passed() const;
};

struct SeedReport {
  std::string name;
  int m = 0;
  std::size_t n = 0;
  std::optional<LinearCode> code;
  TypeVerdict verdict = TypeVerdict::NotSelfDual;
  TypeVerdict expected = TypeVerdict::NotSelfDual;
  std::vector<DecompositionReport> decompositions;
  std::vector<ConstructionReport> constructions;
  std::vector<std::string> errors;

  bool passed() const;
};

struct CorpusReport {
  std::vector<SeedReport> seeds;
  std::vector<std::string> warnings;

  bool passed() const;
};

struct PipelineOptions {
  /// Largest |C'| (as a power of two) for direct cwe enumeration.
  std::uint64_t cwe_size_exponent = 16;
  /// Coset sums are checked exhaustively up to this m.
  int coset_sum_max_m = 2;
};

SeedReport verify_seed(const SeedSpec& spec, const LinearCode& code, const PipelineOptions& opts = {});
CorpusReport verify_corpus(const CorpusManifest& manifest, const PipelineOptions& opts = {});

}  // namespace zshadow
