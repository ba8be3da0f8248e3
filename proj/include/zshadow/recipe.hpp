#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zshadow/shadow.hpp"

namespace zshadow {

enum class TypeClaim { TypeI, TypeII, SelfDualOnly };
std::string_view to_string(TypeClaim c);

enum class Variant { A, B };

/// One monomial factor X_{(sum_v coeff_v * index_v) * scale}^power of a printed enumerator.
struct FormulaFactor {
  std::vector<std::int64_t> coefficients;  // one per summation index; all zero for X_0
  std::uint64_t scale;
  int power;
};

/// A printed complete-weight-enumerator sum: indices run over 1..range[v],
/// the summand is the product of the factors times cwe(C_{eta(i, j)}).
/// Index 0 is i, index 1 is j, index 2 + p is k_{p+1}.
struct PrintedFormula {
  std::vector<std::string> index_names;
  std::vector<std::uint64_t> ranges;
  std::vector<FormulaFactor> factors;
};

/// The vectors of one construction case, instantiated for a concrete m and n.
struct ConstructionRecipe {
  std::string case_id;  // e.g. "shadow/n2/a", "gen0/n3/b", "genh/n0/a"
  std::size_t k;        // appended length
  RingVector v1;        // length k
  RingVector v2;        // length k
  std::vector<RingVector> w;  // length n + k, appended block first
  std::size_t expected_length;
  TypeClaim claim;
  PrintedFormula formula;
};

/// Case ids applicable to a decomposition (mode, n mod 4, and for generalized
/// shadows s.s), for the given variant. Throws ImpossibleCaseError for odd n
/// with odd m and DomainError when no printed case covers the decomposition.
std::string case_id_for(const CosetDecomposition& dec, Variant variant);

/// Instantiates the printed vectors of the applicable case.
ConstructionRecipe recipe_for(const CosetDecomposition& dec, Variant variant);

/// Recipe lookup by explicit case id (for tests and the CLI). The decomposition
/// supplies m, n and s.s; no applicability check beyond parity is made.
ConstructionRecipe recipe_by_id(const std::string& case_id, const RingParams& p, std::size_t n);

/// Every case id the library knows.
std::vector<std::string> all_case_ids();

}  // namespace zshadow
