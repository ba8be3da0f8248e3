#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zshadow/recipe.hpp"

namespace zshadow {

/// Index of the coset i*C_1 + j*C_2 lands in: [i]_2 + 2[j]_2 for Klein4, [i + 2j]_4 for Cyclic4.
int eta(std::int64_t i, std::int64_t j, GlueKind kind);

/// One named condition of a validation or certificate transcript.
struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

bool all_passed(const std::vector<Check>& checks);

/// P1 (only the trivial relation alpha v1 + beta v2 = 0), P2 (the three dot
/// products against s.s, t.s, t.t) and P3 (order divisibility, m >= 2 only).
std::vector<Check> validate_p123(const CosetDecomposition& dec, const RingVector& v1, const RingVector& v2);

struct CosetSumReport {
  std::uint64_t pairs_checked = 0;
  /// (i, j) with i*C_1 + j*C_2 not contained in C_eta(i,j).
  std::vector<std::pair<int, int>> containment_failures;
  /// (i, j) with i or j odd where the sum set is not all of C_eta(i,j).
  std::vector<std::pair<int, int>> equality_failures;
  /// (i, j) with i and j even where the sum set is a proper subset.
  std::vector<std::pair<int, int>> proper_subsets;
};

/// Elementwise sums i*C_1 + j*C_2 for all (i, j) in [0, 2^m)^2 compared with C_eta(i,j).
CosetSumReport check_coset_sums(const CosetDecomposition& dec, std::uint64_t cap = std::uint64_t{1} << 22);

/// C* as the union of the translates (i v1 + j v2, C_eta(i,j)), 1 <= i <= o(v1), 1 <= j <= o(v2).
struct CStar {
  LinearCode code;  // span of (v1, s), (v2, t) and (0, C0)
  std::uint64_t order_v1 = 0;
  std::uint64_t order_v2 = 0;
  /// o(v1) o(v2) |C0|, as a power of two.
  std::uint64_t expected_size_exponent = 0;
  /// The translates were enumerated (otherwise only the generator-level checks ran).
  bool enumerated = false;
  std::vector<Check> checks;
};

/// Throws ConstructionIntegrityError if P1-P3 fail.
CStar build_cstar(const CosetDecomposition& dec, const RingVector& v1, const RingVector& v2,
                  std::uint64_t cap = std::uint64_t{1} << 20);

struct ExtensionCertificate {
  ConstructionRecipe recipe;
  std::optional<CStar> cstar;
  std::optional<LinearCode> result;
  TypeVerdict verdict = TypeVerdict::NotSelfDual;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

/// Builds C* and C' = <C* u {w_p}> and records every check. Never throws for a
/// failed check; the failure is recorded in the certificate instead.
ExtensionCertificate extend(const CosetDecomposition& dec, const ConstructionRecipe& recipe);

}  // namespace zshadow
