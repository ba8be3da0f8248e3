#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zshadow/lincode.hpp"

namespace zshadow {

enum class GlueKind { Klein4, Cyclic4 };
enum class ShadowMode { TypeIShadow, Generalized };

std::string_view to_string(GlueKind k);
std::string_view to_string(ShadowMode m);

/// C0 = {c in C : wt_E(c) = 0 mod 2^{m+1}}. Throws NotTypeIError unless classify(code) == TypeI.
LinearCode euclidean_kernel(const LinearCode& code);

/// ker(psi_s) for psi_s(c) = c.s. Requires a self-dual code. Throws
/// InvalidShadowVector if s is in C and ImageShapeError unless the image is {0, 2^{m-1}}.
LinearCode psi_kernel(const LinearCode& code, const RingVector& s);

/// C0 together with its four cosets in C0^perp:
/// C_0 = C0, C_1 = s + C0, C_2 = t + C0, C_3 = s + t + C0.
struct CosetDecomposition {
  ShadowMode mode;
  LinearCode code;
  LinearCode c0;
  LinearCode c0_dual;
  RingVector t;
  RingVector s;
  GlueKind glue;
  /// True once C_1 and C_3 have been exchanged (s replaced by s + t).
  bool relabeled = false;

  const RingParams& params() const { return code.params(); }
  std::size_t length() const { return code.length(); }
  /// Representative of C_i: 0, s, t, s + t.
  RingVector representative(int i) const;
  bool in_coset(int i, const RingVector& v) const;
  /// Elements of C_i, in the enumeration order of C0 shifted by the representative.
  std::vector<RingVector> coset(int i, std::uint64_t cap = enumeration_cap()) const;
};

/// Shadow decomposition of a Type I code: t is the first element of C \ C0 and
/// s the first element of C0^perp \ C, both in enumeration order.
CosetDecomposition decompose_type_i(const LinearCode& code);

/// Generalized-shadow decomposition with respect to s (which is kept as given).
CosetDecomposition decompose_generalized(const LinearCode& code, const RingVector& s);

/// Exchanges C_1 and C_3 by replacing s with s + t.
void relabel_c1_c3(CosetDecomposition& dec);

/// The printed table a decomposition should satisfy, if any applies.
struct ExpectedTable {
  std::array<std::array<Element, 4>, 4> values;
  std::string label;
};
std::optional<ExpectedTable> expected_table(const CosetDecomposition& dec);

struct OrthogonalityTable {
  /// Observed x.y per coset pair; nullopt marks a cell that is not constant.
  std::array<std::array<std::optional<Element>, 4>, 4> observed;
  std::optional<ExpectedTable> expected;
  /// Every pair was scanned (otherwise the cells come from representatives,
  /// which is exact because C0 is orthogonal to all of C0^perp).
  bool exhaustive = false;
  /// The C_1/C_3 exchange was applied to reach agreement.
  bool relabeled = false;
  bool matches = false;
};

/// Fills the table, compares it with the expected one and, if only the
/// C_1/C_3 exchange makes them agree, applies it to `dec`. Throws
/// TableViolation if a cell is not constant.
OrthogonalityTable verify_orthogonality(CosetDecomposition& dec, std::uint64_t pair_cap = std::uint64_t{1} << 22);

struct ShadowWeightReport {
  /// 2^{m-2} n mod 2^{m+1}; for m = 1 this is n/2 mod 4.
  std::uint64_t expected_residue = 0;
  /// The residue shared by every shadow vector.
  std::uint64_t residue = 0;
  std::uint64_t vectors_checked = 0;
  bool exhaustive = false;
};

/// Checks wt_E(x) = 2^{m-2} n (mod 2^{m+1}) on the shadow C_1 u C_3, stated as
/// 4 wt_E(x) = 2^m n (mod 2^{m+3}) so that m = 1 needs no fractions. Throws
/// LemmaViolation naming the first offending vector.
ShadowWeightReport shadow_weight_check(const CosetDecomposition& dec);

}  // namespace zshadow
