#include "zshadow/builder.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

#include "zshadow/error.hpp"

namespace zshadow {

int eta(std::int64_t i, std::int64_t j, GlueKind kind) {
  const auto mod = [](std::int64_t a, std::int64_t r) { return static_cast<int>(((a % r) + r) % r); };
  if (kind == GlueKind::Klein4) return mod(i, 2) + 2 * mod(j, 2);
  return mod(i + 2 * j, 4);
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string num(std::uint64_t x) { return std::to_string(x); }

using VectorSet = std::unordered_set<RingVector, RingVectorHash>;

}  // namespace

std::vector<Check> validate_p123(const CosetDecomposition& dec, const RingVector& v1, const RingVector& v2) {
  if (v1.size() != v2.size()) throw DimensionError("v1 and v2 must have the same length");
  const auto& p = dec.params();
  std::vector<Check> out;

  const auto o1 = additive_order(v1);
  const auto o2 = additive_order(v2);
  std::string relation;
  for (std::uint64_t a = 0; a < o1 && relation.empty(); ++a) {
    const RingVector av = v1.scaled(a);
    for (std::uint64_t b = 0; b < o2; ++b) {
      if ((a || b) && (av + v2.scaled(b)).is_zero()) {
        relation = num(a) + "*v1 + " + num(b) + "*v2 = 0";
        break;
      }
    }
  }
  out.push_back({"p1", relation.empty(), relation.empty() ? "only the trivial relation" : relation});

  const auto neg = [&](Element x) { return p.reduce(-static_cast<std::int64_t>(x)); };
  const Element ss = dot(dec.s, dec.s), ts = dot(dec.t, dec.s), tt = dot(dec.t, dec.t);
  const Element a11 = dot(v1, v1), a12 = dot(v1, v2), a22 = dot(v2, v2);
  const bool p2 = a11 == neg(ss) && a12 == neg(ts) && a22 == neg(tt);
  out.push_back({"p2", p2,
                 "v1.v1=" + num(a11) + " (need " + num(neg(ss)) + "), v1.v2=" + num(a12) + " (need " +
                     num(neg(ts)) + "), v2.v2=" + num(a22) + " (need " + num(neg(tt)) + ")"});

  if (p.exponent() == 1) {
    out.push_back({"p3", true, "not required for m=1"});
  } else {
    const std::uint64_t need1 = dec.glue == GlueKind::Klein4 ? 2 : 4;
    const bool p3 = o1 % need1 == 0 && o2 % 2 == 0;
    out.push_back({"p3", p3,
                   "o(v1)=" + num(o1) + " (multiple of " + num(need1) + "), o(v2)=" + num(o2) + " (even)"});
  }
  return out;
}

CosetSumReport check_coset_sums(const CosetDecomposition& dec, std::uint64_t cap) {
  const auto& p = dec.params();
  const auto c1 = dec.coset(1);
  const auto c2 = dec.coset(2);
  if (static_cast<double>(c1.size()) * static_cast<double>(c2.size()) * static_cast<double>(p.modulus()) *
          static_cast<double>(p.modulus()) >
      static_cast<double>(cap)) {
    throw EnumerationTooLarge("coset sum check needs more than " + num(cap) + " vector additions");
  }
  const auto c0_size = dec.c0.size();
  CosetSumReport report;
  for (std::uint64_t i = 0; i < p.modulus(); ++i) {
    for (std::uint64_t j = 0; j < p.modulus(); ++j) {
      const int target = eta(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), dec.glue);
      VectorSet sums;
      bool contained = true;
      for (const auto& x : c1) {
        const auto ix = x.scaled(i);
        for (const auto& y : c2) {
          auto v = ix + y.scaled(j);
          ++report.pairs_checked;
          if (contained && !dec.in_coset(target, v)) contained = false;
          sums.insert(std::move(v));
        }
      }
      const std::pair<int, int> ij{static_cast<int>(i), static_cast<int>(j)};
      if (!contained) report.containment_failures.push_back(ij);
      if (sums.size() != c0_size) {
        if (i % 2 == 1 || j % 2 == 1) {
          report.equality_failures.push_back(ij);
        } else {
          report.proper_subsets.push_back(ij);
        }
      }
    }
  }
  return report;
}

CStar build_cstar(const CosetDecomposition& dec, const RingVector& v1, const RingVector& v2, std::uint64_t cap) {
  const auto validation = validate_p123(dec, v1, v2);
  if (!all_passed(validation)) {
    std::string msg = "v1, v2 violate";
    for (const auto& c : validation) {
      if (!c.passed) msg += " " + c.name + " (" + c.detail + ")";
    }
    throw ConstructionIntegrityError(msg);
  }
  const auto& p = dec.params();
  const std::size_t k = v1.size();
  const std::size_t n = dec.length();

  std::vector<RingVector> gens{concat(v1, dec.s), concat(v2, dec.t)};
  const auto zero_k = RingVector::zero(p, k);
  for (const auto& g : dec.c0.generators()) gens.push_back(concat(zero_k, g));

  CStar out{LinearCode::canonicalize(p, n + k, gens), additive_order(v1), additive_order(v2), 0, false, {}};
  out.expected_size_exponent = static_cast<std::uint64_t>(std::countr_zero(out.order_v1)) +
                               static_cast<std::uint64_t>(std::countr_zero(out.order_v2)) + dec.c0.size_exponent();

  const std::uint64_t expected_exp = static_cast<std::uint64_t>(p.exponent()) * n / 2 - 1;
  out.checks.push_back({"c0_size", dec.c0.size_exponent() == expected_exp,
                        "|C0| = 2^" + num(dec.c0.size_exponent()) + ", expected 2^" + num(expected_exp)});

  const bool enumerable = out.expected_size_exponent < 63 && (std::uint64_t{1} << out.expected_size_exponent) <= cap;
  if (enumerable) {
    out.enumerated = true;
    std::array<std::vector<RingVector>, 4> cosets;
    for (int c = 0; c < 4; ++c) cosets[c] = dec.coset(c);
    VectorSet translates;
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= out.order_v1; ++i) {
      for (std::uint64_t j = 1; j <= out.order_v2; ++j) {
        const auto head = v1.scaled(i) + v2.scaled(j);
        const int c = eta(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), dec.glue);
        for (const auto& x : cosets[c]) {
          translates.insert(concat(head, x));
          ++total;
        }
      }
    }
    out.checks.push_back({"cstar_disjoint", translates.size() == total,
                          num(total) + " translate elements, " + num(translates.size()) + " distinct"});
    const bool size_ok = std::has_single_bit(translates.size()) &&
                         static_cast<std::uint64_t>(std::countr_zero(translates.size())) == out.expected_size_exponent;
    out.checks.push_back({"cstar_size", size_ok,
                          "|C*| = " + num(translates.size()) + ", o(v1) o(v2) |C0| = 2^" +
                              num(out.expected_size_exponent)});
    const bool closed = out.code.size() == translates.size() &&
                        std::all_of(translates.begin(), translates.end(),
                                    [&](const RingVector& v) { return out.code.contains(v); });
    out.checks.push_back({"cstar_linear", closed,
                          "union of translates " + std::string(closed ? "equals" : "differs from") +
                              " the span of (v1,s), (v2,t), (0,C0)"});
  } else {
    out.checks.push_back({"cstar_size", out.code.size_exponent() == out.expected_size_exponent,
                          "|C*| = 2^" + num(out.code.size_exponent()) + " from generators, o(v1) o(v2) |C0| = 2^" +
                              num(out.expected_size_exponent)});
  }
  out.checks.push_back({"cstar_self_orthogonal", is_self_orthogonal(out.code), "generator dot products"});
  if (!all_passed(out.checks)) {
    std::string msg = "C* failed";
    for (const auto& c : out.checks) {
      if (!c.passed) msg += " " + c.name + " (" + c.detail + ")";
    }
    throw ConstructionIntegrityError(msg);
  }
  return out;
}

ExtensionCertificate extend(const CosetDecomposition& dec, const ConstructionRecipe& recipe) {
  ExtensionCertificate cert{recipe, std::nullopt, std::nullopt, TypeVerdict::NotSelfDual, {}};
  auto& checks = cert.checks;
  const auto& p = dec.params();
  const std::size_t n = dec.length();
  const std::size_t len = n + recipe.k;

  for (const auto& c : validate_p123(dec, recipe.v1, recipe.v2)) checks.push_back(c);
  if (!all_passed(checks)) return cert;

  try {
    cert.cstar = build_cstar(dec, recipe.v1, recipe.v2);
  } catch (const ConstructionIntegrityError& e) {
    checks.push_back({"cstar", false, e.what()});
    return cert;
  }
  for (const auto& c : cert.cstar->checks) checks.push_back(c);

  bool shape_ok = true;
  for (const auto& w : recipe.w) shape_ok = shape_ok && w.size() == len;
  checks.push_back({"w_length", shape_ok, num(recipe.w.size()) + " glue vectors of length " + num(len)});
  if (!shape_ok) return cert;

  std::string bad;
  for (std::size_t a = 0; a < recipe.w.size() && bad.empty(); ++a) {
    for (std::size_t b = a; b < recipe.w.size(); ++b) {
      if (dot(recipe.w[a], recipe.w[b]) != 0) {
        bad = "w" + num(a + 1) + ".w" + num(b + 1) + " = " + num(dot(recipe.w[a], recipe.w[b]));
        break;
      }
    }
    for (const auto& g : cert.cstar->code.generators()) {
      if (bad.empty() && dot(recipe.w[a], g) != 0) bad = "w" + num(a + 1) + " not orthogonal to C*";
    }
  }
  checks.push_back({"w_orthogonal", bad.empty(), bad.empty() ? "w_p.w_q = w_p.c* = 0" : bad});

  const auto result = augment(cert.cstar->code, recipe.w);
  cert.result = result;
  const std::uint64_t target = static_cast<std::uint64_t>(p.exponent()) * len;
  checks.push_back({"size", 2 * result.size_exponent() == target,
                    "|C'| = 2^" + num(result.size_exponent()) + ", self-dual size 2^" +
                        (target % 2 ? num(target) + "/2" : num(target / 2))});
  const bool self_dual = dual(result) == result;
  checks.push_back({"self_dual", self_dual, self_dual ? "C' = dual(C')" : "C' != dual(C')"});

  cert.verdict = classify(result);
  bool claim_ok = false;
  switch (recipe.claim) {
    case TypeClaim::TypeI:
      claim_ok = cert.verdict == TypeVerdict::TypeI;
      break;
    case TypeClaim::TypeII:
      claim_ok = cert.verdict == TypeVerdict::TypeII;
      break;
    case TypeClaim::SelfDualOnly:
      claim_ok = cert.verdict != TypeVerdict::NotSelfDual;
      break;
  }
  checks.push_back({"type_claim", claim_ok,
                    "claimed " + std::string(to_string(recipe.claim)) + ", got " + std::string(to_string(cert.verdict))});
  return cert;
}

}  // namespace zshadow
