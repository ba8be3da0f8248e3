#include "zshadow/shadow.hpp"

#include <set>

#include "zshadow/error.hpp"

namespace zshadow {

std::string_view to_string(GlueKind k) { return k == GlueKind::Klein4 ? "Klein4" : "Cyclic4"; }

std::string_view to_string(ShadowMode m) { return m == ShadowMode::TypeIShadow ? "TypeIShadow" : "Generalized"; }

namespace {

// Kernel of a homomorphism C -> {0, 1} given by its values on the canonical rows.
LinearCode index_two_kernel(const LinearCode& code, const std::vector<bool>& hits) {
  const auto& rows = code.generators();
  std::vector<RingVector> gens;
  std::optional<RingVector> pivot;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!hits[i]) {
      gens.push_back(rows[i]);
    } else if (!pivot) {
      pivot = rows[i];
      gens.push_back(rows[i].scaled(2));
    } else {
      gens.push_back(rows[i] - *pivot);
    }
  }
  return LinearCode::canonicalize(code.params(), code.length(), gens);
}

RingVector first_outside(const LinearCode& ambient, const LinearCode& sub) {
  std::optional<RingVector> found;
  ambient.find_first([&](const RingVector& v) {
    if (sub.contains(v)) return false;
    found = v;
    return true;
  });
  if (!found) throw ConstructionIntegrityError("expected a proper subcode but found none outside it");
  return *found;
}

GlueKind detect_glue(const LinearCode& c0, const RingVector& s, const RingVector& t) {
  const auto twice = s.scaled(2);
  if (c0.contains(twice)) return GlueKind::Klein4;
  if (c0.contains(twice - t)) return GlueKind::Cyclic4;
  throw ConstructionIntegrityError("2s lies in neither C0 nor C2; the glue group is not of order 4");
}

}  // namespace

LinearCode euclidean_kernel(const LinearCode& code) {
  const auto verdict = classify(code);
  if (verdict != TypeVerdict::TypeI) {
    throw NotTypeIError(std::string("euclidean kernel needs a Type I code, got ") + std::string(to_string(verdict)));
  }
  const std::uint64_t mod = code.params().modulus() * 2;
  std::vector<bool> hits;
  for (const auto& r : code.generators()) hits.push_back(euclidean_weight(r) % mod != 0);
  auto c0 = index_two_kernel(code, hits);
  if (c0.size_exponent() + 1 != code.size_exponent()) {
    throw ConstructionIntegrityError("Euclidean kernel does not have index 2");
  }
  return c0;
}

LinearCode psi_kernel(const LinearCode& code, const RingVector& s) {
  if (s.size() != code.length() || !(s.params() == code.params())) {
    throw DimensionError("shadow vector does not match the code's length or ring");
  }
  if (!is_self_dual(code)) throw DomainError("generalized shadows need a self-dual code");
  if (code.contains(s)) throw InvalidShadowVector("s = (" + s.to_string() + ") is a codeword");
  const auto& p = code.params();
  int min_val = p.exponent();
  std::vector<Element> values;
  for (const auto& r : code.generators()) {
    values.push_back(dot(r, s));
    min_val = std::min(min_val, valuation(p, values.back()));
  }
  if (min_val != p.exponent() - 1) {
    const auto image_size = std::uint64_t{1} << (p.exponent() - min_val);
    throw ImageShapeError("image of psi_s is the subgroup of order " + std::to_string(image_size) +
                          " generated by " + std::to_string(min_val == p.exponent() ? 0 : (1u << min_val)) +
                          ", not {0, " + std::to_string(p.half()) + "}");
  }
  std::vector<bool> hits;
  for (auto v : values) hits.push_back(v != 0);
  return index_two_kernel(code, hits);
}

RingVector CosetDecomposition::representative(int i) const {
  switch (i) {
    case 0:
      return RingVector::zero(params(), length());
    case 1:
      return s;
    case 2:
      return t;
    case 3:
      return s + t;
  }
  throw DomainError("coset index must be 0..3");
}

bool CosetDecomposition::in_coset(int i, const RingVector& v) const { return c0.contains(v - representative(i)); }

std::vector<RingVector> CosetDecomposition::coset(int i, std::uint64_t cap) const {
  const auto r = representative(i);
  std::vector<RingVector> out;
  c0.for_each([&](const RingVector& c) { out.push_back(c + r); }, cap);
  return out;
}

CosetDecomposition decompose_type_i(const LinearCode& code) {
  auto c0 = euclidean_kernel(code);
  auto c0_dual = dual(c0);
  auto t = first_outside(code, c0);
  auto s = first_outside(c0_dual, code);
  const auto glue = detect_glue(c0, s, t);
  return CosetDecomposition{ShadowMode::TypeIShadow, code, std::move(c0), std::move(c0_dual), std::move(t),
                            std::move(s), glue};
}

CosetDecomposition decompose_generalized(const LinearCode& code, const RingVector& s) {
  auto c0 = psi_kernel(code, s);
  auto c0_dual = dual(c0);
  if (!c0_dual.contains(s)) throw ConstructionIntegrityError("s is not orthogonal to its own kernel");
  auto t = first_outside(code, c0);
  const auto glue = detect_glue(c0, s, t);
  return CosetDecomposition{ShadowMode::Generalized, code, std::move(c0), std::move(c0_dual), std::move(t), s, glue};
}

void relabel_c1_c3(CosetDecomposition& dec) {
  dec.s = dec.s + dec.t;
  dec.relabeled = !dec.relabeled;
}

std::optional<ExpectedTable> expected_table(const CosetDecomposition& dec) {
  const auto& p = dec.params();
  const Element h = static_cast<Element>(p.half());
  ExpectedTable out{};
  auto fill = [&](std::array<Element, 3> r1, std::array<Element, 3> r2, std::array<Element, 3> r3) {
    out.values[0] = {0, 0, 0, 0};
    out.values[1] = {0, r1[0], r1[1], r1[2]};
    out.values[2] = {0, r2[0], r2[1], r2[2]};
    out.values[3] = {0, r3[0], r3[1], r3[2]};
  };
  // Rows of the two tables with only 0 / 2^{m-1} entries.
  auto self_half = [&] { fill({h, h, 0}, {h, 0, h}, {0, h, h}); };
  auto self_zero = [&] { fill({0, h, h}, {h, 0, h}, {h, h, 0}); };

  if (dec.mode == ShadowMode::TypeIShadow) {
    const auto n = dec.length();
    if (n % 4 == 2) {
      self_half();
      out.label = "Type I shadow, n = 2 (mod 4)";
    } else if (n % 4 == 0) {
      self_zero();
      out.label = "Type I shadow, n = 0 (mod 4)";
    } else {
      if (p.exponent() < 2) return std::nullopt;
      const std::int64_t a = static_cast<std::int64_t>(n % 4);
      const std::int64_t q = std::int64_t{1} << (p.exponent() - 2);
      const Element d = p.reduce(static_cast<std::int64_t>(h) - q * a);
      const Element e = p.reduce(-q * a);
      fill({d, h, e}, {h, 0, h}, {e, h, d});
      out.label = "Type I shadow, n = " + std::to_string(a) + " (mod 4)";
    }
    return out;
  }
  const Element ss = dot(dec.s, dec.s);
  if (ss == 0) {
    self_zero();
    out.label = "generalized shadow, s.s = 0";
  } else if (ss == h) {
    self_half();
    out.label = "generalized shadow, s.s = 2^{m-1}";
  } else {
    return std::nullopt;
  }
  return out;
}

namespace {

using Cells = std::array<std::array<std::optional<Element>, 4>, 4>;

bool same(const Cells& obs, const ExpectedTable& exp) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!obs[i][j] || *obs[i][j] != exp.values[i][j]) return false;
    }
  }
  return true;
}

Cells swapped(const Cells& c) {
  constexpr int perm[4] = {0, 3, 2, 1};
  Cells out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) out[i][j] = c[perm[i]][perm[j]];
  }
  return out;
}

}  // namespace

OrthogonalityTable verify_orthogonality(CosetDecomposition& dec, std::uint64_t pair_cap) {
  OrthogonalityTable table;
  const auto e = dec.c0.size_exponent();
  table.exhaustive = 2 * e < 63 && (std::uint64_t{1} << (2 * e)) <= pair_cap;
  if (table.exhaustive) {
    std::array<std::vector<RingVector>, 4> cosets;
    for (int i = 0; i < 4; ++i) cosets[i] = dec.coset(i);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        std::optional<Element> cell;
        bool mixed = false;
        for (const auto& x : cosets[i]) {
          for (const auto& y : cosets[j]) {
            const auto v = dot(x, y);
            if (!cell) {
              cell = v;
            } else if (*cell != v) {
              mixed = true;
              break;
            }
          }
          if (mixed) break;
        }
        table.observed[i][j] = mixed ? std::nullopt : cell;
      }
    }
  } else {
    for (const auto& g : dec.c0.generators()) {
      for (int i = 0; i < 4; ++i) {
        if (dot(g, dec.representative(i)) != 0) {
          throw TableViolation("C0 is not orthogonal to the representative of C_" + std::to_string(i));
        }
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) table.observed[i][j] = dot(dec.representative(i), dec.representative(j));
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!table.observed[i][j]) {
        throw TableViolation("x.y is not constant on C_" + std::to_string(i) + " x C_" + std::to_string(j));
      }
    }
  }
  table.expected = expected_table(dec);
  if (table.expected) {
    if (same(table.observed, *table.expected)) {
      table.matches = true;
    } else if (same(swapped(table.observed), *table.expected)) {
      relabel_c1_c3(dec);
      table.observed = swapped(table.observed);
      table.relabeled = true;
      table.matches = true;
    }
  }
  return table;
}

ShadowWeightReport shadow_weight_check(const CosetDecomposition& dec) {
  if (dec.mode != ShadowMode::TypeIShadow) throw DomainError("the shadow weight congruence concerns Type I shadows");
  const auto& p = dec.params();
  const std::uint64_t n = dec.length();
  const std::uint64_t mod = 2 * p.modulus();
  ShadowWeightReport report;
  report.expected_residue = ((n << p.exponent()) / 4) % mod;
  const std::uint64_t target = (n << p.exponent()) % (8 * p.modulus());

  auto check = [&](const RingVector& x) {
    const auto w = euclidean_weight(x);
    if ((4 * w) % (8 * p.modulus()) != target) {
      throw LemmaViolation("shadow vector (" + x.to_string() + ") has Euclidean weight " + std::to_string(w) +
                           ", expected " + std::to_string(report.expected_residue) + " mod " + std::to_string(mod));
    }
    report.residue = w % mod;
    ++report.vectors_checked;
  };

  const auto e = dec.c0.size_exponent();
  report.exhaustive = e < 62 && (std::uint64_t{2} << e) <= enumeration_cap();
  if (report.exhaustive) {
    for (int i : {1, 3}) {
      const auto r = dec.representative(i);
      dec.c0.for_each([&](const RingVector& c) { check(c + r); });
    }
  } else {
    // wt_E(x + c) = wt_E(x) mod 2^{m+1} for c in C0, so the representatives decide every class.
    check(dec.representative(1));
    check(dec.representative(3));
  }
  return report;
}

}  // namespace zshadow
