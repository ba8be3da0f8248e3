#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <sstream>
#include <string>

#include "zshadow/codefile.hpp"
#include "zshadow/error.hpp"
#include "zshadow/report.hpp"

using namespace zshadow;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

Complex parse_complex(const std::string& text) {
  // Accepts "a", "bi", "a+bi", "a-bi", "i", "-i".
  static const std::regex full(R"(^\s*([+-]?[0-9.eE]+)?\s*(?:([+-])\s*([0-9.eE]*)\s*i)?\s*$)");
  static const std::regex imag(R"(^\s*([+-]?)([0-9.eE]*)\s*i\s*$)");
  std::smatch mt;
  auto num = [](const std::string& s) { return s.empty() ? 1.0 : std::stod(s); };
  try {
    if (std::regex_match(text, mt, imag)) {
      return {0.0, (mt[1] == "-" ? -1.0 : 1.0) * num(mt[2])};
    }
    if (std::regex_match(text, mt, full) && (mt[1].matched || mt[2].matched)) {
      const double re = mt[1].matched ? std::stod(mt[1]) : 0.0;
      const double im = mt[2].matched ? (mt[2] == "-" ? -1.0 : 1.0) * num(mt[3]) : 0.0;
      return {re, im};
    }
  } catch (const std::exception&) {
  }
  throw UsageError("cannot parse complex number '" + text + "' (expected a+bi)");
}

std::string complex_string(Complex c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

std::map<std::uint64_t, std::uint64_t> weight_histogram(const LinearCode& code) {
  std::map<std::uint64_t, std::uint64_t> hist;
  code.for_each([&](const RingVector& v) { ++hist[euclidean_weight(v)]; });
  return hist;
}

Variant parse_variant(const std::string& v) { return v == "b" ? Variant::B : Variant::A; }

// Random search for a generalized shadow vector that some printed case covers.
RingVector random_shadow_vector(const LinearCode& code, Variant variant, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& p = code.params();
  std::uniform_int_distribution<std::uint64_t> digit(0, p.mask());
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Element> comps(code.length());
    for (auto& c : comps) c = static_cast<Element>(digit(rng));
    auto s = RingVector::from_elements(p, comps);
    try {
      auto dec = decompose_generalized(code, s);
      case_id_for(dec, variant);
      return s;
    } catch (const Error&) {
    }
  }
  throw DomainError("no generalized shadow vector found after 100000 random draws");
}

CosetDecomposition decompose(const LinearCode& code, const std::string& mode, const std::string& s_text,
                             Variant variant, std::uint64_t seed) {
  if (mode == "shadow") {
    auto dec = decompose_type_i(code);
    verify_orthogonality(dec);
    return dec;
  }
  const auto s = s_text.empty() ? random_shadow_vector(code, variant, seed) : parse_vector(code.params(), s_text);
  auto dec = decompose_generalized(code, s);
  verify_orthogonality(dec);
  return dec;
}

int cmd_info(const std::string& file) {
  const auto code = read_code_file(file);
  std::cout << "m=" << code.params().exponent() << " n=" << code.length() << " |C|=" << code.size() << ' '
            << to_string(classify(code)) << '\n';
  std::cout << "euclidean weights:";
  for (const auto& [w, c] : weight_histogram(code)) std::cout << ' ' << w << ':' << c;
  std::cout << '\n';
  return kPass;
}

int cmd_check(const std::string& file) {
  const auto code = read_code_file(file);
  const auto verdict = classify(code);
  print({{"m", code.params().exponent()},
         {"n", code.length()},
         {"size_log2", code.size_exponent()},
         {"self_orthogonal", is_self_orthogonal(code)},
         {"self_dual", is_self_dual(code)},
         {"classification", to_string(verdict)}});
  return verdict == TypeVerdict::NotSelfDual ? kFail : kPass;
}

int cmd_dual(const std::string& file, const std::string& out) {
  const auto d = dual(read_code_file(file));
  if (out.empty()) {
    std::cout << format_code(d);
  } else {
    write_code_file(out, d);
  }
  return kPass;
}

int cmd_shadow(const std::string& file, const std::string& s_text) {
  const auto code = read_code_file(file);
  auto dec = s_text.empty() ? decompose_type_i(code) : decompose_generalized(code, parse_vector(code.params(), s_text));
  json out = to_json(dec);
  const auto table = verify_orthogonality(dec);
  out["table"] = to_json(table);
  out["s"] = to_json(dec.s);
  bool ok = table.matches;
  out["shadow_size_log2"] = dec.c0.size_exponent() + 1;
  if (dec.mode == ShadowMode::TypeIShadow) {
    try {
      out["shadow_weights"] = to_json(shadow_weight_check(dec));
    } catch (const LemmaViolation& e) {
      out["shadow_weights"] = {{"error", e.what()}};
      ok = false;
    }
  }
  print(out);
  return ok ? kPass : kFail;
}

int cmd_extend(const std::string& file, const std::string& mode, const std::string& s_text,
               const std::string& variant_text, const std::string& out, const std::string& cert_path,
               std::uint64_t seed) {
  const auto code = read_code_file(file);
  const auto variant = parse_variant(variant_text);
  const auto dec = decompose(code, mode, s_text, variant, seed);
  const auto recipe = recipe_for(dec, variant);
  const auto cert = extend(dec, recipe);
  json j = to_json(cert);
  j["s"] = to_json(dec.s);
  j["glue"] = to_string(dec.glue);
  if (!cert_path.empty()) {
    std::ofstream os(cert_path);
    if (!os) throw UsageError("cannot write " + cert_path);
    os << j.dump(2) << '\n';
  } else {
    print(j);
  }
  if (!out.empty() && cert.result) write_code_file(out, *cert.result);
  std::cerr << recipe.case_id << ": " << (cert.passed() ? "certificate passed" : "certificate FAILED") << '\n';
  return cert.passed() ? kPass : kFail;
}

int cmd_cwe(const std::string& file, const std::string& mode, const std::string& s_text,
            const std::string& variant_text, bool formula, std::uint64_t seed) {
  const auto code = read_code_file(file);
  if (!formula) {
    print(to_json(cwe_direct(code)));
    return kPass;
  }
  const auto variant = parse_variant(variant_text);
  const auto dec = decompose(code, mode, s_text, variant, seed);
  const auto recipe = recipe_for(dec, variant);
  const auto cert = extend(dec, recipe);
  if (!cert.result) throw DomainError("construction did not produce a code");
  const auto direct = cwe_direct(*cert.result);
  const auto printed = cwe_equal(cwe_formula(dec, recipe), direct);
  const auto ordered = cwe_equal(cwe_formula_order_ranged(dec, recipe), direct);
  print({{"case", recipe.case_id},
         {"direct", to_json(direct)},
         {"printed_equal", printed.equal},
         {"printed_diff", to_json(printed.diff)},
         {"order_ranged_equal", ordered.equal},
         {"order_ranged_diff", to_json(ordered.diff)}});
  return printed.equal || ordered.equal ? kPass : kFail;
}

int cmd_jacobi(const std::string& file, const std::string& tau_text, const std::string& z_text, int radius,
               double tol, bool check) {
  const auto code = read_code_file(file);
  const auto we = cwe_direct(code);
  const SamplePoint point{parse_complex(tau_text), parse_complex(z_text)};
  const auto value = evaluate_candidate(we, point.tau, point.z, radius);
  json out{{"tau", complex_string(point.tau)},
           {"z", complex_string(point.z)},
           {"radius", radius},
           {"value", json::array({value.real(), value.imag()})}};
  int rc = kPass;
  if (check) {
    auto spec = JacobiCheckSpec::for_enumerator(we);
    spec.points = {point};
    spec.tolerance = tol;
    spec.radius = radius;
    const auto report = modularity_check(we, spec);
    out["weight"] = spec.weight;
    out["index"] = spec.index;
    out["modularity"] = to_json(report);
    out["exponents"] = to_json(exponent_check(we));
    if (!report.passed()) rc = kFail;
  }
  print(out);
  return rc;
}

int cmd_verify_corpus(const std::string& manifest_path, const std::string& out) {
  const auto manifest = CorpusManifest::load(manifest_path);
  const auto report = verify_corpus(manifest);
  const auto j = to_json(report);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw UsageError("cannot write " + out);
    os << j.dump(2) << '\n';
  }
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& seed : report.seeds) {
    std::cerr << (seed.passed() ? "PASS " : "FAIL ") << seed.name;
    for (const auto& c : seed.constructions) {
      if (!c.passed()) std::cerr << ' ' << c.case_id << (c.s.empty() ? "" : "[s=" + c.s + "]");
    }
    for (const auto& e : seed.errors) std::cerr << " (" << e << ')';
    std::cerr << '\n';
  }
  print({{"passed", j["passed"]}, {"summary", j["summary"]}, {"warnings", j["warnings"]}});
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-dual codes over Z_{2^m} from shadows and generalized shadows"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for the random shadow-vector search")->default_val(0);

  std::string file, out, cert, mode = "shadow", s_text, variant = "a", tau, z, manifest;
  int radius = 40;
  double tol = 1e-6;
  bool check = false, formula = false;

  auto* info = app.add_subcommand("info", "Size, classification and Euclidean-weight histogram");
  info->add_option("FILE", file)->required();
  auto* chk = app.add_subcommand("check", "Self-orthogonality, self-duality and Type I/II classification");
  chk->add_option("FILE", file)->required();
  auto* dl = app.add_subcommand("dual", "Dual code in canonical form");
  dl->add_option("FILE", file)->required();
  dl->add_option("--out", out);
  auto* sh = app.add_subcommand("shadow", "Coset decomposition, orthogonality table and weight congruence");
  sh->add_option("FILE", file)->required();
  sh->add_option("--s", s_text, "Generalized shadow vector, e.g. \"0,1,1\"");
  auto* ex = app.add_subcommand("extend", "Build the extended self-dual code and its certificate");
  ex->add_option("FILE", file)->required();
  ex->add_option("--mode", mode)->check(CLI::IsMember({"shadow", "gen"}));
  ex->add_option("--s", s_text);
  ex->add_option("--variant", variant)->check(CLI::IsMember({"a", "b"}));
  ex->add_option("--out", out);
  ex->add_option("--cert", cert);
  auto* cw = app.add_subcommand("cwe", "Complete weight enumerator, optionally against the closed form");
  cw->add_option("FILE", file)->required();
  cw->add_flag("--formula", formula, "Compare the extension's enumerator with the closed-form sums");
  cw->add_option("--mode", mode)->check(CLI::IsMember({"shadow", "gen"}));
  cw->add_option("--s", s_text);
  cw->add_option("--variant", variant)->check(CLI::IsMember({"a", "b"}));
  auto* jc = app.add_subcommand("jacobi", "Evaluate the theta substitution and check the transformation laws");
  jc->add_option("FILE", file)->required();
  jc->add_option("--tau", tau)->required();
  jc->add_option("--z", z)->required();
  jc->add_option("--radius", radius)->default_val(40);
  jc->add_option("--tol", tol)->default_val(1e-6);
  jc->add_flag("--check", check);
  auto* vc = app.add_subcommand("verify-corpus", "Run every check on every seed of a manifest");
  vc->add_option("MANIFEST", manifest)->required();
  vc->add_option("--out", out, "Write the full JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*info) return cmd_info(file);
    if (*chk) return cmd_check(file);
    if (*dl) return cmd_dual(file, out);
    if (*sh) return cmd_shadow(file, s_text);
    if (*ex) return cmd_extend(file, mode, s_text, variant, out, cert, seed);
    if (*cw) return cmd_cwe(file, mode, s_text, variant, formula, seed);
    if (*jc) return cmd_jacobi(file, tau, z, radius, tol, check);
    if (*vc) return cmd_verify_corpus(manifest, out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
