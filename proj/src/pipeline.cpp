#include "zshadow/pipeline.hpp"

#include <fstream>
#include <future>
#include <json.hpp>

#include "zshadow/codefile.hpp"
#include "zshadow/error.hpp"

namespace zshadow {

namespace {

TypeVerdict verdict_from(const std::string& s) {
  if (s == "TypeI") return TypeVerdict::TypeI;
  if (s == "TypeII") return TypeVerdict::TypeII;
  if (s == "NotSelfDual") return TypeVerdict::NotSelfDual;
  throw ParseError("unknown classification '" + s + "'");
}

void examine(DecompositionReport& rep, const PipelineOptions& opts) {
  auto& dec = *rep.dec;
  rep.table = verify_orthogonality(dec);
  if (dec.mode == ShadowMode::TypeIShadow) rep.weights = shadow_weight_check(dec);
  if (dec.params().exponent() <= opts.coset_sum_max_m) rep.sums = check_coset_sums(dec);
}

ConstructionReport construct(const CosetDecomposition& dec, Variant variant, const PipelineOptions& opts) {
  ConstructionReport rep{dec.mode, dec.mode == ShadowMode::Generalized ? dec.s.to_string() : "", "", {}, {}, {}, ""};
  try {
    const auto recipe = recipe_for(dec, variant);
    rep.case_id = recipe.case_id;
    rep.cert = extend(dec, recipe);
    const auto& cert = *rep.cert;
    if (cert.result && cert.result->size_exponent() <= opts.cwe_size_exponent) {
      const auto direct = cwe_direct(*cert.result);
      const auto printed = cwe_equal(cwe_formula(dec, recipe), direct);
      const auto ordered = cwe_equal(cwe_formula_order_ranged(dec, recipe), direct);
      rep.cwe = {true, printed.equal, ordered.equal, printed.diff, ordered.diff};
      if (cert.passed() && cert.verdict == TypeVerdict::TypeII) {
        const auto spec = JacobiCheckSpec::for_enumerator(direct);
        rep.jacobi = {true, modularity_check(direct, spec), exponent_check(direct)};
      }
    }
  } catch (const Error& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace

CorpusManifest CorpusManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("manifest " + path.string() + ": " + e.what());
  }
  CorpusManifest out;
  out.directory = path.parent_path();
  try {
    for (const auto& s : j.at("seeds")) {
      SeedSpec spec{s.at("name").get<std::string>(),
                    s.at("file").get<std::string>(),
                    s.at("m").get<int>(),
                    s.at("n").get<std::size_t>(),
                    verdict_from(s.at("classification").get<std::string>()),
                    {}};
      if (s.contains("generalized")) spec.generalized = s.at("generalized").get<std::vector<std::string>>();
      out.seeds.push_back(std::move(spec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("manifest " + path.string() + ": " + e.what());
  }
  return out;
}

bool DecompositionReport::passed() const {
  if (!error.empty() || !table) return false;
  if (!table->matches) return false;
  if (sums && (!sums->containment_failures.empty() || !sums->equality_failures.empty())) return false;
  return true;
}

bool ConstructionReport::jacobi_passed() const {
  if (!jacobi.computed) return true;
  return jacobi.report->passed() && jacobi.exponents->q_integral && jacobi.exponents->discriminant_ok;
}

bool ConstructionReport::passed() const {
  return error.empty() && cert && cert->passed() && cwe_passed() && jacobi_passed();
}

bool SeedReport::passed() const {
  if (!errors.empty() || verdict != expected) return false;
  for (const auto& d : decompositions) {
    if (!d.passed()) return false;
  }
  for (const auto& c : constructions) {
    if (!c.passed()) return false;
  }
  return true;
}

bool CorpusReport::passed() const {
  return std::all_of(seeds.begin(), seeds.end(), [](const SeedReport& s) { return s.passed(); });
}

SeedReport verify_seed(const SeedSpec& spec, const LinearCode& code, const PipelineOptions& opts) {
  SeedReport rep;
  rep.name = spec.name;
  rep.m = code.params().exponent();
  rep.n = code.length();
  rep.code = code;
  rep.expected = spec.expected;
  rep.verdict = classify(code);
  if (rep.m != spec.m || rep.n != spec.n) {
    rep.errors.push_back("file has m=" + std::to_string(rep.m) + " n=" + std::to_string(rep.n) + ", manifest says m=" +
                         std::to_string(spec.m) + " n=" + std::to_string(spec.n));
  }
  if (rep.verdict != spec.expected) {
    rep.errors.push_back("classified " + std::string(to_string(rep.verdict)) + ", manifest says " +
                         std::string(to_string(spec.expected)));
  }

  std::vector<CosetDecomposition> decs;
  if (rep.verdict == TypeVerdict::TypeI) {
    DecompositionReport d{ShadowMode::TypeIShadow, "", {}, {}, {}, {}, ""};
    try {
      d.dec = decompose_type_i(code);
      examine(d, opts);
      decs.push_back(*d.dec);
    } catch (const Error& e) {
      d.error = e.what();
    }
    rep.decompositions.push_back(std::move(d));
  }
  for (const auto& text : spec.generalized) {
    DecompositionReport d{ShadowMode::Generalized, text, {}, {}, {}, {}, ""};
    try {
      d.dec = decompose_generalized(code, parse_vector(code.params(), text));
      d.s = d.dec->s.to_string();
      examine(d, opts);
      decs.push_back(*d.dec);
    } catch (const Error& e) {
      d.error = e.what();
    }
    rep.decompositions.push_back(std::move(d));
  }
  for (const auto& dec : decs) {
    for (auto variant : {Variant::A, Variant::B}) rep.constructions.push_back(construct(dec, variant, opts));
  }
  return rep;
}

CorpusReport verify_corpus(const CorpusManifest& manifest, const PipelineOptions& opts) {
  CorpusReport out;
  if (manifest.seeds.empty()) out.warnings.push_back("manifest lists no seeds");
  auto run = [&](const SeedSpec& spec) {
    try {
      return verify_seed(spec, read_code_file(manifest.directory / spec.file), opts);
    } catch (const Error& e) {
      SeedReport failed;
      failed.name = spec.name;
      failed.m = spec.m;
      failed.n = spec.n;
      failed.expected = spec.expected;
      failed.errors.push_back(e.what());
      return failed;
    }
  };
  std::vector<std::future<SeedReport>> pending;
  for (const auto& spec : manifest.seeds) pending.push_back(std::async(std::launch::async, run, std::cref(spec)));
  for (auto& f : pending) out.seeds.push_back(f.get());
  return out;
}

}  // namespace zshadow
