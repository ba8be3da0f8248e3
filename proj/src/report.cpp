#include "zshadow/report.hpp"

namespace zshadow {

using nlohmann::json;

namespace {

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json pairs_json(const std::vector<std::pair<int, int>>& v) {
  json out = json::array();
  for (const auto& [i, j] : v) out.push_back(json::array({i, j}));
  return out;
}

}  // namespace

json to_json(const RingVector& v) { return json(std::vector<Element>(v.components().begin(), v.components().end())); }

json to_json(const LinearCode& code) {
  json rows = json::array();
  for (const auto& g : code.generators()) rows.push_back(to_json(g));
  return {{"m", code.params().exponent()},
          {"n", code.length()},
          {"size_log2", code.size_exponent()},
          {"rows", rows}};
}

json to_json(const WeightEnumerator& we) {
  json terms = json::array();
  for (const auto& [e, c] : we.terms()) terms.push_back({{"exp", e}, {"count", c}});
  return {{"m", we.params().exponent()}, {"n", we.length()}, {"terms", terms}};
}

json to_json(const std::vector<CweDifference>& diff) {
  json out = json::array();
  for (const auto& d : diff) out.push_back({{"exp", d.exps}, {"left", d.left}, {"right", d.right}});
  return out;
}

json to_json(const CosetDecomposition& dec) {
  return {{"mode", to_string(dec.mode)},
          {"glue", to_string(dec.glue)},
          {"s", to_json(dec.s)},
          {"t", to_json(dec.t)},
          {"s_dot_s", dot(dec.s, dec.s)},
          {"relabeled", dec.relabeled},
          {"c0", to_json(dec.c0)}};
}

json to_json(const OrthogonalityTable& table) {
  json observed = json::array();
  for (const auto& row : table.observed) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell ? json(*cell) : json(nullptr));
    observed.push_back(r);
  }
  json out{{"observed", observed},
           {"exhaustive", table.exhaustive},
           {"relabeled", table.relabeled},
           {"matches", table.matches}};
  if (table.expected) out["expected"] = {{"label", table.expected->label}, {"values", table.expected->values}};
  return out;
}

json to_json(const ShadowWeightReport& report) {
  return {{"expected_residue", report.expected_residue},
          {"residue", report.residue},
          {"vectors_checked", report.vectors_checked},
          {"exhaustive", report.exhaustive}};
}

json to_json(const CosetSumReport& report) {
  return {{"pairs_checked", report.pairs_checked},
          {"containment_failures", pairs_json(report.containment_failures)},
          {"equality_failures", pairs_json(report.equality_failures)},
          {"proper_subsets", pairs_json(report.proper_subsets)}};
}

json to_json(const ExtensionCertificate& cert) {
  const auto& r = cert.recipe;
  json w = json::array();
  for (const auto& x : r.w) w.push_back(to_json(x));
  json out{{"case", r.case_id},
           {"k", r.k},
           {"v1", to_json(r.v1)},
           {"v2", to_json(r.v2)},
           {"w", w},
           {"claim", to_string(r.claim)},
           {"verdict", to_string(cert.verdict)},
           {"passed", cert.passed()},
           {"checks", checks_json(cert.checks)}};
  if (cert.cstar) {
    out["cstar"] = {{"order_v1", cert.cstar->order_v1},
                    {"order_v2", cert.cstar->order_v2},
                    {"size_log2", cert.cstar->code.size_exponent()},
                    {"enumerated", cert.cstar->enumerated}};
  }
  if (cert.result) out["code"] = to_json(*cert.result);
  return out;
}

json to_json(const ModularityReport& report) {
  json res = json::array();
  for (const auto& r : report.residuals) {
    res.push_back({{"transform", r.transform},
                   {"tau", complex_json(r.point.tau)},
                   {"z", complex_json(r.point.z)},
                   {"residual", r.residual}});
  }
  return {{"tolerance", report.tolerance},
          {"max_residual", report.max_residual()},
          {"passed", report.passed()},
          {"residuals", res}};
}

json to_json(const ExponentReport& report) {
  return {{"terms_checked", report.terms_checked},
          {"q_integral", report.q_integral},
          {"discriminant_ok", report.discriminant_ok}};
}

json to_json(const SeedReport& report) {
  json decs = json::array();
  for (const auto& d : report.decompositions) {
    json j{{"mode", to_string(d.mode)}, {"passed", d.passed()}};
    if (!d.s.empty()) j["s"] = d.s;
    if (d.dec) j["decomposition"] = to_json(*d.dec);
    if (d.table) j["table"] = to_json(*d.table);
    if (d.weights) j["shadow_weights"] = to_json(*d.weights);
    if (d.sums) j["coset_sums"] = to_json(*d.sums);
    if (!d.error.empty()) j["error"] = d.error;
    decs.push_back(j);
  }
  json cons = json::array();
  for (const auto& c : report.constructions) {
    json j{{"mode", to_string(c.mode)}, {"case", c.case_id}, {"passed", c.passed()}};
    if (!c.s.empty()) j["s"] = c.s;
    if (c.cert) j["certificate"] = to_json(*c.cert);
    if (c.cwe.computed) {
      j["cwe"] = {{"printed_equal", c.cwe.printed_equal},
                  {"order_ranged_equal", c.cwe.ordered_equal},
                  {"printed_diff", to_json(c.cwe.printed_diff)},
                  {"order_ranged_diff", to_json(c.cwe.ordered_diff)}};
    }
    if (c.jacobi.computed) {
      j["jacobi"] = {{"modularity", to_json(*c.jacobi.report)}, {"exponents", to_json(*c.jacobi.exponents)}};
    }
    if (!c.error.empty()) j["error"] = c.error;
    cons.push_back(j);
  }
  json out{{"name", report.name},
           {"m", report.m},
           {"n", report.n},
           {"classification", to_string(report.verdict)},
           {"expected", to_string(report.expected)},
           {"passed", report.passed()},
           {"decompositions", decs},
           {"constructions", cons},
           {"errors", report.errors}};
  return out;
}

json to_json(const CorpusReport& report) {
  json seeds = json::array();
  std::size_t cons = 0, cons_passed = 0, seeds_passed = 0;
  for (const auto& s : report.seeds) {
    seeds.push_back(to_json(s));
    seeds_passed += s.passed();
    for (const auto& c : s.constructions) {
      ++cons;
      cons_passed += c.passed();
    }
  }
  return {{"passed", report.passed()},
          {"summary",
           {{"seeds", report.seeds.size()},
            {"seeds_passed", seeds_passed},
            {"constructions", cons},
            {"constructions_passed", cons_passed}}},
          {"warnings", report.warnings},
          {"seeds", seeds}};
}

}  // namespace zshadow
