#pragma once

#include <json.hpp>

#include "zshadow/pipeline.hpp"

namespace zshadow {

nlohmann::json to_json(const RingVector& v);
nlohmann::json to_json(const LinearCode& code);
/// {"m":…, "n":…, "terms":[{"exp":[…], "count":…}, …]}, terms sorted by exponent tuple.
nlohmann::json to_json(const WeightEnumerator& we);
nlohmann::json to_json(const std::vector<CweDifference>& diff);
nlohmann::json to_json(const CosetDecomposition& dec);
nlohmann::json to_json(const OrthogonalityTable& table);
nlohmann::json to_json(const ShadowWeightReport& report);
nlohmann::json to_json(const CosetSumReport& report);
nlohmann::json to_json(const ExtensionCertificate& cert);
nlohmann::json to_json(const ModularityReport& report);
nlohmann::json to_json(const ExponentReport& report);
nlohmann::json to_json(const SeedReport& report);
nlohmann::json to_json(const CorpusReport& report);

}  // namespace zshadow
