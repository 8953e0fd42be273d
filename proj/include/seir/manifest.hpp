#pragma once

#include "seir/corpus_io.hpp"
#include "seir/pipeline.hpp"

#include "json.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace seir {

inline constexpr const char* kToolVersion = "seir-workbench 1.0.0";

/// Everything that determines a run's results. The timestamp is recorded but
/// never hashed.
struct RunManifest {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::string pipeline_fingerprint;
    std::string stopwords_en_hash;
    std::string stopwords_java_hash;
    std::uint64_t seed = 0;
    std::string corpus_fingerprint;
    std::string tool_version = kToolVersion;
    std::string timestamp;

    std::string hash() const;
    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

std::string word_list_hash(const std::set<std::string>& words);

/// Pipeline-derived fields filled in; the timestamp is set to now (UTC).
RunManifest make_manifest(std::string command, nlohmann::json config, const PipelineConfig& pipeline,
                          std::uint64_t seed, std::string corpus_fingerprint);

std::string corpus_fingerprint(const std::vector<ProjectRecord>& projects);
std::string corpus_fingerprint(const BugDataset& dataset);

}  // namespace seir
