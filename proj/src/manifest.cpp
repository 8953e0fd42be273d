#include "seir/manifest.hpp"

#include "seir/error.hpp"
#include "seir/hashing.hpp"

#include <chrono>

namespace seir {

namespace {

nlohmann::json hashed_fields(const RunManifest& m)
{
    return {
        {"command", m.command},
        {"config", m.config},
        {"pipeline_fingerprint", m.pipeline_fingerprint},
        {"stopwords_en_hash", m.stopwords_en_hash},
        {"stopwords_java_hash", m.stopwords_java_hash},
        {"seed", m.seed},
        {"corpus_fingerprint", m.corpus_fingerprint},
        {"tool_version", m.tool_version},
    };
}

}  // namespace

std::string RunManifest::hash() const
{
    return sha256_hex(hashed_fields(*this).dump());
}

nlohmann::json RunManifest::to_json() const
{
    auto j = hashed_fields(*this);
    j["timestamp"] = timestamp;
    j["manifest_hash"] = hash();
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j)
{
    try {
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.config = j.at("config");
        m.pipeline_fingerprint = j.at("pipeline_fingerprint").get<std::string>();
        m.stopwords_en_hash = j.at("stopwords_en_hash").get<std::string>();
        m.stopwords_java_hash = j.at("stopwords_java_hash").get<std::string>();
        m.seed = j.at("seed").get<std::uint64_t>();
        m.corpus_fingerprint = j.at("corpus_fingerprint").get<std::string>();
        m.tool_version = j.at("tool_version").get<std::string>();
        m.timestamp = j.value("timestamp", "");
        if (j.contains("manifest_hash") && j["manifest_hash"].get<std::string>() != m.hash()) {
            throw ConfigError("manifest hash does not match its contents");
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
}

std::string word_list_hash(const std::set<std::string>& words)
{
    Sha256 h;
    for (const auto& w : words) {
        h.field(w);
    }
    return h.hex_digest();
}

RunManifest make_manifest(std::string command, nlohmann::json config, const PipelineConfig& pipeline,
                          std::uint64_t seed, std::string corpus_fingerprint)
{
    RunManifest m;
    m.command = std::move(command);
    m.config = std::move(config);
    m.pipeline_fingerprint = pipeline.fingerprint();
    m.stopwords_en_hash = word_list_hash(pipeline.english_stopwords);
    m.stopwords_java_hash = word_list_hash(pipeline.java_stopwords);
    m.seed = seed;
    m.corpus_fingerprint = std::move(corpus_fingerprint);
    auto now = std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
    m.timestamp = format_iso8601(now);
    return m;
}

std::string corpus_fingerprint(const std::vector<ProjectRecord>& projects)
{
    Sha256 h;
    h.field("projects");
    for (const auto& p : projects) {
        h.field(p.project_id);
        h.field(std::to_string(p.categories.size()));
        for (const auto& c : p.categories) {
            h.field(c);
        }
        h.field(p.description);
        h.field(p.readme);
        for (const auto& f : p.source_files) {
            h.field(f.path);
            h.field(f.text);
        }
    }
    return h.hex_digest();
}

std::string corpus_fingerprint(const BugDataset& dataset)
{
    Sha256 h;
    h.field("bugs");
    h.field(dataset.name);
    for (const auto& r : dataset.reports) {
        h.field(r.report_id);
        h.field(r.summary);
        h.field(r.description);
        h.field(format_iso8601(r.report_time));
        for (const auto& f : r.fixed_files) {
            h.field(f);
        }
        h.field("|");
        for (const auto& f : r.added_files) {
            h.field(f);
        }
    }
    for (const auto& [path, text] : dataset.sources) {
        h.field(path);
        h.field(text);
    }
    for (const auto& [id, snap] : dataset.snapshots) {
        h.field(id);
        for (const auto& f : snap) {
            h.field(f);
        }
    }
    for (const auto& [name, text] : dataset.catalog) {
        h.field(name);
        h.field(text);
    }
    return h.hex_digest();
}

}  // namespace seir
