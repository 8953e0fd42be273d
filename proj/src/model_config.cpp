#include "seir/model_config.hpp"

#include "seir/error.hpp"

namespace seir {

std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::vsm:
        return "vsm";
    case ModelKind::bm25:
        return "bm25";
    case ModelKind::lsi:
        return "lsi";
    case ModelKind::wmd:
        return "wmd";
    }
    return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view name)
{
    for (auto k : {ModelKind::vsm, ModelKind::bm25, ModelKind::lsi, ModelKind::wmd}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

ModelConfig ModelConfig::for_task(Task task, ModelKind model)
{
    ModelConfig c;
    c.model = model;
    c.k1 = 1.5;
    c.k2 = 1.5;
    c.b = 0.75;
    c.lsi_dim = 100;
    c.embedding_min_df = 5;
    if (task == Task::project_recommendation) {
        c.min_df = 2;
        c.embedding_dim = 300;
        c.window = 5;
        c.vocab_size = "18M";
    } else {
        switch (model) {
        case ModelKind::vsm:
            c.min_df = 1;
            break;
        case ModelKind::bm25:
            c.min_df = 2;
            break;
        case ModelKind::lsi:
            c.min_df = 15;
            break;
        case ModelKind::wmd:
            c.min_df = 1;  // WMD scores raw tokens; no index filtering applies
            break;
        }
        c.embedding_dim = 100;
        c.window = 10;
        c.vocab_size = "21.8K";
    }
    return c;
}

void ModelConfig::validate() const
{
    if (k1 < 0.0 || k2 < 0.0) {
        throw ConfigError("BM25 k1 and k2 must be non-negative");
    }
    if (b < 0.0 || b > 1.0) {
        throw ConfigError("BM25 b must lie in [0, 1]");
    }
    if (lsi_dim < 1) {
        throw ConfigError("LSI dimension must be positive");
    }
    if (min_df < 1) {
        throw ConfigError("min_df must be at least 1");
    }
    if (embedding_dim < 1) {
        throw ConfigError("embedding dimension must be positive");
    }
}

nlohmann::json ModelConfig::to_json() const
{
    nlohmann::json j;
    j["model"] = to_string(model);
    j["min_df"] = min_df;
    switch (model) {
    case ModelKind::vsm:
        j["weighting"] = "tf*ln(N/df), cosine";
        break;
    case ModelKind::bm25:
        j["k1"] = k1;
        j["k2"] = k2;
        j["b"] = b;
        j["idf"] = "ln(1+(N-df+0.5)/(df+0.5))";
        j["query_terms"] = "distinct terms weighted by qtf";
        break;
    case ModelKind::lsi:
        j["lsi_dim"] = lsi_dim;
        j["weighting"] = "tf*ln(N/df)";
        break;
    case ModelKind::wmd:
        j["embedding_dim"] = embedding_dim;
        j["embedding_path"] = embedding_path;
        j["embedding_min_df"] = embedding_min_df;
        j["window"] = window;
        j["vocab_size"] = vocab_size;
        j["variant"] = "relaxed: sum over query terms of nearest document term distance";
        break;
    }
    return j;
}

}  // namespace seir
