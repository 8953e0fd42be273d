#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace seir {

enum class ModelKind { vsm, bm25, lsi, wmd };

std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);

enum class Task { project_recommendation, bug_localization };

/// Hyperparameters for one similarity model. Defaults follow the
/// project-recommendation row of the tuned configuration table.
struct ModelConfig {
    ModelKind model = ModelKind::vsm;
    double k1 = 1.5;
    double k2 = 1.5;
    double b = 0.75;
    int lsi_dim = 100;
    int min_df = 2;
    int embedding_dim = 300;
    std::string embedding_path;
    // Informational: describe how the embedding file was trained.
    int embedding_min_df = 5;
    int window = 5;
    std::string vocab_size = "18M";

    /// Tuned settings per task and model.
    static ModelConfig for_task(Task task, ModelKind model);

    /// Throws ConfigError on out-of-range values.
    void validate() const;

    nlohmann::json to_json() const;
};

}  // namespace seir
