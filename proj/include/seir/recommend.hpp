#pragma once

#include "seir/extraction.hpp"
#include "seir/index.hpp"
#include "seir/metrics.hpp"
#include "seir/model_config.hpp"
#include "seir/ranking.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace seir {

class EmbeddingTable;

/// Projects are relevant to each other when their category sets intersect.
bool project_relevance(const ProjectRecord& query, const ProjectRecord& candidate);

/// The five artifact documents of every project, aligned with `project_ids`.
struct ArtifactSet {
    std::vector<std::string> project_ids;
    std::vector<std::set<std::string>> categories;
    std::map<DocumentKind, std::vector<Document>> docs;

    static ArtifactSet build(const std::vector<ProjectRecord>& projects, const PipelineConfig& config);

    std::size_t size() const { return project_ids.size(); }
    std::optional<std::size_t> position(const std::string& project_id) const;
    /// Other projects sharing a category with project `pos`.
    std::set<std::string> relevant_to(std::size_t pos) const;
    const std::vector<Document>& of(DocumentKind kind) const;
};

struct QuerySelection {
    std::vector<std::string> query_ids;  // ascending
    std::vector<ExcludedQuery> excluded;
};

/// Draws up to `count` queries (seeded) from projects that share a category
/// with at least one other project; the rest are listed as excluded.
QuerySelection select_queries(const ArtifactSet& artifacts, std::size_t count, std::uint64_t seed);

/// Index plus model for one artifact kind.
class FeatureRanker {
  public:
    FeatureRanker(const ArtifactSet& artifacts, DocumentKind kind, const ModelConfig& model,
                  const EmbeddingTable* embeddings, const std::string& pipeline_fingerprint = {});

    DocumentKind kind() const { return m_kind; }
    const CorpusIndex& index() const { return *m_index; }
    /// Similarity of project `query` to every project, in project order.
    std::vector<double> scores(std::size_t query) const;
    bool query_empty(std::size_t query) const;

  private:
    const ArtifactSet& m_artifacts;
    DocumentKind m_kind;
    std::unique_ptr<CorpusIndex> m_index;
    std::unique_ptr<SimilarityModel> m_model;
};

/// Ranks the other N-1 projects by `scores` (project ids as doc ids).
RankedList rank_projects(const ArtifactSet& artifacts, std::size_t query, const std::vector<double>& scores);

/// One artifact kind, one model, cutoff k plus full-list MRR.
EvalReport run_feature_experiment(const ArtifactSet& artifacts, DocumentKind feature, const ModelConfig& model,
                                  const std::vector<std::string>& query_ids, std::size_t k = 10,
                                  const EmbeddingTable* embeddings = nullptr);

struct ClanWeights {
    double pkg = 0.9;
    double api = 0.1;
};

/// Weighted sum of the import-package and API similarities.
double clan_score(double pkg_similarity, double api_similarity, const ClanWeights& weights);

/// CLAN-style recommender: import_package and api features under the same
/// model (LSI in the original tool, VSM in vsmCLAN).
class ClanRecommender {
  public:
    ClanRecommender(const ArtifactSet& artifacts, const ModelConfig& model, const std::string& pipeline_fingerprint = {});

    RankedList rank(std::size_t query, const ClanWeights& weights) const;
    const FeatureRanker& package_ranker() const { return m_pkg; }
    const FeatureRanker& api_ranker() const { return m_api; }
    /// True when both component documents of the query are empty.
    bool query_empty(std::size_t query) const;

  private:
    const ArtifactSet& m_artifacts;
    FeatureRanker m_pkg;
    FeatureRanker m_api;
};

EvalReport run_clan_experiment(const ArtifactSet& artifacts, const ClanRecommender& clan, const ClanWeights& weights,
                               const std::vector<std::string>& query_ids, std::size_t k = 10);

struct ClanGridPoint {
    ClanWeights weights;
    double map = 0.0;
    double mrr = 0.0;
};

struct ClanTuneResult {
    ClanWeights best;
    EvalReport report;
    std::vector<ClanGridPoint> trace;  // every grid point, ascending w_pkg
};

/// Exhaustive search over (w, 1 - w) for w on a `grid_step` grid in [0, 1].
/// Best MAP@k wins; ties go to higher MRR, then to the smaller w_pkg.
ClanTuneResult tune_clan_weights(const ArtifactSet& artifacts, const ClanRecommender& clan,
                                 const std::vector<std::string>& query_ids, double grid_step = 0.1,
                                 std::size_t k = 10);

}  // namespace seir
