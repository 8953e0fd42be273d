#include "seir/recommend.hpp"

#include "seir/error.hpp"
#include "seir/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace seir {

bool project_relevance(const ProjectRecord& query, const ProjectRecord& candidate)
{
    for (const auto& c : query.categories) {
        if (candidate.categories.contains(c)) {
            return true;
        }
    }
    return false;
}

ArtifactSet ArtifactSet::build(const std::vector<ProjectRecord>& projects, const PipelineConfig& config)
{
    ArtifactSet set;
    for (auto kind : kProjectArtifactKinds) {
        set.docs[kind].reserve(projects.size());
    }
    for (const auto& p : projects) {
        if (std::find(set.project_ids.begin(), set.project_ids.end(), p.project_id) != set.project_ids.end()) {
            throw DataError("duplicate project id " + p.project_id);
        }
        set.project_ids.push_back(p.project_id);
        set.categories.push_back(p.categories);
        auto facts = extract_project_facts(p.source_files);
        for (auto kind : kProjectArtifactKinds) {
            set.docs[kind].push_back(project_artifact_document(p, kind, facts, config));
        }
    }
    return set;
}

std::optional<std::size_t> ArtifactSet::position(const std::string& project_id) const
{
    auto it = std::find(project_ids.begin(), project_ids.end(), project_id);
    if (it == project_ids.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - project_ids.begin());
}

std::set<std::string> ArtifactSet::relevant_to(std::size_t pos) const
{
    std::set<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i == pos) {
            continue;
        }
        for (const auto& c : categories[pos]) {
            if (categories[i].contains(c)) {
                out.insert(project_ids[i]);
                break;
            }
        }
    }
    return out;
}

const std::vector<Document>& ArtifactSet::of(DocumentKind kind) const
{
    auto it = docs.find(kind);
    if (it == docs.end()) {
        throw ConfigError("no documents of kind " + std::string(to_string(kind)));
    }
    return it->second;
}

QuerySelection select_queries(const ArtifactSet& artifacts, std::size_t count, std::uint64_t seed)
{
    std::vector<std::size_t> pool;
    QuerySelection sel;
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
        if (artifacts.relevant_to(i).empty()) {
            sel.excluded.push_back({artifacts.project_ids[i], "no other project shares a category"});
        } else {
            pool.push_back(i);
        }
    }
    for (auto p : sample_without_replacement(pool.size(), count, seed)) {
        sel.query_ids.push_back(artifacts.project_ids[pool[p]]);
    }
    std::sort(sel.query_ids.begin(), sel.query_ids.end());
    return sel;
}

FeatureRanker::FeatureRanker(const ArtifactSet& artifacts, DocumentKind kind, const ModelConfig& model,
                             const EmbeddingTable* embeddings, const std::string& pipeline_fingerprint)
    : m_artifacts(artifacts), m_kind(kind)
{
    const auto& docs = artifacts.of(kind);
    std::string hash = pipeline_fingerprint.empty() ? std::string{} : index_config_hash(pipeline_fingerprint, kind, model.min_df);
    try {
        m_index = std::make_unique<CorpusIndex>(CorpusIndex::build(docs, model.min_df, hash));
    } catch (const DataError& e) {
        throw DataError(std::string(to_string(kind)) + " index: " + e.what());
    }
    m_model = make_model(model, *m_index, docs, embeddings);
}

std::vector<double> FeatureRanker::scores(std::size_t query) const
{
    return m_model->score_all(m_artifacts.of(m_kind)[query].tokens);
}

bool FeatureRanker::query_empty(std::size_t query) const
{
    return m_artifacts.of(m_kind)[query].tokens.empty();
}

RankedList rank_projects(const ArtifactSet& artifacts, std::size_t query, const std::vector<double>& scores)
{
    if (scores.size() != artifacts.size()) {
        throw DataError("score vector does not match the project set");
    }
    std::vector<ScoredDoc> entries;
    entries.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (i != query) {
            entries.push_back({artifacts.project_ids[i], scores[i]});
        }
    }
    if (entries.empty()) {
        throw DataError("query " + artifacts.project_ids[query] + " has no candidate projects");
    }
    return make_ranked_list(artifacts.project_ids[query], std::move(entries));
}

namespace {

std::size_t require_position(const ArtifactSet& artifacts, const std::string& id)
{
    auto pos = artifacts.position(id);
    if (!pos) {
        throw DataError("unknown query project " + id);
    }
    return *pos;
}

}  // namespace

EvalReport run_feature_experiment(const ArtifactSet& artifacts, DocumentKind feature, const ModelConfig& model,
                                  const std::vector<std::string>& query_ids, std::size_t k,
                                  const EmbeddingTable* embeddings)
{
    FeatureRanker ranker(artifacts, feature, model, embeddings);
    EvalReport report;
    report.k = k;
    for (const auto& id : query_ids) {
        auto pos = require_position(artifacts, id);
        auto relevant = artifacts.relevant_to(pos);
        if (relevant.empty()) {
            report.excluded.push_back({id, "no other project shares a category"});
            continue;
        }
        if (ranker.query_empty(pos)) {
            report.excluded.push_back({id, "empty " + std::string(to_string(feature)) + " document"});
            continue;
        }
        report.queries.push_back(evaluate_query(rank_projects(artifacts, pos, ranker.scores(pos)), relevant, k));
    }
    aggregate(report);
    return report;
}

double clan_score(double pkg_similarity, double api_similarity, const ClanWeights& weights)
{
    return weights.pkg * pkg_similarity + weights.api * api_similarity;
}

ClanRecommender::ClanRecommender(const ArtifactSet& artifacts, const ModelConfig& model,
                                 const std::string& pipeline_fingerprint)
    : m_artifacts(artifacts),
      m_pkg(artifacts, DocumentKind::import_package, model, nullptr, pipeline_fingerprint),
      m_api(artifacts, DocumentKind::api, model, nullptr, pipeline_fingerprint)
{
}

bool ClanRecommender::query_empty(std::size_t query) const
{
    return m_pkg.query_empty(query) && m_api.query_empty(query);
}

namespace {

std::vector<double> combine(const std::vector<double>& pkg, const std::vector<double>& api, const ClanWeights& w)
{
    std::vector<double> out(pkg.size());
    for (std::size_t i = 0; i < pkg.size(); ++i) {
        out[i] = clan_score(pkg[i], api[i], w);
    }
    return out;
}

struct ClanQuery {
    std::size_t pos;
    std::set<std::string> relevant;
    std::vector<double> pkg;
    std::vector<double> api;
};

std::vector<ClanQuery> prepare_clan_queries(const ArtifactSet& artifacts, const ClanRecommender& clan,
                                            const std::vector<std::string>& query_ids,
                                            std::vector<ExcludedQuery>& excluded)
{
    std::vector<ClanQuery> out;
    for (const auto& id : query_ids) {
        auto pos = require_position(artifacts, id);
        auto relevant = artifacts.relevant_to(pos);
        if (relevant.empty()) {
            excluded.push_back({id, "no other project shares a category"});
            continue;
        }
        if (clan.query_empty(pos)) {
            excluded.push_back({id, "empty import_package and api documents"});
            continue;
        }
        out.push_back({pos, std::move(relevant), clan.package_ranker().scores(pos), clan.api_ranker().scores(pos)});
    }
    return out;
}

EvalReport evaluate_clan(const ArtifactSet& artifacts, const std::vector<ClanQuery>& queries,
                         std::vector<ExcludedQuery> excluded, const ClanWeights& w, std::size_t k)
{
    EvalReport report;
    report.k = k;
    report.excluded = std::move(excluded);
    for (const auto& q : queries) {
        report.queries.push_back(evaluate_query(rank_projects(artifacts, q.pos, combine(q.pkg, q.api, w)), q.relevant, k));
    }
    aggregate(report);
    return report;
}

}  // namespace

RankedList ClanRecommender::rank(std::size_t query, const ClanWeights& weights) const
{
    return rank_projects(m_artifacts, query, combine(m_pkg.scores(query), m_api.scores(query), weights));
}

EvalReport run_clan_experiment(const ArtifactSet& artifacts, const ClanRecommender& clan, const ClanWeights& weights,
                               const std::vector<std::string>& query_ids, std::size_t k)
{
    std::vector<ExcludedQuery> excluded;
    auto queries = prepare_clan_queries(artifacts, clan, query_ids, excluded);
    return evaluate_clan(artifacts, queries, std::move(excluded), weights, k);
}

ClanTuneResult tune_clan_weights(const ArtifactSet& artifacts, const ClanRecommender& clan,
                                 const std::vector<std::string>& query_ids, double grid_step, std::size_t k)
{
    if (!(grid_step > 0.0) || grid_step > 1.0) {
        throw ConfigError("CLAN grid step must lie in (0, 1]");
    }
    auto steps = static_cast<long>(std::llround(1.0 / grid_step));
    if (std::abs(static_cast<double>(steps) * grid_step - 1.0) > 1e-9) {
        throw ConfigError("CLAN grid step must divide 1 evenly");
    }
    std::vector<ExcludedQuery> excluded;
    auto queries = prepare_clan_queries(artifacts, clan, query_ids, excluded);
    if (queries.empty()) {
        throw DataError("no evaluable queries for CLAN weight tuning");
    }

    ClanTuneResult result;
    bool have_best = false;
    for (long i = 0; i <= steps; ++i) {
        ClanWeights w{static_cast<double>(i) / static_cast<double>(steps),
                      static_cast<double>(steps - i) / static_cast<double>(steps)};
        auto report = evaluate_clan(artifacts, queries, excluded, w, k);
        result.trace.push_back({w, report.map, report.mrr});
        // Ascending w_pkg with strict improvement keeps the smaller weight on ties.
        if (!have_best || report.map > result.report.map
            || (report.map == result.report.map && report.mrr > result.report.mrr)) {
            result.best = w;
            result.report = std::move(report);
            have_best = true;
        }
    }
    return result;
}

}  // namespace seir
