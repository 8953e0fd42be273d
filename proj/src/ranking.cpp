#include "seir/ranking.hpp"

#include "seir/bm25.hpp"
#include "seir/error.hpp"
#include "seir/lsi.hpp"
#include "seir/vsm.hpp"
#include "seir/wmd.hpp"

#include <algorithm>
#include <cmath>

namespace seir {

std::size_t RankedList::rank_of(const std::string& doc_id) const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].doc_id == doc_id) {
            return i + 1;
        }
    }
    return 0;
}

RankedList make_ranked_list(std::string query_id, std::vector<ScoredDoc> entries)
{
    for (const auto& e : entries) {
        if (std::isnan(e.score)) {
            throw DataError("NaN score for candidate " + e.doc_id + " of query " + query_id);
        }
    }
    std::sort(entries.begin(), entries.end(), [](const ScoredDoc& a, const ScoredDoc& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.doc_id < b.doc_id;
    });
    return RankedList{std::move(query_id), std::move(entries)};
}

RankedList rank(const Document& query, const SimilarityModel& model)
{
    std::vector<std::size_t> all(model.doc_count());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    return rank(query, model, all);
}

RankedList rank(const Document& query, const SimilarityModel& model, std::span<const std::size_t> candidates)
{
    auto scores = model.score_all(query.tokens);
    std::vector<ScoredDoc> entries;
    entries.reserve(candidates.size());
    for (auto c : candidates) {
        if (c >= model.doc_count()) {
            throw DataError("candidate position out of range");
        }
        if (model.doc_id(c) == query.doc_id) {
            continue;
        }
        entries.push_back({model.doc_id(c), scores[c]});
    }
    if (entries.empty()) {
        throw DataError("query " + query.doc_id + " has no candidate documents");
    }
    return make_ranked_list(query.doc_id, std::move(entries));
}

std::unique_ptr<SimilarityModel> make_model(const ModelConfig& config, const CorpusIndex& index,
                                            std::span<const Document> docs, const EmbeddingTable* embeddings)
{
    config.validate();
    switch (config.model) {
    case ModelKind::vsm:
        return std::make_unique<VsmModel>(index);
    case ModelKind::bm25:
        return std::make_unique<Bm25Model>(index, Bm25Params{config.k1, config.k2, config.b});
    case ModelKind::lsi:
        return std::make_unique<LsiModel>(index, lsi_fit(index, config.lsi_dim));
    case ModelKind::wmd:
        if (embeddings == nullptr) {
            throw ConfigError("WMD requires an embedding table");
        }
        if (docs.size() != index.n_docs()) {
            throw ConfigError("WMD documents do not match the index");
        }
        return std::make_unique<WmdModel>(docs, *embeddings);
    }
    throw ConfigError("unknown model");
}

}  // namespace seir
