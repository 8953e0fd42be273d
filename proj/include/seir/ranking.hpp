#pragma once

#include "seir/document.hpp"
#include "seir/model_config.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace seir {

class CorpusIndex;
class EmbeddingTable;

struct ScoredDoc {
    std::string doc_id;
    double score;
};

/// Candidates in descending score order; ties by ascending doc_id.
struct RankedList {
    std::string query_id;
    std::vector<ScoredDoc> entries;

    /// 1-based rank of `doc_id`, or 0 when absent.
    std::size_t rank_of(const std::string& doc_id) const;
};

/// Sorts entries into RankedList order. NaN scores are rejected.
RankedList make_ranked_list(std::string query_id, std::vector<ScoredDoc> entries);

/// Uniform interface over the four similarity measures. Scores are "higher is
/// more similar"; distance-based models report the negated distance.
class SimilarityModel {
  public:
    virtual ~SimilarityModel() = default;

    virtual ModelKind kind() const = 0;
    virtual std::size_t doc_count() const = 0;
    virtual const std::string& doc_id(std::size_t doc) const = 0;
    /// One score per corpus document, in corpus order.
    virtual std::vector<double> score_all(std::span<const std::string> query_tokens) const = 0;
};

/// Ranks every corpus document except the query itself (matched by doc_id).
RankedList rank(const Document& query, const SimilarityModel& model);

/// Ranks the given corpus positions (the query itself is still excluded).
/// Throws DataError when no candidate remains.
RankedList rank(const Document& query, const SimilarityModel& model, std::span<const std::size_t> candidates);

/// Builds the model named by `config` over `index`. `docs` must be the
/// documents the index was built from, in the same order (WMD scores their raw
/// tokens). `embeddings` is required for WMD only.
std::unique_ptr<SimilarityModel> make_model(const ModelConfig& config, const CorpusIndex& index,
                                            std::span<const Document> docs, const EmbeddingTable* embeddings = nullptr);

}  // namespace seir
