#pragma once

#include "seir/document.hpp"
#include "seir/ranking.hpp"

#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace seir {

/// Word vectors of a single dimension d.
class EmbeddingTable {
  public:
    explicit EmbeddingTable(std::size_t dim);

    /// Text word2vec format: "<count> <dim>" header, then "word v1 ... vd".
    static EmbeddingTable load_word2vec_text(const std::filesystem::path& path);

    /// Adds or replaces a vector; throws ConfigError on a dimension mismatch.
    void add(const std::string& word, std::span<const double> vector);

    std::size_t dim() const { return m_dim; }
    std::size_t size() const { return m_rows.size(); }
    bool empty() const { return m_rows.empty(); }
    /// Row index of `word`, or nullopt on a miss.
    std::optional<std::size_t> find(const std::string& word) const;
    std::span<const double> vector(std::size_t row) const;

    double distance(std::size_t row_a, std::size_t row_b) const;

  private:
    std::size_t m_dim;
    std::unordered_map<std::string, std::size_t> m_rows;
    std::vector<double> m_data;
};

inline constexpr double kUnreachableDistance = std::numeric_limits<double>::infinity();

struct WmdResult {
    double distance = 0.0;
    /// Query tokens (with multiplicity) that have no embedding.
    std::size_t skipped_query_terms = 0;
    std::size_t embedded_query_terms = 0;
};

/// Relaxed word mover's distance: for every query token with an embedding,
/// the Euclidean distance to the nearest embedded document token, summed.
/// A document without any embedded token is at kUnreachableDistance.
/// Throws ConfigError when the table is empty.
WmdResult wmd_distance(std::span<const std::string> query_tokens, std::span<const std::string> doc_tokens,
                       const EmbeddingTable& embeddings);

/// Ranks by ascending distance, reported as score = -distance.
class WmdModel final : public SimilarityModel {
  public:
    WmdModel(std::span<const Document> docs, const EmbeddingTable& embeddings);

    ModelKind kind() const override { return ModelKind::wmd; }
    std::size_t doc_count() const override { return m_doc_ids.size(); }
    const std::string& doc_id(std::size_t doc) const override { return m_doc_ids[doc]; }
    std::vector<double> score_all(std::span<const std::string> query_tokens) const override;

    /// Embedding coverage of a query against this model's table.
    WmdResult query_coverage(std::span<const std::string> query_tokens) const;

  private:
    const EmbeddingTable& m_embeddings;
    std::vector<std::string> m_doc_ids;
    std::vector<std::vector<std::size_t>> m_doc_rows;  // distinct embedded terms per document
};

}  // namespace seir
