#pragma once

#include "seir/index.hpp"
#include "seir/ranking.hpp"

namespace seir {

/// Cosine of two weight vectors; 0 when either has zero norm.
double vsm_score(const SparseVector& query, const SparseVector& doc);

/// tf-idf cosine ranking over a CorpusIndex.
class VsmModel final : public SimilarityModel {
  public:
    explicit VsmModel(const CorpusIndex& index);

    ModelKind kind() const override { return ModelKind::vsm; }
    std::size_t doc_count() const override { return m_index.n_docs(); }
    const std::string& doc_id(std::size_t doc) const override { return m_index.doc_id(doc); }
    std::vector<double> score_all(std::span<const std::string> query_tokens) const override;

  private:
    const CorpusIndex& m_index;
    std::vector<SparseVector> m_vectors;
};

}  // namespace seir
