#pragma once

#include "seir/index.hpp"
#include "seir/ranking.hpp"

#include <Eigen/Dense>

#include <vector>

namespace seir {

struct LsiOptions {
    /// Above this many matrix cells the SVD is computed from the Gram matrix
    /// of the smaller side instead of a dense thin SVD.
    std::size_t dense_cell_limit = std::size_t{1} << 24;
    /// Singular values within this fraction of the largest are reported as ties.
    double tie_tolerance = 1e-9;
};

/// Rank-k truncated SVD of the tf-idf term-document matrix.
struct LatentSpace {
    Eigen::MatrixXd term_basis;       // |vocab| x k, orthonormal columns
    Eigen::VectorXd singular_values;  // k values, descending, all positive
    Eigen::MatrixXd doc_vectors;      // n_docs x k fold-in coordinates
    int requested_dim = 0;
    /// Index i is listed when singular values i and i+1 tie.
    std::vector<std::size_t> tied_components;
    /// True when the cut after component k separates tied singular values.
    bool truncation_splits_tie = false;

    std::size_t dim() const { return static_cast<std::size_t>(singular_values.size()); }
};

/// Fits the latent space. `k` must not exceed min(n_docs, vocab). Components
/// beyond the numerical rank of the matrix are dropped, so dim() may be
/// smaller than `k`. Throws ConfigError for an invalid `k` and DataError for
/// an all-zero matrix.
LatentSpace lsi_fit(const CorpusIndex& index, int k, const LsiOptions& options = {});

/// Fold-in: Sigma^-1 * U^T * q.
Eigen::VectorXd lsi_project(const SparseVector& query, const LatentSpace& space);

/// Cosine between two fold-in vectors after weighting each axis by its
/// singular value (equivalently, cosine of U^T q and U^T d). 0 for zero vectors.
double lsi_similarity(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const LatentSpace& space);

class LsiModel final : public SimilarityModel {
  public:
    LsiModel(const CorpusIndex& index, LatentSpace space);

    ModelKind kind() const override { return ModelKind::lsi; }
    std::size_t doc_count() const override { return m_index.n_docs(); }
    const std::string& doc_id(std::size_t doc) const override { return m_index.doc_id(doc); }
    std::vector<double> score_all(std::span<const std::string> query_tokens) const override;

    const LatentSpace& space() const { return m_space; }

  private:
    Eigen::VectorXd latent(const SparseVector& v) const;  // U^T v

    const CorpusIndex& m_index;
    LatentSpace m_space;
    Eigen::MatrixXd m_doc_latent;
};

}  // namespace seir
