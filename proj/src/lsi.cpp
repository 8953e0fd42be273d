#include "seir/lsi.hpp"

#include "seir/error.hpp"

#include <Eigen/Sparse>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace seir {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Eigen::SparseMatrix<double> tfidf_matrix(const CorpusIndex& index)
{
    std::vector<Eigen::Triplet<double>> cells;
    for (std::size_t d = 0; d < index.n_docs(); ++d) {
        auto vec = index.tfidf_vector(d);
        for (const auto& [term, w] : vec.entries()) {
            cells.emplace_back(static_cast<int>(term), static_cast<int>(d), w);
        }
    }
    Eigen::SparseMatrix<double> a(static_cast<int>(index.vocab_size()), static_cast<int>(index.n_docs()));
    a.setFromTriplets(cells.begin(), cells.end());
    return a;
}

struct Factors {
    MatrixXd u;
    VectorXd s;
    MatrixXd v;  // empty when not computed
};

Factors dense_svd(const Eigen::SparseMatrix<double>& a)
{
    MatrixXd dense(a);
    Eigen::BDCSVD<MatrixXd> svd(dense, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

/// Eigen-decomposition of the Gram matrix of the smaller side.
Factors gram_svd(const Eigen::SparseMatrix<double>& a)
{
    Factors f;
    if (a.cols() <= a.rows()) {
        MatrixXd gram = MatrixXd(a.transpose() * a);
        Eigen::SelfAdjointEigenSolver<MatrixXd> eig(gram);
        VectorXd lambda = eig.eigenvalues().reverse();
        f.v = eig.eigenvectors().rowwise().reverse();
        f.s = lambda.cwiseMax(0.0).cwiseSqrt();
        f.u = MatrixXd::Zero(a.rows(), f.s.size());
        for (Eigen::Index j = 0; j < f.s.size(); ++j) {
            if (f.s(j) > 0.0) {
                f.u.col(j) = (a * f.v.col(j)) / f.s(j);
            }
        }
    } else {
        MatrixXd gram = MatrixXd(a * a.transpose());
        Eigen::SelfAdjointEigenSolver<MatrixXd> eig(gram);
        VectorXd lambda = eig.eigenvalues().reverse();
        f.u = eig.eigenvectors().rowwise().reverse();
        f.s = lambda.cwiseMax(0.0).cwiseSqrt();
    }
    return f;
}

}  // namespace

LatentSpace lsi_fit(const CorpusIndex& index, int k, const LsiOptions& options)
{
    auto limit = std::min(index.n_docs(), index.vocab_size());
    if (k < 1 || static_cast<std::size_t>(k) > limit) {
        throw ConfigError("LSI dimension " + std::to_string(k) + " outside [1, " + std::to_string(limit)
                          + "] for this corpus");
    }
    auto a = tfidf_matrix(index);
    if (a.nonZeros() == 0) {
        throw DataError("LSI: tf-idf matrix is all zero (every term occurs in every document)");
    }
    bool dense = index.vocab_size() * index.n_docs() <= options.dense_cell_limit;
    Factors f = dense ? dense_svd(a) : gram_svd(a);

    const double s_max = f.s(0);
    const double rank_eps = dense ? static_cast<double>(std::max(a.rows(), a.cols()))
                                        * std::numeric_limits<double>::epsilon()
                                  : 1e-7;
    Eigen::Index rank = 0;
    while (rank < f.s.size() && f.s(rank) > s_max * rank_eps) {
        ++rank;
    }
    const Eigen::Index kept = std::min<Eigen::Index>(k, rank);

    LatentSpace space;
    space.requested_dim = k;
    space.singular_values = f.s.head(kept);
    space.term_basis = f.u.leftCols(kept);

    // Canonical signs: the largest-magnitude entry of each basis column is positive.
    for (Eigen::Index j = 0; j < kept; ++j) {
        Eigen::Index arg = 0;
        space.term_basis.col(j).cwiseAbs().maxCoeff(&arg);
        if (space.term_basis(arg, j) < 0.0) {
            space.term_basis.col(j) *= -1.0;
            if (f.v.size() > 0) {
                f.v.col(j) *= -1.0;
            }
        }
    }
    if (f.v.size() > 0) {
        space.doc_vectors = f.v.leftCols(kept);
    } else {
        MatrixXd projected = MatrixXd(a.transpose() * space.term_basis);
        space.doc_vectors = projected * space.singular_values.cwiseInverse().asDiagonal();
    }

    const double tie_gap = options.tie_tolerance * s_max;
    for (Eigen::Index j = 0; j + 1 < kept; ++j) {
        if (f.s(j) - f.s(j + 1) <= tie_gap) {
            space.tied_components.push_back(static_cast<std::size_t>(j));
        }
    }
    space.truncation_splits_tie = kept < f.s.size() && f.s(kept) > s_max * rank_eps
                                  && f.s(kept - 1) - f.s(kept) <= tie_gap;
    return space;
}

VectorXd lsi_project(const SparseVector& query, const LatentSpace& space)
{
    VectorXd out = VectorXd::Zero(static_cast<Eigen::Index>(space.dim()));
    for (const auto& [term, w] : query.entries()) {
        if (static_cast<Eigen::Index>(term) < space.term_basis.rows()) {
            out += w * space.term_basis.row(term).transpose();
        }
    }
    return out.cwiseQuotient(space.singular_values);
}

double lsi_similarity(const VectorXd& a, const VectorXd& b, const LatentSpace& space)
{
    VectorXd sa = a.cwiseProduct(space.singular_values);
    VectorXd sb = b.cwiseProduct(space.singular_values);
    double na = sa.norm();
    double nb = sb.norm();
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return sa.dot(sb) / (na * nb);
}

LsiModel::LsiModel(const CorpusIndex& index, LatentSpace space) : m_index(index), m_space(std::move(space))
{
    if (static_cast<std::size_t>(m_space.doc_vectors.rows()) != index.n_docs()) {
        throw ConfigError("latent space was fitted on a different corpus");
    }
    // U^T d rather than the V rows: a document with a zero tf-idf vector stays
    // exactly zero instead of picking up rounding noise from the SVD.
    m_doc_latent = MatrixXd::Zero(static_cast<Eigen::Index>(index.n_docs()), static_cast<Eigen::Index>(m_space.dim()));
    for (std::size_t d = 0; d < index.n_docs(); ++d) {
        m_doc_latent.row(static_cast<Eigen::Index>(d)) = latent(index.tfidf_vector(d)).transpose();
    }
}

VectorXd LsiModel::latent(const SparseVector& v) const
{
    VectorXd out = VectorXd::Zero(static_cast<Eigen::Index>(m_space.dim()));
    for (const auto& [term, w] : v.entries()) {
        if (static_cast<Eigen::Index>(term) < m_space.term_basis.rows()) {
            out += w * m_space.term_basis.row(term).transpose();
        }
    }
    return out;
}

std::vector<double> LsiModel::score_all(std::span<const std::string> query_tokens) const
{
    VectorXd q = latent(m_index.tfidf_vector(query_tokens));
    double nq = q.norm();
    std::vector<double> scores(m_index.n_docs(), 0.0);
    if (nq == 0.0) {
        return scores;
    }
    for (std::size_t d = 0; d < m_index.n_docs(); ++d) {
        auto row = m_doc_latent.row(static_cast<Eigen::Index>(d));
        double nd = row.norm();
        if (nd > 0.0) {
            scores[d] = row.dot(q) / (nq * nd);
        }
    }
    return scores;
}

}  // namespace seir
