#include "seir/vsm.hpp"

namespace seir {

double vsm_score(const SparseVector& query, const SparseVector& doc)
{
    double qn = query.norm();
    double dn = doc.norm();
    if (qn == 0.0 || dn == 0.0) {
        return 0.0;
    }
    return query.dot(doc) / (qn * dn);
}

VsmModel::VsmModel(const CorpusIndex& index) : m_index(index)
{
    m_vectors.reserve(index.n_docs());
    for (std::size_t d = 0; d < index.n_docs(); ++d) {
        m_vectors.push_back(index.tfidf_vector(d));
    }
}

std::vector<double> VsmModel::score_all(std::span<const std::string> query_tokens) const
{
    auto q = m_index.tfidf_vector(query_tokens);
    std::vector<double> scores(m_vectors.size(), 0.0);
    for (std::size_t d = 0; d < m_vectors.size(); ++d) {
        scores[d] = vsm_score(q, m_vectors[d]);
    }
    return scores;
}

}  // namespace seir
