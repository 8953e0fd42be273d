#include "seir/bm25.hpp"

#include <cmath>

namespace seir {

double bm25_idf(std::size_t n_docs, std::uint32_t df)
{
    double n = static_cast<double>(n_docs);
    double f = static_cast<double>(df);
    return std::log(1.0 + (n - f + 0.5) / (f + 0.5));
}

double bm25_term_score(double idf, double tf, double qtf, double doc_len, double avg_doc_len, const Bm25Params& p)
{
    if (tf <= 0.0 || qtf <= 0.0) {
        return 0.0;
    }
    double length_norm = avg_doc_len > 0.0 ? doc_len / avg_doc_len : 0.0;
    double tf_part = tf * (p.k1 + 1.0) / (tf + p.k1 * (1.0 - p.b + p.b * length_norm));
    double qtf_part = qtf * (p.k2 + 1.0) / (p.k2 + qtf);
    return idf * tf_part * qtf_part;
}

double bm25_score(std::span<const std::string> query_tokens, std::size_t doc, const CorpusIndex& index,
                  const Bm25Params& params)
{
    auto query = index.count_terms(query_tokens);
    auto postings = index.postings(doc);
    double score = 0.0;
    auto d = postings.begin();
    for (const auto& q : query) {
        while (d != postings.end() && d->term < q.term) {
            ++d;
        }
        if (d == postings.end()) {
            break;
        }
        if (d->term == q.term) {
            score += bm25_term_score(bm25_idf(index.n_docs(), index.df(q.term)), d->tf, q.tf, index.doc_len(doc),
                                     index.avg_doc_len(), params);
        }
    }
    return score;
}

Bm25Model::Bm25Model(const CorpusIndex& index, const Bm25Params& params)
    : m_index(index), m_params(params), m_inverted(index.vocab_size())
{
    for (std::size_t d = 0; d < index.n_docs(); ++d) {
        for (const auto& p : index.postings(d)) {
            m_inverted[p.term].push_back({static_cast<std::uint32_t>(d), p.tf});
        }
    }
}

std::vector<double> Bm25Model::score_all(std::span<const std::string> query_tokens) const
{
    std::vector<double> scores(m_index.n_docs(), 0.0);
    // Accumulate per term in ascending term-id order so every document sums
    // its contributions in the same order as bm25_score.
    for (const auto& q : m_index.count_terms(query_tokens)) {
        double idf = bm25_idf(m_index.n_docs(), m_index.df(q.term));
        for (const auto& [doc, tf] : m_inverted[q.term]) {
            scores[doc] += bm25_term_score(idf, tf, q.tf, m_index.doc_len(doc), m_index.avg_doc_len(), m_params);
        }
    }
    return scores;
}

}  // namespace seir
