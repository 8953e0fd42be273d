#pragma once

#include "seir/index.hpp"
#include "seir/ranking.hpp"

#include <cstdint>

namespace seir {

struct Bm25Params {
    double k1 = 1.5;
    double k2 = 1.5;
    double b = 0.75;
};

/// Non-negative smoothed IDF: ln(1 + (N - df + 0.5) / (df + 0.5)).
double bm25_idf(std::size_t n_docs, std::uint32_t df);

/// One query term's contribution:
///   idf * tf(k1+1) / (tf + k1(1 - b + b*|D|/avg|D|)) * qtf(k2+1) / (k2 + qtf).
/// Zero when tf or qtf is zero.
double bm25_term_score(double idf, double tf, double qtf, double doc_len, double avg_doc_len, const Bm25Params& params);

/// Okapi BM25 with the query-term-frequency factor, summed over distinct
/// in-vocabulary query terms.
double bm25_score(std::span<const std::string> query_tokens, std::size_t doc, const CorpusIndex& index,
                  const Bm25Params& params);

class Bm25Model final : public SimilarityModel {
  public:
    Bm25Model(const CorpusIndex& index, const Bm25Params& params);

    ModelKind kind() const override { return ModelKind::bm25; }
    std::size_t doc_count() const override { return m_index.n_docs(); }
    const std::string& doc_id(std::size_t doc) const override { return m_index.doc_id(doc); }
    std::vector<double> score_all(std::span<const std::string> query_tokens) const override;

  private:
    struct DocTf {
        std::uint32_t doc;
        std::uint32_t tf;
    };

    const CorpusIndex& m_index;
    Bm25Params m_params;
    std::vector<std::vector<DocTf>> m_inverted;  // term id -> documents containing it
};

}  // namespace seir
