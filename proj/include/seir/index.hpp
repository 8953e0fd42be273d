#pragma once

#include "seir/document.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace seir {

using TermId = std::uint32_t;

/// Sparse weight vector sorted by term id; never stores explicit zeros.
class SparseVector {
  public:
    using Entry = std::pair<TermId, double>;

    SparseVector() = default;
    /// Entries must be sorted by term id with distinct ids; zeros are dropped.
    explicit SparseVector(std::vector<Entry> entries);

    std::span<const Entry> entries() const { return m_entries; }
    bool empty() const { return m_entries.empty(); }
    std::size_t size() const { return m_entries.size(); }

    double norm() const;
    double dot(const SparseVector& other) const;
    SparseVector scaled(double factor) const;

  private:
    std::vector<Entry> m_entries;
};

/// Term frequencies of one indexed document, sorted by term id.
struct Posting {
    TermId term;
    std::uint32_t tf;
};

/// Immutable corpus statistics shared by all similarity models.
class CorpusIndex {
  public:
    /// Builds the index. Terms with document frequency below `min_df` are
    /// dropped before document lengths are computed. Term ids follow
    /// lexicographic term order. `config_hash` is carried through persistence.
    static CorpusIndex build(std::span<const Document> docs, int min_df, std::string config_hash = {});

    std::size_t n_docs() const { return m_doc_ids.size(); }
    std::size_t vocab_size() const { return m_terms.size(); }
    int min_df() const { return m_min_df; }
    const std::string& config_hash() const { return m_config_hash; }

    const std::string& term(TermId id) const { return m_terms[id]; }
    std::optional<TermId> term_id(const std::string& term) const;
    std::uint32_t df(TermId id) const { return m_df[id]; }

    const std::string& doc_id(std::size_t doc) const { return m_doc_ids[doc]; }
    DocumentKind doc_kind(std::size_t doc) const { return m_doc_kinds[doc]; }
    std::optional<std::size_t> doc_index(const std::string& doc_id) const;
    std::span<const Posting> postings(std::size_t doc) const { return m_postings[doc]; }
    std::uint32_t doc_len(std::size_t doc) const { return m_doc_len[doc]; }
    double avg_doc_len() const { return m_avg_doc_len; }

    /// ln(N / df); 0 for out-of-vocabulary ids.
    double idf(TermId id) const;

    /// In-vocabulary term frequencies of arbitrary tokens, sorted by term id.
    std::vector<Posting> count_terms(std::span<const std::string> tokens) const;

    SparseVector tfidf_vector(std::size_t doc) const;
    /// Tokens are weighted against this index; out-of-vocabulary tokens vanish.
    SparseVector tfidf_vector(std::span<const std::string> tokens) const;

    /// Structured-text persistence with the embedded config hash.
    void save(const std::filesystem::path& path) const;
    /// Throws ConfigError if the stored hash differs from `expected_config_hash`.
    static CorpusIndex load(const std::filesystem::path& path, const std::string& expected_config_hash);

    bool operator==(const CorpusIndex& other) const;

  private:
    CorpusIndex() = default;
    void finalize();

    int m_min_df = 1;
    std::string m_config_hash;
    std::vector<std::string> m_terms;
    std::unordered_map<std::string, TermId> m_term_lookup;
    std::vector<std::uint32_t> m_df;
    std::vector<std::string> m_doc_ids;
    std::vector<DocumentKind> m_doc_kinds;
    std::unordered_map<std::string, std::size_t> m_doc_lookup;
    std::vector<std::vector<Posting>> m_postings;
    std::vector<std::uint32_t> m_doc_len;
    double m_avg_doc_len = 0.0;
};

/// Hash binding an index to the pipeline that produced its tokens, the kind
/// of documents it holds and its min-DF threshold.
std::string index_config_hash(const std::string& pipeline_fingerprint, DocumentKind kind, int min_df);

}  // namespace seir
