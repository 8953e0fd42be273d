#include "seir/index.hpp"

#include "seir/error.hpp"
#include "seir/hashing.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace seir {

using nlohmann::json;

namespace {

constexpr const char* kIndexFormat = "seir-corpus-index";
constexpr int kIndexVersion = 1;

}  // namespace

SparseVector::SparseVector(std::vector<Entry> entries)
{
    m_entries.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.second != 0.0) {
            m_entries.push_back(e);
        }
    }
}

double SparseVector::norm() const
{
    double sum = 0.0;
    for (const auto& [id, w] : m_entries) {
        sum += w * w;
    }
    return std::sqrt(sum);
}

double SparseVector::dot(const SparseVector& other) const
{
    double sum = 0.0;
    auto a = m_entries.begin();
    auto b = other.m_entries.begin();
    while (a != m_entries.end() && b != other.m_entries.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            sum += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return sum;
}

SparseVector SparseVector::scaled(double factor) const
{
    std::vector<Entry> out = m_entries;
    for (auto& e : out) {
        e.second *= factor;
    }
    return SparseVector(std::move(out));
}

CorpusIndex CorpusIndex::build(std::span<const Document> docs, int min_df, std::string config_hash)
{
    if (docs.empty()) {
        throw DataError("cannot index an empty document set");
    }
    if (min_df < 1) {
        throw ConfigError("min_df must be at least 1");
    }
    std::map<std::string, std::uint32_t> df;
    for (const auto& doc : docs) {
        std::set<std::string_view> seen(doc.tokens.begin(), doc.tokens.end());
        for (auto term : seen) {
            ++df[std::string(term)];
        }
    }
    CorpusIndex index;
    index.m_min_df = min_df;
    index.m_config_hash = std::move(config_hash);
    for (const auto& [term, count] : df) {
        if (count >= static_cast<std::uint32_t>(min_df)) {
            index.m_term_lookup.emplace(term, static_cast<TermId>(index.m_terms.size()));
            index.m_terms.push_back(term);
            index.m_df.push_back(count);
        }
    }
    if (index.m_terms.empty()) {
        throw DataError("empty vocabulary: no term reaches min_df " + std::to_string(min_df));
    }
    for (const auto& doc : docs) {
        if (index.m_doc_lookup.contains(doc.doc_id)) {
            throw DataError("duplicate document id " + doc.doc_id);
        }
        index.m_doc_lookup.emplace(doc.doc_id, index.m_doc_ids.size());
        index.m_doc_ids.push_back(doc.doc_id);
        index.m_doc_kinds.push_back(doc.kind);
        index.m_postings.push_back(index.count_terms(doc.tokens));
    }
    index.finalize();
    return index;
}

void CorpusIndex::finalize()
{
    m_doc_len.clear();
    for (const auto& postings : m_postings) {
        std::uint32_t len = 0;
        for (const auto& p : postings) {
            len += p.tf;
        }
        m_doc_len.push_back(len);
    }
    double total = std::accumulate(m_doc_len.begin(), m_doc_len.end(), 0.0);
    m_avg_doc_len = total / static_cast<double>(m_doc_len.size());
}

std::optional<TermId> CorpusIndex::term_id(const std::string& term) const
{
    auto it = m_term_lookup.find(term);
    if (it == m_term_lookup.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::size_t> CorpusIndex::doc_index(const std::string& doc_id) const
{
    auto it = m_doc_lookup.find(doc_id);
    if (it == m_doc_lookup.end()) {
        return std::nullopt;
    }
    return it->second;
}

double CorpusIndex::idf(TermId id) const
{
    if (id >= m_df.size()) {
        return 0.0;
    }
    return std::log(static_cast<double>(n_docs()) / static_cast<double>(m_df[id]));
}

std::vector<Posting> CorpusIndex::count_terms(std::span<const std::string> tokens) const
{
    std::map<TermId, std::uint32_t> counts;
    for (const auto& token : tokens) {
        if (auto id = term_id(token)) {
            ++counts[*id];
        }
    }
    std::vector<Posting> out;
    out.reserve(counts.size());
    for (const auto& [id, tf] : counts) {
        out.push_back({id, tf});
    }
    return out;
}

SparseVector CorpusIndex::tfidf_vector(std::size_t doc) const
{
    std::vector<SparseVector::Entry> entries;
    for (const auto& p : m_postings.at(doc)) {
        entries.emplace_back(p.term, p.tf * idf(p.term));
    }
    return SparseVector(std::move(entries));
}

SparseVector CorpusIndex::tfidf_vector(std::span<const std::string> tokens) const
{
    std::vector<SparseVector::Entry> entries;
    for (const auto& p : count_terms(tokens)) {
        entries.emplace_back(p.term, p.tf * idf(p.term));
    }
    return SparseVector(std::move(entries));
}

void CorpusIndex::save(const std::filesystem::path& path) const
{
    json j;
    j["format"] = kIndexFormat;
    j["version"] = kIndexVersion;
    j["config_hash"] = m_config_hash;
    j["min_df"] = m_min_df;
    j["idf"] = "ln(N/df)";
    j["terms"] = m_terms;
    j["df"] = m_df;
    json docs = json::array();
    for (std::size_t d = 0; d < n_docs(); ++d) {
        json postings = json::array();
        for (const auto& p : m_postings[d]) {
            postings.push_back({p.term, p.tf});
        }
        docs.push_back({{"id", m_doc_ids[d]}, {"kind", to_string(m_doc_kinds[d])}, {"postings", std::move(postings)}});
    }
    j["docs"] = std::move(docs);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write index " + path.string());
    }
    out << j.dump() << '\n';
}

CorpusIndex CorpusIndex::load(const std::filesystem::path& path, const std::string& expected_config_hash)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read index " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    if (j.value("format", "") != kIndexFormat || j.value("version", 0) != kIndexVersion) {
        throw DataError(path.string() + ": not a version " + std::to_string(kIndexVersion) + " corpus index");
    }
    auto stored_hash = j.value("config_hash", "");
    if (stored_hash != expected_config_hash) {
        throw ConfigError("index " + path.string() + " was built with config hash " + stored_hash
                          + " but the current configuration hashes to " + expected_config_hash);
    }
    CorpusIndex index;
    try {
        index.m_config_hash = stored_hash;
        index.m_min_df = j.at("min_df").get<int>();
        index.m_terms = j.at("terms").get<std::vector<std::string>>();
        index.m_df = j.at("df").get<std::vector<std::uint32_t>>();
        if (index.m_df.size() != index.m_terms.size() || index.m_terms.empty()) {
            throw DataError(path.string() + ": vocabulary and df tables disagree");
        }
        for (std::size_t t = 0; t < index.m_terms.size(); ++t) {
            index.m_term_lookup.emplace(index.m_terms[t], static_cast<TermId>(t));
        }
        for (const auto& d : j.at("docs")) {
            auto id = d.at("id").get<std::string>();
            auto kind = parse_document_kind(d.at("kind").get<std::string>());
            if (!kind) {
                throw DataError(path.string() + ": unknown document kind for " + id);
            }
            std::vector<Posting> postings;
            for (const auto& p : d.at("postings")) {
                auto term = p.at(0).get<TermId>();
                if (term >= index.m_terms.size()) {
                    throw DataError(path.string() + ": posting references unknown term");
                }
                postings.push_back({term, p.at(1).get<std::uint32_t>()});
            }
            index.m_doc_lookup.emplace(id, index.m_doc_ids.size());
            index.m_doc_ids.push_back(std::move(id));
            index.m_doc_kinds.push_back(*kind);
            index.m_postings.push_back(std::move(postings));
        }
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    if (index.m_doc_ids.empty()) {
        throw DataError(path.string() + ": index holds no documents");
    }
    index.finalize();
    return index;
}

bool CorpusIndex::operator==(const CorpusIndex& other) const
{
    auto same_postings = [&] {
        if (m_postings.size() != other.m_postings.size()) {
            return false;
        }
        for (std::size_t d = 0; d < m_postings.size(); ++d) {
            const auto& a = m_postings[d];
            const auto& b = other.m_postings[d];
            if (a.size() != b.size()) {
                return false;
            }
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].term != b[i].term || a[i].tf != b[i].tf) {
                    return false;
                }
            }
        }
        return true;
    };
    return m_min_df == other.m_min_df && m_config_hash == other.m_config_hash && m_terms == other.m_terms
           && m_df == other.m_df && m_doc_ids == other.m_doc_ids && m_doc_kinds == other.m_doc_kinds
           && m_doc_len == other.m_doc_len && m_avg_doc_len == other.m_avg_doc_len && same_postings();
}

std::string index_config_hash(const std::string& pipeline_fingerprint, DocumentKind kind, int min_df)
{
    Sha256 h;
    h.field("index/v1").field("idf=ln(N/df)").field(pipeline_fingerprint).field(to_string(kind));
    h.field(std::to_string(min_df));
    return h.hex_digest();
}

}  // namespace seir
