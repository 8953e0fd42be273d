#include "seir/wmd.hpp"

#include "seir/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace seir {

EmbeddingTable::EmbeddingTable(std::size_t dim) : m_dim(dim)
{
    if (dim == 0) {
        throw ConfigError("embedding dimension must be positive");
    }
}

EmbeddingTable EmbeddingTable::load_word2vec_text(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot read embedding file " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(path.string() + ": missing header line");
    }
    std::istringstream header(line);
    long long count = -1;
    long long dim = -1;
    if (!(header >> count >> dim) || count < 0 || dim <= 0) {
        throw DataError(path.string() + ": header must be '<count> <dim>'");
    }
    EmbeddingTable table(static_cast<std::size_t>(dim));
    std::vector<double> values(static_cast<std::size_t>(dim));
    std::size_t line_no = 1;
    long long rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        std::string word;
        fields >> word;
        for (auto& v : values) {
            std::string text;
            if (!(fields >> text)) {
                throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected "
                                + std::to_string(dim) + " components");
            }
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size()) {
                throw DataError(path.string() + ":" + std::to_string(line_no) + ": bad number '" + text + "'");
            }
        }
        std::string extra;
        if (fields >> extra) {
            throw DataError(path.string() + ":" + std::to_string(line_no) + ": too many components");
        }
        table.add(word, values);
        ++rows;
    }
    if (rows != count) {
        throw DataError(path.string() + ": header announces " + std::to_string(count) + " vectors but file has "
                        + std::to_string(rows));
    }
    return table;
}

void EmbeddingTable::add(const std::string& word, std::span<const double> vector)
{
    if (vector.size() != m_dim) {
        throw ConfigError("embedding for '" + word + "' has dimension " + std::to_string(vector.size())
                          + ", table dimension is " + std::to_string(m_dim));
    }
    if (auto it = m_rows.find(word); it != m_rows.end()) {
        std::copy(vector.begin(), vector.end(), m_data.begin() + static_cast<std::ptrdiff_t>(it->second * m_dim));
        return;
    }
    m_rows.emplace(word, m_rows.size());
    m_data.insert(m_data.end(), vector.begin(), vector.end());
}

std::optional<std::size_t> EmbeddingTable::find(const std::string& word) const
{
    auto it = m_rows.find(word);
    if (it == m_rows.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::span<const double> EmbeddingTable::vector(std::size_t row) const
{
    return std::span<const double>(m_data).subspan(row * m_dim, m_dim);
}

double EmbeddingTable::distance(std::size_t row_a, std::size_t row_b) const
{
    auto a = vector(row_a);
    auto b = vector(row_b);
    double sum = 0.0;
    for (std::size_t i = 0; i < m_dim; ++i) {
        double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

namespace {

std::vector<std::size_t> distinct_rows(std::span<const std::string> tokens, const EmbeddingTable& table)
{
    std::set<std::size_t> rows;
    for (const auto& t : tokens) {
        if (auto row = table.find(t)) {
            rows.insert(*row);
        }
    }
    return {rows.begin(), rows.end()};
}

WmdResult relaxed_distance(std::span<const std::string> query_tokens, const std::vector<std::size_t>& doc_rows,
                           const EmbeddingTable& table)
{
    WmdResult result;
    for (const auto& token : query_tokens) {
        auto row = table.find(token);
        if (!row) {
            ++result.skipped_query_terms;
            continue;
        }
        ++result.embedded_query_terms;
        if (doc_rows.empty()) {
            continue;
        }
        double best = kUnreachableDistance;
        for (auto d : doc_rows) {
            best = std::min(best, table.distance(*row, d));
        }
        result.distance += best;
    }
    if (doc_rows.empty()) {
        result.distance = kUnreachableDistance;
    }
    return result;
}

}  // namespace

WmdResult wmd_distance(std::span<const std::string> query_tokens, std::span<const std::string> doc_tokens,
                       const EmbeddingTable& embeddings)
{
    if (embeddings.empty()) {
        throw ConfigError("WMD needs a non-empty embedding table");
    }
    return relaxed_distance(query_tokens, distinct_rows(doc_tokens, embeddings), embeddings);
}

WmdModel::WmdModel(std::span<const Document> docs, const EmbeddingTable& embeddings) : m_embeddings(embeddings)
{
    if (embeddings.empty()) {
        throw ConfigError("WMD needs a non-empty embedding table");
    }
    for (const auto& doc : docs) {
        m_doc_ids.push_back(doc.doc_id);
        m_doc_rows.push_back(distinct_rows(doc.tokens, embeddings));
    }
}

std::vector<double> WmdModel::score_all(std::span<const std::string> query_tokens) const
{
    std::vector<double> scores(m_doc_rows.size());
    for (std::size_t d = 0; d < m_doc_rows.size(); ++d) {
        scores[d] = -relaxed_distance(query_tokens, m_doc_rows[d], m_embeddings).distance;
    }
    return scores;
}

WmdResult WmdModel::query_coverage(std::span<const std::string> query_tokens) const
{
    return relaxed_distance(query_tokens, {}, m_embeddings);
}

}  // namespace seir
