#include "seir/metrics.hpp"

#include "seir/error.hpp"

#include <algorithm>
#include <cstdio>

namespace seir {

namespace {

void check_args(const std::set<std::string>& relevant, std::size_t k)
{
    if (relevant.empty()) {
        throw DataError("empty relevant set; the query should have been excluded");
    }
    if (k == 0) {
        throw ConfigError("rank cutoff k must be at least 1");
    }
}

std::size_t hits_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k)
{
    std::size_t hits = 0;
    std::size_t n = std::min(k, ranked.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (relevant.contains(ranked.entries[i].doc_id)) {
            ++hits;
        }
    }
    return hits;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    return out + "\"";
}

}  // namespace

double precision_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k)
{
    check_args(relevant, k);
    return static_cast<double>(hits_at_k(ranked, relevant, k)) / static_cast<double>(k);
}

double recall_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k)
{
    check_args(relevant, k);
    return static_cast<double>(hits_at_k(ranked, relevant, k)) / static_cast<double>(relevant.size());
}

double avg_prec_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k)
{
    check_args(relevant, k);
    double sum = 0.0;
    std::size_t found = 0;
    std::size_t n = std::min(k, ranked.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (relevant.contains(ranked.entries[i].doc_id)) {
            ++found;
            sum += static_cast<double>(found) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(relevant.size());
}

double reciprocal_rank(const RankedList& ranked, const std::set<std::string>& relevant)
{
    if (relevant.empty()) {
        throw DataError("empty relevant set; the query should have been excluded");
    }
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
        if (relevant.contains(ranked.entries[i].doc_id)) {
            return 1.0 / static_cast<double>(i + 1);
        }
    }
    return 0.0;
}

double pct_gain(double a, double b)
{
    if (!(a > 0.0)) {
        throw DataError("percentage gain needs a positive baseline");
    }
    return (b - a) / a * 100.0;
}

QueryEvaluation evaluate_query(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k)
{
    QueryEvaluation q;
    q.query_id = ranked.query_id;
    q.avg_prec = avg_prec_at_k(ranked, relevant, k);
    q.reciprocal_rank = reciprocal_rank(ranked, relevant);
    q.precision = precision_at_k(ranked, relevant, k);
    q.recall = recall_at_k(ranked, relevant, k);
    q.relevant_count = relevant.size();
    for (std::size_t i = 0; i < ranked.entries.size(); ++i) {
        if (relevant.contains(ranked.entries[i].doc_id)) {
            q.first_relevant_rank = i + 1;
            break;
        }
    }
    return q;
}

double map_at_k(const std::vector<QueryEvaluation>& queries)
{
    if (queries.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto& q : queries) {
        sum += q.avg_prec;
    }
    return sum / static_cast<double>(queries.size());
}

double mrr(const std::vector<QueryEvaluation>& queries)
{
    if (queries.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto& q : queries) {
        sum += q.reciprocal_rank;
    }
    return sum / static_cast<double>(queries.size());
}

void aggregate(EvalReport& report)
{
    report.map = map_at_k(report.queries);
    report.mrr = mrr(report.queries);
    double p = 0.0;
    double r = 0.0;
    for (const auto& q : report.queries) {
        p += q.precision;
        r += q.recall;
    }
    auto n = static_cast<double>(report.queries.size());
    report.mean_precision = report.queries.empty() ? 0.0 : p / n;
    report.mean_recall = report.queries.empty() ? 0.0 : r / n;
}

std::string eval_report_csv(const EvalReport& report, const std::string& manifest_hash)
{
    std::string out = "# manifest_hash=" + manifest_hash + "\n";
    auto k = std::to_string(report.k);
    out += "query_id,relevant,first_relevant_rank,ap@" + k + ",rr,p@" + k + ",r@" + k + "\n";
    for (const auto& q : report.queries) {
        out += csv_field(q.query_id) + "," + std::to_string(q.relevant_count) + ","
               + std::to_string(q.first_relevant_rank) + "," + fmt(q.avg_prec) + "," + fmt(q.reciprocal_rank) + ","
               + fmt(q.precision) + "," + fmt(q.recall) + "\n";
    }
    return out;
}

nlohmann::json eval_report_json(const EvalReport& report, const std::string& manifest_hash)
{
    nlohmann::json j;
    j["manifest_hash"] = manifest_hash;
    j["k"] = report.k;
    j["query_count"] = report.query_count();
    j["map_at_k"] = report.map;
    j["mrr"] = report.mrr;
    j["mean_precision_at_k"] = report.mean_precision;
    j["mean_recall_at_k"] = report.mean_recall;
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& e : report.excluded) {
        excluded.push_back({{"query_id", e.query_id}, {"reason", e.reason}});
    }
    j["excluded"] = std::move(excluded);
    return j;
}

}  // namespace seir
