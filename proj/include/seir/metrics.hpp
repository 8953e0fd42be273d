#pragma once

#include "seir/ranking.hpp"

#include "json.hpp"

#include <set>
#include <string>
#include <vector>

namespace seir {

/// |top-k ∩ relevant| / k. Throws DataError for an empty relevant set and
/// ConfigError for k == 0.
double precision_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k);

/// |top-k ∩ relevant| / |relevant|.
double recall_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k);

/// (sum over relevant documents i ranked within k of i / rank_i) / R, where i
/// counts retrieved relevant documents in rank order and R = |relevant|.
double avg_prec_at_k(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k);

/// 1 / rank of the first relevant document over the full list; 0 if none.
double reciprocal_rank(const RankedList& ranked, const std::set<std::string>& relevant);

/// (b - a) / a * 100. Throws DataError when a <= 0.
double pct_gain(double a, double b);

struct QueryEvaluation {
    std::string query_id;
    double avg_prec = 0.0;
    double reciprocal_rank = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    std::size_t relevant_count = 0;
    std::size_t first_relevant_rank = 0;  // 0 when no relevant document was ranked
};

struct ExcludedQuery {
    std::string query_id;
    std::string reason;
};

struct EvalReport {
    std::size_t k = 10;
    std::vector<QueryEvaluation> queries;
    std::vector<ExcludedQuery> excluded;
    double map = 0.0;
    double mrr = 0.0;
    double mean_precision = 0.0;
    double mean_recall = 0.0;

    std::size_t query_count() const { return queries.size(); }
};

QueryEvaluation evaluate_query(const RankedList& ranked, const std::set<std::string>& relevant, std::size_t k);

/// Mean of per-query average precision, summed in query order.
double map_at_k(const std::vector<QueryEvaluation>& queries);
double mrr(const std::vector<QueryEvaluation>& queries);

/// Fills the aggregate fields from `queries`.
void aggregate(EvalReport& report);

/// One CSV row per query, preceded by a "# manifest_hash=..." line.
std::string eval_report_csv(const EvalReport& report, const std::string& manifest_hash);
nlohmann::json eval_report_json(const EvalReport& report, const std::string& manifest_hash);

}  // namespace seir
