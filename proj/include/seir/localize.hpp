#pragma once

#include "seir/corpus_io.hpp"
#include "seir/extraction.hpp"
#include "seir/metrics.hpp"
#include "seir/model_config.hpp"
#include "seir/ranking.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seir {

class EmbeddingTable;

enum class LocalizerTool { vsm_lr, bm25_lr, single_model };

std::string_view to_string(LocalizerTool tool);
std::optional<LocalizerTool> parse_localizer_tool(std::string_view name);

constexpr std::size_t kFeatureCount = 6;

/// f1 source code, f2 API description, f3 collaborative filter, f4 class name,
/// f5 bug-fix recency, f6 bug-fix frequency.
using FeatureArray = std::array<double, kFeatureCount>;

struct LocalizerWeights {
    FeatureArray w{};

    /// Throws ConfigError unless every weight is finite and >= 0 and one is > 0.
    void validate() const;
    static LocalizerWeights only(std::size_t feature);
    bool operator==(const LocalizerWeights&) const = default;
};

/// Published optimal weights for `project` (birt, eclipse-ui, jdt, swt).
std::optional<LocalizerWeights> preset_weights(LocalizerTool tool, std::string_view project);

/// Calendar months from `earlier` to `later`, counting only completed months.
int whole_months_between(Timestamp earlier, Timestamp later);

/// Fix history indexed by file. Only reports strictly earlier than the query
/// time are ever returned.
class BugHistory {
  public:
    explicit BugHistory(const std::vector<BugReport>& reports);

    /// Reports whose fix touched `file` and whose report_time < `before`,
    /// oldest first.
    std::vector<const BugReport*> prior_fixes(const std::string& file, Timestamp before) const;
    std::size_t fix_count(const std::string& file, Timestamp before) const;
    std::optional<Timestamp> last_fix(const std::string& file, Timestamp before) const;

  private:
    std::vector<BugReport> m_reports;
    std::map<std::string, std::vector<std::size_t>> m_by_file;
};

/// Length of the longest declared class name that occurs as a whole
/// identifier in `report_text`; 0 if none does.
double class_name_feature(std::string_view report_text, const std::vector<std::string>& declared_classes);

struct MetaFeatures {
    double class_name = 0.0;
    double recency = 0.0;
    double frequency = 0.0;
};

MetaFeatures score_meta_features(const BugReport& report, const std::string& file,
                                 const std::vector<std::string>& declared_classes, const BugHistory& history);

struct ReportFeatures {
    std::string report_id;
    std::vector<std::string> files;  // ascending path
    std::vector<FeatureArray> raw;
    std::vector<FeatureArray> normalized;
    std::set<std::string> relevant;
};

/// Per-feature min-max scaling across the report's candidate files. Constant
/// features map to 0; non-finite raw values map to 0.
void normalize_features(ReportFeatures& features);

/// Weighted sum of normalized features.
double composite_score(const FeatureArray& normalized, const LocalizerWeights& weights);

struct LocalizerSetup {
    LocalizerTool tool = LocalizerTool::bm25_lr;
    /// Similarity model for f1-f3 (f1 only for the single-model tool).
    ModelConfig model = ModelConfig::for_task(Task::bug_localization, ModelKind::bm25);
    const EmbeddingTable* embeddings = nullptr;

    static LocalizerSetup for_tool(LocalizerTool tool, ModelKind single_model = ModelKind::vsm);
};

class Localizer {
  public:
    Localizer(const BugDataset& dataset, const PipelineConfig& pipeline, LocalizerSetup setup);
    ~Localizer();
    Localizer(const Localizer&) = delete;
    Localizer& operator=(const Localizer&) = delete;

    const LocalizerSetup& setup() const { return m_setup; }
    const BugHistory& history() const { return m_history; }

    /// Raw and normalized features of every snapshot file. Throws DataError
    /// for an empty query or an empty snapshot.
    ReportFeatures features(const BugReport& report) const;

  private:
    struct FileInfo;
    struct Space;

    const FileInfo& file_info(const std::string& path) const;
    const Space& space(const std::vector<std::string>& files, DocumentKind kind) const;
    std::vector<double> collaborative_scores(const BugReport& report, const std::vector<std::string>& files,
                                             const std::vector<std::string>& query) const;

    const BugDataset& m_dataset;
    PipelineConfig m_pipeline;
    LocalizerSetup m_setup;
    BugHistory m_history;
    std::map<std::string, std::vector<std::string>> m_report_tokens;
    mutable std::map<std::string, std::unique_ptr<FileInfo>> m_files;
    mutable std::map<std::string, std::unique_ptr<Space>> m_spaces;
};

/// The `n` most recent reports by report_time (all of them if fewer).
std::vector<const BugReport*> latest_reports(const BugDataset& dataset, std::size_t n);

struct LocalizationOptions {
    std::size_t k = 10;
    std::size_t latest = 100;
};

/// Features for the evaluated reports, computed once and reused across
/// weight vectors.
struct PreparedLocalization {
    LocalizerTool tool = LocalizerTool::bm25_lr;
    std::size_t k = 10;
    std::vector<ReportFeatures> reports;
    std::vector<ExcludedQuery> excluded;
};

PreparedLocalization prepare_localization(const Localizer& localizer, const BugDataset& dataset,
                                          const LocalizationOptions& options = {});

/// Composite ranking for the LR tools; raw f1 ranking for the single-model tool.
RankedList rank_files(const ReportFeatures& features, LocalizerTool tool, const LocalizerWeights& weights);

/// MAP@k / MRR without materializing ranked lists. Agrees exactly with
/// run_localization.
EvalReport evaluate_weights(const PreparedLocalization& prepared, const LocalizerWeights& weights);

struct LocalizationRow {
    std::string report_id;
    std::string file;
    FeatureArray raw{};
    FeatureArray normalized{};
    double score = 0.0;
    std::size_t rank = 0;
    bool relevant = false;
};

struct LocalizationResult {
    EvalReport report;
    std::vector<LocalizationRow> rows;
};

LocalizationResult run_localization(const PreparedLocalization& prepared, const LocalizerWeights& weights);

std::string localization_rows_csv(const std::vector<LocalizationRow>& rows, const std::string& manifest_hash);

struct WeightRange {
    double lo = 0.0;
    double hi = 10.0;
};

struct LocalizerTuneOptions {
    double step = 0.05;
    std::array<WeightRange, kFeatureCount> ranges{
        WeightRange{0, 10}, WeightRange{0, 10}, WeightRange{0, 10}, WeightRange{0, 10}, WeightRange{0, 2}, WeightRange{0, 2}};
    int max_rounds = 20;
};

struct LocalizerTracePoint {
    int round = 0;
    std::size_t coordinate = 0;
    LocalizerWeights weights;
    double map = 0.0;
    double mrr = 0.0;
};

struct LocalizerTuneResult {
    LocalizerWeights best;
    double map = 0.0;
    double mrr = 0.0;
    int rounds = 0;
    std::vector<LocalizerTracePoint> trace;
};

/// Coordinate ascent over the weight grid starting from all ones. Each
/// coordinate sweep keeps the best (MAP@k, MRR); ties go to the
/// lexicographically smaller weight vector. Stops after a round without
/// strict improvement.
LocalizerTuneResult tune_localizer_weights(const PreparedLocalization& prepared,
                                           const LocalizerTuneOptions& options = {});

}  // namespace seir
