#include "seir/localize.hpp"

#include "seir/error.hpp"
#include "seir/hashing.hpp"
#include "seir/index.hpp"
#include "seir/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>

namespace seir {

std::string_view to_string(LocalizerTool tool)
{
    switch (tool) {
    case LocalizerTool::vsm_lr:
        return "vsm-lr";
    case LocalizerTool::bm25_lr:
        return "bm25-lr";
    case LocalizerTool::single_model:
        return "single-model";
    }
    return "?";
}

std::optional<LocalizerTool> parse_localizer_tool(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "vsm-lr" || s == "lr") {
        return LocalizerTool::vsm_lr;
    }
    if (s == "bm25-lr") {
        return LocalizerTool::bm25_lr;
    }
    if (s == "single-model" || s == "single") {
        return LocalizerTool::single_model;
    }
    return std::nullopt;
}

void LocalizerWeights::validate() const
{
    bool any = false;
    for (double x : w) {
        if (!std::isfinite(x) || x < 0.0) {
            throw ConfigError("localizer weights must be finite and non-negative");
        }
        any = any || x > 0.0;
    }
    if (!any) {
        throw ConfigError("at least one localizer weight must be positive");
    }
}

LocalizerWeights LocalizerWeights::only(std::size_t feature)
{
    if (feature >= kFeatureCount) {
        throw ConfigError("feature index out of range");
    }
    LocalizerWeights lw;
    lw.w[feature] = 1.0;
    return lw;
}

std::optional<LocalizerWeights> preset_weights(LocalizerTool tool, std::string_view project)
{
    struct Preset {
        LocalizerTool tool;
        std::string_view project;
        FeatureArray w;
    };
    static const Preset presets[] = {
        {LocalizerTool::vsm_lr, "birt", {5, 0.5, 5.5, 5.5, 1.5, 0.55}},
        {LocalizerTool::vsm_lr, "eclipse-ui", {9.5, 0.95, 4.5, 6.5, 1.05, 0.75}},
        {LocalizerTool::vsm_lr, "jdt", {4.5, 2.6, 5.5, 6.5, 1.05, 0.55}},
        {LocalizerTool::vsm_lr, "swt", {4.2, 3.5, 4.7, 7.9, 0.05, 0.95}},
        {LocalizerTool::bm25_lr, "birt", {2.4, 0.05, 3.5, 2.5, 0.6, 0}},
        {LocalizerTool::bm25_lr, "eclipse-ui", {3.4, 0.05, 3, 2.5, 0.5, 0}},
        {LocalizerTool::bm25_lr, "jdt", {1.2, 0.25, 2.5, 1.2, 0.3, 0}},
        {LocalizerTool::bm25_lr, "swt", {4.4, 0, 3.5, 2.5, 0.3, 0.5}},
    };
    std::string p(project);
    std::transform(p.begin(), p.end(), p.begin(), [](unsigned char c) { return std::tolower(c); });
    for (const auto& preset : presets) {
        if (preset.tool == tool && preset.project == p) {
            return LocalizerWeights{preset.w};
        }
    }
    return std::nullopt;
}

int whole_months_between(Timestamp earlier, Timestamp later)
{
    using namespace std::chrono;
    if (later < earlier) {
        throw DataError("fix history timestamp after the report time");
    }
    auto d1 = floor<days>(earlier);
    auto d2 = floor<days>(later);
    year_month_day a{d1};
    year_month_day b{d2};
    int months = (static_cast<int>(b.year()) - static_cast<int>(a.year())) * 12
                 + (static_cast<int>(static_cast<unsigned>(b.month())) - static_cast<int>(static_cast<unsigned>(a.month())));
    auto pos_a = std::make_tuple(static_cast<unsigned>(a.day()), earlier - d1);
    auto pos_b = std::make_tuple(static_cast<unsigned>(b.day()), later - d2);
    if (pos_b < pos_a) {
        --months;
    }
    return months;
}

BugHistory::BugHistory(const std::vector<BugReport>& reports) : m_reports(reports)
{
    std::stable_sort(m_reports.begin(), m_reports.end(), [](const BugReport& a, const BugReport& b) {
        return std::tie(a.report_time, a.report_id) < std::tie(b.report_time, b.report_id);
    });
    for (std::size_t i = 0; i < m_reports.size(); ++i) {
        for (const auto& f : m_reports[i].fixed_files) {
            m_by_file[f].push_back(i);
        }
    }
}

std::vector<const BugReport*> BugHistory::prior_fixes(const std::string& file, Timestamp before) const
{
    std::vector<const BugReport*> out;
    auto it = m_by_file.find(file);
    if (it == m_by_file.end()) {
        return out;
    }
    for (auto i : it->second) {
        if (m_reports[i].report_time >= before) {
            break;
        }
        out.push_back(&m_reports[i]);
    }
    return out;
}

std::size_t BugHistory::fix_count(const std::string& file, Timestamp before) const
{
    return prior_fixes(file, before).size();
}

std::optional<Timestamp> BugHistory::last_fix(const std::string& file, Timestamp before) const
{
    auto prior = prior_fixes(file, before);
    if (prior.empty()) {
        return std::nullopt;
    }
    return prior.back()->report_time;
}

double class_name_feature(std::string_view report_text, const std::vector<std::string>& declared_classes)
{
    auto words = tokenize(report_text);
    std::set<std::string> present(words.begin(), words.end());
    std::size_t best = 0;
    for (const auto& c : declared_classes) {
        if (c.size() > best && present.contains(c)) {
            best = c.size();
        }
    }
    return static_cast<double>(best);
}

MetaFeatures score_meta_features(const BugReport& report, const std::string& file,
                                 const std::vector<std::string>& declared_classes, const BugHistory& history)
{
    MetaFeatures m;
    m.class_name = class_name_feature(report.summary + "\n" + report.description, declared_classes);
    auto prior = history.prior_fixes(file, report.report_time);
    m.frequency = static_cast<double>(prior.size());
    if (!prior.empty()) {
        m.recency = 1.0 / (1.0 + whole_months_between(prior.back()->report_time, report.report_time));
    }
    return m;
}

void normalize_features(ReportFeatures& features)
{
    features.normalized.assign(features.raw.size(), FeatureArray{});
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& row : features.raw) {
            if (std::isfinite(row[f])) {
                lo = std::min(lo, row[f]);
                hi = std::max(hi, row[f]);
            }
        }
        if (!(hi > lo)) {
            continue;
        }
        for (std::size_t i = 0; i < features.raw.size(); ++i) {
            double x = features.raw[i][f];
            features.normalized[i][f] = std::isfinite(x) ? (x - lo) / (hi - lo) : 0.0;
        }
    }
}

double composite_score(const FeatureArray& normalized, const LocalizerWeights& weights)
{
    double s = 0.0;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        s += weights.w[f] * normalized[f];
    }
    return s;
}

LocalizerSetup LocalizerSetup::for_tool(LocalizerTool tool, ModelKind single_model)
{
    LocalizerSetup s;
    s.tool = tool;
    switch (tool) {
    case LocalizerTool::vsm_lr:
        s.model = ModelConfig::for_task(Task::bug_localization, ModelKind::vsm);
        break;
    case LocalizerTool::bm25_lr:
        s.model = ModelConfig::for_task(Task::bug_localization, ModelKind::bm25);
        break;
    case LocalizerTool::single_model:
        s.model = ModelConfig::for_task(Task::bug_localization, single_model);
        break;
    }
    return s;
}

struct Localizer::FileInfo {
    std::vector<std::string> declared_classes;
    std::vector<std::string> source_tokens;
    std::vector<std::string> api_tokens;
};

struct Localizer::Space {
    std::vector<Document> docs;
    std::unique_ptr<CorpusIndex> index;
    std::unique_ptr<SimilarityModel> model;
};

Localizer::Localizer(const BugDataset& dataset, const PipelineConfig& pipeline, LocalizerSetup setup)
    : m_dataset(dataset), m_pipeline(pipeline), m_setup(std::move(setup)), m_history(dataset.reports)
{
    m_setup.model.validate();
    if (m_setup.tool != LocalizerTool::single_model && m_setup.model.model != ModelKind::vsm
        && m_setup.model.model != ModelKind::bm25) {
        throw ConfigError("LR tools take VSM or BM25 similarity features");
    }
    for (const auto& r : dataset.reports) {
        std::vector<std::string> tokens;
        try {
            tokens = bug_query_document(r, m_pipeline).tokens;
        } catch (const DataError&) {
        }
        m_report_tokens[r.report_id] = std::move(tokens);
    }
}

Localizer::~Localizer() = default;

const Localizer::FileInfo& Localizer::file_info(const std::string& path) const
{
    if (auto it = m_files.find(path); it != m_files.end()) {
        return *it->second;
    }
    auto src = m_dataset.sources.find(path);
    if (src == m_dataset.sources.end()) {
        throw DataError("snapshot file " + path + " has no source text");
    }
    auto info = std::make_unique<FileInfo>();
    auto facts = extract_java_facts(src->second, path);
    info->declared_classes = facts.declared_classes;
    info->source_tokens = preprocess(src->second, DocumentKind::source_file, m_pipeline);
    std::set<std::string> apis(facts.api_classes.begin(), facts.api_classes.end());
    std::string text;
    for (const auto& a : apis) {
        if (auto c = m_dataset.catalog.find(a); c != m_dataset.catalog.end()) {
            text += c->second;
            text += '\n';
        }
    }
    info->api_tokens = preprocess(text, DocumentKind::api_description, m_pipeline);
    return *m_files.emplace(path, std::move(info)).first->second;
}

namespace {

std::unique_ptr<CorpusIndex> try_build(const std::vector<Document>& docs, int min_df)
{
    try {
        return std::make_unique<CorpusIndex>(CorpusIndex::build(docs, min_df));
    } catch (const DataError&) {
        // No term reaches min_df: the feature is uninformative for this query.
        return nullptr;
    }
}

std::vector<double> score_space(const std::vector<Document>& docs, const CorpusIndex* index,
                                const SimilarityModel* model, const std::vector<std::string>& query)
{
    std::vector<double> out(docs.size(), 0.0);
    if (index == nullptr || model == nullptr) {
        return out;
    }
    out = model->score_all(query);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (docs[i].tokens.empty()) {
            out[i] = 0.0;
        }
    }
    return out;
}

}  // namespace

const Localizer::Space& Localizer::space(const std::vector<std::string>& files, DocumentKind kind) const
{
    Sha256 key;
    key.field(to_string(kind));
    for (const auto& f : files) {
        key.field(f);
    }
    auto digest = key.hex_digest();
    if (auto it = m_spaces.find(digest); it != m_spaces.end()) {
        return *it->second;
    }
    auto sp = std::make_unique<Space>();
    for (const auto& f : files) {
        const auto& info = file_info(f);
        sp->docs.push_back(Document{f, kind, kind == DocumentKind::source_file ? info.source_tokens : info.api_tokens,
                                    false});
    }
    sp->index = try_build(sp->docs, m_setup.model.min_df);
    if (sp->index) {
        sp->model = make_model(m_setup.model, *sp->index, sp->docs, m_setup.embeddings);
    }
    return *m_spaces.emplace(digest, std::move(sp)).first->second;
}

std::vector<double> Localizer::collaborative_scores(const BugReport& report, const std::vector<std::string>& files,
                                                    const std::vector<std::string>& query) const
{
    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& f : files) {
        Document d{f, DocumentKind::bug_report, {}, false};
        for (const auto* prior : m_history.prior_fixes(f, report.report_time)) {
            const auto& t = m_report_tokens.at(prior->report_id);
            d.tokens.insert(d.tokens.end(), t.begin(), t.end());
        }
        docs.push_back(std::move(d));
    }
    auto index = try_build(docs, m_setup.model.min_df);
    if (!index) {
        return std::vector<double>(files.size(), 0.0);
    }
    auto model = make_model(m_setup.model, *index, docs, m_setup.embeddings);
    return score_space(docs, index.get(), model.get(), query);
}

ReportFeatures Localizer::features(const BugReport& report) const
{
    auto snapshot = m_dataset.snapshot_for(report);
    if (snapshot.empty()) {
        throw DataError("report " + report.report_id + " has an empty snapshot");
    }
    ReportFeatures rf;
    rf.report_id = report.report_id;
    rf.files.assign(snapshot.begin(), snapshot.end());
    auto query = bug_query_document(report, m_pipeline).tokens;
    rf.raw.assign(rf.files.size(), FeatureArray{});

    const auto& src = space(rf.files, DocumentKind::source_file);
    auto f1 = score_space(src.docs, src.index.get(), src.model.get(), query);
    for (std::size_t i = 0; i < rf.files.size(); ++i) {
        rf.raw[i][0] = f1[i];
    }
    if (m_setup.tool != LocalizerTool::single_model) {
        const auto& api = space(rf.files, DocumentKind::api_description);
        auto f2 = score_space(api.docs, api.index.get(), api.model.get(), query);
        auto f3 = collaborative_scores(report, rf.files, query);
        for (std::size_t i = 0; i < rf.files.size(); ++i) {
            auto meta = score_meta_features(report, rf.files[i], file_info(rf.files[i]).declared_classes, m_history);
            rf.raw[i][1] = f2[i];
            rf.raw[i][2] = f3[i];
            rf.raw[i][3] = meta.class_name;
            rf.raw[i][4] = meta.recency;
            rf.raw[i][5] = meta.frequency;
        }
    }
    normalize_features(rf);
    return rf;
}

std::vector<const BugReport*> latest_reports(const BugDataset& dataset, std::size_t n)
{
    std::vector<const BugReport*> all;
    for (const auto& r : dataset.reports) {
        all.push_back(&r);
    }
    std::stable_sort(all.begin(), all.end(), [](const BugReport* a, const BugReport* b) {
        return std::tie(a->report_time, a->report_id) < std::tie(b->report_time, b->report_id);
    });
    if (all.size() > n) {
        all.erase(all.begin(), all.end() - static_cast<std::ptrdiff_t>(n));
    }
    return all;
}

PreparedLocalization prepare_localization(const Localizer& localizer, const BugDataset& dataset,
                                          const LocalizationOptions& options)
{
    if (options.k == 0) {
        throw ConfigError("rank cutoff k must be at least 1");
    }
    if (dataset.reports.empty()) {
        throw DataError("bug dataset " + dataset.name + " has no reports");
    }
    PreparedLocalization prep;
    prep.tool = localizer.setup().tool;
    prep.k = options.k;
    for (const auto* r : latest_reports(dataset, options.latest)) {
        auto truth = bug_ground_truth(*r, dataset.snapshot_for(*r));
        if (truth.excluded()) {
            prep.excluded.push_back({r->report_id, truth.excluded_reason});
            continue;
        }
        if (r->summary.find_first_not_of(" \t\r\n") == std::string::npos
            && r->description.find_first_not_of(" \t\r\n") == std::string::npos) {
            prep.excluded.push_back({r->report_id, "empty summary and description"});
            continue;
        }
        auto rf = localizer.features(*r);
        rf.relevant = std::move(truth.relevant);
        prep.reports.push_back(std::move(rf));
    }
    return prep;
}

namespace {

std::vector<double> file_scores(const ReportFeatures& rf, LocalizerTool tool, const LocalizerWeights& weights)
{
    std::vector<double> s(rf.files.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        s[i] = tool == LocalizerTool::single_model ? rf.raw[i][0] : composite_score(rf.normalized[i], weights);
    }
    return s;
}

}  // namespace

RankedList rank_files(const ReportFeatures& features, LocalizerTool tool, const LocalizerWeights& weights)
{
    auto s = file_scores(features, tool, weights);
    std::vector<ScoredDoc> entries;
    entries.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        entries.push_back({features.files[i], s[i]});
    }
    return make_ranked_list(features.report_id, std::move(entries));
}

EvalReport evaluate_weights(const PreparedLocalization& prepared, const LocalizerWeights& weights)
{
    EvalReport report;
    report.k = prepared.k;
    report.excluded = prepared.excluded;
    for (const auto& rf : prepared.reports) {
        auto s = file_scores(rf, prepared.tool, weights);
        std::vector<std::size_t> ranks;
        for (std::size_t r = 0; r < rf.files.size(); ++r) {
            if (!rf.relevant.contains(rf.files[r])) {
                continue;
            }
            if (std::isnan(s[r])) {
                throw DataError("NaN score for " + rf.files[r] + " in report " + rf.report_id);
            }
            std::size_t rank = 1;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s[j] > s[r] || (s[j] == s[r] && j < r)) {
                    ++rank;
                }
            }
            ranks.push_back(rank);
        }
        std::sort(ranks.begin(), ranks.end());
        QueryEvaluation q;
        q.query_id = rf.report_id;
        q.relevant_count = rf.relevant.size();
        double sum = 0.0;
        std::size_t hits = 0;
        for (std::size_t i = 0; i < ranks.size() && ranks[i] <= prepared.k; ++i) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(ranks[i]);
        }
        q.avg_prec = sum / static_cast<double>(q.relevant_count);
        q.precision = static_cast<double>(hits) / static_cast<double>(prepared.k);
        q.recall = static_cast<double>(hits) / static_cast<double>(q.relevant_count);
        if (!ranks.empty()) {
            q.first_relevant_rank = ranks.front();
            q.reciprocal_rank = 1.0 / static_cast<double>(ranks.front());
        }
        report.queries.push_back(std::move(q));
    }
    aggregate(report);
    return report;
}

LocalizationResult run_localization(const PreparedLocalization& prepared, const LocalizerWeights& weights)
{
    if (prepared.tool != LocalizerTool::single_model) {
        weights.validate();
    }
    LocalizationResult result;
    result.report.k = prepared.k;
    result.report.excluded = prepared.excluded;
    for (const auto& rf : prepared.reports) {
        auto ranked = rank_files(rf, prepared.tool, weights);
        result.report.queries.push_back(evaluate_query(ranked, rf.relevant, prepared.k));
        for (std::size_t pos = 0; pos < ranked.entries.size(); ++pos) {
            const auto& e = ranked.entries[pos];
            auto i = static_cast<std::size_t>(std::lower_bound(rf.files.begin(), rf.files.end(), e.doc_id)
                                              - rf.files.begin());
            result.rows.push_back(
                {rf.report_id, e.doc_id, rf.raw[i], rf.normalized[i], e.score, pos + 1, rf.relevant.contains(e.doc_id)});
        }
    }
    aggregate(result.report);
    return result;
}

std::string localization_rows_csv(const std::vector<LocalizationRow>& rows, const std::string& manifest_hash)
{
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string out = "# manifest_hash=" + manifest_hash + "\n";
    out += "report_id,file,rank,relevant,score";
    for (int f = 1; f <= 6; ++f) {
        out += ",f" + std::to_string(f) + "_raw";
    }
    for (int f = 1; f <= 6; ++f) {
        out += ",f" + std::to_string(f) + "_norm";
    }
    out += "\n";
    for (const auto& r : rows) {
        out += r.report_id + "," + r.file + "," + std::to_string(r.rank) + "," + (r.relevant ? "1" : "0") + ","
               + fmt(r.score);
        for (double v : r.raw) {
            out += "," + fmt(v);
        }
        for (double v : r.normalized) {
            out += "," + fmt(v);
        }
        out += "\n";
    }
    return out;
}

namespace {

std::vector<double> grid_values(const WeightRange& range, double step)
{
    if (!(range.hi >= range.lo) || range.lo < 0.0) {
        throw ConfigError("weight range must satisfy 0 <= lo <= hi");
    }
    std::vector<double> out;
    auto n = static_cast<long>(std::floor((range.hi - range.lo) / step + 1e-9));
    for (long i = 0; i <= n; ++i) {
        out.push_back(std::round((range.lo + static_cast<double>(i) * step) * 1e9) / 1e9);
    }
    return out;
}

bool better(double map, double mrr, const LocalizerWeights& w, double best_map, double best_mrr,
            const LocalizerWeights& best_w)
{
    if (map != best_map) {
        return map > best_map;
    }
    if (mrr != best_mrr) {
        return mrr > best_mrr;
    }
    return w.w < best_w.w;
}

}  // namespace

LocalizerTuneResult tune_localizer_weights(const PreparedLocalization& prepared, const LocalizerTuneOptions& options)
{
    if (prepared.tool == LocalizerTool::single_model) {
        throw ConfigError("weight tuning applies to the LR tools only");
    }
    if (prepared.reports.empty()) {
        throw DataError("no evaluable reports for weight tuning");
    }
    if (!(options.step > 0.0)) {
        throw ConfigError("grid step must be positive");
    }
    std::array<std::vector<double>, kFeatureCount> grids;
    LocalizerWeights current;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
        grids[f] = grid_values(options.ranges[f], options.step);
        current.w[f] = std::clamp(1.0, options.ranges[f].lo, options.ranges[f].hi);
    }
    if (std::all_of(current.w.begin(), current.w.end(), [](double x) { return x == 0.0; })) {
        throw ConfigError("every weight range is {0}");
    }

    LocalizerTuneResult result;
    auto start = evaluate_weights(prepared, current);
    result.best = current;
    result.map = start.map;
    result.mrr = start.mrr;
    result.trace.push_back({0, kFeatureCount, current, start.map, start.mrr});

    for (int round = 1; round <= options.max_rounds; ++round) {
        double round_map = result.map;
        double round_mrr = result.mrr;
        for (std::size_t f = 0; f < kFeatureCount; ++f) {
            for (double v : grids[f]) {
                LocalizerWeights cand = result.best;
                cand.w[f] = v;
                if (std::all_of(cand.w.begin(), cand.w.end(), [](double x) { return x == 0.0; })) {
                    continue;
                }
                auto rep = evaluate_weights(prepared, cand);
                result.trace.push_back({round, f, cand, rep.map, rep.mrr});
                if (better(rep.map, rep.mrr, cand, result.map, result.mrr, result.best)) {
                    result.best = cand;
                    result.map = rep.map;
                    result.mrr = rep.mrr;
                }
            }
        }
        result.rounds = round;
        if (!(result.map > round_map || (result.map == round_map && result.mrr > round_mrr))) {
            break;
        }
    }
    return result;
}

}  // namespace seir
