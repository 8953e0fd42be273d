#include "seir/cli.hpp"

#include "seir/corpus_io.hpp"
#include "seir/error.hpp"
#include "seir/extraction.hpp"
#include "seir/hashing.hpp"
#include "seir/index.hpp"
#include "seir/localize.hpp"
#include "seir/manifest.hpp"
#include "seir/metrics.hpp"
#include "seir/recommend.hpp"
#include "seir/wmd.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace seir::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_file(const fs::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
}

std::string safe_name(const std::string& s)
{
    std::string out;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.' || c == '-'
                  || c == '_';
        out.push_back(ok ? c : '_');
    }
    return out;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json read_json(const fs::path& path)
{
    try {
        return json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

struct PipelineOptions {
    std::string stopword_dir;

    PipelineConfig load() const
    {
        return stopword_dir.empty() ? PipelineConfig::defaults() : PipelineConfig::from_directory(stopword_dir);
    }
};

struct ModelOptions {
    std::string model = "vsm";
    std::optional<double> k1, k2, b;
    std::optional<int> lsi_dim, min_df;
    std::string embeddings;

    ModelConfig resolve(Task task) const
    {
        auto kind = parse_model_kind(model);
        if (!kind) {
            throw ConfigError("unknown model '" + model + "' (vsm, bm25, lsi, wmd)");
        }
        return resolve(task, *kind);
    }

    ModelConfig resolve(Task task, ModelKind kind) const
    {
        auto cfg = ModelConfig::for_task(task, kind);
        if (k1) cfg.k1 = *k1;
        if (k2) cfg.k2 = *k2;
        if (b) cfg.b = *b;
        if (lsi_dim) cfg.lsi_dim = *lsi_dim;
        if (min_df) cfg.min_df = *min_df;
        if (!embeddings.empty()) cfg.embedding_path = embeddings;
        cfg.validate();
        return cfg;
    }
};

void add_model_options(CLI::App* app, ModelOptions& m)
{
    app->add_option("--model", m.model, "vsm, bm25, lsi or wmd");
    app->add_option("--k1", m.k1, "BM25 k1");
    app->add_option("--k2", m.k2, "BM25 k2");
    app->add_option("--b", m.b, "BM25 b");
    app->add_option("--lsi-dim", m.lsi_dim, "LSI dimension");
    app->add_option("--min-df", m.min_df, "minimum document frequency");
    app->add_option("--embeddings", m.embeddings, "word2vec text file (WMD)");
}

std::unique_ptr<EmbeddingTable> load_embeddings(ModelConfig& cfg)
{
    if (cfg.model != ModelKind::wmd) {
        return nullptr;
    }
    if (cfg.embedding_path.empty()) {
        throw ConfigError("WMD requires --embeddings");
    }
    auto table = std::make_unique<EmbeddingTable>(EmbeddingTable::load_word2vec_text(cfg.embedding_path));
    cfg.embedding_dim = static_cast<int>(table->dim());
    return table;
}

void write_outputs(const fs::path& out_dir, const RunManifest& manifest, const EvalReport& report, std::ostream& out)
{
    auto hash = manifest.hash();
    auto summary = eval_report_json(report, hash);
    if (out_dir.empty()) {
        out << summary.dump(2) << "\n";
        return;
    }
    write_file(out_dir / "manifest.json", manifest.to_json().dump(2) + "\n");
    write_file(out_dir / "results.csv", eval_report_csv(report, hash));
    write_file(out_dir / "summary.json", summary.dump(2) + "\n");
    out << summary.dump(2) << "\n";
}

DocumentKind require_kind(const std::string& name)
{
    auto kind = parse_document_kind(name);
    if (!kind) {
        throw ConfigError("unknown document kind '" + name + "'");
    }
    return *kind;
}

// extract ------------------------------------------------------------------

struct ExtractOptions {
    PipelineOptions pipeline;
    std::string corpus;
    std::string out;
};

int cmd_extract(const ExtractOptions& o, std::ostream& out, std::ostream& err)
{
    auto pipeline = o.pipeline.load();
    auto corpus = load_project_corpus(o.corpus);
    auto manifest = make_manifest("extract", json{{"corpus", o.corpus}}, pipeline, 0, corpus_fingerprint(corpus.projects));
    auto hash = manifest.hash();
    fs::path root(o.out);
    std::size_t written = 0;
    for (const auto& p : corpus.projects) {
        auto facts = extract_project_facts(p.source_files);
        for (auto kind : kProjectArtifactKinds) {
            auto doc = project_artifact_document(p, kind, facts, pipeline);
            json j{{"manifest_hash", hash},
                   {"doc_id", doc.doc_id},
                   {"kind", to_string(kind)},
                   {"missing", doc.missing},
                   {"tokens", doc.tokens}};
            write_file(root / safe_name(p.project_id) / (std::string(to_string(kind)) + ".json"), j.dump() + "\n");
            ++written;
        }
    }
    json errors = json::array();
    for (const auto& e : corpus.errors) {
        errors.push_back({{"location", e.location}, {"message", e.message}});
        err << json{{"error", "data"}, {"location", e.location}, {"message", e.message}}.dump() << "\n";
    }
    write_file(root / "errors.json", json{{"manifest_hash", hash}, {"errors", errors}}.dump(2) + "\n");
    write_file(root / "manifest.json", manifest.to_json().dump(2) + "\n");
    out << json{{"manifest_hash", hash}, {"documents", written}, {"errors", corpus.errors.size()}}.dump() << "\n";
    return kExitOk;
}

// index / query -------------------------------------------------------------

struct IndexOptions {
    PipelineOptions pipeline;
    std::string corpus;
    std::string kind = "description";
    int min_df = 2;
    std::string out;
};

int cmd_index(const IndexOptions& o, std::ostream& out)
{
    auto pipeline = o.pipeline.load();
    auto kind = require_kind(o.kind);
    auto corpus = load_project_corpus(o.corpus);
    auto artifacts = ArtifactSet::build(corpus.projects, pipeline);
    auto hash = index_config_hash(pipeline.fingerprint(), kind, o.min_df);
    auto index = CorpusIndex::build(artifacts.of(kind), o.min_df, hash);
    auto manifest = make_manifest("index", json{{"kind", o.kind}, {"min_df", o.min_df}, {"index_config_hash", hash}},
                                  pipeline, 0, corpus_fingerprint(corpus.projects));
    fs::path path(o.out);
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    index.save(path);
    write_file(path.string() + ".manifest.json", manifest.to_json().dump(2) + "\n");
    out << json{{"manifest_hash", manifest.hash()},
                {"index_config_hash", hash},
                {"documents", index.n_docs()},
                {"vocabulary", index.vocab_size()}}
               .dump()
        << "\n";
    return kExitOk;
}

struct QueryOptions {
    PipelineOptions pipeline;
    ModelOptions model;
    std::string corpus;
    std::string index;
    std::string kind = "description";
    std::string project;
    std::size_t top = 10;
};

int cmd_query(QueryOptions o, std::ostream& out)
{
    auto pipeline = o.pipeline.load();
    auto kind = require_kind(o.kind);
    auto cfg = o.model.resolve(Task::project_recommendation);
    auto embeddings = load_embeddings(cfg);
    auto corpus = load_project_corpus(o.corpus);
    auto artifacts = ArtifactSet::build(corpus.projects, pipeline);
    auto pos = artifacts.position(o.project);
    if (!pos) {
        throw DataError("unknown project " + o.project);
    }
    auto hash = index_config_hash(pipeline.fingerprint(), kind, cfg.min_df);
    const auto& docs = artifacts.of(kind);
    auto index = o.index.empty() ? CorpusIndex::build(docs, cfg.min_df, hash) : CorpusIndex::load(o.index, hash);
    if (index.n_docs() != docs.size()) {
        throw ConfigError("index does not cover the corpus it is queried against");
    }
    auto model = make_model(cfg, index, docs, embeddings.get());
    auto ranked = rank(docs[*pos], *model);
    auto manifest = make_manifest("query",
                                  json{{"kind", o.kind}, {"model", cfg.to_json()}, {"project", o.project}, {"top", o.top}},
                                  pipeline, 0, corpus_fingerprint(corpus.projects));
    out << "# manifest_hash=" << manifest.hash() << "\n";
    out << "rank,doc_id,score\n";
    for (std::size_t i = 0; i < ranked.entries.size() && i < o.top; ++i) {
        out << (i + 1) << "," << ranked.entries[i].doc_id << "," << fmt(ranked.entries[i].score) << "\n";
    }
    return kExitOk;
}

// evaluate ------------------------------------------------------------------

struct EvaluateOptions {
    std::string ranked;
    std::string truth;
    std::size_t k = 10;
    std::string out;
};

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out)
{
    auto ranked_json = read_json(o.ranked);
    auto truth_json = read_json(o.truth);
    EvalReport report;
    report.k = o.k;
    try {
        for (const auto& [qid, entries] : ranked_json.items()) {
            std::vector<ScoredDoc> docs;
            for (const auto& e : entries) {
                docs.push_back({e.at(0).get<std::string>(), e.at(1).get<double>()});
            }
            auto list = make_ranked_list(qid, std::move(docs));
            std::set<std::string> relevant;
            if (truth_json.contains(qid)) {
                for (const auto& d : truth_json[qid]) {
                    relevant.insert(d.get<std::string>());
                }
            }
            if (relevant.empty()) {
                report.excluded.push_back({qid, "empty ground truth"});
                continue;
            }
            report.queries.push_back(evaluate_query(list, relevant, o.k));
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed ranked list or ground truth: ") + e.what());
    }
    aggregate(report);
    RunManifest manifest;
    manifest.command = "evaluate";
    manifest.config = json{{"k", o.k}};
    manifest.corpus_fingerprint = sha256_hex(ranked_json.dump() + "\n" + truth_json.dump());
    write_outputs(o.out, manifest, report, out);
    return kExitOk;
}

// recommend -----------------------------------------------------------------

struct RecommendOptions {
    PipelineOptions pipeline;
    ModelOptions model;
    std::string corpus;
    std::string feature = "description";
    std::string composite;
    std::size_t k = 10;
    std::size_t queries = 200;
    std::uint64_t seed = 1;
    bool tune = false;
    std::vector<double> weights;
    double grid_step = 0.1;
    std::string out;
};

int cmd_recommend(RecommendOptions o, std::ostream& out, std::ostream& err)
{
    auto pipeline = o.pipeline.load();
    auto corpus = load_project_corpus(o.corpus);
    for (const auto& e : corpus.errors) {
        err << json{{"error", "data"}, {"location", e.location}, {"message", e.message}}.dump() << "\n";
    }
    auto artifacts = ArtifactSet::build(corpus.projects, pipeline);
    auto selection = select_queries(artifacts, o.queries, o.seed);
    auto cfg = o.model.resolve(Task::project_recommendation);
    auto embeddings = load_embeddings(cfg);

    json config{{"task", "project_recommendation"}, {"model", cfg.to_json()}, {"k", o.k}, {"queries", o.queries}};
    EvalReport report;
    std::string trace_csv;
    if (o.composite.empty()) {
        auto kind = require_kind(o.feature);
        config["feature"] = o.feature;
        report = run_feature_experiment(artifacts, kind, cfg, selection.query_ids, o.k, embeddings.get());
    } else {
        if (o.composite != "clan") {
            throw ConfigError("unknown composite '" + o.composite + "'");
        }
        if (cfg.model == ModelKind::wmd) {
            throw ConfigError("the CLAN composite takes LSI, VSM or BM25");
        }
        config["composite"] = "clan";
        ClanRecommender clan(artifacts, cfg, pipeline.fingerprint());
        if (o.tune) {
            config["grid_step"] = o.grid_step;
            auto tuned = tune_clan_weights(artifacts, clan, selection.query_ids, o.grid_step, o.k);
            report = std::move(tuned.report);
            config["weights"] = {tuned.best.pkg, tuned.best.api};
            trace_csv = "w_pkg,w_api,map,mrr\n";
            for (const auto& g : tuned.trace) {
                trace_csv += fmt(g.weights.pkg) + "," + fmt(g.weights.api) + "," + fmt(g.map) + "," + fmt(g.mrr) + "\n";
            }
        } else {
            ClanWeights w;
            if (!o.weights.empty()) {
                if (o.weights.size() != 2) {
                    throw ConfigError("CLAN takes two weights: w_pkg,w_api");
                }
                w = {o.weights[0], o.weights[1]};
            }
            config["weights"] = {w.pkg, w.api};
            report = run_clan_experiment(artifacts, clan, w, selection.query_ids, o.k);
        }
    }
    report.excluded.insert(report.excluded.begin(), selection.excluded.begin(), selection.excluded.end());
    auto manifest = make_manifest("recommend", config, pipeline, o.seed, corpus_fingerprint(corpus.projects));
    write_outputs(o.out, manifest, report, out);
    if (!trace_csv.empty() && !o.out.empty()) {
        write_file(fs::path(o.out) / "trace.csv", "# manifest_hash=" + manifest.hash() + "\n" + trace_csv);
    }
    return kExitOk;
}

// localize ------------------------------------------------------------------

struct LocalizeOptions {
    PipelineOptions pipeline;
    ModelOptions model;
    std::string dataset;
    std::string project;
    std::string tool = "bm25-lr";
    std::vector<double> weights;
    bool tune = false;
    double grid_step = 0.05;
    std::size_t k = 10;
    std::size_t latest = 100;
    std::string out;
};

int cmd_localize(LocalizeOptions o, std::ostream& out)
{
    auto pipeline = o.pipeline.load();
    auto tool = parse_localizer_tool(o.tool);
    if (!tool) {
        throw ConfigError("unknown tool '" + o.tool + "' (vsm-lr, bm25-lr, single-model)");
    }
    auto dataset = load_bug_dataset(o.dataset);
    std::string project = o.project.empty() ? dataset.name : o.project;

    LocalizerSetup setup = LocalizerSetup::for_tool(*tool);
    if (*tool == LocalizerTool::single_model) {
        setup.model = o.model.resolve(Task::bug_localization);
    } else {
        setup.model = o.model.resolve(Task::bug_localization, setup.model.model);
    }
    auto embeddings = load_embeddings(setup.model);
    setup.embeddings = embeddings.get();

    Localizer localizer(dataset, pipeline, setup);
    auto prepared = prepare_localization(localizer, dataset, {o.k, o.latest});

    json config{{"task", "bug_localization"}, {"tool", to_string(*tool)}, {"project", project},
                {"model", setup.model.to_json()}, {"k", o.k}, {"latest", o.latest},
                {"features", "f4 longest declared class name in report; f5 1/(1+whole months since last prior fix); "
                             "f6 prior fix count; min-max normalized per report"}};
    LocalizerWeights weights;
    std::string trace_csv;
    if (*tool != LocalizerTool::single_model) {
        if (o.tune) {
            LocalizerTuneOptions topt;
            topt.step = o.grid_step;
            auto tuned = tune_localizer_weights(prepared, topt);
            weights = tuned.best;
            json ranges = json::array();
            for (const auto& r : topt.ranges) {
                ranges.push_back({r.lo, r.hi});
            }
            config["grid"] = {{"step", topt.step}, {"ranges", ranges}, {"rounds", tuned.rounds}};
            trace_csv = "round,coordinate,w1,w2,w3,w4,w5,w6,map,mrr\n";
            for (const auto& t : tuned.trace) {
                trace_csv += std::to_string(t.round) + "," + std::to_string(t.coordinate);
                for (double w : t.weights.w) {
                    trace_csv += "," + fmt(w);
                }
                trace_csv += "," + fmt(t.map) + "," + fmt(t.mrr) + "\n";
            }
        } else if (!o.weights.empty()) {
            if (o.weights.size() != kFeatureCount) {
                throw ConfigError("LR tools take six weights w1..w6");
            }
            std::copy(o.weights.begin(), o.weights.end(), weights.w.begin());
        } else if (auto preset = preset_weights(*tool, project)) {
            weights = *preset;
        } else {
            throw ConfigError("no preset weights for project '" + project + "'; pass --weights or --tune");
        }
        weights.validate();
        config["weights"] = weights.w;
    }
    auto result = run_localization(prepared, weights);
    auto manifest = make_manifest("localize", config, pipeline, 0, corpus_fingerprint(dataset));
    write_outputs(o.out, manifest, result.report, out);
    if (!o.out.empty()) {
        write_file(fs::path(o.out) / "features.csv", localization_rows_csv(result.rows, manifest.hash()));
        if (!trace_csv.empty()) {
            write_file(fs::path(o.out) / "trace.csv", "# manifest_hash=" + manifest.hash() + "\n" + trace_csv);
        }
    }
    return kExitOk;
}

void add_recommend_options(CLI::App* app, RecommendOptions& o)
{
    app->add_option("--corpus", o.corpus, "project corpus directory")->required();
    app->add_option("--feature", o.feature, "artifact kind for single-feature runs");
    app->add_option("--k", o.k, "rank cutoff");
    app->add_option("--queries", o.queries, "number of sampled queries");
    app->add_option("--seed", o.seed, "sampling seed");
    app->add_option("--weights", o.weights, "CLAN weights w_pkg,w_api")->delimiter(',');
    app->add_option("--grid-step", o.grid_step, "CLAN tuning grid step");
    app->add_option("--out", o.out, "output directory");
    app->add_option("--stopwords", o.pipeline.stopword_dir, "directory with stopwords_en.txt and stopwords_java.txt");
    add_model_options(app, o.model);
}

void add_localize_options(CLI::App* app, LocalizeOptions& o)
{
    app->add_option("--dataset", o.dataset, "bug dataset directory")->required();
    app->add_option("--project", o.project, "project name for preset weights");
    app->add_option("--tool", o.tool, "vsm-lr, bm25-lr or single-model");
    app->add_option("--weights", o.weights, "w1..w6")->delimiter(',');
    app->add_option("--grid-step", o.grid_step, "tuning grid step");
    app->add_option("--k", o.k, "rank cutoff");
    app->add_option("--latest", o.latest, "evaluate the latest N reports");
    app->add_option("--out", o.out, "output directory");
    app->add_option("--stopwords", o.pipeline.stopword_dir, "directory with stopwords_en.txt and stopwords_java.txt");
    add_model_options(app, o.model);
}

int error_exit(std::ostream& err, const char* kind, const std::string& message, int code)
{
    err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Retrieval workbench for software-engineering artifacts", "workbench"};
    app.set_config("--config", "", "TOML experiment config");
    app.require_subcommand(1);

    ExtractOptions extract;
    auto* c_extract = app.add_subcommand("extract", "write the five artifact documents of every project");
    c_extract->add_option("--corpus", extract.corpus, "project corpus directory")->required();
    c_extract->add_option("--out", extract.out, "output directory")->required();
    c_extract->add_option("--stopwords", extract.pipeline.stopword_dir, "directory with stopwords_en.txt and stopwords_java.txt");

    IndexOptions index;
    auto* c_index = app.add_subcommand("index", "build and save a corpus index for one artifact kind");
    c_index->add_option("--corpus", index.corpus, "project corpus directory")->required();
    c_index->add_option("--kind", index.kind, "artifact kind");
    c_index->add_option("--min-df", index.min_df, "minimum document frequency");
    c_index->add_option("--out", index.out, "output index file")->required();
    c_index->add_option("--stopwords", index.pipeline.stopword_dir, "directory with stopwords_en.txt and stopwords_java.txt");

    QueryOptions query;
    auto* c_query = app.add_subcommand("query", "rank the corpus against one project");
    c_query->add_option("--corpus", query.corpus, "project corpus directory")->required();
    c_query->add_option("--index", query.index, "saved index; its config hash must match");
    c_query->add_option("--kind", query.kind, "artifact kind");
    c_query->add_option("--project", query.project, "query project id")->required();
    c_query->add_option("--top", query.top, "number of results to print");
    c_query->add_option("--stopwords", query.pipeline.stopword_dir, "directory with stopwords_en.txt and stopwords_java.txt");
    add_model_options(c_query, query.model);

    EvaluateOptions evaluate;
    auto* c_eval = app.add_subcommand("evaluate", "score ranked lists against ground truth");
    c_eval->add_option("--ranked", evaluate.ranked, "JSON {query: [[doc, score], ...]}")->required();
    c_eval->add_option("--truth", evaluate.truth, "JSON {query: [doc, ...]}")->required();
    c_eval->add_option("--k", evaluate.k, "rank cutoff");
    c_eval->add_option("--out", evaluate.out, "output directory");

    RecommendOptions recommend;
    auto* c_rec = app.add_subcommand("recommend", "project recommendation experiment");
    add_recommend_options(c_rec, recommend);
    c_rec->add_option("--composite", recommend.composite, "clan");
    c_rec->add_flag("--tune", recommend.tune, "grid-search the composite weights");

    LocalizeOptions localize;
    auto* c_loc = app.add_subcommand("localize", "bug localization experiment");
    add_localize_options(c_loc, localize);
    c_loc->add_flag("--tune", localize.tune, "grid-search w1..w6");

    auto* c_tune = app.add_subcommand("tune", "weight search for a composite tool");
    c_tune->require_subcommand(1);
    RecommendOptions tune_clan;
    auto* c_tune_clan = c_tune->add_subcommand("clan", "CLAN (w_pkg, w_api) grid");
    add_recommend_options(c_tune_clan, tune_clan);
    LocalizeOptions tune_loc;
    auto* c_tune_loc = c_tune->add_subcommand("localize", "LR coordinate ascent over w1..w6");
    add_localize_options(c_tune_loc, tune_loc);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return error_exit(err, "config", e.what(), kExitConfig);
    }

    try {
        if (c_extract->parsed()) {
            return cmd_extract(extract, out, err);
        }
        if (c_index->parsed()) {
            return cmd_index(index, out);
        }
        if (c_query->parsed()) {
            return cmd_query(query, out);
        }
        if (c_eval->parsed()) {
            return cmd_evaluate(evaluate, out);
        }
        if (c_rec->parsed()) {
            return cmd_recommend(recommend, out, err);
        }
        if (c_loc->parsed()) {
            return cmd_localize(localize, out);
        }
        if (c_tune_clan->parsed()) {
            tune_clan.composite = "clan";
            tune_clan.tune = true;
            return cmd_recommend(tune_clan, out, err);
        }
        if (c_tune_loc->parsed()) {
            tune_loc.tune = true;
            return cmd_localize(tune_loc, out);
        }
    } catch (const ConfigError& e) {
        return error_exit(err, "config", e.what(), kExitConfig);
    } catch (const DataError& e) {
        return error_exit(err, "data", e.what(), kExitData);
    } catch (const fs::filesystem_error& e) {
        return error_exit(err, "data", e.what(), kExitData);
    }
    return error_exit(err, "config", "no subcommand", kExitConfig);
}

}  // namespace seir::cli
