// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any gated criterion fails.

#include "seir/bm25.hpp"
#include "seir/error.hpp"
#include "seir/index.hpp"
#include "seir/localize.hpp"
#include "seir/lsi.hpp"
#include "seir/metrics.hpp"
#include "seir/pipeline.hpp"
#include "seir/ranking.hpp"
#include "seir/recommend.hpp"
#include "seir/vsm.hpp"
#include "seir/wmd.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace seir;

namespace {

/// Collects failed checks for one criterion.
class Check {
  public:
    void expect(bool ok, const std::string& what)
    {
        ++m_checks;
        if (!ok && m_failures.size() < 5) {
            m_failures.push_back(what);
        }
        m_failed += ok ? 0 : 1;
    }
    void near(double actual, double expected, double tol, const std::string& what)
    {
        std::ostringstream s;
        s.precision(17);
        s << what << ": got " << actual << ", want " << expected;
        expect(std::abs(actual - expected) <= tol, s.str());
    }
    template <class F>
    void throws(F&& f, const std::string& what)
    {
        bool thrown = false;
        try {
            f();
        } catch (const Error&) {
            thrown = true;
        }
        expect(thrown, what + " should raise");
    }
    void note(const std::string& text) { m_notes += (m_notes.empty() ? "" : "; ") + text; }

    bool ok() const { return m_failed == 0; }
    std::string summary() const
    {
        std::string s = std::to_string(m_checks - m_failed) + "/" + std::to_string(m_checks) + " checks";
        if (!m_notes.empty()) {
            s += "; " + m_notes;
        }
        for (const auto& f : m_failures) {
            s += "\n      - " + f;
        }
        return s;
    }

  private:
    std::size_t m_checks = 0;
    std::size_t m_failed = 0;
    std::vector<std::string> m_failures;
    std::string m_notes;
};

RankedList list_of(const std::vector<std::string>& ids)
{
    std::vector<ScoredDoc> docs;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        docs.push_back({ids[i], static_cast<double>(ids.size() - i)});
    }
    return make_ranked_list("q", docs);
}

std::vector<std::string> ids_of(const RankedList& r)
{
    std::vector<std::string> out;
    for (const auto& e : r.entries) {
        out.push_back(e.doc_id);
    }
    return out;
}

std::vector<Document> as_docs(const oracle::RandomCorpus& rc)
{
    std::vector<Document> docs;
    for (std::size_t i = 0; i < rc.docs.size(); ++i) {
        docs.push_back({rc.ids[i], DocumentKind::source_file, rc.docs[i], false});
    }
    return docs;
}

// 1 ------------------------------------------------------------------------

void metric_oracle_suite(Check& c)
{
    const double tol = 1e-12;
    auto ranked = list_of({"r1", "n1", "r2", "n2", "n3", "n4", "n5", "n6", "n7", "n8"});
    std::set<std::string> rel = {"r1", "r2"};
    c.near(precision_at_k(ranked, rel, 10), 0.2, tol, "P@10 relevant at {1,3}");
    c.near(recall_at_k(ranked, rel, 10), 1.0, tol, "R@10 relevant at {1,3}");
    c.near(avg_prec_at_k(ranked, rel, 10), (1.0 / 1.0 + 2.0 / 3.0) / 2.0, tol, "AP@10 relevant at {1,3}");
    c.near(avg_prec_at_k(ranked, rel, 10), 0.8333, 5e-5, "AP@10 worked value 0.8333");
    c.near(precision_at_k(ranked, rel, 1), 1.0, tol, "P@1 relevant at rank 1");
    c.near(reciprocal_rank(ranked, rel), 1.0, tol, "RR first relevant at 1");
    std::set<std::string> absent = {"x"};
    c.near(precision_at_k(ranked, absent, 10), 0.0, tol, "P@10 nothing relevant retrieved");
    c.near(recall_at_k(ranked, absent, 10), 0.0, tol, "R@10 nothing relevant retrieved");
    c.near(avg_prec_at_k(ranked, absent, 10), 0.0, tol, "AP@10 nothing retrieved");
    c.near(reciprocal_rank(ranked, absent), 0.0, tol, "RR nothing retrieved");
    c.near(avg_prec_at_k(list_of({"a", "b", "c"}), {"a", "b"}, 10), 1.0, tol, "AP perfect ranking");
    // R counts relevant documents beyond the cutoff too.
    c.near(avg_prec_at_k(ranked, {"r1", "r2", "zz"}, 2), 1.0 / 3.0, tol, "AP@2 with unretrieved relevant");
    c.near(recall_at_k(ranked, {"r1", "r2", "zz"}, 3), 2.0 / 3.0, tol, "R@3 with unretrieved relevant");

    auto q = [](double ap, double rr) {
        QueryEvaluation e;
        e.avg_prec = ap;
        e.reciprocal_rank = rr;
        return e;
    };
    c.near(map_at_k({q(0.5, 1), q(1.0, 1)}), 0.75, tol, "MAP {0.5, 1.0}");
    c.near(map_at_k({q(0.3, 1)}), 0.3, tol, "MAP single query");
    c.near(map_at_k({q(0, 0), q(0, 0)}), 0.0, tol, "MAP all zero");
    c.near(mrr({q(0, 1.0), q(0, 0.5), q(0, 0.25)}), (1.0 + 0.5 + 0.25) / 3.0, tol, "MRR ranks {1,2,4}");
    c.near(mrr({q(0, 1.0), q(0, 0.5), q(0, 0.25)}), 0.5833, 5e-5, "MRR worked value 0.5833");
    c.near(mrr({q(0, 1), q(0, 1)}), 1.0, tol, "MRR all rank 1");
    c.near(mrr({q(0, 1), q(0, 0)}), 0.5, tol, "MRR with a query finding nothing");
    c.near(pct_gain(0.2, 0.3), 50.0, 1e-9, "pct_gain(0.2, 0.3)");
    c.near(pct_gain(0.4, 0.4), 0.0, tol, "pct_gain(a, a)");
    c.throws([] { pct_gain(0.0, 0.3); }, "pct_gain(0, b)");
    c.throws([&] { precision_at_k(ranked, rel, 0); }, "P@0");

    // Full evaluation agrees with the independent oracle on random rankings.
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> ids;
        std::size_t n = 1 + rng() % 10;
        for (std::size_t i = 0; i < n; ++i) {
            ids.push_back("d" + std::to_string(i));
        }
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<std::string> relv;
        for (std::size_t i = 0; i < n + 2; ++i) {
            if (rng() % 3 == 0) {
                relv.push_back("d" + std::to_string(i));
            }
        }
        if (relv.empty()) {
            continue;
        }
        std::size_t k = 1 + rng() % 10;
        auto list = list_of(ids);
        std::set<std::string> rs(relv.begin(), relv.end());
        c.near(avg_prec_at_k(list, rs, k), oracle::average_precision(ids, relv, k), tol, "AP vs oracle");
        c.near(reciprocal_rank(list, rs), oracle::reciprocal_rank(ids, relv), tol, "RR vs oracle");
    }
}

// 2 ------------------------------------------------------------------------

void compare_model(Check& c, const std::string& name, const SimilarityModel& model, const std::vector<Document>& docs,
                   const std::vector<oracle::Tokens>& queries, double tol,
                   const std::function<double(const oracle::Tokens&, std::size_t)>& reference)
{
    for (const auto& q : queries) {
        auto scores = model.score_all(q);
        std::map<std::string, double> ref;
        double worst = 0.0;
        for (std::size_t d = 0; d < docs.size(); ++d) {
            double r = reference(q, d);
            ref[docs[d].doc_id] = r;
            if (std::isinf(r) || std::isinf(scores[d])) {
                c.expect(r == scores[d], name + " infinite score mismatch on " + docs[d].doc_id);
            } else {
                worst = std::max(worst, std::abs(r - scores[d]));
            }
        }
        c.near(worst, 0.0, tol, name + " max score deviation");
        std::string why;
        Document query{"query", DocumentKind::bug_report, q, false};
        c.expect(oracle::order_consistent(ids_of(rank(query, model)), ref, tol, &why), name + " ordering: " + why);
    }
}

void brute_force_equivalence(Check& c)
{
    std::size_t lsi_skipped = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto rc = oracle::random_corpus(seed);
        auto docs = as_docs(rc);
        auto idx = CorpusIndex::build(docs, 2);
        VsmModel vsm(idx);
        compare_model(c, "VSM", vsm, docs, rc.queries, 1e-9,
                      [&](const oracle::Tokens& q, std::size_t d) { return oracle::vsm(q, rc.docs[d], rc.docs, 2); });
        Bm25Params p{1.2 + 0.1 * static_cast<double>(seed % 5), 1.5, 0.75};
        Bm25Model bm25(idx, p);
        compare_model(c, "BM25", bm25, docs, rc.queries, 1e-9, [&](const oracle::Tokens& q, std::size_t d) {
            return oracle::bm25(q, d, rc.docs, 2, p.k1, p.k2, p.b);
        });

        auto full = CorpusIndex::build(docs, 1);
        int k = std::max(1, static_cast<int>(std::min(full.n_docs(), full.vocab_size()) / 3));
        auto space = lsi_fit(full, k);
        if (!space.tied_components.empty() || space.truncation_splits_tie) {
            ++lsi_skipped;  // the truncated subspace is not unique
        } else {
            oracle::Lsi ref(rc.docs, 1, k);
            c.expect(ref.dim() == space.dim(), "LSI rank agrees with oracle");
            LsiModel lsi(full, std::move(space));
            compare_model(c, "LSI", lsi, docs, rc.queries, 1e-6,
                          [&](const oracle::Tokens& q, std::size_t d) { return ref.similarity(q, d); });
        }

        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal;
        EmbeddingTable table(8);
        oracle::Embeddings emb;
        for (int w = 0; w < 200; ++w) {
            if (rng() % 6 == 0) {
                continue;
            }
            std::vector<double> v(8);
            for (auto& x : v) {
                x = normal(rng);
            }
            table.add("w" + std::to_string(w), v);
            emb["w" + std::to_string(w)] = v;
        }
        WmdModel wmd(docs, table);
        compare_model(c, "WMD", wmd, docs, rc.queries, 1e-9, [&](const oracle::Tokens& q, std::size_t d) {
            return -oracle::wmd(q, rc.docs[d], emb).distance;
        });
    }
    c.note("LSI seeds with a non-unique subspace: " + std::to_string(lsi_skipped) + "/20");
    c.expect(lsi_skipped <= 2, "LSI compared on at least 18 seeds");
}

// 3 ------------------------------------------------------------------------

void lsi_degeneracy(Check& c)
{
    std::size_t fixtures_used = 0;
    for (std::uint64_t seed = 1; fixtures_used < 10 && seed <= 40; ++seed) {
        auto rc = oracle::random_corpus(seed, 25, 80);
        auto docs = as_docs(rc);
        auto idx = CorpusIndex::build(docs, 1);
        VsmModel vsm(idx);
        // Tie-free: every query's VSM scores are pairwise separated.
        bool tie_free = true;
        for (const auto& d : docs) {
            auto s = vsm.score_all(d.tokens);
            std::sort(s.begin(), s.end());
            for (std::size_t i = 1; i < s.size(); ++i) {
                tie_free = tie_free && s[i] - s[i - 1] > 1e-6;
            }
        }
        if (!tie_free) {
            continue;
        }
        ++fixtures_used;
        auto k = static_cast<int>(std::min(idx.n_docs(), idx.vocab_size()));
        auto space = lsi_fit(idx, k);
        for (std::size_t d = 0; d < idx.n_docs(); ++d) {
            Eigen::VectorXd p = lsi_project(idx.tfidf_vector(d), space);
            Eigen::VectorXd stored = space.doc_vectors.row(static_cast<Eigen::Index>(d)).transpose();
            c.near((p - stored).cwiseAbs().maxCoeff(), 0.0, 1e-8, "self-projection seed " + std::to_string(seed));
        }
        LsiModel lsi(idx, space);
        for (const auto& d : docs) {
            auto a = lsi.score_all(d.tokens);
            auto b = vsm.score_all(d.tokens);
            double worst = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                worst = std::max(worst, std::abs(a[i] - b[i]));
            }
            c.near(worst, 0.0, 1e-6, "full-rank LSI cosine vs VSM");
            c.expect(ids_of(rank(d, lsi)) == ids_of(rank(d, vsm)), "full-rank LSI ranking equals VSM for " + d.doc_id);
        }
    }
    c.note(std::to_string(fixtures_used) + " tie-free fixtures");
    c.expect(fixtures_used >= 5, "enough tie-free fixtures");
}

// 4 ------------------------------------------------------------------------

void bm25_properties(Check& c)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int draw = 0; draw < 1000; ++draw) {
        Bm25Params p{3.0 * u(rng), 3.0 * u(rng), u(rng)};
        std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 100);
        double idf = bm25_idf(n, 1 + static_cast<std::uint32_t>(rng() % n));
        double tf = static_cast<double>(1 + rng() % 30);
        double qtf = static_cast<double>(1 + rng() % 6);
        double avg = 1.0 + 200.0 * u(rng);
        double dl = 1.0 + 200.0 * u(rng);
        c.expect(bm25_term_score(idf, 0, qtf, dl, avg, p) == 0.0, "tf=0 contributes zero");
        c.expect(bm25_term_score(idf, tf + 1, qtf, dl, avg, p) >= bm25_term_score(idf, tf, qtf, dl, avg, p),
                 "monotone in tf");
        c.expect(bm25_term_score(idf, tf, qtf + 1, dl, avg, p) >= bm25_term_score(idf, tf, qtf, dl, avg, p),
                 "monotone in qtf");
        Bm25Params flat = p;
        flat.b = 0.0;
        c.expect(bm25_term_score(idf, tf, qtf, dl, avg, flat) == bm25_term_score(idf, tf, qtf, 1.0 + 200.0 * u(rng),
                                                                                 avg, flat),
                 "b=0 length independence (term)");

        // Document level: padding a document with non-query terms changes
        // nothing when b = 0.
        std::vector<Document> docs = {{"a", DocumentKind::description, {"x", "y", "y"}, false},
                                      {"b", DocumentKind::description, {"y", "z"}, false},
                                      {"c", DocumentKind::description, {"z"}, false}};
        auto padded = docs;
        for (std::size_t i = 0; i < 1 + rng() % 20; ++i) {
            padded[0].tokens.push_back("pad" + std::to_string(i));
        }
        auto i1 = CorpusIndex::build(docs, 1);
        auto i2 = CorpusIndex::build(padded, 1);
        std::vector<std::string> query = {"x", "y"};
        c.expect(bm25_score(query, 0, i1, flat) == bm25_score(query, 0, i2, flat), "b=0 length independence (doc)");
        c.expect(bm25_score(std::vector<std::string>{"w"}, 0, i1, p) == 0.0, "absent term scores zero");
    }
    c.near(bm25_term_score(bm25_idf(3, 1), 1, 1, 5, 5, {1.5, 1.5, 0.75}), 0.9808, 5e-5, "worked example 0.9808");
}

// 5 ------------------------------------------------------------------------

void wmd_properties(Check& c)
{
    EmbeddingTable t(2);
    t.add("a", std::vector<double>{0, 0});
    t.add("b", std::vector<double>{1, 0});
    t.add("c", std::vector<double>{0, 2});
    t.add("d", std::vector<double>{3, 4});
    t.add("e", std::vector<double>{-1, -1});
    using T = std::vector<std::string>;
    const T words = {"a", "b", "c", "d", "e", "oov1", "oov2"};
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        T q1, q2, doc;
        for (std::size_t i = 0; i < 1 + rng() % 5; ++i) {
            q1.push_back(words[rng() % words.size()]);
            q2.push_back(words[rng() % words.size()]);
            doc.push_back(words[rng() % 5]);
        }
        auto shuffled = doc;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        c.expect(wmd_distance(doc, shuffled, t).distance == 0.0, "identity distance is 0");
        auto joined = q1;
        joined.insert(joined.end(), q2.begin(), q2.end());
        auto r1 = wmd_distance(q1, doc, t);
        auto r2 = wmd_distance(q2, doc, t);
        auto rj = wmd_distance(joined, doc, t);
        c.near(rj.distance, r1.distance + r2.distance, 1e-12, "multiplicity additivity");
        std::size_t oov = 0;
        for (const auto& w : joined) {
            oov += w.rfind("oov", 0) == 0 ? 1 : 0;
        }
        c.expect(rj.skipped_query_terms == oov, "OOV skip count");
        c.expect(rj.embedded_query_terms == joined.size() - oov, "embedded term count");
    }
    c.near(wmd_distance(T{"a"}, T{"b", "c"}, t).distance, 1.0, 0.0, "{a} vs {b,c}");
    c.near(wmd_distance(T{"a", "a"}, T{"b", "c"}, t).distance, 2.0, 0.0, "{a,a} vs {b,c}");
    c.expect(wmd_distance(T{"a"}, T{"oov1"}, t).distance == kUnreachableDistance, "no embedded doc term");
}

// 6 ------------------------------------------------------------------------

void composite_degeneracy(Check& c)
{
    auto set = ArtifactSet::build(fixtures::study_corpus(4), PipelineConfig::defaults());
    auto cfg = ModelConfig::for_task(Task::project_recommendation, ModelKind::lsi);
    cfg.lsi_dim = 10;
    for (auto kind : {ModelKind::lsi, ModelKind::vsm}) {
        cfg.model = kind;
        ClanRecommender clan(set, cfg);
        for (std::size_t q = 0; q < set.size(); ++q) {
            auto composite = clan.rank(q, {1.0, 0.0});
            auto single = rank_projects(set, q, clan.package_ranker().scores(q));
            bool same = composite.entries.size() == single.entries.size();
            for (std::size_t i = 0; same && i < single.entries.size(); ++i) {
                same = composite.entries[i].doc_id == single.entries[i].doc_id
                       && composite.entries[i].score == single.entries[i].score;
            }
            c.expect(same, "CLAN (1,0) equals import_package ranking for " + set.project_ids[q]);
        }
    }

    auto ds = fixtures::timeline_dataset(5, 20, 10);
    auto pipeline = PipelineConfig::defaults();
    std::vector<ReportFeatures> lr_features;
    for (auto [tool, model] : {std::pair{LocalizerTool::vsm_lr, ModelKind::vsm},
                               std::pair{LocalizerTool::bm25_lr, ModelKind::bm25}}) {
        Localizer lr(ds, pipeline, LocalizerSetup::for_tool(tool));
        Localizer single(ds, pipeline, LocalizerSetup::for_tool(LocalizerTool::single_model, model));
        for (const auto& r : ds.reports) {
            auto features = lr.features(r);
            auto a = rank_files(features, tool, LocalizerWeights::only(0));
            auto b = rank_files(single.features(r), LocalizerTool::single_model, LocalizerWeights::only(0));
            c.expect(ids_of(a) == ids_of(b), std::string(to_string(tool)) + " w1-only equals single-model ranking");
            lr_features.push_back(std::move(features));
        }
    }

    ClanRecommender clan(set, ModelConfig::for_task(Task::project_recommendation, ModelKind::vsm));
    std::mt19937_64 rng(100);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int trial = 0; trial < 100; ++trial) {
        double s = scale(rng);
        ClanWeights w{u(rng), u(rng)};
        auto q = static_cast<std::size_t>(rng() % set.size());
        auto base = clan.rank(q, w);
        std::map<std::string, double> ref;
        for (const auto& e : base.entries) {
            ref[e.doc_id] = e.score;
        }
        std::string why;
        c.expect(oracle::order_consistent(ids_of(clan.rank(q, {s * w.pkg, s * w.api})), ref, 1e-12, &why),
                 "CLAN scaling invariance: " + why);
        c.expect(base.entries.front().doc_id == clan.rank(q, {s * w.pkg, s * w.api}).entries.front().doc_id
                     || std::abs(base.entries[0].score - base.entries[1].score) <= 1e-12,
                 "CLAN argmax under scaling");

        LocalizerWeights lw;
        for (auto& x : lw.w) {
            x = 5.0 * u(rng);
        }
        LocalizerWeights scaled = lw;
        for (auto& x : scaled.w) {
            x *= s;
        }
        const auto& rf = lr_features[rng() % lr_features.size()];
        auto lbase = rank_files(rf, LocalizerTool::bm25_lr, lw);
        std::map<std::string, double> lref;
        for (const auto& e : lbase.entries) {
            lref[e.doc_id] = e.score;
        }
        c.expect(oracle::order_consistent(ids_of(rank_files(rf, LocalizerTool::bm25_lr, scaled)), lref, 1e-12, &why),
                 "LR scaling invariance: " + why);
    }
}

// 7 ------------------------------------------------------------------------

void no_leakage(Check& c)
{
    auto full = fixtures::timeline_dataset(1, 20, 8);
    auto pipeline = PipelineConfig::defaults();
    std::size_t compared = 0;
    for (auto tool : {LocalizerTool::vsm_lr, LocalizerTool::bm25_lr}) {
        Localizer whole(full, pipeline, LocalizerSetup::for_tool(tool));
        for (const auto& r : full.reports) {
            BugDataset cut = full;
            cut.reports.clear();
            for (const auto& other : full.reports) {
                if (other.report_time < r.report_time || other.report_id == r.report_id) {
                    cut.reports.push_back(other);
                }
            }
            Localizer truncated(cut, pipeline, LocalizerSetup::for_tool(tool));
            auto a = whole.features(r);
            auto b = truncated.features(r);
            c.expect(a.files == b.files, "same candidates for " + r.report_id);
            for (std::size_t i = 0; i < a.files.size() && i < b.files.size(); ++i) {
                for (std::size_t f : {2, 4, 5}) {
                    c.expect(a.raw[i][f] == b.raw[i][f], "f" + std::to_string(f + 1) + " for " + r.report_id + " / "
                                                             + a.files[i]);
                    ++compared;
                }
            }
        }
    }
    c.note(std::to_string(compared) + " history values compared");
}

// 8 ------------------------------------------------------------------------

void pipeline_conformance(Check& c)
{
    c.expect(stem("computes") == "comput", "computes -> comput");
    c.expect(stem("computed") == "comput", "computed -> comput");
    using V = std::vector<std::string>;
    c.expect(split_camel("TerminalFactory", true) == V{"TerminalFactory", "Terminal", "Factory"},
             "TerminalFactory split, compound kept");
    c.expect(split_camel("TerminalFactory", false) == V{"Terminal", "Factory"}, "TerminalFactory split");
    auto config = PipelineConfig::defaults();
    c.expect(preprocess("TerminalFactory", DocumentKind::method_class, config)
                 == V{stem("terminalfactory"), stem("terminal"), stem("factory")},
             "code kind keeps the compound");
    c.expect(preprocess("TerminalFactory", DocumentKind::description, config) == V{stem("terminal"), stem("factory")},
             "text kind drops the compound");
    auto code = preprocess("public static void main while (true) { return null; } player", DocumentKind::method_class,
                           config);
    c.expect(code == V{"main", "player"}, "Java keywords removed");
    c.expect(preprocess("the void player", DocumentKind::source_file, config) == V{"player"}, "mixed stopwords");
}

// 9 ------------------------------------------------------------------------

void directional_study(Check& c)
{
    auto set = ArtifactSet::build(fixtures::study_corpus(1), PipelineConfig::defaults());
    auto queries = select_queries(set, 200, 1).query_ids;
    auto config = [](ModelKind m) {
        auto cfg = ModelConfig::for_task(Task::project_recommendation, m);
        cfg.lsi_dim = 10;  // the 100-dimension default exceeds the rank of a 60-document matrix
        return cfg;
    };
    auto map_of = [&](DocumentKind kind, ModelKind m) {
        return run_feature_experiment(set, kind, config(m), queries).map;
    };
    char buf[160];
    double lsi = map_of(DocumentKind::description, ModelKind::lsi);
    double vsm = map_of(DocumentKind::description, ModelKind::vsm);
    std::snprintf(buf, sizeof buf, "description MAP@10 lsi %.4f vsm %.4f", lsi, vsm);
    c.note(buf);
    c.expect(lsi >= vsm, "LSI >= VSM on description");
    for (auto kind : {DocumentKind::method_class, DocumentKind::import_package, DocumentKind::api}) {
        double v = map_of(kind, ModelKind::vsm);
        double b = map_of(kind, ModelKind::bm25);
        std::snprintf(buf, sizeof buf, "%s vsm %.4f bm25 %.4f", std::string(to_string(kind)).c_str(), v, b);
        c.note(buf);
        c.expect(v >= b, "VSM >= BM25 on " + std::string(to_string(kind)));
    }
}

struct Criterion {
    const char* id;
    const char* name;
    void (*run)(Check&);
    double budget_seconds;  // 0 = none
};

}  // namespace

int main()
{
    const Criterion criteria[] = {
        {"AC1", "metric oracle suite", metric_oracle_suite, 1.0},
        {"AC2", "brute-force ranking equivalence, 4 models x 20 seeds", brute_force_equivalence, 30.0},
        {"AC3", "LSI degeneracy and self-projection", lsi_degeneracy, 0.0},
        {"AC4", "BM25 structural properties, 1000 draws", bm25_properties, 0.0},
        {"AC5", "WMD properties on a 5-word embedding", wmd_properties, 0.0},
        {"AC6", "composite degeneracy and weight scaling", composite_degeneracy, 0.0},
        {"AC7", "history features do not leak", no_leakage, 0.0},
        {"AC8", "pipeline conformance", pipeline_conformance, 0.0},
        {"AC9", "directional desk-scale study", directional_study, 120.0},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.budget_seconds > 0.0) {
            check.expect(seconds < cr.budget_seconds, "runtime budget " + std::to_string(static_cast<int>(cr.budget_seconds)) + " s");
        }
        bool ok = check.ok();
        failed += ok ? 0 : 1;
        std::printf("%s %s  %s (%.2f s) %s\n", cr.id, ok ? "PASS" : "FAIL", cr.name, seconds, check.summary().c_str());
        std::fflush(stdout);
    }
    std::printf("AC10 SKIP  published-dataset RQ1 check: dataset not available offline (not a gate)\n");
    std::printf("%d of 9 gated criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
