#include "fixtures.hpp"

#include "json.hpp"

#include <atomic>
#include <fstream>
#include <random>
#include <stdexcept>

namespace fixtures {

namespace fs = std::filesystem;

TempDir::TempDir(const std::string& tag)
{
    static std::atomic<int> counter{0};
    std::random_device rd;
    m_path = fs::temp_directory_path()
             / (tag + "-" + std::to_string(rd()) + "-" + std::to_string(counter.fetch_add(1)));
    fs::create_directories(m_path);
}

TempDir::~TempDir()
{
    std::error_code ec;
    fs::remove_all(m_path, ec);
}

void write_text(const fs::path& path, const std::string& text)
{
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

void write_project(const fs::path& root, const std::string& dir_name, const seir::ProjectRecord& p)
{
    auto dir = root / dir_name;
    nlohmann::json meta{{"project_id", p.project_id}, {"categories", p.categories}};
    write_text(dir / "meta.json", meta.dump());
    if (!p.description.empty()) {
        write_text(dir / "description.txt", p.description);
    }
    if (!p.readme.empty()) {
        write_text(dir / "readme.txt", p.readme);
    }
    for (const auto& f : p.source_files) {
        write_text(dir / f.path, f.text);
    }
}

void write_bug_dataset(const fs::path& dir, const seir::BugDataset& ds)
{
    std::string lines;
    for (const auto& r : ds.reports) {
        nlohmann::json j{{"id", r.report_id},
                         {"summary", r.summary},
                         {"description", r.description},
                         {"report_time", seir::format_iso8601(r.report_time)},
                         {"fixed_files", r.fixed_files}};
        if (!r.added_files.empty()) {
            j["added_files"] = r.added_files;
        }
        if (auto it = ds.snapshots.find(r.report_id); it != ds.snapshots.end()) {
            j["snapshot"] = it->second;
        }
        lines += j.dump() + "\n";
    }
    write_text(dir / "reports.jsonl", lines);
    for (const auto& [path, text] : ds.sources) {
        write_text(dir / "src" / path, text);
    }
    if (!ds.catalog.empty()) {
        write_text(dir / "api_catalog.json", nlohmann::json(ds.catalog).dump(2));
    }
}

seir::Timestamp at(int y, int m, int d, int hh, int mm, int ss)
{
    using namespace std::chrono;
    return sys_days{year{y} / month{static_cast<unsigned>(m)} / day{static_cast<unsigned>(d)}} + hours{hh}
           + minutes{mm} + seconds{ss};
}

namespace {

struct Category {
    const char* name;
    std::vector<std::string> synonyms;
    std::vector<std::string> packages;  // fully qualified classes
    std::vector<std::string> methods;
};

const std::vector<Category>& categories()
{
    static const std::vector<Category> cats = {
        {"Video",
         {"video", "movie", "film", "clip", "footage", "cinema", "camcorder", "trailer"},
         {"org.media.codec.FrameEncoder", "org.media.codec.FrameDecoder", "org.media.stream.VideoStream",
          "org.media.stream.MediaMuxer", "org.media.render.SurfaceRenderer", "org.media.codec.BitrateControl",
          "org.media.capture.CameraCapture", "org.media.render.Subtitle"},
         {"encodeFrame", "decodeFrame", "seekTimestamp", "muxStream", "renderSurface", "captureCamera",
          "adjustBitrate", "overlaySubtitle"}},
        {"Weather",
         {"weather", "forecast", "climate", "rain", "temperature", "storm", "humidity", "meteorology"},
         {"net.meteo.api.ForecastClient", "net.meteo.model.Station", "net.meteo.model.Observation",
          "net.meteo.map.RadarLayer", "net.meteo.model.Barometer", "net.meteo.api.AlertFeed",
          "net.meteo.map.IsobarPlot", "net.meteo.model.Anemometer"},
         {"fetchForecast", "readStation", "plotRadar", "parseObservation", "measurePressure", "pollAlerts",
          "drawIsobars", "windSpeed"}},
        {"Chess",
         {"chess", "checkmate", "gambit", "opening", "grandmaster", "bishop", "knight", "tournament"},
         {"com.board.engine.MoveGenerator", "com.board.engine.Evaluator", "com.board.model.Chessboard",
          "com.board.model.Piece", "com.board.pgn.GameRecord", "com.board.engine.TranspositionTable",
          "com.board.ui.BoardView", "com.board.engine.OpeningBook"},
         {"generateMoves", "evaluatePosition", "castleKingside", "promotePawn", "parsePgn", "probeTable",
          "drawBoard", "lookupOpening"}},
        {"Finance",
         {"finance", "budget", "expense", "banking", "invoice", "accounting", "ledger", "payment"},
         {"io.money.core.Ledger", "io.money.core.Transaction", "io.money.tax.TaxCalculator",
          "io.money.bank.AccountSync", "io.money.core.Currency", "io.money.report.BalanceSheet",
          "io.money.bank.CardParser", "io.money.core.Budget"},
         {"postTransaction", "computeTax", "syncAccount", "convertCurrency", "balanceLedger", "parseStatement",
          "reconcileAccounts", "forecastBudget"}},
        {"Music",
         {"music", "song", "melody", "playlist", "audio", "guitar", "concert", "album"},
         {"fm.sound.player.AudioTrack", "fm.sound.player.Equalizer", "fm.sound.library.Playlist",
          "fm.sound.library.AlbumArt", "fm.sound.dsp.Mixer", "fm.sound.dsp.Reverb", "fm.sound.midi.Sequencer",
          "fm.sound.library.TagReader"},
         {"playTrack", "shuffleQueue", "applyEqualizer", "mixChannels", "addReverb", "readTags",
          "sequenceMidi", "fetchAlbumArt"}},
        {"Editor",
         {"editor", "text", "notepad", "typing", "document", "markdown", "syntax", "writing"},
         {"dev.text.buffer.GapBuffer", "dev.text.syntax.Highlighter", "dev.text.syntax.Lexer",
          "dev.text.ui.Caret", "dev.text.ui.Gutter", "dev.text.buffer.UndoStack", "dev.text.io.EncodingSniffer",
          "dev.text.search.Finder"},
         {"insertText", "highlightSyntax", "tokenizeLine", "moveCaret", "drawGutter", "undoEdit", "detectEncoding",
          "findNext"}},
    };
    return cats;
}

const std::vector<std::string> kFillers = {"simple", "free", "lightweight", "open", "source", "fast", "modern",
                                           "small", "tool", "application", "program", "utility", "portable",
                                           "desktop", "mobile", "friendly", "powerful", "minimal"};

const std::vector<std::string> kCommonClasses = {"java.util.List", "java.util.Map", "java.io.File",
                                                 "java.util.logging.Logger", "java.util.concurrent.Executor",
                                                 "java.net.URL", "java.util.Properties", "java.nio.file.Path",
                                                 "java.util.Timer", "java.util.regex.Pattern"};

const std::vector<std::string> kCommonMethods = {"init", "run", "close", "update", "load", "save", "reset",
                                                 "refresh", "dispose", "configure", "start", "stop"};

std::string simple_name(const std::string& qualified)
{
    return qualified.substr(qualified.rfind('.') + 1);
}

template <class Rng>
std::vector<std::string> pick(const std::vector<std::string>& pool, std::size_t n, Rng& rng)
{
    std::vector<std::string> copy = pool;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n && !copy.empty(); ++i) {
        auto j = static_cast<std::size_t>(rng() % copy.size());
        out.push_back(copy[j]);
        copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return out;
}

std::string java_file(const std::string& pkg, const std::string& cls, const std::vector<std::string>& imports,
                      const std::vector<std::string>& methods)
{
    std::string s = "package " + pkg + ";\n\n";
    for (const auto& i : imports) {
        s += "import " + i + ";\n";
    }
    s += "\npublic class " + cls + " {\n";
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const auto& type = simple_name(imports[m % imports.size()]);
        s += "    public void " + methods[m] + "() {\n";
        s += "        " + type + " value = new " + type + "();\n";
        s += "        value.toString();\n    }\n";
    }
    s += "}\n";
    return s;
}

}  // namespace

std::vector<seir::ProjectRecord> study_corpus(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<seir::ProjectRecord> out;
    const auto& cats = categories();
    for (std::size_t c = 0; c < cats.size(); ++c) {
        for (int j = 0; j < 10; ++j) {
            seir::ProjectRecord p;
            char id[32];
            std::snprintf(id, sizeof id, "%s-%02d", cats[c].name, j);
            p.project_id = id;
            p.categories = {cats[c].name};

            auto words = pick(cats[c].synonyms, 3, rng);
            for (const auto& f : pick(kFillers, 3, rng)) {
                words.push_back(f);
            }
            std::shuffle(words.begin(), words.end(), rng);
            for (const auto& w : words) {
                p.description += (p.description.empty() ? "" : " ") + w;
            }
            auto readme_words = pick(cats[c].synonyms, 4, rng);
            for (const auto& f : pick(kFillers, 6, rng)) {
                readme_words.push_back(f);
            }
            for (const auto& w : readme_words) {
                p.readme += w + " ";
            }

            std::string pkg = "app." + std::string(cats[c].name) + std::to_string(j);
            for (auto& ch : pkg) {
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            }
            for (int f = 0; f < 2; ++f) {
                auto imports = pick(cats[c].packages, 3, rng);
                for (const auto& extra : pick(kCommonClasses, 2 + rng() % 3, rng)) {
                    imports.push_back(extra);
                }
                auto methods = pick(cats[c].methods, 3, rng);
                for (const auto& extra : pick(kCommonMethods, 1 + rng() % 4, rng)) {
                    methods.push_back(extra);
                }
                std::string cls = std::string(cats[c].name) + "Part" + std::to_string(j) + "x" + std::to_string(f);
                p.source_files.push_back(
                    {"src/" + cls + ".java", java_file(pkg, cls, imports, methods)});
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

seir::BugDataset timeline_dataset(std::uint64_t seed, std::size_t n_reports, std::size_t n_files)
{
    static const std::vector<std::string> widgets = {"Button", "Table", "Tree", "Shell", "Combo", "Canvas",
                                                     "Label", "Spinner", "Slider", "Menu", "Toolbar", "Browser"};
    static const std::vector<std::string> verbs = {"crash", "leak", "flicker", "hang", "resize", "paint",
                                                   "focus", "scroll", "select", "dispose"};
    std::mt19937_64 rng(seed);
    seir::BugDataset ds;
    ds.name = "timeline";
    std::vector<std::string> files;
    for (std::size_t f = 0; f < n_files; ++f) {
        const auto& w = widgets[f % widgets.size()];
        std::string cls = w + (f >= widgets.size() ? std::to_string(f) : "");
        std::string path = "org/eclipse/swt/widgets/" + cls + ".java";
        std::string text = "package org.eclipse.swt.widgets;\n\nimport org.eclipse.swt.graphics.GC;\n"
                           "import org.eclipse.swt.events.SelectionListener;\n\n"
                           "public class " + cls + " extends Control {\n"
                           "    public void " + verbs[f % verbs.size()] + cls + "(GC gc) {\n"
                           "        SelectionListener l = null;\n"
                           "        // handles " + verbs[(f + 3) % verbs.size()] + " events\n"
                           "    }\n}\n";
        ds.sources[path] = text;
        files.push_back(path);
    }
    ds.catalog["GC"] = "Graphics context used to paint lines, shapes and images on a drawable.";
    ds.catalog["SelectionListener"] = "Listener notified when a widget selection changes.";
    ds.catalog["Control"] = "Abstract superclass of all windowed user interface widgets.";

    auto t = at(2019, 1, 5, 9);
    for (std::size_t i = 0; i < n_reports; ++i) {
        seir::BugReport r;
        char id[16];
        std::snprintf(id, sizeof id, "B%03zu", i + 1);
        r.report_id = id;
        auto f = static_cast<std::size_t>(rng() % files.size());
        auto cls = widgets[f % widgets.size()] + (f >= widgets.size() ? std::to_string(f) : "");
        r.summary = cls + " " + verbs[rng() % verbs.size()] + " when the user clicks twice";
        r.description = "Steps: open a " + cls + ", then " + verbs[rng() % verbs.size()] + ". Observed "
                        + verbs[f % verbs.size()] + " in " + cls + ".";
        // Every fourth report shares its predecessor's timestamp.
        if (i % 4 != 3) {
            t += std::chrono::hours(24 * (5 + static_cast<int>(rng() % 60))) + std::chrono::minutes(rng() % 600);
        }
        r.report_time = t;
        r.fixed_files.insert(files[f]);
        if (rng() % 3 == 0) {
            r.fixed_files.insert(files[(f + 1) % files.size()]);
        }
        ds.reports.push_back(std::move(r));
    }
    return ds;
}

}  // namespace fixtures
