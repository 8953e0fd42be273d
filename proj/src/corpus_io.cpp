#include "seir/corpus_io.hpp"

#include "seir/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace seir {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string relative_generic(const fs::path& file, const fs::path& base)
{
    return fs::relative(file, base).generic_string();
}

std::vector<fs::path> java_files_under(const fs::path& dir)
{
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) {
        return files;
    }
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

std::string optional_text(const fs::path& path)
{
    return fs::is_regular_file(path) ? read_text_file(path) : std::string{};
}

}  // namespace

std::string read_text_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProjectRecord load_project(const fs::path& dir)
{
    auto meta_path = dir / "meta.json";
    if (!fs::is_regular_file(meta_path)) {
        throw DataError(meta_path.string() + ": missing");
    }
    json meta;
    try {
        meta = json::parse(read_text_file(meta_path));
    } catch (const json::exception& e) {
        throw DataError(meta_path.string() + ": " + e.what());
    }
    if (!meta.is_object() || !meta.contains("project_id") || !meta["project_id"].is_string()) {
        throw DataError(meta_path.string() + ": project_id must be a string");
    }
    ProjectRecord p;
    p.project_id = meta["project_id"].get<std::string>();
    if (p.project_id.empty()) {
        throw DataError(meta_path.string() + ": empty project_id");
    }
    if (meta.contains("categories")) {
        if (!meta["categories"].is_array()) {
            throw DataError(meta_path.string() + ": categories must be an array");
        }
        for (const auto& c : meta["categories"]) {
            if (!c.is_string()) {
                throw DataError(meta_path.string() + ": category labels must be strings");
            }
            p.categories.insert(c.get<std::string>());
        }
    }
    p.description = optional_text(dir / "description.txt");
    p.readme = optional_text(dir / "readme.txt");
    for (const auto& file : java_files_under(dir / "src")) {
        p.source_files.push_back({relative_generic(file, dir), read_text_file(file)});
    }
    return p;
}

ProjectCorpus load_project_corpus(const fs::path& root)
{
    if (!fs::is_directory(root)) {
        throw DataError(root.string() + ": corpus directory does not exist");
    }
    std::vector<fs::path> dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) {
            dirs.push_back(entry.path());
        }
    }
    if (dirs.empty()) {
        throw DataError(root.string() + ": no project directories");
    }
    std::sort(dirs.begin(), dirs.end());
    ProjectCorpus corpus;
    std::set<std::string> seen;
    for (const auto& dir : dirs) {
        try {
            auto p = load_project(dir);
            if (!seen.insert(p.project_id).second) {
                corpus.errors.push_back({dir.string(), "duplicate project_id " + p.project_id});
                continue;
            }
            corpus.projects.push_back(std::move(p));
        } catch (const DataError& e) {
            corpus.errors.push_back({dir.string(), e.what()});
        }
    }
    std::sort(corpus.projects.begin(), corpus.projects.end(),
              [](const auto& a, const auto& b) { return a.project_id < b.project_id; });
    return corpus;
}

Timestamp parse_iso8601(std::string_view text)
{
    std::string s(text);
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
    int consumed = 0;
    if (std::sscanf(s.c_str(), "%4d-%2d-%2d%n", &y, &mo, &d, &consumed) != 3 || consumed != 10) {
        throw DataError("invalid ISO-8601 timestamp: " + s);
    }
    std::size_t pos = 10;
    long offset_seconds = 0;
    if (pos < s.size()) {
        if (s[pos] != 'T' && s[pos] != ' ') {
            throw DataError("invalid ISO-8601 timestamp: " + s);
        }
        ++pos;
        int n = 0;
        if (std::sscanf(s.c_str() + pos, "%2d:%2d%n", &h, &mi, &n) != 2 || n != 5) {
            throw DataError("invalid ISO-8601 timestamp: " + s);
        }
        pos += 5;
        if (pos < s.size() && s[pos] == ':') {
            if (std::sscanf(s.c_str() + pos, ":%2d%n", &sec, &n) != 1 || n != 3) {
                throw DataError("invalid ISO-8601 timestamp: " + s);
            }
            pos += 3;
            if (pos < s.size() && s[pos] == '.') {
                ++pos;
                while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                    ++pos;
                }
            }
        }
        if (pos < s.size()) {
            if (s[pos] == 'Z' && pos + 1 == s.size()) {
                pos = s.size();
            } else if ((s[pos] == '+' || s[pos] == '-') && s.size() - pos >= 3) {
                int oh = 0, om = 0;
                int got = std::sscanf(s.c_str() + pos + 1, "%2d:%2d%n", &oh, &om, &n);
                if (got == 2 && pos + 1 + static_cast<std::size_t>(n) == s.size()) {
                    offset_seconds = (oh * 3600L + om * 60L) * (s[pos] == '+' ? 1 : -1);
                } else if (std::sscanf(s.c_str() + pos + 1, "%2d%2d%n", &oh, &om, &n) == 2
                           && pos + 1 + static_cast<std::size_t>(n) == s.size()) {
                    offset_seconds = (oh * 3600L + om * 60L) * (s[pos] == '+' ? 1 : -1);
                } else {
                    throw DataError("invalid ISO-8601 offset: " + s);
                }
            } else {
                throw DataError("invalid ISO-8601 timestamp: " + s);
            }
        }
    }
    using namespace std::chrono;
    year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h > 23 || mi > 59 || sec > 60) {
        throw DataError("invalid ISO-8601 date: " + s);
    }
    return sys_days{ymd} + hours{h} + minutes{mi} + seconds{sec} - seconds{offset_seconds};
}

std::string format_iso8601(Timestamp t)
{
    using namespace std::chrono;
    auto days = floor<std::chrono::days>(t);
    year_month_day ymd{days};
    hh_mm_ss hms{t - days};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02lldZ", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                  static_cast<long>(hms.hours().count()), static_cast<long>(hms.minutes().count()),
                  static_cast<long long>(hms.seconds().count()));
    return buf;
}

BugReport parse_bug_report(std::string_view json_line)
{
    json j;
    try {
        j = json::parse(json_line);
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed bug report line: ") + e.what());
    }
    auto str = [&](const char* key, bool required) -> std::string {
        if (!j.contains(key) || j[key].is_null()) {
            if (required) {
                throw DataError(std::string("bug report missing field '") + key + "'");
            }
            return {};
        }
        if (!j[key].is_string()) {
            throw DataError(std::string("bug report field '") + key + "' must be a string");
        }
        return j[key].get<std::string>();
    };
    if (!j.is_object()) {
        throw DataError("bug report line is not a JSON object");
    }
    BugReport r;
    r.report_id = j.contains("id") && j["id"].is_number_integer() ? std::to_string(j["id"].get<long long>())
                                                                  : str("id", true);
    r.summary = str("summary", false);
    r.description = str("description", false);
    r.report_time = parse_iso8601(str("report_time", true));
    if (j.contains("fixed_files")) {
        for (const auto& f : j["fixed_files"]) {
            if (f.is_string()) {
                r.fixed_files.insert(f.get<std::string>());
                continue;
            }
            if (!f.is_object() || !f.contains("path") || !f["path"].is_string()) {
                throw DataError("bug report " + r.report_id + ": fixed_files entries need a path");
            }
            auto path = f["path"].get<std::string>();
            auto change = f.value("change", std::string("modified"));
            if (change == "added") {
                r.added_files.insert(path);
            } else if (change == "modified" || change == "deleted") {
                r.fixed_files.insert(path);
            } else {
                throw DataError("bug report " + r.report_id + ": unknown change kind '" + change + "'");
            }
        }
    }
    if (j.contains("added_files")) {
        for (const auto& f : j["added_files"]) {
            r.added_files.insert(f.get<std::string>());
        }
    }
    for (const auto& a : r.added_files) {
        r.fixed_files.erase(a);
    }
    return r;
}

std::set<std::string> BugDataset::snapshot_for(const BugReport& report) const
{
    if (auto it = snapshots.find(report.report_id); it != snapshots.end()) {
        return it->second;
    }
    std::set<std::string> all;
    for (const auto& [path, text] : sources) {
        all.insert(path);
    }
    return all;
}

ApiCatalog load_api_catalog(const fs::path& path)
{
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    if (!j.is_object()) {
        throw DataError(path.string() + ": API catalog must be a JSON object");
    }
    ApiCatalog catalog;
    for (const auto& [name, text] : j.items()) {
        if (!text.is_string()) {
            throw DataError(path.string() + ": description of " + name + " must be a string");
        }
        catalog.emplace(name, text.get<std::string>());
    }
    return catalog;
}

BugDataset load_bug_dataset(const fs::path& dir)
{
    auto reports_path = dir / "reports.jsonl";
    if (!fs::is_regular_file(reports_path)) {
        throw DataError(reports_path.string() + ": missing");
    }
    BugDataset ds;
    ds.name = dir.filename().string();
    std::istringstream in(read_text_file(reports_path));
    std::string line;
    std::size_t line_no = 0;
    std::set<std::string> ids;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        BugReport r;
        try {
            r = parse_bug_report(line);
        } catch (const DataError& e) {
            throw DataError(reports_path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (!ids.insert(r.report_id).second) {
            throw DataError(reports_path.string() + ": duplicate report id " + r.report_id);
        }
        auto j = json::parse(line);
        if (j.contains("snapshot")) {
            auto& snap = ds.snapshots[r.report_id];
            for (const auto& p : j["snapshot"]) {
                snap.insert(p.get<std::string>());
            }
        }
        ds.reports.push_back(std::move(r));
    }
    std::sort(ds.reports.begin(), ds.reports.end(), [](const BugReport& a, const BugReport& b) {
        return a.report_time != b.report_time ? a.report_time < b.report_time : a.report_id < b.report_id;
    });
    for (const auto& file : java_files_under(dir / "src")) {
        ds.sources.emplace(relative_generic(file, dir / "src"), read_text_file(file));
    }
    if (fs::is_directory(dir / "snapshots")) {
        for (const auto& r : ds.reports) {
            auto listing = dir / "snapshots" / (r.report_id + ".txt");
            if (!fs::is_regular_file(listing)) {
                continue;
            }
            std::istringstream ls(read_text_file(listing));
            auto& snap = ds.snapshots[r.report_id];
            while (std::getline(ls, line)) {
                auto first = line.find_first_not_of(" \t\r");
                if (first == std::string::npos) {
                    continue;
                }
                auto last = line.find_last_not_of(" \t\r");
                snap.insert(line.substr(first, last - first + 1));
            }
        }
    }
    for (const auto& [id, snap] : ds.snapshots) {
        for (const auto& path : snap) {
            if (!ds.sources.contains(path)) {
                throw DataError("snapshot of report " + id + " lists " + path + " which is not under src/");
            }
        }
    }
    if (fs::is_regular_file(dir / "api_catalog.json")) {
        ds.catalog = load_api_catalog(dir / "api_catalog.json");
    }
    return ds;
}

}  // namespace seir
