#pragma once

#include "seir/extraction.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace seir {

/// Class name -> API documentation text.
using ApiCatalog = std::map<std::string, std::string>;

struct CorpusLoadError {
    std::string location;
    std::string message;
};

struct ProjectCorpus {
    std::vector<ProjectRecord> projects;  // sorted by project_id
    std::vector<CorpusLoadError> errors;  // projects that failed to load
};

/// Reads one project directory: meta.json, description.txt, readme.txt, src/**/*.java.
/// Throws DataError when meta.json is missing or malformed.
ProjectRecord load_project(const std::filesystem::path& dir);

/// Loads every project directory under `root`. A broken project becomes an
/// error record and loading continues; no project directories at all is a
/// DataError.
ProjectCorpus load_project_corpus(const std::filesystem::path& root);

/// Parses "YYYY-MM-DD", "YYYY-MM-DDTHH:MM[:SS][.fff][Z|+HH:MM|-HH:MM]" (space
/// separator accepted). Throws DataError on anything else.
Timestamp parse_iso8601(std::string_view text);
std::string format_iso8601(Timestamp t);

/// Parses one JSON-lines bug record:
/// {"id", "summary", "description", "report_time", "fixed_files": [...]}.
/// fixed_files entries are paths (modified) or {"path", "change"} objects with
/// change in {modified, deleted, added}; an optional "added_files" array is
/// also honoured.
BugReport parse_bug_report(std::string_view json_line);

/// A bug-localization dataset directory:
///   reports.jsonl                one report per line
///   src/**/*.java                source files (paths relative to src/)
///   snapshots/<report_id>.txt    optional before-fix file listing per report
///   api_catalog.json             optional ApiCatalog
/// A report may also carry an inline "snapshot" array. Without either, the
/// snapshot is every .java file under src/.
struct BugDataset {
    std::string name;
    std::vector<BugReport> reports;  // ascending report_time, then id
    std::map<std::string, std::string> sources;
    std::map<std::string, std::set<std::string>> snapshots;
    ApiCatalog catalog;

    std::set<std::string> snapshot_for(const BugReport& report) const;
};

BugDataset load_bug_dataset(const std::filesystem::path& dir);

ApiCatalog load_api_catalog(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace seir
