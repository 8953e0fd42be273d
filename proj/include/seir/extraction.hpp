#pragma once

#include "seir/document.hpp"
#include "seir/pipeline.hpp"

#include <chrono>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seir {

using Timestamp = std::chrono::sys_seconds;

struct SourceFile {
    std::string path;
    std::string text;
};

struct ProjectRecord {
    std::string project_id;
    std::set<std::string> categories;
    std::string description;
    std::string readme;
    std::vector<SourceFile> source_files;
};

struct BugReport {
    std::string report_id;
    std::string summary;
    std::string description;
    Timestamp report_time{};
    /// Files modified or deleted by the fix commit.
    std::set<std::string> fixed_files;
    /// Files the fix commit added; kept for audit, never ground truth.
    std::set<std::string> added_files;
};

/// Names found by a surface scan of Java source. Every field is a multiset
/// stored as a sorted vector so equal multisets compare equal.
struct ExtractedCodeFacts {
    std::vector<std::string> declared_methods;
    std::vector<std::string> declared_classes;
    std::vector<std::string> imported_packages;
    std::vector<std::string> used_classes;
    std::vector<std::string> api_classes;

    bool operator==(const ExtractedCodeFacts&) const = default;
};

/// Scans one compilation unit. `origin` names the file in error messages.
/// Throws ExtractionError on binary or non-UTF-8 input.
ExtractedCodeFacts extract_java_facts(std::string_view source, std::string_view origin = "<memory>");

/// Facts aggregated over several files. api_classes is recomputed against the
/// union of declared classes, so a class declared in any file is never an API.
ExtractedCodeFacts merge_facts(const std::vector<ExtractedCodeFacts>& parts);

/// Convenience: scan and merge every file of a project.
ExtractedCodeFacts extract_project_facts(const std::vector<SourceFile>& files);

/// Builds one of the five project artifact documents. doc_id is
/// "<project_id>:<kind>". A missing artifact yields an empty, flagged document.
Document project_artifact_document(const ProjectRecord& project, DocumentKind kind, const PipelineConfig& config);

/// Same, reusing facts already extracted for the project.
Document project_artifact_document(const ProjectRecord& project, DocumentKind kind, const ExtractedCodeFacts& facts,
                                   const PipelineConfig& config);

/// Query document for a bug report: summary and description concatenated,
/// processed with the code branch. Throws DataError if both are empty.
Document bug_query_document(const BugReport& report, const PipelineConfig& config);

/// Relevance sets keyed by query id.
struct GroundTruth {
    std::map<std::string, std::set<std::string>> relevant;
    /// Queries dropped before evaluation with the reason.
    std::map<std::string, std::string> excluded;

    std::size_t total_relevant(const std::string& query_id) const;
};

struct GroundTruthEntry {
    std::set<std::string> relevant;
    std::string excluded_reason;

    bool excluded() const { return relevant.empty(); }
};

/// relevant = (modified + deleted) intersected with the before-fix snapshot.
GroundTruthEntry bug_ground_truth(const BugReport& report, const std::set<std::string>& snapshot);

}  // namespace seir
