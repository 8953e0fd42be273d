#pragma once

#include "seir/corpus_io.hpp"
#include "seir/extraction.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fixtures {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    explicit TempDir(const std::string& tag = "seir");
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return m_path; }

  private:
    std::filesystem::path m_path;
};

void write_text(const std::filesystem::path& path, const std::string& text);

/// Writes meta.json, description.txt, readme.txt and src/ files for `p`
/// under root/<dir_name>.
void write_project(const std::filesystem::path& root, const std::string& dir_name, const seir::ProjectRecord& p);

/// Writes reports.jsonl, src/ and api_catalog.json. Snapshots are written
/// inline when present in `ds.snapshots`.
void write_bug_dataset(const std::filesystem::path& dir, const seir::BugDataset& ds);

seir::Timestamp at(int y, int m, int d, int hh = 0, int mm = 0, int ss = 0);

/// Six categories of ten projects. Descriptions draw from per-category
/// synonym pools; code shares exact identifiers within a category.
std::vector<seir::ProjectRecord> study_corpus(std::uint64_t seed);

/// Small SWT-like dataset: `n_reports` reports over `n_files` files spread
/// across two years, with fixes, shared timestamps and an API catalog.
seir::BugDataset timeline_dataset(std::uint64_t seed, std::size_t n_reports = 20, std::size_t n_files = 8);

}  // namespace fixtures
