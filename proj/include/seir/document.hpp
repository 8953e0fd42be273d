#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seir {

/// Artifact kinds. The kind selects the preprocessing branch: code kinds keep
/// the original compound identifier next to its camelCase parts.
enum class DocumentKind {
    description,
    readme,
    method_class,
    import_package,
    api,
    source_file,
    bug_report,
    api_description,
};

inline constexpr std::array<DocumentKind, 5> kProjectArtifactKinds = {
    DocumentKind::description, DocumentKind::readme, DocumentKind::method_class,
    DocumentKind::import_package, DocumentKind::api,
};

std::string_view to_string(DocumentKind kind);
std::optional<DocumentKind> parse_document_kind(std::string_view name);

/// True for kinds processed with the code branch (bug reports count as code
/// because they quote identifiers).
bool uses_code_branch(DocumentKind kind);

/// One artifact after preprocessing; the unit of indexing and querying.
struct Document {
    std::string doc_id;
    DocumentKind kind = DocumentKind::description;
    std::vector<std::string> tokens;
    /// Set when the underlying artifact was absent (e.g. no readme); such
    /// documents stay in the corpus with no tokens.
    bool missing = false;
};

}  // namespace seir
