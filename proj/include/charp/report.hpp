#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charp/criteria.hpp"
#include "charp/families.hpp"

namespace charp {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

json family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const json& j);

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat report_format_from_name(const std::string& name);

/// A single-command report.  Field order in the JSON rendering is fixed by
/// the schema: schema_version, command, family, p, n, d, verdicts, window,
/// tool_version.  Rendering is a pure function of the inputs, so identical
/// invocations are byte-identical.
struct Report {
    std::string command;
    json family;
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint64_t d = 0;
    std::vector<Verdict> verdicts;
    std::optional<long long> window;

    json to_json() const;
    std::string render(ReportFormat format) const;
};

/// FNV-1a 64-bit digest of a canonical JSON string.
std::uint64_t fnv1a_digest(const std::string& text);

}  // namespace charp
