#pragma once

#include <functional>
#include <string>
#include <vector>

#include "charp/report.hpp"

namespace charp {

/// One persisted scan cell: a family member plus the verdicts computed for
/// it.  The digest covers everything except the timestamp, so a record is
/// reproducible from its FamilySpec and command alone.
struct ScanRecord {
    int schema_version = kSchemaVersion;
    std::string timestamp;
    json family;
    std::string command;
    std::vector<json> verdicts;
    std::uint64_t evidence_digest = 0;
    std::string tool_version = kToolVersion;

    json to_json() const;
    static ScanRecord from_json(const json& j);

    /// Identity of the cell: canonical family JSON plus the command.
    std::string identity() const;

    std::uint64_t compute_digest() const;
};

struct ScanOptions {
    std::string out_path;  // JSONL file, appended to; empty = no persistence
    unsigned jobs = 1;
};

struct ScanSummary {
    std::size_t cells_total = 0;
    std::size_t cells_new = 0;
    std::size_t cells_skipped = 0;
    // value -> count over all cells (existing and new), per verdict kind
    json counts;
};

using CellEvaluator = std::function<std::vector<Verdict>(const FamilySpec&)>;

/// Evaluates every cell not already present in the output file (identity
/// match on FamilySpec + command), appending records in ascending cell order
/// regardless of evaluation order.  Cells are pure computations and may be
/// evaluated concurrently; the writer is single-threaded.
ScanSummary run_scan(const std::vector<FamilySpec>& cells, const std::string& command,
                     const ScanOptions& options, const CellEvaluator& evaluate);

/// Reads all records of a JSONL scan file (missing file = empty).
std::vector<ScanRecord> read_scan_file(const std::string& path);

}  // namespace charp
