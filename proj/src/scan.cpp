#include "charp/scan.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace charp {

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

json ScanRecord::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["timestamp"] = timestamp;
    j["family"] = family;
    j["command"] = command;
    j["verdicts"] = verdicts;
    j["evidence_digest"] = evidence_digest;
    j["tool_version"] = tool_version;
    return j;
}

ScanRecord ScanRecord::from_json(const json& j) {
    ScanRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    r.timestamp = j.value("timestamp", "");
    r.family = j.at("family");
    r.command = j.at("command").get<std::string>();
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(v);
    r.evidence_digest = j.value("evidence_digest", std::uint64_t{0});
    r.tool_version = j.value("tool_version", "");
    return r;
}

std::string ScanRecord::identity() const {
    return family.dump() + "|" + command;
}

std::uint64_t ScanRecord::compute_digest() const {
    // everything except the timestamp (and the digest itself)
    json j;
    j["schema_version"] = schema_version;
    j["family"] = family;
    j["command"] = command;
    j["verdicts"] = verdicts;
    j["tool_version"] = tool_version;
    return fnv1a_digest(j.dump());
}

std::vector<ScanRecord> read_scan_file(const std::string& path) {
    std::vector<ScanRecord> records;
    std::ifstream in(path);
    if (!in) return records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed scan record");
        records.push_back(ScanRecord::from_json(j));
    }
    return records;
}

ScanSummary run_scan(const std::vector<FamilySpec>& cells, const std::string& command,
                     const ScanOptions& options, const CellEvaluator& evaluate) {
    ScanSummary summary;
    summary.cells_total = cells.size();

    std::vector<ScanRecord> existing;
    std::set<std::string> seen;
    if (!options.out_path.empty()) {
        existing = read_scan_file(options.out_path);
        for (const auto& r : existing) seen.insert(r.identity());
    }

    // cells still to compute, in ascending cell order
    std::vector<std::size_t> todo;
    std::set<std::string> cell_identities;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        ScanRecord probe;
        probe.family = family_spec_to_json(cells[i]);
        probe.command = command;
        cell_identities.insert(probe.identity());
        if (seen.count(probe.identity()))
            ++summary.cells_skipped;
        else
            todo.push_back(i);
    }

    std::vector<ScanRecord> fresh(todo.size());
    unsigned jobs = std::max(1u, options.jobs);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= todo.size() || failed.load()) return;
            try {
                const FamilySpec& spec = cells[todo[k]];
                std::vector<Verdict> verdicts = evaluate(spec);
                ScanRecord r;
                r.family = family_spec_to_json(spec);
                r.command = command;
                for (const auto& v : verdicts) r.verdicts.push_back(v.to_json());
                r.timestamp = utc_timestamp();
                r.evidence_digest = r.compute_digest();
                fresh[k] = std::move(r);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure = e.what();
                failed.store(true);
                return;
            }
        }
    };

    if (jobs == 1 || todo.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, todo.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error("scan cell failed: " + failure);

    if (!options.out_path.empty() && !fresh.empty()) {
        std::ofstream out(options.out_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot open scan file: " + options.out_path);
        for (const auto& r : fresh) out << r.to_json().dump() << "\n";
    }
    summary.cells_new = fresh.size();

    // counts across all rows of this scan (existing + new)
    json counts = json::object();
    auto tally = [&counts](const ScanRecord& r) {
        for (const auto& v : r.verdicts) {
            std::string key = v.value("kind", std::string("?")) + ":" +
                              v.value("value", std::string("?"));
            counts[key] = counts.value(key, 0) + 1;
        }
    };
    for (const auto& r : existing)
        if (cell_identities.count(r.identity())) tally(r);
    for (const auto& r : fresh) tally(r);
    summary.counts = counts;
    return summary;
}

}  // namespace charp
