#include "charp/report.hpp"

#include <sstream>

namespace charp {

json family_spec_to_json(const FamilySpec& spec) {
    json j;
    j["kind"] = family_kind_name(spec.kind);
    j["p"] = spec.p;
    j["n"] = spec.n;
    j["d"] = spec.d;
    if (spec.lambda) j["lambda"] = *spec.lambda;
    if (spec.seed) j["seed"] = *spec.seed;
    if (!spec.poly_text.empty()) j["poly"] = spec.poly_text;
    return j;
}

FamilySpec family_spec_from_json(const json& j) {
    FamilySpec spec;
    spec.kind = family_kind_from_name(j.at("kind").get<std::string>());
    spec.p = j.at("p").get<std::uint32_t>();
    spec.n = j.at("n").get<std::size_t>();
    spec.d = j.at("d").get<std::uint64_t>();
    if (j.contains("lambda")) spec.lambda = j["lambda"].get<std::uint32_t>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("poly")) spec.poly_text = j["poly"].get<std::string>();
    return spec;
}

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "md") return ReportFormat::Markdown;
    throw std::invalid_argument("unknown report format: " + name);
}

json Report::to_json() const {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["family"] = family;
    j["p"] = p;
    j["n"] = n;
    j["d"] = d;
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(v.to_json());
    j["verdicts"] = vs;
    if (window) j["window"] = *window;
    j["tool_version"] = kToolVersion;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string Report::render(ReportFormat format) const {
    switch (format) {
        case ReportFormat::Json:
            return to_json().dump(2) + "\n";
        case ReportFormat::Csv: {
            std::ostringstream out;
            out << "command,kind,value,positive,p,n,d\n";
            for (const auto& v : verdicts)
                out << csv_escape(command) << "," << verdict_kind_name(v.kind) << ","
                    << csv_escape(v.value) << "," << (v.positive ? "true" : "false") << "," << p
                    << "," << n << "," << d << "\n";
            return out.str();
        }
        case ReportFormat::Markdown: {
            std::ostringstream out;
            out << "## " << command << "\n\n";
            out << "family: `" << family.dump() << "`\n\n";
            out << "| kind | value | positive |\n|---|---|---|\n";
            for (const auto& v : verdicts)
                out << "| " << verdict_kind_name(v.kind) << " | " << v.value << " | "
                    << (v.positive ? "yes" : "no") << " |\n";
            if (window) out << "\nwindow: " << *window << "\n";
            return out.str();
        }
    }
    throw std::logic_error("unknown report format");
}

std::uint64_t fnv1a_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace charp
