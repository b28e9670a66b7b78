#include "rslab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace rslab::report {

std::string fmt17(double v) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json RunConfig::to_json() const {
    Json j;
    j["command"] = command;
    Json p = Json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["output"] = output_path;
    j["cache_dir"] = cache_dir;
    j["seed"] = seed;
    j["jobs"] = jobs;
    return j;
}

Json emit(const RunConfig& cfg, const Json& payload, double wall_seconds) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["artifact_version"] = kVersion;
    doc["config"] = cfg.to_json();
    doc["payload"] = payload;
    doc["timings"] = Json{{"wall_seconds", wall_seconds}};
    if (!cfg.output_path.empty()) {
        std::filesystem::path p(cfg.output_path);
        if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
        std::ofstream out(cfg.output_path);
        if (!out) throw std::runtime_error("report::emit: cannot write " + cfg.output_path);
        out << doc.dump(2) << "\n";
    }
    return doc;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot write " + path);
    for (size_t i = 0; i < header.size(); ++i) out << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? "," : "\n");
}

}  // namespace rslab::report
