#pragma once
// Run configuration echoing and JSON/CSV report emission.  Numbers are
// serialized as 17-significant-digit strings so consumers never re-round.

#include <json.hpp>

#include <string>
#include <vector>

namespace rslab::report {

using Json = nlohmann::json;

std::string fmt17(double v);

struct RunConfig {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;  // echoed verbatim
    std::string output_path;  // empty -> stdout only
    std::string cache_dir;
    std::uint64_t seed = 0;
    int jobs = 0;

    Json to_json() const;
};

// assembles {schema, version, config, payload, timings} and writes
// <output>.json; returns the document
Json emit(const RunConfig& cfg, const Json& payload, double wall_seconds);

// CSV helper: header + rows of preformatted cells
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

constexpr const char* kVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

}  // namespace rslab::report
