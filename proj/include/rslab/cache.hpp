#pragma once
// Coefficient cache files: versioned text header plus "n,lambda(n)" rows at
// 17 significant digits (round-trips doubles bit-exactly).

#include <string>
#include <vector>

#include "rslab/forms.hpp"

namespace rslab::cache {

std::string table_filename(const FormTable& t);

void save(const FormTable& t, const std::string& dir);
// returns empty optional-equivalent: throws if missing/corrupt
FormTable load(const std::string& path);

// returns the cached table if present with n_max >= wanted, else computes
// via the generators and saves.  kind/weight/index/r taken from `proto`.
FormTable get_or_build(const FormTable& proto, std::int64_t n_max, const std::string& dir);

struct VerifyResult {
    std::string file;
    bool ok;
    double residual;
    std::string message;
};
std::vector<VerifyResult> verify_dir(const std::string& dir);
std::vector<std::string> list_dir(const std::string& dir);
int purge_dir(const std::string& dir);

// convenience: eigenforms of weight k with tables of length n_max, cached
std::vector<HeckeEigenform> cached_eigenforms(int k, std::int64_t n_max, const std::string& dir);

}  // namespace rslab::cache
