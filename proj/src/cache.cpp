#include "rslab/cache.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "rslab/series.hpp"

namespace fs = std::filesystem;

namespace rslab::cache {

namespace {
const char* kMagic = "# rslab-coeffs v1";

const char* kind_name(FormTable::Kind k) {
    switch (k) {
        case FormTable::Kind::kHolomorphic: return "holomorphic";
        case FormTable::Kind::kEisenstein: return "eisenstein";
        default: return "maass";
    }
}
}  // namespace

std::string table_filename(const FormTable& t) {
    char buf[128];
    switch (t.kind) {
        case FormTable::Kind::kHolomorphic:
            snprintf(buf, sizeof buf, "w%d_i%d.coeffs", t.weight, t.index);
            break;
        case FormTable::Kind::kEisenstein:
            snprintf(buf, sizeof buf, "eis_r%.6f.coeffs", t.r);
            break;
        default:
            snprintf(buf, sizeof buf, "maass_r%.6f_s%d.coeffs", t.r, t.sign);
    }
    return buf;
}

void save(const FormTable& t, const std::string& dir) {
    fs::create_directories(dir);
    std::string path = dir + "/" + table_filename(t);
    std::string tmp = path + ".tmp";
    FILE* f = fopen(tmp.c_str(), "w");
    if (!f) throw std::runtime_error("cache::save: cannot write " + tmp);
    fprintf(f, "%s\n", kMagic);
    fprintf(f, "# kind %s\n", kind_name(t.kind));
    fprintf(f, "# weight %d index %d nmax %" PRId64 "\n", t.weight, t.index, t.n_max());
    if (t.kind != FormTable::Kind::kHolomorphic) fprintf(f, "# r %.17g sign %d\n", t.r, t.sign);
    for (std::int64_t n = 1; n <= t.n_max(); ++n) fprintf(f, "%" PRId64 ",%.17g\n", n, t.lam[n]);
    fclose(f);
    fs::rename(tmp, path);
}

FormTable load(const std::string& path) {
    FILE* f = fopen(path.c_str(), "r");
    if (!f) throw std::runtime_error("cache::load: cannot open " + path);
    FormTable t;
    char line[256];
    if (!fgets(line, sizeof line, f) || std::string(line).find(kMagic) != 0) {
        fclose(f);
        throw std::runtime_error("cache::load: bad magic in " + path);
    }
    std::int64_t nmax = -1;
    while (fgets(line, sizeof line, f)) {
        if (line[0] != '#') break;
        char kindbuf[64];
        if (sscanf(line, "# kind %63s", kindbuf) == 1) {
            std::string kn = kindbuf;
            if (kn == "holomorphic") t.kind = FormTable::Kind::kHolomorphic;
            else if (kn == "eisenstein") t.kind = FormTable::Kind::kEisenstein;
            else if (kn == "maass") t.kind = FormTable::Kind::kMaass;
            else { fclose(f); throw std::runtime_error("cache::load: unknown kind " + kn); }
        }
        sscanf(line, "# weight %d index %d nmax %" SCNd64, &t.weight, &t.index, &nmax);
        sscanf(line, "# r %lf sign %d", &t.r, &t.sign);
    }
    if (nmax < 1) { fclose(f); throw std::runtime_error("cache::load: missing nmax in " + path); }
    t.lam.assign(nmax + 1, 0.0);
    // `line` currently holds the first data row
    do {
        std::int64_t n;
        double v;
        if (sscanf(line, "%" SCNd64 ",%lf", &n, &v) != 2 || n < 1 || n > nmax) {
            fclose(f);
            throw std::runtime_error("cache::load: bad row in " + path);
        }
        t.lam[n] = v;
    } while (fgets(line, sizeof line, f));
    fclose(f);
    if (std::fabs(t.lam[1] - 1.0) > 1e-12)
        throw std::runtime_error("cache::load: table not normalized in " + path);
    return t;
}

FormTable get_or_build(const FormTable& proto, std::int64_t n_max, const std::string& dir) {
    if (!dir.empty()) {
        std::string path = dir + "/" + table_filename(proto);
        if (fs::exists(path)) {
            FormTable t = load(path);
            if (t.n_max() >= n_max) return t;
        }
    }
    FormTable t;
    switch (proto.kind) {
        case FormTable::Kind::kEisenstein:
            t = eisenstein_table(proto.r, n_max);
            break;
        case FormTable::Kind::kHolomorphic: {
            auto forms = hecke_eigenforms(proto.weight, n_max);
            if (proto.index < 0 || proto.index >= (int)forms.size())
                throw std::invalid_argument("get_or_build: no such eigenform index");
            t = table_of(forms[proto.index]);
            if (!dir.empty())
                for (const auto& g : forms) save(table_of(g), dir);
            break;
        }
        default:
            throw std::invalid_argument("get_or_build: maass tables are input-only");
    }
    if (!dir.empty() && proto.kind == FormTable::Kind::kEisenstein) save(t, dir);
    return t;
}

std::vector<HeckeEigenform> cached_eigenforms(int k, std::int64_t n_max, const std::string& dir) {
    int d = series::dim_cusp(k);
    std::vector<HeckeEigenform> out;
    if (d == 0) return out;
    bool all_cached = !dir.empty();
    if (all_cached) {
        for (int i = 0; i < d && all_cached; ++i) {
            FormTable proto;
            proto.kind = FormTable::Kind::kHolomorphic;
            proto.weight = k;
            proto.index = i;
            std::string path = dir + "/" + table_filename(proto);
            if (!fs::exists(path)) { all_cached = false; break; }
            FormTable t = load(path);
            if (t.n_max() < n_max) { all_cached = false; break; }
            HeckeEigenform g;
            g.weight = k;
            g.index = i;
            g.lam = std::move(t.lam);
            out.push_back(std::move(g));
        }
        if (all_cached) return out;
        out.clear();
    }
    auto forms = hecke_eigenforms(k, n_max);
    if (!dir.empty())
        for (const auto& g : forms) save(table_of(g), dir);
    return forms;
}

std::vector<std::string> list_dir(const std::string& dir) {
    std::vector<std::string> files;
    if (!fs::exists(dir)) return files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".coeffs") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

std::vector<VerifyResult> verify_dir(const std::string& dir) {
    std::vector<VerifyResult> out;
    for (const auto& path : list_dir(dir)) {
        VerifyResult r{path, true, 0.0, "ok"};
        try {
            FormTable t = load(path);
            r.residual = hecke_relation_residual(t.lam, std::min<std::int64_t>(t.n_max(), 2000));
            // Eisenstein/maass tables keep the same multiplicative structure
            double tol = (t.kind == FormTable::Kind::kMaass) ? 1e-6 : 1e-9;
            if (r.residual >= tol) {
                r.ok = false;
                r.message = "hecke-relation residual too large";
            }
        } catch (const std::exception& e) {
            r.ok = false;
            r.message = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

int purge_dir(const std::string& dir) {
    int n = 0;
    for (const auto& path : list_dir(dir)) {
        fs::remove(path);
        ++n;
    }
    return n;
}

}  // namespace rslab::cache
