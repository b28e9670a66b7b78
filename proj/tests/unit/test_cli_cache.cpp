#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rslab/cache.hpp"
#include "rslab/forms.hpp"
#include "rslab/report.hpp"

using namespace rslab;

TEST_CASE("report emission: byte-identical payloads across runs") {
    report::RunConfig cfg;
    cfg.command = "unit";
    cfg.params = {{"alpha", "1"}, {"beta", report::fmt17(0.1 + 0.2)}};
    cfg.seed = 42;
    report::Json payload{{"value", report::fmt17(1.0 / 3.0)}, {"count", 7}};
    auto d1 = report::emit(cfg, payload, 0.123);
    auto d2 = report::emit(cfg, payload, 9.876);
    d1.erase("timings");
    d2.erase("timings");
    CHECK(d1.dump() == d2.dump());
    // 17-digit strings round-trip doubles exactly
    CHECK(std::stod(report::fmt17(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(std::stod(report::fmt17(-2.5e-300)) == -2.5e-300);
}

TEST_CASE("cache admin: list/verify/purge on an empty and small dir") {
    std::string dir = "/tmp/rslab_cache_admin_test";
    std::filesystem::remove_all(dir);
    CHECK(cache::list_dir(dir).empty());
    CHECK(cache::verify_dir(dir).empty());
    std::filesystem::create_directories(dir);
    FormTable t = eisenstein_table(0.0, 200);
    cache::save(t, dir);
    CHECK(cache::list_dir(dir).size() == 1);
    auto v = cache::verify_dir(dir);
    REQUIRE(v.size() == 1);
    CHECK(v[0].ok);
    CHECK(cache::purge_dir(dir) == 1);
    CHECK(cache::list_dir(dir).empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("get_or_build round trip uses the cache") {
    std::string dir = "/tmp/rslab_cache_roundtrip";
    std::filesystem::remove_all(dir);
    FormTable proto;
    proto.kind = FormTable::Kind::kEisenstein;
    proto.r = 0.0;
    FormTable a = cache::get_or_build(proto, 300, dir);
    // mutate nothing; a second build must load the identical file
    FormTable b = cache::get_or_build(proto, 300, dir);
    REQUIRE(a.n_max() >= 300);
    REQUIRE(b.n_max() >= 300);
    for (std::int64_t n = 1; n <= 300; ++n) CHECK(a.lam[n] == b.lam[n]);
    std::filesystem::remove_all(dir);
}
