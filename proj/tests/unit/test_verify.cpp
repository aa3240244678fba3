#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "icosa/errors.hpp"
#include "icosa/verify.hpp"

using namespace icosa;

namespace {

// The ledger without wall-clock fields.
nlohmann::json stable(nlohmann::json j) {
    for (auto& e : j["entries"]) {
        e.erase("seconds");
        for (auto& c : e["checks"])
            if (c["name"] == "runtime") c.erase("measured");
    }
    return j;
}

} // namespace

TEST_CASE("module filter") {
    const Config cfg;
    const VerifyLedger cov = verify(cfg, "covering_surface");
    REQUIRE(cov.entries.size() == 2);
    CHECK(cov.entries[0].id == "AC05");
    CHECK(cov.entries[1].id == "AC06");
    bool has_genus = false;
    for (const auto& c : cov.entries[1].checks) has_genus = has_genus || (c.name == "genus_riemann_hurwitz" && c.measured == 4);
    CHECK(has_genus);
    CHECK_THROWS_AS(verify(cfg, "nonsense"), InvalidArgument);
    CHECK_THROWS_AS(run_criterion(11, cfg), InvalidArgument);
}

TEST_CASE("single criteria") {
    const Config cfg;
    CHECK(run_criterion(1, cfg).pass);
    CHECK(run_criterion(3, cfg).pass);
    CHECK(run_criterion(8, cfg).pass);
    const LedgerEntry q = run_criterion(9, cfg);
    CHECK_FALSE(q.pass);
}

TEST_CASE("full ledger covers every criterion once and is deterministic") {
    const Config cfg;
    const VerifyLedger a = verify(cfg), b = verify(cfg);
    REQUIRE(a.entries.size() == 10);
    std::set<std::string> ids;
    for (const auto& e : a.entries) ids.insert(e.id);
    CHECK(ids.size() == 10);
    for (std::size_t i = 1; i < a.entries.size(); ++i) CHECK(a.entries[i - 1].id < a.entries[i].id);
    CHECK(stable(to_json(a)) == stable(to_json(b)));
    const auto j = to_json(a);
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("paper_ref"));
        CHECK(e.contains("status"));
        CHECK(e.contains("measured"));
        CHECK(e.contains("tolerance"));
    }
}
