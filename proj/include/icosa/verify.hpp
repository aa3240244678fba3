#pragma once

#include <string>
#include <vector>

#include "icosa/config.hpp"
#include "json.hpp"

namespace icosa {

struct SubCheck {
    std::string name;
    bool pass = false;
    nlohmann::json measured;
    std::string tolerance;
};

struct LedgerEntry {
    std::string id;        // "AC01".."AC10"
    std::string module;
    std::string claim;     // the checked statement in plain words
    bool pass = false;
    std::vector<SubCheck> checks;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string note;
};

struct VerifyLedger {
    std::vector<LedgerEntry> entries;  // sorted by id
    bool all_pass() const;
};

// Modules accepted by the filter; an empty filter selects everything.
const std::vector<std::string>& verify_modules();

// Runs the acceptance suite with fixed seeds from the config. Throws
// InvalidArgument for an unknown module name.
VerifyLedger verify(const Config& cfg, const std::string& module_filter = "");

// Runs a single criterion, 1..10.
LedgerEntry run_criterion(int index, const Config& cfg);

nlohmann::json to_json(const LedgerEntry& e);
nlohmann::json to_json(const VerifyLedger& ledger);

} // namespace icosa
