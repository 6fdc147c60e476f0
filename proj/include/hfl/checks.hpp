#pragma once
// Batch invariant suite over the bundled corpus and fixtures.

#include "hfl/fixtures.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hfl {

struct CheckEntry {
    std::string link;
    std::string check;
    bool pass = false;
    std::string detail; // counterexample or error text on failure
};

struct CheckSuiteResult {
    std::vector<CheckEntry> entries; // sorted by (link, check)
    int failures() const;
};

// two-bridge parameters of the heegaard diagram presenting a corpus link, if any
std::optional<std::pair<int, int>> heegaard_params(const std::string& corpus_name);

// the collapsed table's Euler characteristic in one variable, ell components
MultiLaurent hfk_euler(const HFKTable& t, int ell);

std::vector<CheckEntry> check_link(const std::string& name, const LinkDiagram& d);
std::vector<CheckEntry> check_fixture(const Fixture& f);
std::vector<CheckEntry> check_kunneth_pairs();

// target: "all", a corpus name, or a fixture name prefixed "fixture:"
CheckSuiteResult run_checks(const std::string& target);
nlohmann::json to_json(const CheckSuiteResult& r);

}
