#pragma once
// Bundled two-component complexes stored as JSON, addressable by name.

#include "hfl/hflcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfl {

struct Fixture {
    std::string name;
    FilteredComplex complex;
    int linking = 0;
    std::array<std::string, 2> components; // corpus knot names, coordinate order
    std::string link;                      // corpus link presented, empty if none
    int reversed = -1;                     // component of link reversed, -1 for none
    std::optional<bool> e2_collapsed;
    std::vector<std::string> summands;     // expected decomposition, when known
    nlohmann::json raw;
};

// HFL_CORPUS_DIR if set, else the bundled directory
std::string fixture_dir();
std::vector<std::string> fixture_names(const std::string& dir = fixture_dir());
Fixture load_fixture(const std::string& name, const std::string& dir = fixture_dir());
Fixture fixture_from_json(const std::string& name, const nlohmann::json& j);
// fixture holding the complex of a corpus link, if one is bundled
std::optional<std::string> fixture_for(const std::string& corpus_name);
ComponentData component_by_name(const std::string& knot);
std::array<ComponentData, 2> fixture_components(const Fixture& f);
// the corpus link with the fixture's orientation
LinkDiagram fixture_link(const Fixture& f);

}
