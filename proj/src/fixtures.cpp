#include "hfl/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef HFL_FIXTURE_DIR
#define HFL_FIXTURE_DIR "fixtures"
#endif

namespace fs = std::filesystem;

namespace hfl {

std::string fixture_dir() {
    if (const char* e = std::getenv("HFL_CORPUS_DIR"); e && *e) return e;
    return HFL_FIXTURE_DIR;
}

std::vector<std::string> fixture_names(const std::string& dir) {
    std::vector<std::string> out;
    if (!fs::is_directory(dir)) return out;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

Fixture fixture_from_json(const std::string& name, const nlohmann::json& j) {
    Fixture f;
    f.name = name;
    f.raw = j;
    f.complex = complex_from_json(j);
    if (j.contains("meta")) {
        auto& m = j["meta"];
        f.linking = m.value("linking", 0);
        if (m.contains("components")) {
            auto c = m["components"].get<std::vector<std::string>>();
            if (c.size() != 2) throw std::invalid_argument("fixture " + name + " must name two components");
            f.components = {c[0], c[1]};
        }
        f.link = m.value("link", std::string());
        f.reversed = m.value("reversed", -1);
        if (m.contains("e2_collapsed")) f.e2_collapsed = m["e2_collapsed"].get<bool>();
        if (m.contains("summands")) f.summands = m["summands"].get<std::vector<std::string>>();
    }
    return f;
}

Fixture load_fixture(const std::string& name, const std::string& dir) {
    fs::path p = fs::path(dir) / (name + ".json");
    std::ifstream in(p);
    if (!in) throw std::invalid_argument("no fixture named " + name + " in " + dir);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("fixture " + name + ": " + e.what());
    }
    return fixture_from_json(name, j);
}

std::optional<std::string> fixture_for(const std::string& corpus_name) {
    if (corpus_name == "hopf_plus" || corpus_name == "hopf_minus" || corpus_name == "L7n1" || corpus_name == "L7n2")
        return corpus_name;
    for (int n = 2; n <= 4; ++n)
        if (corpus_name == "torus_2_2n(" + std::to_string(n) + ")") return "H" + std::to_string(n);
    return std::nullopt;
}

ComponentData component_by_name(const std::string& knot) {
    if (knot == "unknot") return unknot_component();
    LinkDiagram k = corpus(knot);
    if (k.ncomp() != 1) throw std::invalid_argument(knot + " is not a knot");
    return component_data(k, 0);
}

std::array<ComponentData, 2> fixture_components(const Fixture& f) {
    if (f.components[0].empty()) throw std::invalid_argument("fixture " + f.name + " has no component data");
    return {component_by_name(f.components[0]), component_by_name(f.components[1])};
}

LinkDiagram fixture_link(const Fixture& f) {
    if (f.link.empty()) throw std::invalid_argument("fixture " + f.name + " names no link");
    LinkDiagram d = corpus(f.link);
    return f.reversed >= 0 ? reverse(d, f.reversed) : d;
}

}
