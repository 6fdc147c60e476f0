#pragma once
// Link Floer homology of alternating links from (Delta, sigma), the one-variable
// collapse, Euler/symmetry checks, and the two-component filtered complex.

#include "hfl/alexinv.hpp"
#include "hfl/filtcx.hpp"
#include "hfl/linkdiag.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hfl {

struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ComponentData {
    int tau = 0;
    KnotBars knot; // hat complex of the component knot, filtration doubled
};

ComponentData unknot_component();
// thin knots: tau = -sigma/2 and all bars of length one, read off Delta
ComponentData thin_component(const MultiLaurent& delta, int sigma);
ComponentData component_data(const LinkDiagram& d, int comp);

struct HFLReport {
    MultiGradedVS table;
    MultiLaurent euler;
    MultiLaurent delta;
    bool symmetry_ok = false;
    bool euler_ok = false;
    int sigma = 0;
    int l = 0;
    LinkingData linking;
};

// ranks |a_h| of spin_product(l)*Delta (Delta itself for l = 1) at grading o(h)+(sigma-l+1)/2
MultiGradedVS thin_table(const MultiLaurent& delta, int sigma);

HFLReport hfl_alternating(const LinkDiagram& d);
MultiGradedVS hfk_alternating_knot(const LinkDiagram& d);

// (doubled s, doubled maslov) -> rank
struct HFKTable {
    std::map<std::pair<int, int>, int> ranks;
    int total() const;
    bool operator==(const HFKTable& o) const { return ranks == o.ranks; }
};
HFKTable collapse_to_hfk(const MultiGradedVS& v);

struct VerifyResult {
    bool ok = true;
    std::string detail;
};
VerifyResult verify_euler_hat(const MultiGradedVS& v, const MultiLaurent& delta);
VerifyResult verify_euler_minus(const MultiGradedVS& v, const MultiLaurent& delta, int N);
VerifyResult verify_symmetry(const MultiGradedVS& v);

struct CFL2Result {
    FilteredComplex complex;
    std::vector<Summand> summands;
};
CFL2Result two_component_cfl(const MultiLaurent& delta, int sigma, int n,
                             const std::array<ComponentData, 2>& comps);
CFL2Result two_component_cfl(const LinkDiagram& d);

// checks on any two-component complex against its component data and linking number
VerifyResult check_component_projections(const FilteredComplex& c, int n,
                                         const std::array<ComponentData, 2>& comps);
// total homology of rank 2 in two consecutive gradings
VerifyResult check_total_rank_two(const FilteredComplex& c);

struct KunnethResult {
    MultiGradedVS predicted;
    MultiGradedVS direct;
};
// tables of d1, d2 and their connected sum along c1, c2, in the sum's component order
KunnethResult kunneth(const LinkDiagram& d1, const LinkDiagram& d2, int c1, int c2);
// thin table for any alternating diagram, l = 1 included
MultiGradedVS alternating_table(const LinkDiagram& d);

nlohmann::json to_json(const HFKTable& t);
nlohmann::json to_json(const HFLReport& r);

}
