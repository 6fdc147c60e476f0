#pragma once
// Oriented link diagrams in PD form.
//
// Convention: X[a,b,c,d] lists the four edges around a crossing counterclockwise,
// starting with the incoming under-strand. The under-strand runs a -> c. The
// crossing is positive when the over-strand runs d -> b.
//
//        c
//        ^
//    d --|--> b      (positive: over d->b, under a->c)
//        |
//        a

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hfl {

struct Crossing {
    std::array<int, 4> e{};
    int sign = 0;
    bool over_db = false; // over-strand runs d -> b
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> components; // edges in orientation order, smallest first
    std::vector<int> orientation;              // per component, see orientation_flag()
    std::vector<int> edge_comp;                // edge label -> component, index 0 unused

    int ncomp() const { return (int)components.size(); }
    int nedges() const { return 2 * (int)crossings.size(); }
    bool operator==(const LinkDiagram& o) const;
    bool operator!=(const LinkDiagram& o) const { return !(*this == o); }
    // component of the under / over strand at crossing k
    int under_comp(int k) const { return edge_comp[crossings[k].e[0]]; }
    int over_comp(int k) const { return edge_comp[crossings[k].e[1]]; }
};

struct LinkingData {
    std::vector<std::vector<int>> lk;
    std::vector<int> total;
};

struct Classification {
    int component_count = 0;
    bool connected_projection = false;
    bool alternating_projection = false;
    int writhe = 0;
};

// Builds a diagram from PD tuples. flags give orientations for components that never
// pass under (otherwise +1); for other components they must agree with the PD data.
LinkDiagram from_pd(const std::vector<std::array<int, 4>>& pd,
                    const std::vector<int>& flags = {});
LinkDiagram unknot();

LinkDiagram parse_pd(const std::string& text);
std::string to_pd_string(const LinkDiagram& d);

LinkingData linking_matrix(const LinkDiagram& d);
Classification classify(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse(const LinkDiagram& d, int comp);

// the single component comp, other components erased
LinkDiagram sublink(const LinkDiagram& d, int comp);

struct SumResult {
    LinkDiagram diagram;
    std::vector<int> map1, map2; // component index in the sum, per input component
};
SumResult connected_sum(const LinkDiagram& d1, const LinkDiagram& d2, int c1, int c2);

// Closure of a braid word on n strands; generator +i / -i is sigma_i^{+-1}, 1-based.
LinkDiagram braid_closure(int n, const std::vector<int>& word);

// Two-bridge link b(p,q): alternating four-plat and the bridge projection read off
// the pillowcase model used by the genus-zero Heegaard diagrams.
LinkDiagram two_bridge(int p, int q);
LinkDiagram two_bridge_bridge_projection(int p, int q);
std::vector<int> continued_fraction(int p, int q);

LinkDiagram torus_2_2n(int n);
LinkDiagram corpus(const std::string& name);
std::vector<std::string> corpus_names();
// second presentation of the same link, where one is bundled
std::optional<LinkDiagram> corpus_variant(const std::string& name);

}
