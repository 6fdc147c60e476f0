#pragma once
// Genus-zero four-pointed Heegaard diagrams for two-bridge links.
//
// Model: the pillowcase R^2 / <(x,y)->(x+2,y), (x,y)->(x,y+2), (x,y)->(-x,-y)>, with
// basepoints at the four cone points. alpha is the image of y = 1/2, beta the image of
// px + qy = 1/2. alpha meets beta in the 2p points P_t = (t/p, 1/2). Arcs a_t of alpha run
// from P_t to P_{t+1}. Side A of alpha (1/2 < y < 3/2) holds the cone points (0,1),(1,1),
// side B the points (0,0),(1,0).

#include "hfl/filtcx.hpp"

#include <array>
#include <vector>

namespace hfl {

struct SphereDiagram {
    int p = 0, q = 0;                 // q reduced mod 2p
    std::vector<int> alpha_order;     // intersection points along alpha
    std::vector<int> beta_order;      // intersection points along beta
    std::vector<int> sign;            // local intersection sign per point
    int nfaces = 0;
    std::vector<int> face_a, face_b;  // per alpha arc: region on side A / side B
    std::vector<int> corners;         // per region
    std::vector<std::vector<int>> adjacent; // per region, regions across an arc of alpha or beta
    std::array<int, 4> base{};        // regions of w1, z1, w2, z2
    bool degenerate = false;          // p = 1: the one-generator unknot diagram
    int npoints() const { return (int)alpha_order.size(); }
};

struct Domain {
    std::vector<int> n; // multiplicity per region
};

SphereDiagram two_bridge_diagram(int p, int q);

// generators of the periodic domain group (multiplicity zero at every w)
std::vector<Domain> periodic_domains(const SphereDiagram& d);
bool admissibility(const SphereDiagram& d);
// every nonzero domain in the list has both signs
bool admissibility(const std::vector<Domain>& periodic);

// some domain in pi_2(P_x, P_y); forward picks the alpha path of increasing index
Domain connecting_domain(const SphereDiagram& d, int x, int y, bool forward = true);
// four times the Maslov index e(D) + n_x(D) + n_y(D)
int maslov4(const SphereDiagram& d, const Domain& D, int x, int y);
int multiplicity(const Domain& D, int region);
bool boundary_ok(const SphereDiagram& d, const Domain& D, int x, int y);

struct Bigon {
    int from = 0, to = 0;
    Domain domain;
};
// embedded bigons with all multiplicities in {0,1}; avoid lists regions that must have
// multiplicity zero
std::vector<Bigon> embedded_bigons(const SphereDiagram& d, const std::vector<int>& avoid);

FilteredComplex complex_from_diagram(const SphereDiagram& d);
bool oracle_compare(int p, int q);

}
