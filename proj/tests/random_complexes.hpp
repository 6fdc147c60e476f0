#pragma once

#include "hfl/filtcx.hpp"

#include <random>

namespace hfl::testing {

// E2-collapsed direct sum of up to max_summands model summands, all with the given parity
inline std::vector<Summand> random_summands(std::mt19937_64& rng, int max_summands, int parity) {
    std::uniform_int_distribution<int> count(1, max_summands), kind(0, 4), m(0, 3), d(-3, 3), sh(-3, 3);
    std::vector<Summand> out;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Summand s;
        s.kind = static_cast<Kind>(kind(rng));
        s.d = d(rng);
        s.m = m(rng);
        if ((s.kind == Kind::V || s.kind == Kind::H) && s.m == 0) s.m = 1;
        if (s.kind == Kind::B) s.m = 0;
        s.shift2 = {2 * sh(rng) + parity, 2 * sh(rng) + parity};
        out.push_back(s);
    }
    return out;
}

// arbitrary filtered complex: cancelling pairs with random filtration drops, plus
// isolated cells, then scrambled by filtered changes of basis
inline FilteredComplex random_filtered(std::mt19937_64& rng, int max_gens, int l = 2) {
    std::uniform_int_distribution<int> g(1, max_gens), d(-3, 3), h(-3, 3), drop(0, 2), coin(0, 2);
    FilteredComplex c;
    c.l = l;
    c.parity.assign(l, 0);
    int n = g(rng);
    while (c.size() < n) {
        std::vector<int> h2(l);
        for (auto& x : h2) x = 2 * h(rng);
        int dd = d(rng);
        int x = c.add("g" + std::to_string(c.size()), dd, h2);
        if (c.size() < n && coin(rng)) {
            for (auto& y : h2) y -= 2 * drop(rng);
            int y = c.add("g" + std::to_string(c.size()), dd - 1, h2);
            c.arrow(x, y);
        }
    }
    return random_basis_change(c, rng, 4 * n, false);
}

}
