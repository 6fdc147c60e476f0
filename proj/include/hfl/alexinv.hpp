#pragma once
// Multivariable Alexander polynomial (Fox calculus) and link signature (Goeritz form).

#include "hfl/laurent.hpp"
#include "hfl/linkdiag.hpp"

#include <utility>
#include <vector>

namespace hfl {

struct WirtingerPresentation {
    int ngens = 0;
    std::vector<std::vector<std::pair<int, int>>> relators; // (generator, +-1) words
    std::vector<int> gen_comp;
};

struct AlexanderResult {
    MultiLaurent delta;
    int deleted_row = 0;
    int deleted_column = 0;
    int divided_var = -1; // variable whose (T-1) factor was removed, -1 for knots
};

WirtingerPresentation wirtinger(const LinkDiagram& d);
// abelianized Fox derivatives, relators x generators
std::vector<std::vector<MultiLaurent>> fox_matrix(const WirtingerPresentation& w, int l);
MultiLaurent determinant(std::vector<std::vector<MultiLaurent>> m);

AlexanderResult multivariable_alexander(const LinkDiagram& d);

struct GoeritzData {
    std::vector<std::vector<int>> matrix; // reduced (one region deleted)
    int correction = 0;
    int signature = 0;
};

// color 0 or 1 picks which checkerboard class supplies the regions
GoeritzData goeritz(const LinkDiagram& d, int color);
int signature(const LinkDiagram& d);
int symmetric_signature(const std::vector<std::vector<int>>& m);

}
