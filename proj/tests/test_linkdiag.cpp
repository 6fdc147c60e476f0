#include <doctest.h>

#include "hfl/linkdiag.hpp"

#include <cstdlib>
#include <stdexcept>

using namespace hfl;

TEST_CASE("parse_pd") {
    auto h = parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]");
    CHECK(h.crossings.size() == 2);
    CHECK(h.ncomp() == 2);
    CHECK(std::abs(linking_matrix(h).lk[0][1]) == 1);
    auto u = parse_pd("U");
    CHECK(u.crossings.empty());
    CHECK(u.ncomp() == 1);
    CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), std::invalid_argument);
    CHECK_THROWS(parse_pd("PD[X[1,2,3,4"));
    CHECK_THROWS(parse_pd("X[1,2,3,4]"));
}

TEST_CASE("linking numbers") {
    CHECK(linking_matrix(corpus("hopf_plus")).lk[0][1] == 1);
    CHECK(linking_matrix(mirror(corpus("hopf_plus"))).lk[0][1] == -1);
    CHECK(linking_matrix(corpus("hopf_minus")).lk[0][1] == -1);
    CHECK(linking_matrix(corpus("L7n2")).lk[0][1] == 0);
    CHECK(std::abs(linking_matrix(corpus("L7n1")).lk[0][1]) == 2);
    for (int n = 1; n <= 4; ++n) CHECK(linking_matrix(torus_2_2n(n)).lk[0][1] == n);
}

TEST_CASE("classify") {
    auto t = classify(corpus("trefoil_right"));
    CHECK(t.alternating_projection);
    CHECK(t.connected_projection);
    CHECK(t.component_count == 1);
    CHECK_FALSE(classify(corpus("L7n2")).alternating_projection);
    CHECK_FALSE(classify(corpus("L7n1")).alternating_projection);
    auto u = classify(parse_pd("U"));
    CHECK(u.alternating_projection);
    CHECK(u.connected_projection);
}

TEST_CASE("corpus entries") {
    CHECK(corpus("torus_2_2n(1)") == corpus("hopf_plus"));
    CHECK(corpus("L7n1").crossings.size() == 7);
    CHECK(corpus("L7n2").crossings.size() == 7);
    CHECK(corpus("L7n2").ncomp() == 2);
    CHECK(corpus("two_bridge(8,3)").ncomp() == 2);
    CHECK(two_bridge(5, 3).ncomp() == 1);
    CHECK_THROWS(corpus("no_such_link"));
    CHECK_THROWS(two_bridge(6, 3));
}

TEST_CASE("corpus invariants") {
    for (auto& n : corpus_names()) {
        CAPTURE(n);
        auto d = corpus(n);
        CHECK(parse_pd(to_pd_string(d)) == d);
        auto lk = linking_matrix(d);
        auto lm = linking_matrix(mirror(d));
        for (int i = 0; i < d.ncomp(); ++i)
            for (int j = 0; j < d.ncomp(); ++j) {
                CHECK(lk.lk[i][j] == lk.lk[j][i]);
                if (i != j) CHECK(lm.lk[i][j] == -lk.lk[i][j]);
            }
        CHECK(mirror(mirror(d)) == d);
        CHECK(classify(mirror(d)).writhe == -classify(d).writhe);
        for (int i = 0; i < d.ncomp(); ++i) {
            CHECK(reverse(reverse(d, i), i) == d);
            auto lr = linking_matrix(reverse(d, i));
            for (int j = 0; j < d.ncomp(); ++j)
                if (j != i) CHECK(lr.lk[i][j] == -lk.lk[i][j]);
            for (int j = 0; j < d.ncomp(); ++j)
                for (int k = 0; k < d.ncomp(); ++k)
                    if (j != i && k != i && j != k) CHECK(lr.lk[j][k] == lk.lk[j][k]);
        }
    }
}

TEST_CASE("connected sum") {
    auto names = std::vector<std::string>{"unknot", "hopf_plus", "trefoil_right", "torus_2_2n(2)"};
    for (auto& a : names)
        for (auto& b : names) {
            CAPTURE(a);
            CAPTURE(b);
            auto d1 = corpus(a), d2 = corpus(b);
            auto s = connected_sum(d1, d2, 0, 0);
            CHECK(s.diagram.ncomp() == d1.ncomp() + d2.ncomp() - 1);
            CHECK(s.map1[0] == s.map2[0]);
            auto c = classify(s.diagram);
            CHECK(c.connected_projection);
            if (classify(d1).alternating_projection && classify(d2).alternating_projection)
                CHECK(c.alternating_projection);
        }
    CHECK_THROWS(connected_sum(corpus("hopf_plus"), corpus("unknot"), 2, 0));
}

TEST_CASE("braid closures") {
    auto t = braid_closure(2, {1, 1, 1});
    CHECK(t.ncomp() == 1);
    CHECK(classify(t).writhe == 3);
    auto h = braid_closure(2, {1, 1});
    CHECK(h.ncomp() == 2);
    CHECK(linking_matrix(h).lk[0][1] == 1);
}

TEST_CASE("continued fractions") {
    auto cf = continued_fraction(8, 3);
    CHECK_FALSE(cf.empty());
    auto a = two_bridge(8, 3), b = two_bridge_bridge_projection(8, 3);
    CHECK(a.ncomp() == b.ncomp());
    CHECK(linking_matrix(a).lk == linking_matrix(b).lk);
}
