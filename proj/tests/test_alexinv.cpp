#include <doctest.h>

#include "hfl/alexinv.hpp"

using namespace hfl;

namespace {

MultiLaurent mono(const Exp2& e, long long c = 1) { return MultiLaurent::monomial((int)e.size(), e, c); }
MultiLaurent delta(const std::string& n) { return multivariable_alexander(corpus(n)).delta; }

}

TEST_CASE("alexander polynomials") {
    CHECK(delta("unknot") == MultiLaurent::constant(1, 1));
    CHECK(delta("hopf_plus") == MultiLaurent::constant(2, 1));
    CHECK(delta("hopf_minus") == MultiLaurent::constant(2, 1));
    auto k = mono({2}) - mono({0}) + mono({-2});
    CHECK(delta("trefoil_right") == k);
    CHECK(delta("trefoil_left") == k);
    CHECK(delta("figure8") == mono({2}) - mono({0}, 3) + mono({-2}));
}

TEST_CASE("torus links T(2,2n)") {
    // positively linked: sum of (ST)^k, centred
    for (int n = 1; n <= 4; ++n) {
        MultiLaurent want(2);
        for (int i = 0; i < n; ++i) want.add_term({n - 1 - 2 * i, n - 1 - 2 * i}, 1);
        CHECK(equal_up_to_sign(multivariable_alexander(torus_2_2n(n)).delta, want));
        MultiLaurent rev(2);
        for (int i = 0; i < n; ++i) rev.add_term({n - 1 - 2 * i, -(n - 1 - 2 * i)}, 1);
        CHECK(equal_up_to_sign(multivariable_alexander(reverse(torus_2_2n(n), 1)).delta, rev));
    }
}

TEST_CASE("two_bridge(8,3) has mixed coefficients") {
    auto d = delta("two_bridge(8,3)");
    auto s = spin_product(2);
    CHECK(equal_up_to_sign(d, s));
    CHECK(equal_up_to_sign(delta("L7n2"), d));
}

TEST_CASE("alexander invariants over the corpus") {
    for (auto& n : corpus_names()) {
        CAPTURE(n);
        auto d = corpus(n);
        auto a = multivariable_alexander(d).delta;
        CHECK(a.nvars() == d.ncomp());
        CHECK(equal_up_to_sign(a.bar(), a));
        auto e = d.ncomp() > 1 ? spin_product(d.ncomp()) * a : a;
        CHECK(equal_up_to_sign(e.bar(), d.ncomp() % 2 && d.ncomp() > 1 ? -e : e));
        CHECK(equal_up_to_unit(multivariable_alexander(mirror(d)).delta, a));
        if (auto v = corpus_variant(n)) CHECK(equal_up_to_unit(multivariable_alexander(*v).delta, a));
    }
}

TEST_CASE("connected sums multiply") {
    auto u = corpus("unknot"), h = corpus("hopf_plus"), t = corpus("trefoil_right");
    auto s1 = connected_sum(u, h, 0, 0);
    CHECK(equal_up_to_unit(multivariable_alexander(s1.diagram).delta, delta("hopf_plus")));
    CHECK(signature(s1.diagram) == signature(h));
    auto s2 = connected_sum(t, h, 0, 0);
    auto want2 = remap_vars(delta("trefoil_right"), {s2.map1[0]}, 2);
    CHECK(equal_up_to_unit(multivariable_alexander(s2.diagram).delta, want2));
    // two multi-component summands pick up the spliced binomial
    auto s3 = connected_sum(h, h, 1, 0);
    Exp2 e(3, 0);
    e[s3.map1[1]] = 1;
    Exp2 f(3, 0);
    f[s3.map1[1]] = -1;
    auto want3 = mono(e) - mono(f);
    CHECK(equal_up_to_unit(multivariable_alexander(s3.diagram).delta, want3));
}

TEST_CASE("split links vanish") {
    auto s = parse_pd("PD[X[1,2,2,1],X[3,4,4,3]]");
    CHECK(s.ncomp() == 2);
    CHECK_FALSE(classify(s).connected_projection);
    CHECK_THROWS_WITH(multivariable_alexander(s), "split link: disconnected projection");
}

TEST_CASE("signatures") {
    CHECK(signature(corpus("hopf_plus")) == -1);
    CHECK(signature(corpus("hopf_minus")) == 1);
    CHECK(signature(corpus("trefoil_right")) == -2);
    CHECK(signature(corpus("trefoil_left")) == 2);
    CHECK(signature(corpus("figure8")) == 0);
    CHECK(signature(corpus("unknot")) == 0);
    for (int n = 1; n <= 4; ++n) CHECK(signature(torus_2_2n(n)) == 1 - 2 * n);
}

TEST_CASE("signature over the corpus") {
    for (auto& n : corpus_names()) {
        CAPTURE(n);
        auto d = corpus(n);
        CHECK(signature(mirror(d)) == -signature(d));
        if (d.crossings.empty()) continue;
        CHECK(goeritz(d, 0).signature == goeritz(d, 1).signature);
        if (auto v = corpus_variant(n)) CHECK(signature(*v) == signature(d));
    }
}

TEST_CASE("symmetric_signature") {
    CHECK(symmetric_signature({{2, 1}, {1, 2}}) == 2);
    CHECK(symmetric_signature({{0, 1}, {1, 0}}) == 0);
    CHECK(symmetric_signature({{-1}}) == -1);
    CHECK(symmetric_signature({}) == 0);
}

TEST_CASE("fox matrix shape") {
    auto w = wirtinger(corpus("trefoil_right"));
    CHECK(w.ngens == 3);
    auto m = fox_matrix(w, 1);
    CHECK(m.size() == w.relators.size());
    CHECK(m[0].size() == 3);
}
