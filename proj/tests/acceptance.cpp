// Acceptance run: one PASS/FAIL line per criterion.
// --expect-fail N[,M...] makes the exit status 0 exactly when the failing set is the listed one.

#include "hfl/checks.hpp"
#include "hfl/heegaard0.hpp"
#include "random_complexes.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace hfl;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::vector<std::string> strs(std::vector<Summand> s) {
    std::sort(s.begin(), s.end());
    std::vector<std::string> r;
    for (auto& x : s) r.push_back(x.str());
    return r;
}

Summand sm(Kind k, int d, int m, std::vector<int> sh) { return {k, d, m, std::move(sh)}; }

std::vector<std::string> alternating_corpus(int min_comp = 1) {
    std::vector<std::string> r;
    for (auto& n : corpus_names()) {
        auto d = corpus(n);
        if (d.ncomp() >= min_comp && classify(d).alternating_projection) r.push_back(n);
    }
    return r;
}

bool consecutive_rank_two(const std::map<int, int>& th) {
    std::vector<int> ds;
    for (auto [d, r] : th)
        for (int i = 0; i < r; ++i) ds.push_back(d);
    return ds.size() == 2 && std::abs(ds[0] - ds[1]) == 1;
}

Outcome c1() {
    Outcome o;
    auto r = hfl_alternating(corpus("hopf_plus"));
    MultiGradedVS want;
    want.l = 2;
    want.add(0, {1, 1}, 1);
    want.add(-1, {1, -1}, 1);
    want.add(-1, {-1, 1}, 1);
    want.add(-2, {-1, -1}, 1);
    if (r.table != want) o.fail("Hopf+ table differs");
    auto p = two_component_cfl(corpus("hopf_plus"));
    if (strs(p.summands) != strs({sm(Kind::Y, 0, 0, {1, 1}), sm(Kind::Y, -1, 1, {-1, -1})}))
        o.fail("Hopf+ decomposition differs");
    auto m = two_component_cfl(corpus("hopf_minus"));
    if (strs(m.summands) != strs({sm(Kind::X, 0, 1, {-1, -1}), sm(Kind::X, -1, 0, {-1, -1})}))
        o.fail("Hopf- decomposition differs");
    return o;
}

Outcome c2() {
    Outcome o;
    auto delta = [](const std::string& n) { return multivariable_alexander(corpus(n)).delta; };
    if (delta("unknot") != MultiLaurent::constant(1, 1)) o.fail("unknot");
    if (delta("hopf_plus") != MultiLaurent::constant(2, 1)) o.fail("hopf_plus");
    if (delta("hopf_minus") != MultiLaurent::constant(2, 1)) o.fail("hopf_minus");
    auto k = MultiLaurent::monomial(1, {2}) - MultiLaurent::constant(1, 1) + MultiLaurent::monomial(1, {-2});
    if (!equal_up_to_sign(delta("trefoil_right"), k)) o.fail("trefoil");
    for (int n = 2; n <= 4; ++n) {
        // closed form: S^{(n-1)/2} T^{(1-n)/2} sum_{i<n} (S^{-1}T)^i
        MultiLaurent want(2);
        for (int i = 0; i < n; ++i) want.add_term({n - 1 - 2 * i, 1 - n + 2 * i}, 1);
        auto got = multivariable_alexander(torus_2_2n(n)).delta;
        if (!equal_up_to_unit(got, want))
            o.fail("torus_2_2n(" + std::to_string(n) + "): computed " + got.str() + ", closed form " + want.str());
    }
    return o;
}

Outcome c3() {
    Outcome o;
    std::vector<std::pair<std::string, int>> want = {
        {"hopf_plus", -1}, {"hopf_minus", 1}, {"trefoil_right", -2}, {"torus_2_2n(2)", -3}};
    for (auto& [n, s] : want) {
        int got = signature(corpus(n));
        if (got != s) o.fail(n + ": " + std::to_string(got));
    }
    return o;
}

Outcome c4() {
    Outcome o;
    for (auto& n : alternating_corpus()) {
        auto d = corpus(n);
        auto delta = multivariable_alexander(d).delta;
        auto t = alternating_table(d);
        if (!verify_euler_hat(t, delta).ok) o.fail(n + ": euler");
        auto s = verify_symmetry(t);
        if (!s.ok) o.fail(n + ": symmetry " + s.detail);
    }
    auto t = assoc_graded_homology(load_fixture("L7n2").complex);
    auto e = verify_euler_hat(t, multivariable_alexander(corpus("L7n2")).delta);
    if (!e.ok) o.fail("7^2_8: " + e.detail);
    if (!verify_symmetry(t).ok) o.fail("7^2_8 symmetry");
    return o;
}

Outcome c5() {
    Outcome o;
    for (auto& n : alternating_corpus()) {
        auto d = corpus(n);
        auto r = verify_euler_minus(alternating_table(d), multivariable_alexander(d).delta, 6);
        if (!r.ok) o.fail(n + ": " + r.detail);
    }
    return o;
}

Outcome c6() {
    Outcome o;
    for (auto n : {"hopf_plus", "hopf_minus", "torus_2_2n(2)", "torus_2_2n(3)", "torus_2_2n(4)", "two_bridge(8,3)"}) {
        auto pq = *heegaard_params(n);
        auto h = assoc_graded_homology(complex_from_diagram(two_bridge_diagram(pq.first, pq.second)));
        if (h != hfl_alternating(corpus(n)).table) o.fail(n);
    }
    return o;
}

MultiGradedVS table_7n2() {
    MultiGradedVS w;
    w.l = 2;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j) {
            int a = std::abs(i) + std::abs(j);
            w.add(i + j, {2 * i, 2 * j}, a == 0 ? 4 : a == 1 ? 2 : 1);
        }
    return w;
}

MultiGradedVS table_7n1() {
    MultiGradedVS w;
    w.l = 2;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}, {1, 2}, {0, -1}, {0, -2}, {-1, -1}, {-1, -2}})
        w.add(i + j - 3, {2 * i, 2 * j}, 1);
    w.add(-2, {0, 0}, 1);
    w.add(-3, {0, 0}, 1);
    return w;
}

Outcome c7() {
    Outcome o;
    auto l8 = load_fixture("L7n2"), l7 = load_fixture("L7n1"), l7r = load_fixture("L7n1_reversed");
    if (assoc_graded_homology(l8.complex) != table_7n2()) o.fail("7^2_8 table");
    if (assoc_graded_homology(l7.complex) != table_7n1()) o.fail("7^2_7 table");
    MultiGradedVS rev;
    rev.l = 2;
    for (auto& [k, n] : table_7n1().ranks) rev.add(k.first - k.second[0] + 2, {-k.second[0], k.second[1]}, n);
    if (assoc_graded_homology(l7r.complex) != rev) o.fail("7^2_7 reversed table");
    for (auto* f : {&l8, &l7, &l7r}) {
        if (auto v = validate(f->complex)) o.fail(f->name + " invalid: " + v->detail);
        if (!consecutive_rank_two(total_homology(f->complex))) o.fail(f->name + " total homology");
    }
    for (auto* f : {&l7, &l7r}) {
        try {
            decompose(f->complex);
            o.fail(f->name + " decomposed");
        } catch (const not_e2_collapsed& e) {
            if (std::string(e.what()).find("not E2-collapsed") == std::string::npos) o.fail(e.what());
        }
    }
    try {
        if (decompose(l8.complex).size() != 6) o.fail("7^2_8 summand count");
    } catch (const std::exception& e) {
        o.fail(std::string("7^2_8: ") + e.what());
    }
    return o;
}

// every two-component complex: solver outputs for the alternating corpus, and the fixtures
struct TwoComp {
    std::string name;
    FilteredComplex c;
    int n;
    std::array<ComponentData, 2> comps;
    MultiGradedVS table;
};

std::vector<TwoComp> two_component_complexes() {
    std::vector<TwoComp> r;
    for (auto& n : alternating_corpus(2)) {
        auto d = corpus(n);
        if (d.ncomp() != 2) continue;
        r.push_back({n, two_component_cfl(d).complex, linking_matrix(d).lk[0][1],
                     {component_data(d, 0), component_data(d, 1)}, hfl_alternating(d).table});
    }
    for (auto& n : fixture_names()) {
        auto f = load_fixture(n);
        r.push_back({"fixture:" + n, f.complex, f.linking, fixture_components(f), assoc_graded_homology(f.complex)});
    }
    return r;
}

Outcome c8() {
    Outcome o;
    for (auto& t : two_component_complexes()) {
        auto v = check_component_projections(t.c, t.n, t.comps);
        if (!v.ok) o.fail(t.name + ": " + v.detail);
    }
    // unknot component: rank 2 at n/2
    for (auto n : {"hopf_plus", "H2", "H3", "H4"}) {
        auto f = load_fixture(n);
        for (int i = 0; i < 2; ++i) {
            auto t = assoc_graded_homology(component_homology(f.complex, i));
            bool ok = t.total() == 2;
            for (auto& [k, r] : t.ranks) ok = ok && k.second[0] == f.linking;
            if (!ok) o.fail(std::string(n) + " projection " + std::to_string(i));
        }
    }
    // trefoil component of 7^2_7: three bars of the 1,1,1 pattern, doubled by M
    auto f = load_fixture("L7n1");
    auto k = barcodes(component_homology(f.complex, 0));
    auto want = tensor_two_step(component_by_name("trefoil_right").knot, f.linking);
    if (!(k == want)) o.fail("7^2_7 trefoil projection");
    return o;
}

Outcome c9() {
    Outcome o;
    for (auto [a, b] : {std::pair{"hopf_plus", "hopf_plus"}, std::pair{"trefoil_right", "hopf_plus"}}) {
        auto r = kunneth(corpus(a), corpus(b), 0, 0);
        if (r.predicted != r.direct) o.fail(std::string(a) + "#" + b);
    }
    return o;
}

Outcome c10() {
    Outcome o;
    for (auto& t : two_component_complexes()) {
        auto pages = spectral_pages(t.c);
        if (pages.front() != t.table) o.fail(t.name + ": E1");
        if (pages.back().total() != 2) o.fail(t.name + ": E_inf rank " + std::to_string(pages.back().total()));
        if (!consecutive_rank_two(total_homology(t.c))) o.fail(t.name + ": total homology");
    }
    return o;
}

Outcome c11() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    for (int it = 0; it < 200; ++it) {
        auto s = testing::random_summands(rng, 20, it % 2);
        auto c = random_basis_change(from_summands(s), rng, 40, true);
        normalize_isolated(s);
        try {
            if (strs(decompose(c)) != strs(s)) o.fail("round trip " + std::to_string(it));
        } catch (const std::exception& e) {
            o.fail("round trip " + std::to_string(it) + ": " + e.what());
        }
    }
    auto euler = [](const std::map<int, int>& m) {
        int e = 0;
        for (auto [d, r] : m) e += d % 2 == 0 ? r : -r;
        return e;
    };
    for (int it = 0; it < 200; ++it) {
        auto c = testing::random_filtered(rng, 40, 1 + it % 3);
        if (validate(c)) {
            o.fail("generator produced an invalid complex");
            continue;
        }
        auto pages = spectral_pages(c);
        int tot = 0;
        for (auto [d, r] : total_homology(c)) tot += r;
        if (euler(pages.front().by_maslov()) != euler(pages.back().by_maslov())) o.fail("euler " + std::to_string(it));
        if (tot != pages.back().total()) o.fail("total " + std::to_string(it));
    }
    return o;
}

}

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string tok;
            while (std::getline(ss, tok, ',')) expected.insert(std::stoi(tok));
        }
    }
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Hopf links: tables and decompositions", c1},
        {"Alexander polynomial fixtures", c2},
        {"signatures", c3},
        {"Euler identity and symmetry", c4},
        {"minus-flavour series identity (N=6)", c5},
        {"Heegaard oracle equals thin tables", c6},
        {"transcribed fixtures", c7},
        {"component projections", c8},
        {"Kunneth formula", c9},
        {"spectral sequence E1 and E_inf", c10},
        {"randomized property suites", c11},
    };
    auto t0 = std::chrono::steady_clock::now();
    std::set<int> failed;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        int n = (int)i + 1;
        if (!o.pass) failed.insert(n);
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << n << "] " << criteria[i].first;
        if (!o.pass) std::cout << ": " << o.detail;
        std::cout << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria passed in " << secs << "s\n";
    if (!expected.empty()) {
        std::cout << (failed == expected ? "failing set matches --expect-fail" : "failing set differs from --expect-fail")
                  << "\n";
        return failed == expected ? 0 : 1;
    }
    return (int)failed.size();
}
