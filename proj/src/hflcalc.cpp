#include "hfl/hflcalc.hpp"

#include <algorithm>

namespace hfl {

namespace {

int isum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

std::vector<int> neg(std::vector<int> v) {
    for (int& x : v) x = -x;
    return v;
}

int abs_int(const Int& c) { return static_cast<int>(c < 0 ? Int(-c) : c); }

void require_nonsplit(const MultiLaurent& delta) {
    if (delta.is_zero()) throw precondition_error("split link: Alexander polynomial vanishes");
}

std::string vs_key(int d, const std::vector<int>& h2) {
    std::string s = "d=" + std::to_string(d) + " h=(";
    for (size_t i = 0; i < h2.size(); ++i) s += (i ? "," : "") + half_str(h2[i]);
    return s + ")";
}

std::map<int, int> without_zeros(std::map<int, int> m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

}

ComponentData unknot_component() {
    ComponentData c;
    c.tau = 0;
    c.knot.free = {{0, 0}};
    return c;
}

ComponentData thin_component(const MultiLaurent& delta, int sigma) {
    if (delta.nvars() != 1) throw std::invalid_argument("component polynomial must be one-variable");
    require_nonsplit(delta);
    if (sigma % 2) throw std::invalid_argument("knot signature must be even");
    ComponentData c;
    c.tau = -sigma / 2;
    std::map<int, int> r; // s -> rank
    for (auto& [e, a] : delta.terms()) {
        if (e[0] % 2) throw std::invalid_argument("knot polynomial has half-integer exponents");
        r[e[0] / 2] = abs_int(a);
    }
    if (r[c.tau] < 1) throw precondition_error("component knot is not thin: no generator at tau");
    r[c.tau] -= 1;
    c.knot.free = {{0, 2 * c.tau}};
    int hi = r.rbegin()->first, lo = r.begin()->first;
    int carry = 0; // bars ending at s coming from s+1
    for (int s = hi; s >= lo; --s) {
        int b = r.count(s) ? r[s] - carry : -carry;
        if (b < 0) throw precondition_error("component knot is not thin");
        for (int k = 0; k < b; ++k) c.knot.bars.push_back({Kind::E, s + sigma / 2, 1, {2 * s}});
        carry = b;
    }
    if (carry) throw precondition_error("component knot is not thin");
    std::sort(c.knot.bars.begin(), c.knot.bars.end());
    return c;
}

ComponentData component_data(const LinkDiagram& d, int comp) {
    LinkDiagram k = sublink(d, comp);
    if (k.crossings.empty()) return unknot_component();
    return thin_component(multivariable_alexander(k).delta, signature(k));
}

MultiGradedVS thin_table(const MultiLaurent& delta, int sigma) {
    require_nonsplit(delta);
    int l = delta.nvars();
    MultiLaurent p = l > 1 ? spin_product(l) * delta : delta;
    MultiGradedVS v;
    v.l = l;
    for (auto& [e, a] : p.terms()) {
        int num = isum(e) + sigma - l + 1;
        if (num % 2) throw std::invalid_argument("grading parity mismatch between Delta and sigma");
        v.add(num / 2, e, abs_int(a));
    }
    return v;
}

MultiGradedVS alternating_table(const LinkDiagram& d) {
    auto cl = classify(d);
    if (d.crossings.empty() && d.ncomp() == 1) return thin_table(MultiLaurent::constant(1, 1), 0);
    if (!cl.connected_projection) throw precondition_error("split link: disconnected projection");
    if (!cl.alternating_projection) throw precondition_error("non-alternating projection");
    return thin_table(multivariable_alexander(d).delta, signature(d));
}

HFLReport hfl_alternating(const LinkDiagram& d) {
    if (d.ncomp() == 1) throw precondition_error("single component: use the knot computation");
    auto cl = classify(d);
    if (!cl.connected_projection) throw precondition_error("split link: disconnected projection");
    if (!cl.alternating_projection) throw precondition_error("non-alternating projection");
    HFLReport r;
    r.delta = multivariable_alexander(d).delta;
    require_nonsplit(r.delta);
    r.sigma = signature(d);
    r.l = d.ncomp();
    r.linking = linking_matrix(d);
    r.table = thin_table(r.delta, r.sigma);
    r.euler = r.table.euler();
    r.euler_ok = verify_euler_hat(r.table, r.delta).ok;
    r.symmetry_ok = verify_symmetry(r.table).ok;
    return r;
}

MultiGradedVS hfk_alternating_knot(const LinkDiagram& d) {
    if (d.ncomp() != 1) throw precondition_error("knot computation needs a single component");
    return alternating_table(d);
}

int HFKTable::total() const {
    int t = 0;
    for (auto& [k, r] : ranks) t += r;
    return t;
}

HFKTable collapse_to_hfk(const MultiGradedVS& v) {
    HFKTable t;
    for (auto& [k, r] : v.ranks) t.ranks[{isum(k.second), 2 * k.first + v.l - 1}] += r;
    return t;
}

VerifyResult verify_euler_hat(const MultiGradedVS& v, const MultiLaurent& delta) {
    if (delta.nvars() != v.l) return {false, "variable count differs from table"};
    MultiLaurent want = v.l > 1 ? spin_product(v.l) * delta : delta;
    MultiLaurent got = v.euler();
    if (equal_up_to_sign(got, want)) return {true, ""};
    return {false, "euler " + got.str() + " vs " + want.str()};
}

VerifyResult verify_euler_minus(const MultiGradedVS& v, const MultiLaurent& delta, int N) {
    if (N < 1) throw std::invalid_argument("depth must be at least 1");
    if (delta.nvars() != v.l) return {false, "variable count differs from table"};
    int l = v.l;
    MultiLaurent q = v.euler();
    std::vector<int> lo(l);
    for (int i = 0; i < l; ++i) {
        auto st = series_quotient(q, i, N);
        q = st.poly;
        lo[i] = st.min_e2;
    }
    MultiLaurent t;
    if (l == 1) {
        t = series_quotient(delta, 0, N).poly;
    } else {
        t = delta.shifted(std::vector<int>(l, 1));
        for (int i = 0; i < l; ++i) t = truncate_below(t, i, lo[i]);
    }
    if (equal_up_to_sign(q, t)) return {true, ""};
    return {false, "series " + q.str() + " vs " + t.str()};
}

VerifyResult verify_symmetry(const MultiGradedVS& v) {
    for (auto& [k, r] : v.ranks) {
        int s = isum(k.second);
        if (s % 2) return {false, "odd grading shift at " + vs_key(k.first, k.second)};
        int other = v.rank(k.first - s, neg(k.second));
        if (other != r)
            return {false, vs_key(k.first, k.second) + " has rank " + std::to_string(r) + ", partner has " +
                               std::to_string(other)};
    }
    return {true, ""};
}

VerifyResult check_component_projections(const FilteredComplex& c, int n,
                                         const std::array<ComponentData, 2>& comps) {
    for (int i = 0; i < 2; ++i) {
        // dropping coordinate 1-i leaves the filtration of component i
        KnotBars got = barcodes(component_homology(c, 1 - i));
        KnotBars want = tensor_two_step(comps[i].knot, n);
        if (!(got == want)) return {false, "component " + std::to_string(i) + " projection differs"};
    }
    return {true, ""};
}

VerifyResult check_total_rank_two(const FilteredComplex& c) {
    auto t = without_zeros(total_homology(c));
    int tot = 0;
    for (auto& [d, r] : t) tot += r;
    if (tot != 2) return {false, "total homology rank " + std::to_string(tot)};
    if (t.size() != 2 || t.rbegin()->first - t.begin()->first != 1)
        return {false, "total homology not in two consecutive gradings"};
    return {true, ""};
}

CFL2Result two_component_cfl(const MultiLaurent& delta, int sigma, int n, const std::array<ComponentData, 2>& comps) {
    if (delta.nvars() != 2) throw std::invalid_argument("two-component data needs a two-variable polynomial");
    if (sigma % 2 == 0) throw std::invalid_argument("two-component signature must be odd");
    MultiGradedVS table = thin_table(delta, sigma);
    int c = (sigma - 1) / 2;
    // thin placement: d = (h0+h1)/2 + c, doubled coordinates
    auto level = [&](int a2, int b2) { return (a2 + b2) / 2 + c; };
    std::array<KnotBars, 2> want = {tensor_two_step(comps[0].knot, n), tensor_two_step(comps[1].knot, n)};
    std::vector<Summand> out;
    for (auto& b : want[0].bars) {
        int a2 = b.shift2[0], b2 = 2 * (b.d - c) - a2;
        out.push_back({Kind::V, b.d, b.m, {a2, b2}});
    }
    for (auto& b : want[1].bars) {
        int b2 = b.shift2[0], a2 = 2 * (b.d - c) - b2;
        out.push_back({Kind::H, b.d, b.m, {a2, b2}});
    }
    for (int i = 0; i < 2; ++i) {
        auto& f = want[i].free;
        if (f.size() != 2 || f[1].first - f[0].first != 1 || f[0].second != f[1].second)
            throw precondition_error("component data does not give one free pair");
    }
    int top = want[0].free[1].first;
    if (want[1].free[1].first != top) throw precondition_error("component free generators at different gradings");
    int al2 = want[0].free[0].second, be2 = want[1].free[0].second;
    if ((al2 + be2) % 2) throw precondition_error("component filtrations off the lattice");
    int S = comps[0].tau + comps[1].tau + n + c;
    int my = (al2 + be2) / 2 + c - top; // Y index at the top grading
    if (my != S) throw precondition_error("free generators disagree with tau and linking data");
    if (S >= 0) {
        out.push_back({Kind::Y, top, my, {al2 - 2 * my, be2 - 2 * my}});
        out.push_back({Kind::Y, top - 1, my + 1, {al2 - 2 * (my + 1), be2 - 2 * (my + 1)}});
    } else {
        out.push_back({Kind::X, top, -S, {al2, be2}});
        out.push_back({Kind::X, top - 1, -S - 1, {al2, be2}});
    }

    MultiGradedVS rest = table;
    for (auto& s : out) {
        FilteredComplex p = build_summand(s);
        for (auto& g : p.gens) rest.add(g.d, g.h2, -1);
    }
    for (auto& [k, r] : rest.ranks)
        if (r < 0) throw precondition_error("constraints unsatisfiable: summands exceed the table at " + vs_key(k.first, k.second));
    while (!rest.ranks.empty()) {
        auto it = std::min_element(rest.ranks.begin(), rest.ranks.end(),
                                   [](auto& x, auto& y) { return x.first.second < y.first.second; });
        auto h = it->first.second;
        Summand b{Kind::B, it->first.first, 0, h};
        if (b.d != level(h[0], h[1])) throw precondition_error("constraints unsatisfiable: off-diagonal cell");
        for (auto& g : build_summand(b).gens) {
            if (rest.rank(g.d, g.h2) < 1)
                throw precondition_error("constraints unsatisfiable: leftover cells do not form boxes");
            rest.add(g.d, g.h2, -1);
        }
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());

    CFL2Result res;
    res.summands = out;
    res.complex = from_summands(out);
    res.complex.parity = {((n % 2) + 2) % 2, ((n % 2) + 2) % 2};
    if (auto v = validate(res.complex)) throw std::logic_error("solver produced an invalid complex: " + v->detail);
    if (assoc_graded_homology(res.complex) != table) throw std::logic_error("solver output misses the graded table");
    if (auto v = check_component_projections(res.complex, n, comps); !v.ok) throw std::logic_error(v.detail);
    if (auto v = check_total_rank_two(res.complex); !v.ok) throw std::logic_error(v.detail);
    return res;
}

CFL2Result two_component_cfl(const LinkDiagram& d) {
    if (d.ncomp() != 2) throw precondition_error("two-component link required");
    auto r = hfl_alternating(d);
    return two_component_cfl(r.delta, r.sigma, r.linking.lk[0][1], {component_data(d, 0), component_data(d, 1)});
}

KunnethResult kunneth(const LinkDiagram& d1, const LinkDiagram& d2, int c1, int c2) {
    auto v1 = alternating_table(d1), v2 = alternating_table(d2);
    auto sum = connected_sum(d1, d2, c1, c2);
    KunnethResult r;
    r.direct = alternating_table(sum.diagram);
    MultiGradedVS t = tensor_graded(v1, v2, c1, c2);
    std::vector<int> comp_of; // tensor coordinate -> sum component
    for (int i = 0; i < v1.l; ++i) comp_of.push_back(sum.map1[i]);
    for (int j = 0; j < v2.l; ++j)
        if (j != c2) comp_of.push_back(sum.map2[j]);
    std::vector<int> perm(t.l);
    for (int k = 0; k < t.l; ++k) perm[comp_of[k]] = k;
    r.predicted = permute(t, perm);
    return r;
}

nlohmann::json to_json(const HFKTable& t) {
    nlohmann::json j;
    j["ranks"] = nlohmann::json::array();
    for (auto& [k, r] : t.ranks) j["ranks"].push_back({{"s2", k.first}, {"d2", k.second}, {"rank", r}});
    return j;
}

nlohmann::json to_json(const HFLReport& r) {
    nlohmann::json j;
    j["table"] = to_json(r.table);
    j["euler"] = to_json(r.euler);
    j["delta"] = to_json(r.delta);
    j["symmetry_ok"] = r.symmetry_ok;
    j["euler_ok"] = r.euler_ok;
    j["sigma"] = r.sigma;
    j["l"] = r.l;
    j["linking"] = r.linking.lk;
    return j;
}

}
