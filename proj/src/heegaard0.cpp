#include "hfl/heegaard0.hpp"

#include "hfl/hflcalc.hpp"

#include <numeric>
#include <stdexcept>

namespace hfl {

namespace {

int md(int a, int m) { return ((a % m) + m) % m; }

// regions joined across alpha arcs; these classes are the two sides of beta
std::vector<int> beta_sides(const SphereDiagram& d) {
    std::vector<int> comp(d.nfaces, -1);
    int nc = 0;
    for (int f = 0; f < d.nfaces; ++f) {
        if (comp[f] >= 0) continue;
        std::vector<int> st = {f};
        comp[f] = nc;
        while (!st.empty()) {
            int g = st.back();
            st.pop_back();
            for (int s = 0; s < d.npoints(); ++s) {
                int o = d.face_a[s] == g ? d.face_b[s] : d.face_b[s] == g ? d.face_a[s] : -1;
                if (o >= 0 && comp[o] < 0) {
                    comp[o] = nc;
                    st.push_back(o);
                }
            }
        }
        ++nc;
    }
    return comp;
}

std::array<int, 4> quadrants(const SphereDiagram& d, int t) {
    int m = d.npoints(), s = md(t - 1, m);
    return {d.face_a[s], d.face_a[t], d.face_b[t], d.face_b[s]};
}

bool is_corner(const SphereDiagram& d, const Domain& D, int t) {
    auto q = quadrants(d, t);
    int a0 = D.n[q[0]], a1 = D.n[q[1]], b1 = D.n[q[2]], b0 = D.n[q[3]];
    return !((a0 == a1 && b0 == b1) || (a0 == b0 && a1 == b1));
}

int quad_sum(const SphereDiagram& d, const Domain& D, int t) {
    int s = 0;
    for (int f : quadrants(d, t)) s += D.n[f];
    return s;
}

}

SphereDiagram two_bridge_diagram(int p, int q) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
    SphereDiagram d;
    if (p == 1) {
        d.p = 1;
        d.q = 0;
        d.degenerate = true;
        d.alpha_order = d.beta_order = {0};
        d.sign = {1};
        return d;
    }
    if (p % 2) throw std::invalid_argument("p must be even for a two-component link");
    int m = 2 * p;
    q = md(q, m);
    d.p = p;
    d.q = q;
    for (int t = 0; t < m; ++t) d.alpha_order.push_back(t);
    // regions: side A pairs arcs s and q-s-1, side B pairs s and -q-s-1
    d.face_a.assign(m, -1);
    d.face_b.assign(m, -1);
    for (int s = 0; s < m; ++s)
        if (d.face_a[s] < 0) {
            d.face_a[s] = d.face_a[md(q - s - 1, m)] = d.nfaces;
            d.corners.push_back(md(q - s - 1, m) == s ? 2 : 4);
            ++d.nfaces;
        }
    for (int s = 0; s < m; ++s)
        if (d.face_b[s] < 0) {
            d.face_b[s] = d.face_b[md(-q - s - 1, m)] = d.nfaces;
            d.corners.push_back(md(-q - s - 1, m) == s ? 2 : 4);
            ++d.nfaces;
        }
    d.adjacent.assign(d.nfaces, {});
    auto link = [&](int a, int b) {
        if (a == b) return;
        d.adjacent[a].push_back(b);
        d.adjacent[b].push_back(a);
    };
    for (int s = 0; s < m; ++s) {
        link(d.face_a[s], d.face_b[s]);
        link(d.face_a[s], d.face_a[md(s + 1, m)]);
        link(d.face_b[s], d.face_b[md(s + 1, m)]);
    }
    for (auto& a : d.adjacent) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    // beta alternates chords on side A (t -> q-t) and side B (t -> -q-t)
    d.sign.assign(m, 0);
    int t = 0;
    for (int k = 0; k < m; ++k) {
        if (d.sign[t]) throw std::logic_error("beta does not close up as a single curve");
        d.beta_order.push_back(t);
        d.sign[t] = k % 2 == 0 ? 1 : -1;
        t = k % 2 == 0 ? md(q - t, m) : md(-q - t, m);
    }
    if (t != 0) throw std::logic_error("beta does not close up as a single curve");
    int w1 = d.face_a[md((q - 1) / 2, m)], z1 = d.face_a[md(p + (q - 1) / 2, m)];
    int w2 = d.face_b[md(-(q + 1) / 2, m)], z2 = d.face_b[md(p - (q + 1) / 2, m)];
    d.base = {w1, z1, w2, z2};
    return d;
}

int multiplicity(const Domain& D, int region) { return D.n.at(region); }

std::vector<Domain> periodic_domains(const SphereDiagram& d) {
    if (d.degenerate) return {};
    auto side = beta_sides(d);
    Domain P;
    P.n.assign(d.nfaces, 0);
    for (int s = 0; s < d.npoints(); ++s) P.n[d.face_a[s]] = 1;
    for (int f = 0; f < d.nfaces; ++f)
        if (side[f] == side[d.base[0]]) P.n[f] -= 1;
    if (P.n[d.base[0]] != 0 || P.n[d.base[2]] != 0) throw std::logic_error("periodic domain meets a w basepoint");
    return {P};
}

bool admissibility(const SphereDiagram& d) { return admissibility(periodic_domains(d)); }

bool admissibility(const std::vector<Domain>& periodic) {
    for (auto& P : periodic) {
        bool pos = false, negv = false;
        for (int v : P.n) {
            pos |= v > 0;
            negv |= v < 0;
        }
        if (pos != negv) return false;
    }
    return true;
}

Domain connecting_domain(const SphereDiagram& d, int x, int y, bool forward) {
    int m = d.npoints();
    std::vector<int> c(m, 0);
    if (x != y) {
        if (forward)
            for (int s = x; s != y; s = md(s + 1, m)) c[s] = 1;
        else
            for (int s = y; s != x; s = md(s + 1, m)) c[s] = -1;
    }
    // n(A side) - n(B side) = c on every alpha arc
    Domain D;
    D.n.assign(d.nfaces, 0);
    std::vector<char> seen(d.nfaces, 0);
    for (int r = 0; r < d.nfaces; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::vector<int> st = {r};
        while (!st.empty()) {
            int g = st.back();
            st.pop_back();
            for (int s = 0; s < m; ++s) {
                int a = d.face_a[s], b = d.face_b[s];
                if (a != g && b != g) continue;
                int o = a == g ? b : a;
                int val = a == g ? D.n[g] - c[s] : D.n[g] + c[s];
                if (!seen[o]) {
                    seen[o] = 1;
                    D.n[o] = val;
                    st.push_back(o);
                } else if (D.n[o] != val) {
                    throw std::logic_error("relative grading inconsistency: no domain with the given alpha boundary");
                }
            }
        }
    }
    return D;
}

bool boundary_ok(const SphereDiagram& d, const Domain& D, int x, int y) {
    int m = d.npoints();
    std::vector<int> bd(m, 0);
    for (int s = 0; s < m; ++s) {
        int c = D.n[d.face_a[s]] - D.n[d.face_b[s]];
        bd[md(s + 1, m)] += c;
        bd[s] -= c;
    }
    for (int t = 0; t < m; ++t) {
        int want = (t == y) - (t == x);
        if (bd[t] != want) return false;
    }
    return true;
}

int maslov4(const SphereDiagram& d, const Domain& D, int x, int y) {
    int e4 = 0;
    for (int f = 0; f < d.nfaces; ++f) e4 += D.n[f] * (4 - d.corners[f]);
    return e4 + quad_sum(d, D, x) + quad_sum(d, D, y);
}

std::vector<Bigon> embedded_bigons(const SphereDiagram& d, const std::vector<int>& avoid) {
    std::vector<Bigon> out;
    if (d.degenerate) return out;
    auto side = beta_sides(d);
    int m = d.npoints();
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            if (x == y) continue;
            for (bool fwd : {true, false}) {
                Domain D0 = connecting_domain(d, x, y, fwd);
                std::array<std::vector<int>, 2> ks;
                for (int c = 0; c < 2; ++c) {
                    int lo = 1 << 20, hi = -(1 << 20);
                    for (int f = 0; f < d.nfaces; ++f)
                        if (side[f] == c) lo = std::min(lo, D0.n[f]), hi = std::max(hi, D0.n[f]);
                    if (hi - lo == 0) ks[c] = {-lo, 1 - lo};
                    else if (hi - lo == 1) ks[c] = {-lo};
                }
                for (int k0 : ks[0])
                    for (int k1 : ks[1]) {
                        Domain D = D0;
                        for (int f = 0; f < d.nfaces; ++f) D.n[f] += side[f] == 0 ? k0 : k1;
                        bool bad = false;
                        for (int f : avoid) bad |= D.n[f] != 0;
                        if (bad || maslov4(d, D, x, y) != 4) continue;
                        if (quad_sum(d, D, x) != 1 || quad_sum(d, D, y) != 1) continue;
                        for (int t = 0; t < m && !bad; ++t)
                            if (t != x && t != y && is_corner(d, D, t)) bad = true;
                        if (!bad) out.push_back({x, y, D});
                    }
            }
        }
    return out;
}

FilteredComplex complex_from_diagram(const SphereDiagram& d) {
    FilteredComplex c;
    if (d.degenerate) {
        c.l = 1;
        c.parity = {0};
        c.add("x0", 0, {0});
        return c;
    }
    if (!admissibility(d)) throw std::invalid_argument("diagram is not weakly admissible");
    int m = d.npoints();
    auto [w1, z1, w2, z2] = d.base;
    std::vector<int> gr(m), a0(m), a1(m);
    for (int t = 0; t < m; ++t) {
        std::array<int, 3> val{};
        for (bool fwd : {true, false}) {
            Domain D = connecting_domain(d, 0, t, fwd);
            int mu4 = maslov4(d, D, 0, t);
            int nw = D.n[w1] + D.n[w2];
            if (mu4 % 4) throw std::logic_error("relative grading inconsistency: fractional index");
            std::array<int, 3> v = {-(mu4 / 4 - 2 * nw), -2 * (D.n[z1] - D.n[w1]), -2 * (D.n[z2] - D.n[w2])};
            if (fwd) val = v;
            else if (v != val) throw std::logic_error("relative grading inconsistency between two domains");
        }
        gr[t] = val[0];
        a0[t] = val[1];
        a1[t] = val[2];
    }
    // absolute maslov: homology of the complex that only avoids the w points is
    // two-dimensional, top generator in grading 0
    {
        FilteredComplex cw;
        cw.l = 1;
        cw.parity = {0};
        for (int t = 0; t < m; ++t) cw.add("x" + std::to_string(t), gr[t], {0});
        std::map<std::pair<int, int>, int> cnt;
        for (auto& b : embedded_bigons(d, {w1, w2})) cnt[{b.from, b.to}] ^= 1;
        for (auto [k, v] : cnt)
            if (v) cw.arrow(k.first, k.second);
        std::map<int, int> h;
        for (auto [g, r] : total_homology(cw))
            if (r) h[g] = r;
        int tot = 0;
        for (auto [g, r] : h) tot += r;
        if (tot != 2 || h.size() != 2 || h.rbegin()->first - h.begin()->first != 1)
            throw std::logic_error("basepoint-free homology is not two consecutive generators");
        int top = h.rbegin()->first;
        for (int& g : gr) g -= top;
    }
    // absolute Alexander: centre the support
    for (auto* a : {&a0, &a1}) {
        auto [lo, hi] = std::minmax_element(a->begin(), a->end());
        int s = *lo + *hi;
        if (s % 2) throw std::logic_error("Alexander support cannot be centred");
        int off = s / 2;
        for (int& v : *a) v -= off;
    }
    c.l = 2;
    c.parity = {md(a0[0], 2), md(a1[0], 2)};
    for (int t = 0; t < m; ++t) c.add("x" + std::to_string(t), gr[t], {a0[t], a1[t]});
    std::map<std::pair<int, int>, int> cnt;
    for (auto& b : embedded_bigons(d, {w1, z1, w2, z2})) cnt[{b.from, b.to}] ^= 1;
    for (auto [k, v] : cnt)
        if (v) c.arrow(k.first, k.second);
    if (auto v = validate(c)) throw std::logic_error("diagram complex is invalid: " + v->detail);
    return c;
}

bool oracle_compare(int p, int q) {
    auto lhs = assoc_graded_homology(complex_from_diagram(two_bridge_diagram(p, q)));
    auto rhs = hfl_alternating(two_bridge(p, q)).table;
    return lhs == rhs;
}

}
