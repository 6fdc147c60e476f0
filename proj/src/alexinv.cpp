#include "hfl/alexinv.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

namespace hfl {

namespace {

using Rat = boost::multiprecision::cpp_rational;

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

void require_connected(const LinkDiagram& d) {
    if (!classify(d).connected_projection)
        throw std::invalid_argument("split link: disconnected projection");
}

MultiLaurent t_pow(int l, int var, int k) {
    Exp2 e(l, 0);
    e[var] = 2 * k;
    return MultiLaurent::monomial(l, e);
}

}

WirtingerPresentation wirtinger(const LinkDiagram& d) {
    WirtingerPresentation w;
    int ne = d.nedges();
    Dsu u(ne + 1);
    for (auto& c : d.crossings) u.join(c.e[1], c.e[3]);
    std::vector<int> gid(ne + 1, -1);
    for (int e = 1; e <= ne; ++e) {
        int r = u.find(e);
        if (gid[r] < 0) {
            gid[r] = w.ngens++;
            w.gen_comp.push_back(d.edge_comp[e]);
        }
        gid[e] = gid[r];
    }
    // x_c = x_b^s x_a x_b^-s  as  x_b^s x_a x_b^-s x_c^-1
    for (auto& c : d.crossings) {
        int a = gid[c.e[0]], b = gid[c.e[1]], cc = gid[c.e[2]];
        int s = c.sign;
        w.relators.push_back({{b, s}, {a, 1}, {b, -s}, {cc, -1}});
    }
    return w;
}

std::vector<std::vector<MultiLaurent>> fox_matrix(const WirtingerPresentation& w, int l) {
    std::vector<std::vector<MultiLaurent>> m(w.relators.size(), std::vector<MultiLaurent>(w.ngens, MultiLaurent(l)));
    for (size_t r = 0; r < w.relators.size(); ++r) {
        MultiLaurent prefix = MultiLaurent::constant(l, 1);
        for (auto [g, s] : w.relators[r]) {
            MultiLaurent t = t_pow(l, w.gen_comp[g], s);
            // d(x)/dx = 1, d(x^-1)/dx = -x^-1
            if (s > 0) m[r][g] += prefix;
            else m[r][g] += -(prefix * t);
            prefix = prefix * t;
        }
    }
    return m;
}

MultiLaurent determinant(std::vector<std::vector<MultiLaurent>> m) {
    int n = (int)m.size();
    if (n == 0) return MultiLaurent::constant(1, 1);
    int l = m[0][0].nvars();
    MultiLaurent prev = MultiLaurent::constant(l, 1);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (piv < 0 || m[i][k].terms().size() < m[piv][k].terms().size())) piv = i;
        if (piv < 0) return MultiLaurent(l);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiLaurent(l);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

AlexanderResult multivariable_alexander(const LinkDiagram& d) {
    int l = d.ncomp();
    AlexanderResult res;
    if (d.crossings.empty()) {
        if (l != 1) throw std::invalid_argument("split link: disconnected projection");
        res.delta = MultiLaurent::constant(1, 1);
        return res;
    }
    require_connected(d);
    auto w = wirtinger(d);
    // a component that never passes under can be lifted off: split, Delta = 0
    if (w.ngens != (int)d.crossings.size()) {
        res.delta = MultiLaurent(l);
        return res;
    }
    auto fm = fox_matrix(w, l);
    res.deleted_row = (int)fm.size() - 1;
    res.deleted_column = 0;
    std::vector<std::vector<MultiLaurent>> minor;
    for (int r = 0; r < (int)fm.size(); ++r) {
        if (r == res.deleted_row) continue;
        std::vector<MultiLaurent> row;
        for (int g = 0; g < w.ngens; ++g)
            if (g != res.deleted_column) row.push_back(fm[r][g]);
        minor.push_back(row);
    }
    MultiLaurent det = determinant(minor);
    if (det.is_zero()) {
        res.delta = MultiLaurent(l);
        return res;
    }
    if (l > 1) {
        res.divided_var = w.gen_comp[res.deleted_column];
        det = divide_by_t_minus_one(det, res.divided_var);
    }
    res.delta = symmetric_normalize(det);
    return res;
}

int symmetric_signature(const std::vector<std::vector<int>>& in) {
    int n = (int)in.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = in[i][j];
    int sig = 0;
    std::vector<char> live(n, 1);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (live[i] && a[i][i] != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // all live diagonal entries vanish: make one nonzero by adding a row/column
            int r = -1, c = -1;
            for (int i = 0; i < n && r < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (live[i] && live[j] && i != j && a[i][j] != 0) {
                        r = i;
                        c = j;
                        break;
                    }
            if (r < 0) break;
            for (int k = 0; k < n; ++k) a[r][k] += a[c][k];
            for (int k = 0; k < n; ++k) a[k][r] += a[k][c];
            p = r;
        }
        sig += a[p][p] > 0 ? 1 : -1;
        live[p] = 0;
        for (int i = 0; i < n; ++i) {
            if (!live[i] || a[i][p] == 0) continue;
            Rat f = a[i][p] / a[p][p];
            for (int k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
        }
        for (int i = 0; i < n; ++i) {
            if (!live[i]) continue;
            a[p][i] = 0;
            a[i][p] = 0;
        }
    }
    return sig;
}

GoeritzData goeritz(const LinkDiagram& d, int color) {
    GoeritzData g;
    int n = (int)d.crossings.size();
    if (n == 0) return g;
    require_connected(d);
    std::vector<std::vector<std::pair<int, int>>> ends(d.nedges() + 1);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) ends[d.crossings[x].e[s]].push_back({x, s});
    // corner (x,k) sits between slots k and k+1; faces are orbits of dart -> next corner
    std::vector<int> face(4 * n, -1);
    int nf = 0;
    for (int start = 0; start < 4 * n; ++start) {
        if (face[start] >= 0) continue;
        int cur = start;
        while (face[cur] < 0) {
            face[cur] = nf;
            int x = cur / 4, k = cur % 4;
            int s = (k + 1) % 4;
            int e = d.crossings[x].e[s];
            auto o = ends[e][0] == std::make_pair(x, s) ? ends[e][1] : ends[e][0];
            cur = o.first * 4 + o.second;
        }
        ++nf;
    }
    if (nf != n + 2) throw std::logic_error("face count " + std::to_string(nf) + " != crossings + 2");
    std::vector<int> col(nf, -1);
    col[face[0]] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int k = 0; k < 4; ++k) {
                int f1 = face[4 * x + k], f2 = face[4 * x + (k + 1) % 4];
                if (col[f1] >= 0 && col[f2] < 0) col[f2] = 1 - col[f1], changed = true;
                if (col[f2] >= 0 && col[f1] < 0) col[f1] = 1 - col[f2], changed = true;
                if (col[f1] >= 0 && col[f1] == col[f2]) throw std::logic_error("checkerboard coloring failed");
            }
    }
    std::vector<int> idx(nf, -1);
    int m = 0;
    for (int f = 0; f < nf; ++f)
        if (col[f] == color) idx[f] = m++;
    std::vector<std::vector<int>> G(m, std::vector<int>(m, 0));
    for (int x = 0; x < n; ++x) {
        auto& c = d.crossings[x];
        // chosen-color corners at this crossing: {0,2} or {1,3}
        int k0 = col[face[4 * x]] == color ? 0 : 1;
        int eta = k0 == 0 ? 1 : -1;
        int fa = idx[face[4 * x + k0]], fb = idx[face[4 * x + k0 + 2]];
        if (fa != fb) {
            G[fa][fb] -= eta;
            G[fb][fa] -= eta;
            G[fa][fa] += eta;
            G[fb][fb] += eta;
        }
        // oriented smoothing merges corners {1,3} at positive crossings, {0,2} at negative ones
        int merged = c.sign > 0 ? 1 : 0;
        if (merged != k0) g.correction += eta;
    }
    g.matrix.assign(m - 1, std::vector<int>(m - 1));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) g.matrix[i - 1][j - 1] = G[i][j];
    g.signature = symmetric_signature(g.matrix) - g.correction;
    return g;
}

int signature(const LinkDiagram& d) {
    if (d.crossings.empty()) return 0;
    auto a = goeritz(d, 0), b = goeritz(d, 1);
    if (a.signature != b.signature)
        throw std::logic_error("checkerboard signatures disagree: " + std::to_string(a.signature) + " vs " +
                               std::to_string(b.signature));
    return a.signature;
}

}
