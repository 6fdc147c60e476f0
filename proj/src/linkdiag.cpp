#include "hfl/linkdiag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hfl {

namespace {

using End = std::pair<int, int>; // (crossing, slot)
using Pd = std::vector<std::array<int, 4>>;
const End kNoEnd{-1, -1};

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

int flag_of(const Pd& pd, int m, End head) {
    for (int x = 0; x < (int)pd.size(); ++x)
        for (int s = 0; s < 4; ++s)
            if (pd[x][s] == m) return End{x, s} == head ? 1 : -1;
    return 1;
}

// hints[e] = known head end of edge e, or kNoEnd
LinkDiagram build(const Pd& pd, const std::vector<End>& hints, const std::vector<int>& flags) {
    int n = (int)pd.size();
    if (n == 0) return unknot();
    int ne = 2 * n;
    std::vector<std::vector<End>> ends(ne + 1);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) {
            int e = pd[x][s];
            if (e < 1 || e > ne)
                throw std::invalid_argument("edge label " + std::to_string(e) + " out of range 1.." + std::to_string(ne));
            ends[e].push_back({x, s});
        }
    for (int e = 1; e <= ne; ++e)
        if (ends[e].size() != 2)
            throw std::invalid_argument("edge label " + std::to_string(e) + " used " +
                                        std::to_string(ends[e].size()) + " times");
    auto other = [&](int e, End a) { return ends[e][0] == a ? ends[e][1] : ends[e][0]; };

    std::vector<char> seen(ne + 1, 0);
    std::vector<std::vector<std::pair<int, End>>> cycles; // (edge, head), ascending first edge
    for (int e0 = 1; e0 <= ne; ++e0) {
        if (seen[e0]) continue;
        std::vector<std::pair<int, End>> cyc;
        int e = e0;
        End head = ends[e0][0];
        while (true) {
            if (seen[e]) throw std::invalid_argument("strand trace does not close");
            seen[e] = 1;
            cyc.push_back({e, head});
            End tail{head.first, (head.second + 2) % 4};
            int f = pd[tail.first][tail.second];
            head = other(f, tail);
            e = f;
            if (e == e0) {
                if (head != cyc[0].second) throw std::invalid_argument("strand trace does not close");
                break;
            }
        }
        cycles.push_back(std::move(cyc));
    }

    LinkDiagram d;
    d.edge_comp.assign(ne + 1, -1);
    std::vector<End> head_of(ne + 1, kNoEnd);
    for (int ci = 0; ci < (int)cycles.size(); ++ci) {
        auto& cyc = cycles[ci];
        int fwd = 0, bwd = 0, hf = 0, hb = 0;
        for (auto& [e, h] : cyc) {
            End t = other(e, h);
            if (h.second == 0 || t.second == 2) ++fwd;
            if (h.second == 2 || t.second == 0) ++bwd;
            if (e < (int)hints.size() && hints[e] != kNoEnd) (hints[e] == h ? hf : hb)++;
        }
        if (fwd && bwd) throw std::invalid_argument("under-strand orientations inconsistent");
        if (hf && hb) throw std::invalid_argument("orientation hints inconsistent");
        int m = cyc[0].first;
        bool rev;
        if (fwd || bwd) {
            rev = bwd > 0;
            if ((hf || hb) && (hb > 0) != rev) throw std::invalid_argument("orientation hints inconsistent");
        } else if (hf || hb) {
            rev = hb > 0;
        } else {
            int want = ci < (int)flags.size() ? flags[ci] : 1;
            rev = flag_of(pd, m, cyc[0].second) != want;
        }
        std::vector<std::pair<int, End>> ord;
        if (!rev) ord = cyc;
        else
            for (int k = (int)cyc.size() - 1; k >= 0; --k)
                ord.push_back({cyc[k].first, other(cyc[k].first, cyc[k].second)});
        int start = 0;
        for (int k = 0; k < (int)ord.size(); ++k)
            if (ord[k].first == m) start = k;
        std::vector<int> comp;
        for (int k = 0; k < (int)ord.size(); ++k) {
            auto& [e, h] = ord[(start + k) % ord.size()];
            comp.push_back(e);
            head_of[e] = h;
            d.edge_comp[e] = ci;
        }
        int fl = flag_of(pd, m, head_of[m]);
        if ((fwd || bwd) && ci < (int)flags.size() && flags[ci] != fl)
            throw std::invalid_argument("orientation flag of component " + std::to_string(ci) + " disagrees with PD data");
        d.components.push_back(comp);
        d.orientation.push_back(fl);
    }
    for (int x = 0; x < n; ++x) {
        Crossing c;
        c.e = pd[x];
        c.over_db = head_of[c.e[3]] == End{x, 3};
        c.sign = c.over_db ? 1 : -1;
        d.crossings.push_back(c);
    }
    return d;
}

Pd pd_of(const LinkDiagram& d) {
    Pd pd;
    for (auto& c : d.crossings) pd.push_back(c.e);
    return pd;
}

// head end of every edge of a built diagram
std::vector<End> heads(const LinkDiagram& d) {
    std::vector<End> h(d.nedges() + 1, kNoEnd);
    std::vector<std::vector<End>> ends(d.nedges() + 1);
    for (int x = 0; x < (int)d.crossings.size(); ++x)
        for (int s = 0; s < 4; ++s) ends[d.crossings[x].e[s]].push_back({x, s});
    for (int x = 0; x < (int)d.crossings.size(); ++x) {
        auto& c = d.crossings[x];
        h[c.e[0]] = {x, 0};
        if (c.over_db) h[c.e[3]] = {x, 3};
        else h[c.e[1]] = {x, 1};
    }
    return h;
}

// Build from arbitrary positive ids, then relabel 1..2n consecutively along components.
LinkDiagram canonical(const Pd& raw, const std::map<int, End>& raw_hints) {
    if (raw.empty()) return unknot();
    std::map<int, int> id;
    for (auto& c : raw)
        for (int v : c) id[v] = 0;
    int nid = 0;
    for (auto& [k, v] : id) v = ++nid;
    Pd pd = raw;
    for (auto& c : pd)
        for (int& v : c) v = id.at(v);
    std::vector<End> hints(pd.size() * 2 + 1, kNoEnd);
    for (auto& [k, h] : raw_hints)
        if (id.count(k)) hints[id[k]] = h;
    LinkDiagram d = build(pd, hints, {});
    std::vector<int> re(d.nedges() + 1, 0);
    int next = 1;
    for (auto& comp : d.components)
        for (int e : comp) re[e] = next++;
    auto h = heads(d);
    std::vector<End> h2(d.nedges() + 1, kNoEnd);
    for (int e = 1; e <= d.nedges(); ++e) h2[re[e]] = h[e];
    for (auto& c : pd)
        for (int& v : c) v = re[v];
    return build(pd, h2, {});
}

// Geometric crossing: ends counterclockwise from bottom-right [BR, TR, TL, BL];
// over strand on the BL-TR diagonal or the BR-TL one.
struct GeoCrossing {
    std::array<int, 4> ends;
    bool over_bltr;
};

// head_geo[id] = (crossing, geo slot) where edge id ends; components without any
// hint are oriented arbitrarily
LinkDiagram from_geo(const std::vector<GeoCrossing>& g, const std::map<int, std::pair<int, int>>& head_geo) {
    std::map<int, std::vector<End>> ends;
    for (int x = 0; x < (int)g.size(); ++x)
        for (int s = 0; s < 4; ++s) ends[g[x].ends[s]].push_back({x, s});
    for (auto& [id, v] : ends)
        if (v.size() != 2) throw std::logic_error("geometric diagram: edge with " + std::to_string(v.size()) + " ends");
    auto other = [&](int id, End a) { return ends[id][0] == a ? ends[id][1] : ends[id][0]; };
    std::map<int, End> head;
    std::set<int> done;
    for (auto& [id0, v0] : ends) {
        if (done.count(id0)) continue;
        std::vector<std::pair<int, End>> cyc;
        int id = id0;
        End h = v0[0];
        do {
            cyc.push_back({id, h});
            done.insert(id);
            End t{h.first, (h.second + 2) % 4};
            id = g[t.first].ends[t.second];
            h = other(id, t);
        } while (!(id == id0 && h == cyc[0].second));
        bool rev = false, known = false;
        for (auto& [e, hh] : cyc) {
            auto it = head_geo.find(e);
            if (it == head_geo.end()) continue;
            bool r = End{it->second.first, it->second.second} != hh;
            if (known && r != rev) throw std::invalid_argument("orientation hints inconsistent");
            rev = r;
            known = true;
        }
        for (auto& [e, hh] : cyc) head[e] = rev ? other(e, hh) : hh;
    }
    Pd pd;
    std::map<int, End> hints;
    std::vector<int> rot(g.size());
    for (int x = 0; x < (int)g.size(); ++x) {
        int u0 = g[x].over_bltr ? 0 : 1;
        int in = head[g[x].ends[u0]] == End{x, u0} ? u0 : u0 + 2;
        rot[x] = in;
        std::array<int, 4> t;
        for (int s = 0; s < 4; ++s) t[s] = g[x].ends[(in + s) % 4];
        pd.push_back(t);
    }
    for (auto& [id, hh] : head) hints[id] = {hh.first, (hh.second - rot[hh.first] + 4) % 4};
    return canonical(pd, hints);
}

int gcd_int(int a, int b) { return b == 0 ? std::abs(a) : gcd_int(b, a % b); }

std::vector<int> markov_word(int n, const std::vector<int>& w) {
    auto r = w;
    r.push_back(n);
    return r;
}

struct CorpusEntry {
    int strands;
    std::vector<int> word;
};

bool braid_entry(const std::string& name, CorpusEntry& out) {
    static const std::map<std::string, CorpusEntry> table = {
        {"hopf_plus", {2, {1, 1}}},
        {"trefoil_right", {2, {1, 1, 1}}},
        {"trefoil_left", {2, {-1, -1, -1}}},
        {"figure8", {3, {1, -2, 1, -2}}},
        {"L7n1", {3, {2, 2, 1, 1, 2, 1, 1}}},
        {"L7n2", {3, {-2, -1, -1, -1, -2, 1, 1}}},
    };
    auto it = table.find(name);
    if (it == table.end()) return false;
    out = it->second;
    return true;
}

bool parse_call(const std::string& s, const std::string& head, std::vector<int>& args) {
    if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return false;
    std::string inner = s.substr(head.size() + 1, s.size() - head.size() - 2);
    std::stringstream ss(inner);
    std::string tok;
    args.clear();
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw std::invalid_argument("bad argument in " + s);
        }
        while (pos < tok.size() && std::isspace((unsigned char)tok[pos])) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("bad argument in " + s);
        args.push_back(v);
    }
    return true;
}

}

LinkDiagram unknot() {
    LinkDiagram d;
    d.components = {{}};
    d.orientation = {1};
    d.edge_comp = {-1};
    return d;
}

bool LinkDiagram::operator==(const LinkDiagram& o) const {
    if (crossings.size() != o.crossings.size()) return false;
    for (size_t i = 0; i < crossings.size(); ++i)
        if (crossings[i].e != o.crossings[i].e || crossings[i].sign != o.crossings[i].sign ||
            crossings[i].over_db != o.crossings[i].over_db)
            return false;
    return components == o.components && orientation == o.orientation;
}

LinkDiagram from_pd(const std::vector<std::array<int, 4>>& pd, const std::vector<int>& flags) {
    return build(pd, {}, flags);
}

LinkDiagram parse_pd(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s == "U") return unknot();
    auto fail = [&](const std::string& why) { throw std::invalid_argument("malformed PD code: " + why); };
    if (s.rfind("PD[", 0) != 0 || s.back() != ']') fail("expected PD[...] or U");
    std::string body = s.substr(3, s.size() - 4);
    Pd pd;
    size_t i = 0;
    while (i < body.size()) {
        if (body.compare(i, 2, "X[") != 0) fail("expected X[ at position " + std::to_string(i + 3));
        size_t j = body.find(']', i);
        if (j == std::string::npos) fail("unterminated X[");
        std::string inner = body.substr(i + 2, j - i - 2);
        std::vector<int> v;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) fail("bad edge label '" + tok + "'");
            v.push_back(std::stoi(tok));
        }
        if (v.size() != 4) fail("crossing with " + std::to_string(v.size()) + " edges (arity 4 required)");
        pd.push_back({v[0], v[1], v[2], v[3]});
        i = j + 1;
        if (i < body.size()) {
            if (body[i] != ',') fail("expected ',' between crossings");
            ++i;
            if (i == body.size()) fail("trailing ','");
        }
    }
    if (pd.empty()) fail("no crossings (use U for the unknot)");
    return from_pd(pd);
}

std::string to_pd_string(const LinkDiagram& d) {
    if (d.crossings.empty()) return "U";
    std::string s = "PD[";
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        auto& e = d.crossings[k].e;
        if (k) s += ",";
        s += "X[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
             std::to_string(e[3]) + "]";
    }
    return s + "]";
}

LinkingData linking_matrix(const LinkDiagram& d) {
    int l = d.ncomp();
    std::vector<std::vector<int>> acc(l, std::vector<int>(l, 0));
    for (int k = 0; k < (int)d.crossings.size(); ++k) {
        int a = d.under_comp(k), b = d.over_comp(k);
        if (a == b) continue;
        acc[a][b] += d.crossings[k].sign;
        acc[b][a] += d.crossings[k].sign;
    }
    LinkingData r;
    r.lk.assign(l, std::vector<int>(l, 0));
    r.total.assign(l, 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (acc[i][j] % 2) throw std::logic_error("odd crossing count between components");
            r.lk[i][j] = acc[i][j] / 2;
            r.total[i] += r.lk[i][j];
        }
    return r;
}

Classification classify(const LinkDiagram& d) {
    Classification c;
    c.component_count = d.ncomp();
    int n = (int)d.crossings.size();
    if (n == 0) {
        c.connected_projection = c.alternating_projection = true;
        return c;
    }
    auto h = heads(d);
    std::vector<std::vector<End>> ends(d.nedges() + 1);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) ends[d.crossings[x].e[s]].push_back({x, s});
    Dsu u(n);
    bool alt = true;
    for (int e = 1; e <= d.nedges(); ++e) {
        End a = ends[e][0], b = ends[e][1];
        u.join(a.first, b.first);
        if ((a.second % 2) == (b.second % 2)) alt = false;
    }
    bool conn = true;
    for (int x = 0; x < n; ++x)
        if (u.find(x) != u.find(0)) conn = false;
    // a crossingless component is a split unknot
    for (auto& comp : d.components)
        if (comp.empty()) conn = false;
    c.connected_projection = conn;
    c.alternating_projection = alt;
    for (auto& x : d.crossings) c.writhe += x.sign;
    return c;
}

LinkDiagram mirror(const LinkDiagram& d) {
    if (d.crossings.empty()) return d;
    auto h = heads(d);
    Pd pd;
    std::vector<int> shift;
    for (auto& c : d.crossings) {
        auto& e = c.e;
        if (c.over_db) {
            pd.push_back({e[3], e[0], e[1], e[2]});
            shift.push_back(1);
        } else {
            pd.push_back({e[1], e[2], e[3], e[0]});
            shift.push_back(3);
        }
    }
    std::vector<End> nh(h.size(), kNoEnd);
    for (int e = 1; e < (int)h.size(); ++e) nh[e] = {h[e].first, (h[e].second + shift[h[e].first]) % 4};
    return build(pd, nh, {});
}

LinkDiagram reverse(const LinkDiagram& d, int comp) {
    if (comp < 0 || comp >= d.ncomp()) throw std::invalid_argument("invalid component index " + std::to_string(comp));
    if (d.crossings.empty()) return d;
    auto h = heads(d);
    std::vector<std::vector<End>> ends(d.nedges() + 1);
    for (int x = 0; x < (int)d.crossings.size(); ++x)
        for (int s = 0; s < 4; ++s) ends[d.crossings[x].e[s]].push_back({x, s});
    Pd pd;
    std::vector<int> shift;
    for (int x = 0; x < (int)d.crossings.size(); ++x) {
        auto& e = d.crossings[x].e;
        if (d.under_comp(x) == comp) {
            pd.push_back({e[2], e[3], e[0], e[1]});
            shift.push_back(2);
        } else {
            pd.push_back(e);
            shift.push_back(0);
        }
    }
    std::vector<End> nh(h.size(), kNoEnd);
    for (int e = 1; e < (int)h.size(); ++e) {
        End old = h[e];
        if (d.edge_comp[e] == comp) old = ends[e][0] == h[e] ? ends[e][1] : ends[e][0];
        nh[e] = {old.first, (old.second + shift[old.first]) % 4};
    }
    return build(pd, nh, {});
}

LinkDiagram sublink(const LinkDiagram& d, int comp) {
    if (comp < 0 || comp >= d.ncomp()) throw std::invalid_argument("invalid component index " + std::to_string(comp));
    auto h = heads(d);
    Dsu u(d.nedges() + 1);
    Pd pd;
    std::vector<int> keep;
    for (int x = 0; x < (int)d.crossings.size(); ++x) {
        auto& c = d.crossings[x];
        int a = d.under_comp(x), b = d.over_comp(x);
        if (a == comp && b == comp) keep.push_back(x);
        else if (a == comp) u.join(c.e[0], c.e[2]);
        else if (b == comp) u.join(c.e[1], c.e[3]);
    }
    if (keep.empty()) return unknot();
    std::map<int, End> hints;
    for (int k = 0; k < (int)keep.size(); ++k) {
        std::array<int, 4> t;
        for (int s = 0; s < 4; ++s) t[s] = u.find(d.crossings[keep[k]].e[s]);
        pd.push_back(t);
    }
    for (int e = 1; e <= d.nedges(); ++e)
        if (d.edge_comp[e] == comp)
            for (int k = 0; k < (int)keep.size(); ++k)
                if (h[e].first == keep[k]) hints[u.find(e)] = {k, h[e].second};
    return canonical(pd, hints);
}

SumResult connected_sum(const LinkDiagram& d1, const LinkDiagram& d2, int c1, int c2) {
    if (c1 < 0 || c1 >= d1.ncomp()) throw std::invalid_argument("invalid component index " + std::to_string(c1));
    if (c2 < 0 || c2 >= d2.ncomp()) throw std::invalid_argument("invalid component index " + std::to_string(c2));
    SumResult r;
    int l1 = d1.ncomp(), l2 = d2.ncomp();
    auto id_map = [](int l) {
        std::vector<int> m(l);
        std::iota(m.begin(), m.end(), 0);
        return m;
    };
    if (d2.crossings.empty()) {
        r.diagram = d1;
        r.map1 = id_map(l1);
        r.map2 = {c1};
        return r;
    }
    if (d1.crossings.empty()) {
        r.diagram = d2;
        r.map1 = {c2};
        r.map2 = id_map(l2);
        return r;
    }
    int off = d1.nedges(), n1 = (int)d1.crossings.size();
    Pd pd = pd_of(d1);
    for (auto& c : d2.crossings) {
        auto e = c.e;
        for (int& v : e) v += off;
        pd.push_back(e);
    }
    auto h1 = heads(d1), h2 = heads(d2);
    std::map<int, End> hints;
    for (int e = 1; e <= d1.nedges(); ++e) hints[e] = h1[e];
    for (int e = 1; e <= d2.nedges(); ++e) hints[e + off] = {h2[e].first + n1, h2[e].second};
    // splice where the over/under pattern keeps alternating diagrams alternating
    int e1 = d1.components[c1][0], e2 = d2.components[c2][0] + off;
    for (int e : d2.components[c2])
        if (hints[e + off].second % 2 == hints[e1].second % 2) {
            e2 = e + off;
            break;
        }
    End a = hints[e1], b = hints[e2];
    pd[a.first][a.second] = e2;
    pd[b.first][b.second] = e1;
    hints[e1] = b;
    hints[e2] = a;
    // remember one edge per input component to identify components afterwards
    std::vector<int> tag1, tag2;
    for (auto& comp : d1.components) tag1.push_back(comp[0]);
    for (auto& comp : d2.components) tag2.push_back(comp[0] + off);
    // canonical() relabels; track by marking each edge in a parallel diagram
    LinkDiagram raw = build(pd, [&] {
        std::vector<End> v(pd.size() * 2 + 1, kNoEnd);
        for (auto& [k, h] : hints) v[k] = h;
        return v;
    }(), {});
    r.diagram = canonical(pd, hints);
    for (int t : tag1) r.map1.push_back(raw.edge_comp[t]);
    for (int t : tag2) r.map2.push_back(raw.edge_comp[t]);
    return r;
}

LinkDiagram braid_closure(int n, const std::vector<int>& word) {
    if (n < 1) throw std::invalid_argument("braid needs at least one strand");
    if (word.empty()) {
        if (n == 1) return unknot();
        throw std::invalid_argument("split braid closure");
    }
    int next = 0;
    std::vector<int> first(n), cur(n);
    for (int i = 0; i < n; ++i) first[i] = cur[i] = next++;
    std::vector<GeoCrossing> g;
    std::map<int, std::pair<int, int>> head;
    for (int gen : word) {
        int i = std::abs(gen) - 1;
        if (gen == 0 || i + 1 >= n) throw std::invalid_argument("braid generator out of range");
        int x = (int)g.size();
        int bl = cur[i], br = cur[i + 1];
        int tl = next++, tr = next++;
        g.push_back({{br, tr, tl, bl}, gen > 0});
        head[br] = {x, 0};
        head[bl] = {x, 3};
        cur[i] = tl;
        cur[i + 1] = tr;
    }
    Dsu u(next);
    for (int i = 0; i < n; ++i) {
        if (cur[i] == first[i]) throw std::invalid_argument("split braid closure");
        u.join(cur[i], first[i]);
    }
    for (auto& c : g)
        for (int& v : c.ends) v = u.find(v) + 1;
    std::map<int, std::pair<int, int>> h2;
    for (auto& [k, v] : head) h2[u.find(k) + 1] = v;
    return from_geo(g, h2);
}

std::vector<int> continued_fraction(int p, int q) {
    if (p < 1) throw std::invalid_argument("two-bridge p must be positive");
    if (gcd_int(p, q) != 1) throw std::invalid_argument("two-bridge parameters must be coprime");
    q = ((q % p) + p) % p;
    if (p == 1) return {1};
    std::vector<int> cf;
    int a = p, b = q;
    while (b != 0) {
        cf.push_back(a / b);
        int t = a % b;
        a = b;
        b = t;
    }
    if (cf.size() % 2 == 0) {
        cf.back() -= 1;
        cf.push_back(1);
    }
    return cf;
}

LinkDiagram two_bridge(int p, int q) {
    continued_fraction(p, q);
    if (p == 1) return unknot();
    int q2 = ((q % (2 * p)) + 2 * p) % (2 * p);
    bool flip = p % 2 == 0 && q2 > p;
    auto cf = continued_fraction(p, -q);
    // four-plat: caps (0,1),(2,3) on top; rows sigma_2^{a1} sigma_1^{-a2} sigma_2^{a3} ...
    int next = 0;
    std::array<int, 4> cur;
    for (int i = 0; i < 4; ++i) cur[i] = next++;
    std::array<int, 4> top = cur;
    std::vector<GeoCrossing> g;
    std::map<int, std::pair<int, int>> lower_end, upper_end;
    for (size_t r = 0; r < cf.size(); ++r) {
        int i = r % 2 == 0 ? 1 : 0;
        for (int k = 0; k < cf[r]; ++k) {
            int x = (int)g.size();
            int bl = cur[i], br = cur[i + 1];
            int tl = next++, tr = next++;
            g.push_back({{br, tr, tl, bl}, r % 2 == 0});
            lower_end[bl] = {x, 3};
            lower_end[br] = {x, 0};
            upper_end[tl] = {x, 2};
            upper_end[tr] = {x, 1};
            cur[i] = tl;
            cur[i + 1] = tr;
        }
    }
    Dsu u(next);
    u.join(top[0], top[1]);
    u.join(top[2], top[3]);
    u.join(cur[0], cur[1]);
    u.join(cur[2], cur[3]);
    for (auto& c : g)
        for (int& v : c.ends) v = u.find(v) + 1;
    // orient: each top cap runs from its right foot to its left foot
    std::map<int, std::pair<int, int>> head;
    auto orient_cap = [&](int L, bool down_left) {
        int id = u.find(top[L]) + 1;
        int a = down_left ? L : L + 1, b = down_left ? L + 1 : L;
        if (lower_end.count(top[a])) head[id] = lower_end[top[a]];
        else head[id] = upper_end.at(cur[b]);
    };
    orient_cap(0, true);
    if (p % 2 == 0) orient_cap(2, !flip);
    return from_geo(g, head);
}

LinkDiagram two_bridge_bridge_projection(int p, int q) {
    continued_fraction(p, q);
    if (p == 1) return unknot();
    int q2 = ((q % (2 * p)) + 2 * p) % (2 * p);
    bool flip = p % 2 == 0 && q2 > p;
    q = ((q % p) + p) % p;
    // knots: odd representative of q mod p
    if (q % 2 == 0) q += p;
    // Torus R^2/Z^2 mod +-1. Over arcs U_j: y = j/2, x in [0,1/2]. Under arcs L_j: (0,j/2) + t(q,p), t in [0,1/2].
    // Positions measured in units of 1/(2p).
    struct Pass {
        int strand; // 0 = over, 1 = under
        int comp;
        int key;    // sort key along the component's traversal
        int cross;
        bool plus;  // under velocity +(q,p)
    };
    std::vector<Pass> passes;
    int nc = 0;
    int P = 2 * p;
    for (int yj = 0; yj < 2; ++yj)          // over arc U_yj at y = yj/2
        for (int lj = 0; lj < 2; ++lj)      // under curve px - qy = lj/2
            for (int k = 0; k < p; ++k) {
                // X = 2p x
                int X = ((lj + q * yj + 2 * k) % P + P) % P;
                if (X <= 0 || X >= p) continue;
                // parameter T = 2p t on L_lj with T in (-p, p): y(t) = lj/2 + t p, x(t) = t q
                int T = -1000000;
                for (int cand = -p + 1; cand < p; ++cand) {
                    // y coordinate 2p*y = 2p*(lj/2) + cand*p must be = yj*p mod 2p
                    if (((lj * p + cand * p - yj * p) % P + P) % P != 0) continue;
                    if (((cand * q - X) % P + P) % P != 0) continue;
                    T = cand;
                }
                if (T == -1000000 || T == 0) throw std::logic_error("bridge projection: crossing not located");
                int x = nc++;
                // K_j runs over U_j, then back along L_j by decreasing parameter; for knots
                // the single component runs U_1, L_2, U_2, L_1
                if (p % 2 == 0) {
                    passes.push_back({0, yj, X, x, T < 0});
                    passes.push_back({1, lj, p + (p - std::abs(T)), x, T < 0});
                } else {
                    passes.push_back({0, 0, 2 * p * yj + X, x, T < 0});
                    passes.push_back({1, 0, (lj ? p : 3 * p) + (p - std::abs(T)), x, T < 0});
                }
            }
    std::vector<std::vector<Pass*>> byc(2);
    for (auto& ps : passes) byc[ps.comp].push_back(&ps);
    for (auto& v : byc) std::sort(v.begin(), v.end(), [](Pass* a, Pass* b) { return a->key < b->key; });
    // edge leaving pass k of component j: id = base_j + k
    std::vector<std::array<int, 2>> in_out(passes.size());
    int base = 1;
    for (int j = 0; j < 2; ++j) {
        int m = (int)byc[j].size();
        for (int k = 0; k < m; ++k) {
            Pass* ps = byc[j][k];
            int idx = (int)(ps - passes.data());
            in_out[idx] = {base + (k - 1 + m) % m, base + k};
        }
        base += m;
    }
    Pd pd(nc);
    for (size_t i = 0; i < passes.size(); ++i) {
        if (passes[i].strand != 0) continue;
        auto& over = in_out[i];
        auto& under = in_out[i + 1];
        int x = passes[i].cross;
        // counterclockwise from the incoming under end
        if (passes[i].plus) pd[x] = {under[0], over[1], under[1], over[0]};
        else pd[x] = {under[0], over[0], under[1], over[1]};
    }
    // labels are already consecutive along K_1 then K_2
    LinkDiagram d = canonical(pd, {});
    return flip ? reverse(d, 1) : d;
}

LinkDiagram torus_2_2n(int n) {
    if (n < 1) throw std::invalid_argument("torus_2_2n needs n >= 1");
    return braid_closure(2, std::vector<int>(2 * n, 1));
}

LinkDiagram corpus(const std::string& name) {
    if (name == "unknot") return unknot();
    if (name == "hopf_minus") return reverse(corpus("hopf_plus"), 1);
    std::vector<int> args;
    if (parse_call(name, "torus_2_2n", args)) {
        if (args.size() != 1) throw std::invalid_argument("torus_2_2n takes one argument");
        return torus_2_2n(args[0]);
    }
    if (parse_call(name, "two_bridge", args)) {
        if (args.size() != 2) throw std::invalid_argument("two_bridge takes two arguments");
        return two_bridge(args[0], args[1]);
    }
    CorpusEntry e;
    if (braid_entry(name, e)) return braid_closure(e.strands, e.word);
    throw std::invalid_argument("unknown corpus link '" + name + "'");
}

std::vector<std::string> corpus_names() {
    return {"unknot",        "hopf_plus",     "hopf_minus",    "torus_2_2n(2)", "torus_2_2n(3)",
            "torus_2_2n(4)", "trefoil_right", "trefoil_left",  "figure8",       "L7n1",
            "L7n2",          "two_bridge(8,3)"};
}

std::optional<LinkDiagram> corpus_variant(const std::string& name) {
    if (name == "unknot") return std::nullopt;
    if (name == "hopf_minus") return reverse(parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]"), 1);
    if (name == "hopf_plus") return parse_pd("PD[X[1,3,2,4],X[3,1,4,2]]");
    std::vector<int> args;
    if (parse_call(name, "torus_2_2n", args) && args.size() == 1)
        return braid_closure(3, markov_word(2, std::vector<int>(2 * args[0], 1)));
    if (parse_call(name, "two_bridge", args) && args.size() == 2)
        return two_bridge_bridge_projection(args[0], args[1]);
    CorpusEntry e;
    if (braid_entry(name, e)) return braid_closure(e.strands + 1, markov_word(e.strands, e.word));
    return std::nullopt;
}

}
