#include "hfl/filtcx.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <sstream>

namespace hfl {

namespace {

using Bits = boost::dynamic_bitset<>;
using Key = std::pair<int, std::vector<int>>;

int mod2(int x) { return ((x % 2) + 2) % 2; }

bool leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int coord_sum(const std::vector<int>& h) {
    int s = 0;
    for (int v : h) s += v;
    return s;
}

// complex under cancellation
struct Work {
    const FilteredComplex& c;
    std::vector<char> alive;
    std::vector<std::set<int>> out, in;

    explicit Work(const FilteredComplex& cc) : c(cc), alive(cc.size(), 1), out(cc.size()), in(cc.size()) {
        for (auto [a, b] : cc.arrows) {
            out[a].insert(b);
            in[b].insert(a);
        }
    }
    void toggle(int a, int b) {
        if (out[a].count(b)) {
            out[a].erase(b);
            in[b].erase(a);
        } else {
            out[a].insert(b);
            in[b].insert(a);
        }
    }
    void cancel(int x, int y) {
        std::vector<int> srcs, dsts;
        for (int a : in[y])
            if (a != x) srcs.push_back(a);
        for (int b : out[x])
            if (b != y) dsts.push_back(b);
        for (int a : srcs)
            for (int b : dsts) toggle(a, b);
        for (int v : {x, y}) {
            for (int b : std::vector<int>(out[v].begin(), out[v].end())) toggle(v, b);
            for (int a : std::vector<int>(in[v].begin(), in[v].end())) toggle(a, v);
            alive[v] = 0;
        }
    }
    // cancel arrows accepted by pick until none remain; pick returns a priority, or -1 to skip
    void reduce(const std::function<int(int, int)>& pick) {
        while (true) {
            int bx = -1, by = -1, bp = 0;
            for (int x = 0; x < c.size(); ++x) {
                if (!alive[x]) continue;
                for (int y : out[x]) {
                    int p = pick(x, y);
                    if (p < 0) continue;
                    if (bx < 0 || p < bp) bx = x, by = y, bp = p;
                }
            }
            if (bx < 0) return;
            cancel(bx, by);
        }
    }
    MultiGradedVS table() const {
        MultiGradedVS v;
        v.l = c.l;
        for (int x = 0; x < c.size(); ++x)
            if (alive[x]) v.add(c.gens[x].d, c.gens[x].h2, 1);
        return v;
    }
    bool has_arrows() const {
        for (int x = 0; x < c.size(); ++x)
            if (alive[x] && !out[x].empty()) return true;
        return false;
    }
};

// GF(2) echelon form with combination tracking
struct Echelon {
    std::vector<Bits> rows, combos;
    size_t ncombo = 0;
    explicit Echelon(size_t nc = 0) : ncombo(nc) {}
    // returns the residual of v; combo receives the combination of inserted vectors used
    Bits reduce(Bits v, Bits* combo = nullptr) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            size_t p = rows[r].find_first();
            if (v.test(p)) {
                v ^= rows[r];
                if (combo) *combo ^= combos[r];
            }
        }
        return v;
    }
    bool insert(const Bits& v, const Bits& combo) {
        Bits c = combo;
        Bits r = reduce(v, &c);
        if (r.none()) return false;
        size_t p = r.find_first();
        // keep pivots unique: clear pivot p from existing rows
        for (size_t k = 0; k < rows.size(); ++k)
            if (rows[k].test(p)) {
                rows[k] ^= r;
                combos[k] ^= c;
            }
        rows.push_back(r);
        combos.push_back(c);
        return true;
    }
    size_t rank() const { return rows.size(); }
};

size_t rank_of(const std::vector<Bits>& vs, size_t width) {
    Echelon e(1);
    size_t r = 0;
    for (auto& v : vs) {
        Bits b = v;
        b.resize(width);
        if (e.insert(b, Bits(1))) ++r;
    }
    return r;
}

std::vector<Bits> nullspace(const std::vector<Bits>& cols, size_t nrows) {
    // cols: images of unit vectors; returns kernel basis as bitsets over columns
    size_t n = cols.size();
    Echelon e(n);
    std::vector<Bits> ker;
    for (size_t k = 0; k < n; ++k) {
        Bits v = cols[k];
        v.resize(nrows);
        Bits unit(n);
        unit.set(k);
        Bits c = unit;
        Bits r = e.reduce(v, &c);
        if (r.none()) ker.push_back(c);
        else e.insert(v, unit);
    }
    return ker;
}

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::B: return "B";
    case Kind::V: return "V";
    case Kind::H: return "H";
    case Kind::X: return "X";
    case Kind::Y: return "Y";
    case Kind::E: return "E";
    }
    return "?";
}

Kind kind_from(const std::string& s) {
    if (s == "B") return Kind::B;
    if (s == "V") return Kind::V;
    if (s == "H") return Kind::H;
    if (s == "X") return Kind::X;
    if (s == "Y") return Kind::Y;
    if (s == "E") return Kind::E;
    throw std::invalid_argument("unknown summand kind " + s);
}

}

int FilteredComplex::add(const std::string& id, int d, const std::vector<int>& h2) {
    gens.push_back({id, d, h2});
    return (int)gens.size() - 1;
}

int FilteredComplex::index_of(const std::string& id) const {
    for (int k = 0; k < size(); ++k)
        if (gens[k].id == id) return k;
    return -1;
}

std::optional<Violation> validate(const FilteredComplex& c) {
    if ((int)c.parity.size() != c.l) return Violation{"format", "parity vector has wrong length"};
    std::set<std::string> ids;
    for (auto& g : c.gens) {
        if ((int)g.h2.size() != c.l) return Violation{"format", "generator " + g.id + " has wrong filtration length"};
        if (!ids.insert(g.id).second) return Violation{"format", "duplicate generator id " + g.id};
        for (int i = 0; i < c.l; ++i)
            if (mod2(g.h2[i]) != mod2(c.parity[i]))
                return Violation{"parity", "generator " + g.id + " coordinate " + std::to_string(i) + " off the lattice"};
    }
    std::vector<std::vector<int>> out(c.size());
    for (auto [a, b] : c.arrows) {
        if (a < 0 || b < 0 || a >= c.size() || b >= c.size()) return Violation{"format", "arrow index out of range"};
        auto& x = c.gens[a];
        auto& y = c.gens[b];
        if (x.d - y.d != 1)
            return Violation{"grading", x.id + " -> " + y.id + " drops maslov by " + std::to_string(x.d - y.d)};
        if (!leq(y.h2, x.h2)) return Violation{"filtration", x.id + " -> " + y.id + " raises the filtration"};
        out[a].push_back(b);
    }
    for (int a = 0; a < c.size(); ++a) {
        std::map<int, int> cnt;
        for (int b : out[a])
            for (int z : out[b]) cnt[z] ^= 1;
        for (auto [z, v] : cnt)
            if (v) return Violation{"d_squared", "d^2 " + c.gens[a].id + " has " + c.gens[z].id};
    }
    return std::nullopt;
}

void MultiGradedVS::add(int d, const std::vector<int>& h2, int r) {
    if (r == 0) return;
    int& v = ranks[{d, h2}];
    v += r;
    if (v == 0) ranks.erase({d, h2});
}

int MultiGradedVS::rank(int d, const std::vector<int>& h2) const {
    auto it = ranks.find({d, h2});
    return it == ranks.end() ? 0 : it->second;
}

int MultiGradedVS::total() const {
    int t = 0;
    for (auto& [k, r] : ranks) t += r;
    return t;
}

std::map<int, int> MultiGradedVS::by_maslov() const {
    std::map<int, int> m;
    for (auto& [k, r] : ranks) m[k.first] += r;
    return m;
}

MultiLaurent MultiGradedVS::euler() const {
    MultiLaurent p(l);
    for (auto& [k, r] : ranks) p.add_term(k.second, (k.first % 2 == 0) ? r : -r);
    return p;
}

MultiGradedVS assoc_graded_homology(const FilteredComplex& c) {
    Work w(c);
    w.reduce([&](int x, int y) { return c.gens[x].h2 == c.gens[y].h2 ? 0 : -1; });
    return w.table();
}

std::map<int, int> total_homology(const FilteredComplex& c) {
    Work w(c);
    w.reduce([](int, int) { return 0; });
    return w.table().by_maslov();
}

std::vector<MultiGradedVS> spectral_pages(const FilteredComplex& c) {
    Work w(c);
    std::vector<MultiGradedVS> pages;
    for (int r = 0;; ++r) {
        w.reduce([&](int x, int y) { return coord_sum(c.gens[x].h2) - coord_sum(c.gens[y].h2) == 2 * r ? 0 : -1; });
        pages.push_back(w.table());
        if (!w.has_arrows()) break;
    }
    return pages;
}

FilteredComplex component_homology(const FilteredComplex& c, int i) {
    if (i < 0 || i >= c.l) throw std::invalid_argument("coordinate out of range");
    Work w(c);
    w.reduce([&](int x, int y) {
        for (int k = 0; k < c.l; ++k)
            if (k != i && c.gens[x].h2[k] != c.gens[y].h2[k]) return -1;
        return 0;
    });
    FilteredComplex r;
    r.l = c.l - 1;
    for (int k = 0; k < c.l; ++k)
        if (k != i) r.parity.push_back(c.parity[k]);
    std::vector<int> idx(c.size(), -1);
    for (int x = 0; x < c.size(); ++x) {
        if (!w.alive[x]) continue;
        std::vector<int> h;
        for (int k = 0; k < c.l; ++k)
            if (k != i) h.push_back(c.gens[x].h2[k]);
        idx[x] = r.add(c.gens[x].id, c.gens[x].d, h);
    }
    for (int x = 0; x < c.size(); ++x)
        if (w.alive[x])
            for (int y : w.out[x]) r.arrow(idx[x], idx[y]);
    return r;
}

FilteredComplex shift(const FilteredComplex& c, const std::vector<int>& a2) {
    if ((int)a2.size() != c.l) throw std::invalid_argument("shift has wrong length");
    FilteredComplex r = c;
    for (int i = 0; i < c.l; ++i) r.parity[i] = mod2(c.parity[i] + a2[i]);
    for (auto& g : r.gens)
        for (int i = 0; i < c.l; ++i) g.h2[i] += a2[i];
    return r;
}

MultiGradedVS shift(const MultiGradedVS& v, const std::vector<int>& a2) {
    if ((int)a2.size() != v.l) throw std::invalid_argument("shift has wrong length");
    MultiGradedVS r;
    r.l = v.l;
    for (auto& [k, n] : v.ranks) {
        auto h = k.second;
        for (int i = 0; i < v.l; ++i) h[i] += a2[i];
        r.add(k.first, h, n);
    }
    return r;
}

FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b) {
    if (a.gens.empty()) return b;
    if (b.gens.empty()) return a;
    if (a.l != b.l) throw std::invalid_argument("direct sum of complexes with different l");
    if (a.parity != b.parity) throw std::invalid_argument("direct sum across different parity cosets");
    FilteredComplex r = a;
    int off = a.size();
    std::set<std::string> ids;
    for (auto& g : a.gens) ids.insert(g.id);
    for (auto& g : b.gens) {
        std::string id = g.id;
        while (ids.count(id)) id += "'";
        ids.insert(id);
        r.add(id, g.d, g.h2);
    }
    for (auto [x, y] : b.arrows) r.arrow(x + off, y + off);
    return r;
}

MultiGradedVS tensor_graded(const MultiGradedVS& v1, const MultiGradedVS& v2, int c1, int c2) {
    if (c1 < 0 || c1 >= v1.l || c2 < 0 || c2 >= v2.l) throw std::invalid_argument("invalid splice");
    MultiGradedVS r;
    r.l = v1.l + v2.l - 1;
    for (auto& [k1, n1] : v1.ranks)
        for (auto& [k2, n2] : v2.ranks) {
            auto h = k1.second;
            h[c1] += k2.second[c2];
            for (int i = 0; i < v2.l; ++i)
                if (i != c2) h.push_back(k2.second[i]);
            r.add(k1.first + k2.first, h, n1 * n2);
        }
    return r;
}

MultiGradedVS permute(const MultiGradedVS& v, const std::vector<int>& perm) {
    if ((int)perm.size() != v.l) throw std::invalid_argument("permutation has wrong length");
    MultiGradedVS r;
    r.l = v.l;
    for (auto& [k, n] : v.ranks) {
        std::vector<int> h(v.l);
        for (int i = 0; i < v.l; ++i) h[i] = k.second[perm[i]];
        r.add(k.first, h, n);
    }
    return r;
}

bool Summand::operator<(const Summand& o) const {
    return std::tie(kind, d, m, shift2) < std::tie(o.kind, o.d, o.m, o.shift2);
}

std::string Summand::str() const {
    std::string s = kind_name(kind);
    if (kind != Kind::B) s += "^" + std::to_string(m);
    s += "_{(" + std::to_string(d) + ")}[";
    for (size_t i = 0; i < shift2.size(); ++i) s += (i ? "," : "") + half_str(shift2[i]);
    return s + "]";
}

FilteredComplex build_summand(const Summand& s) {
    FilteredComplex c;
    bool knot = s.kind == Kind::E;
    c.l = knot ? 1 : 2;
    if ((int)s.shift2.size() != c.l) throw std::invalid_argument("summand shift has wrong length");
    for (int i = 0; i < c.l; ++i) c.parity.push_back(mod2(s.shift2[i]));
    auto at = [&](int i, int j) { return std::vector<int>{2 * i + s.shift2[0], 2 * j + s.shift2[1]}; };
    int d = s.d, m = s.m;
    switch (s.kind) {
    case Kind::B: {
        int a = c.add("a", d, at(0, 0)), b = c.add("b", d + 1, at(1, 0)), e = c.add("c", d + 1, at(0, 1)),
            x = c.add("x", d + 2, at(1, 1));
        c.arrow(x, e);
        c.arrow(x, b);
        c.arrow(b, a);
        c.arrow(e, a);
        break;
    }
    case Kind::V:
    case Kind::H: {
        if (m < 1) throw std::invalid_argument("V/H summands need m >= 1");
        std::vector<int> top, bot;
        for (int k = 0; k < m; ++k) {
            if (s.kind == Kind::V) {
                top.push_back(c.add("t" + std::to_string(k), d, at(-k, k)));
                bot.push_back(c.add("b" + std::to_string(k), d - 1, at(-k - 1, k)));
            } else {
                top.push_back(c.add("t" + std::to_string(k), d, at(k, -k)));
                bot.push_back(c.add("b" + std::to_string(k), d - 1, at(k, -k - 1)));
            }
        }
        for (int k = 0; k < m; ++k) {
            c.arrow(top[k], bot[k]);
            if (k > 0) c.arrow(top[k], bot[k - 1]);
        }
        break;
    }
    case Kind::X: {
        if (m < 0) throw std::invalid_argument("X summands need m >= 0");
        std::vector<int> lo, up(m + 1, -1);
        for (int k = 0; k <= m; ++k) lo.push_back(c.add("l" + std::to_string(k), d, at(k, m - k)));
        for (int k = 1; k <= m; ++k) {
            up[k] = c.add("u" + std::to_string(k), d + 1, at(k, m + 1 - k));
            c.arrow(up[k], lo[k - 1]);
            c.arrow(up[k], lo[k]);
        }
        break;
    }
    case Kind::Y: {
        if (m < 0) throw std::invalid_argument("Y summands need m >= 0");
        std::vector<int> up, lo;
        for (int k = 0; k <= m; ++k) up.push_back(c.add("u" + std::to_string(k), d, at(k, m - k)));
        for (int k = 0; k < m; ++k) lo.push_back(c.add("l" + std::to_string(k), d - 1, at(k, m - 1 - k)));
        for (int k = 0; k <= m; ++k) {
            if (k > 0) c.arrow(up[k], lo[k - 1]);
            if (k < m) c.arrow(up[k], lo[k]);
        }
        break;
    }
    case Kind::E: {
        if (m < 1) throw std::invalid_argument("E summands need m >= 1");
        int t = c.add("t", d, {s.shift2[0]}), b = c.add("b", d - 1, {s.shift2[0] - 2 * m});
        c.arrow(t, b);
        break;
    }
    }
    return c;
}

FilteredComplex from_summands(const std::vector<Summand>& s, int l) {
    FilteredComplex c;
    c.l = l;
    for (size_t k = 0; k < s.size(); ++k) {
        FilteredComplex p = build_summand(s[k]);
        for (auto& g : p.gens) g.id = "s" + std::to_string(k) + "." + g.id;
        if (k == 0) {
            c = p;
            continue;
        }
        c = direct_sum(c, p);
    }
    if (c.parity.empty()) c.parity.assign(l, 0);
    return c;
}

bool is_e2_collapsed(const FilteredComplex& c) {
    if (c.l != 2) return false;
    for (auto [a, b] : c.arrows) {
        int d0 = c.gens[a].h2[0] - c.gens[b].h2[0], d1 = c.gens[a].h2[1] - c.gens[b].h2[1];
        if (!((d0 == 2 && d1 == 0) || (d0 == 0 && d1 == 2))) return false;
    }
    return true;
}

void normalize_isolated(std::vector<Summand>& s) {
    bool has_x = false, has_y = false;
    for (auto& t : s) {
        if (t.kind == Kind::X && t.m > 0) has_x = true;
        if (t.kind == Kind::Y && t.m > 0) has_y = true;
    }
    for (auto& t : s)
        if ((t.kind == Kind::X || t.kind == Kind::Y) && t.m == 0) t.kind = (has_y && !has_x) ? Kind::Y : Kind::X;
    std::sort(s.begin(), s.end());
}

std::vector<Summand> decompose(const FilteredComplex& c) {
    if (auto v = validate(c)) throw std::invalid_argument("invalid complex: " + v->detail);
    if (c.l != 2) throw std::invalid_argument("decompose needs a two-coordinate complex");
    if (!is_e2_collapsed(c)) throw not_e2_collapsed("complex is not E2-collapsed");
    int n = c.size();
    std::vector<Bits> D1(n, Bits(n)), D2(n, Bits(n));
    for (auto [a, b] : c.arrows) {
        if (c.gens[a].h2[0] != c.gens[b].h2[0]) D1[a].set(b);
        else D2[a].set(b);
    }
    auto apply = [&](const std::vector<Bits>& D, const Bits& v) {
        Bits r(n);
        for (size_t g = v.find_first(); g != Bits::npos; g = v.find_next(g)) r ^= D[g];
        return r;
    };
    auto keyof = [&](int g) { return Key{c.gens[g].d, c.gens[g].h2}; };
    auto off = [](const Key& k, int dd, int a, int b) { return Key{k.first + dd, {k.second[0] + a, k.second[1] + b}}; };
    std::map<Key, std::vector<Bits>> M;
    for (int g = 0; g < n; ++g) {
        Bits u(n);
        u.set(g);
        M[keyof(g)].push_back(u);
    }
    std::vector<Summand> out;

    // free summands
    while (true) {
        Key top;
        Bits x, y;
        bool found = false;
        for (auto& [k, basis] : M) {
            for (auto& z : basis) {
                Bits w = apply(D1, apply(D2, z));
                if (w.any()) {
                    top = k, x = z, y = w, found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;
        size_t phi = y.find_first();
        out.push_back({Kind::B, top.first - 2, 0, {top.second[0] - 2, top.second[1] - 2}});
        std::vector<std::pair<Key, std::function<bool(const Bits&)>>> fs = {
            {top, [&](const Bits& z) { return apply(D1, apply(D2, z)).test(phi); }},
            {off(top, -1, -2, 0), [&](const Bits& z) { return apply(D2, z).test(phi); }},
            {off(top, -1, 0, -2), [&](const Bits& z) { return apply(D1, z).test(phi); }},
            {off(top, -2, -2, -2), [&](const Bits& z) { return z.test(phi); }},
        };
        for (auto& [k, f] : fs) {
            auto& basis = M[k];
            int p = -1;
            for (int t = 0; t < (int)basis.size(); ++t)
                if (f(basis[t])) {
                    p = t;
                    break;
                }
            if (p < 0) throw std::logic_error("free summand splitting failed");
            std::vector<Bits> nb;
            for (int t = 0; t < (int)basis.size(); ++t) {
                if (t == p) continue;
                nb.push_back(f(basis[t]) ? (basis[t] ^ basis[p]) : basis[t]);
            }
            basis = nb;
        }
    }

    // remaining module has all compositions zero: tops T_u, bottoms Im_u
    std::map<Key, std::vector<Bits>> Im, T;
    for (auto& [k, basis] : M) {
        std::vector<Bits> cand;
        auto it1 = M.find(off(k, 1, 2, 0));
        if (it1 != M.end())
            for (auto& b : it1->second) cand.push_back(apply(D1, b));
        auto it2 = M.find(off(k, 1, 0, 2));
        if (it2 != M.end())
            for (auto& b : it2->second) cand.push_back(apply(D2, b));
        Echelon e(1);
        std::vector<Bits> im;
        for (auto& v : cand)
            if (e.insert(v, Bits(1))) im.push_back(v);
        std::vector<Bits> tops;
        for (auto& b : basis)
            if (e.insert(b, Bits(1))) tops.push_back(b);
        if (e.rank() != basis.size()) throw std::logic_error("image not contained in the summand");
        if (!im.empty()) Im[k] = im;
        if (!tops.empty()) T[k] = tops;
    }
    auto coords = [&](const Key& k, const Bits& v) {
        auto it = Im.find(k);
        size_t m = it == Im.end() ? 0 : it->second.size();
        Bits r(m);
        if (v.none()) return r;
        if (it == Im.end()) throw std::logic_error("image outside bottom space");
        Echelon e(m);
        for (size_t t = 0; t < m; ++t) {
            Bits u(m);
            u.set(t);
            e.insert(it->second[t], u);
        }
        Bits combo(m);
        if (e.reduce(v, &combo).any()) throw std::logic_error("image outside bottom space");
        return combo;
    };

    // zigzag blocks keyed by (i+j-2d doubled, top level)
    std::map<std::pair<int, int>, std::pair<int, int>> blocks; // -> (imin, imax)
    auto touch = [&](int K, int d, int i) {
        auto [it, ins] = blocks.insert({{K, d}, {i, i}});
        if (!ins) {
            it->second.first = std::min(it->second.first, i);
            it->second.second = std::max(it->second.second, i);
        }
    };
    for (auto& [k, v] : T) touch(k.second[0] + k.second[1] - 2 * k.first, k.first, k.second[0]);
    for (auto& [k, v] : Im) touch(k.second[0] + k.second[1] - 2 * k.first, k.first + 1, k.second[0]);

    for (auto& [bk, range] : blocks) {
        auto [K, d] = bk;
        int imin = range.first, L = (range.second - imin) / 2 + 1;
        int V = 2 * L;
        auto ival = [&](int v) { return imin + 2 * (v / 2); };
        auto vkey = [&](int v) {
            int i = ival(v);
            if (v % 2 == 0) return Key{d, {i, K + 2 * d - i}};
            return Key{d - 1, {i, K + 2 * d - 2 - i}};
        };
        std::vector<int> dim(V);
        for (int v = 0; v < V; ++v) {
            auto& src = v % 2 == 0 ? T : Im;
            auto it = src.find(vkey(v));
            dim[v] = it == src.end() ? 0 : (int)it->second.size();
        }
        // maps from top v to bottoms v+1 (D2) and v-1 (D1): columns per top basis vector
        std::map<std::pair<int, int>, std::vector<Bits>> F;
        for (int v = 0; v < V; v += 2) {
            if (!dim[v]) continue;
            for (int nb : {v - 1, v + 1}) {
                if (nb < 0 || nb >= V) continue;
                auto& D = nb == v + 1 ? D2 : D1;
                std::vector<Bits> cols;
                for (auto& t : T[vkey(v)]) {
                    Bits img = apply(D, t);
                    cols.push_back(dim[nb] ? coords(vkey(nb), img) : Bits(0));
                    if (!dim[nb] && img.any()) throw std::logic_error("image outside bottom space");
                }
                F[{v, nb}] = cols;
            }
        }
        auto r = [&](int a, int b) -> int {
            if (a < 0 || b >= V) return 0;
            for (int v = a; v <= b; ++v)
                if (!dim[v]) return 0;
            if (a == b) return dim[a];
            std::vector<int> tops, bots;
            for (int v = a; v <= b; ++v) (v % 2 == 0 ? tops : bots).push_back(v);
            std::map<int, int> toff, boff;
            int tn = 0, bn = 0;
            for (int t : tops) toff[t] = tn, tn += dim[t];
            for (int s : bots) boff[s] = bn, bn += dim[s];
            // limit: top variables with matching images at bottoms having two neighbours
            std::vector<int> inner;
            for (int s : bots)
                if (s - 1 >= a && s + 1 <= b) inner.push_back(s);
            std::map<int, int> eoff;
            int en = 0;
            for (int s : inner) eoff[s] = en, en += dim[s];
            std::vector<Bits> cols(tn, Bits(en));
            for (int t : tops)
                for (int nb : {t - 1, t + 1}) {
                    if (!eoff.count(nb)) continue;
                    auto& fc = F[{t, nb}];
                    for (int q = 0; q < dim[t]; ++q)
                        for (int z = 0; z < dim[nb]; ++z)
                            if (fc[q].test(z)) cols[toff[t] + q].flip(eoff[nb] + z);
                }
            auto lim = nullspace(cols, en);
            // colimit relations
            std::vector<Bits> rel;
            for (int t : tops) {
                if (t - 1 < a || t + 1 > b) continue;
                for (int q = 0; q < dim[t]; ++q) {
                    Bits v(bn);
                    for (int nb : {t - 1, t + 1})
                        for (int z = 0; z < dim[nb]; ++z)
                            if (F[{t, nb}][q].test(z)) v.flip(boff[nb] + z);
                    rel.push_back(v);
                }
            }
            int s0 = bots[0];
            int t0 = s0 - 1 >= a ? s0 - 1 : s0 + 1;
            std::vector<Bits> imgs = rel;
            for (auto& l : lim) {
                Bits v(bn);
                for (int q = 0; q < dim[t0]; ++q)
                    if (l.test(toff[t0] + q))
                        for (int z = 0; z < dim[s0]; ++z)
                            if (F[{t0, s0}][q].test(z)) v.flip(boff[s0] + z);
                imgs.push_back(v);
            }
            return (int)(rank_of(imgs, bn) - rank_of(rel, bn));
        };
        std::map<std::pair<int, int>, int> R;
        auto rr = [&](int a, int b) {
            auto it = R.find({a, b});
            if (it != R.end()) return it->second;
            int v = r(a, b);
            R[{a, b}] = v;
            return v;
        };
        for (int a = 0; a < V; ++a)
            for (int b = a; b < V; ++b) {
                if (!dim[a] || !dim[b]) continue;
                int mult = rr(a, b) - rr(a - 1, b) - rr(a, b + 1) + rr(a - 1, b + 1);
                if (mult < 0) throw std::logic_error("negative interval multiplicity");
                if (!mult) continue;
                Key ka = vkey(a), kb = vkey(b);
                Summand s;
                bool ta = a % 2 == 0, tb = b % 2 == 0;
                int span = (ival(b) - ival(a)) / 2;
                if (a == b && ta) s = {Kind::X, d, 0, ka.second};
                else if (ta && tb) s = {Kind::Y, d, span, {ka.second[0], ka.second[1] - 2 * span}};
                else if (!ta && !tb) s = {Kind::X, d - 1, span, {ka.second[0], ka.second[1] - 2 * span}};
                else if (ta && !tb) s = {Kind::H, d, span + 1, ka.second};
                else s = {Kind::V, d, span, kb.second};
                if (a == b && !ta) throw std::logic_error("isolated bottom cell");
                for (int t = 0; t < mult; ++t) out.push_back(s);
            }
    }
    normalize_isolated(out);

    // rebuild and compare
    FilteredComplex rb = from_summands(out);
    bool ok = assoc_graded_homology(rb) == assoc_graded_homology(c) && total_homology(rb) == total_homology(c);
    for (int i = 0; ok && i < 2; ++i)
        ok = barcodes(component_homology(rb, i)) == barcodes(component_homology(c, i));
    if (!ok) throw std::logic_error("decomposition does not reproduce the complex invariants");
    return out;
}

KnotBars barcodes(const FilteredComplex& c) {
    if (c.l != 1) throw std::invalid_argument("barcodes need a one-coordinate complex");
    Work w(c);
    KnotBars kb;
    while (true) {
        int bx = -1, by = -1, bd = 0;
        for (int x = 0; x < c.size(); ++x) {
            if (!w.alive[x]) continue;
            for (int y : w.out[x]) {
                int dr = c.gens[x].h2[0] - c.gens[y].h2[0];
                if (bx < 0 || dr < bd) bx = x, by = y, bd = dr;
            }
        }
        if (bx < 0) break;
        if (bd > 0) kb.bars.push_back({Kind::E, c.gens[bx].d, bd / 2, {c.gens[bx].h2[0]}});
        w.cancel(bx, by);
    }
    for (int x = 0; x < c.size(); ++x)
        if (w.alive[x]) kb.free.push_back({c.gens[x].d, c.gens[x].h2[0]});
    std::sort(kb.bars.begin(), kb.bars.end());
    std::sort(kb.free.begin(), kb.free.end());
    return kb;
}

KnotBars tensor_two_step(const KnotBars& k, int a2) {
    KnotBars r;
    for (auto& b : k.bars)
        for (int dd : {0, -1}) r.bars.push_back({Kind::E, b.d + dd, b.m, {b.shift2[0] + a2}});
    for (auto [d, h] : k.free)
        for (int dd : {0, -1}) r.free.push_back({d + dd, h + a2});
    std::sort(r.bars.begin(), r.bars.end());
    std::sort(r.free.begin(), r.free.end());
    return r;
}

FilteredComplex random_basis_change(const FilteredComplex& c, std::mt19937_64& rng, int steps, bool same_position) {
    FilteredComplex r = c;
    int n = r.size();
    if (n < 2) return r;
    std::vector<std::set<int>> out(n);
    for (auto [a, b] : r.arrows) out[a].insert(b);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < steps; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j || r.gens[i].d != r.gens[j].d) continue;
        if (same_position ? r.gens[i].h2 != r.gens[j].h2 : !leq(r.gens[j].h2, r.gens[i].h2)) continue;
        // e_i <- e_i + e_j
        for (int t : out[j]) {
            if (out[i].count(t)) out[i].erase(t);
            else out[i].insert(t);
        }
        for (int k = 0; k < n; ++k)
            if (out[k].count(i)) {
                if (out[k].count(j)) out[k].erase(j);
                else out[k].insert(j);
            }
    }
    r.arrows.clear();
    for (int a = 0; a < n; ++a)
        for (int b : out[a]) r.arrows.insert({a, b});
    return r;
}

nlohmann::json to_json(const FilteredComplex& c) {
    nlohmann::json j;
    j["l"] = c.l;
    j["parity"] = c.parity;
    j["gens"] = nlohmann::json::array();
    for (auto& g : c.gens) j["gens"].push_back({{"id", g.id}, {"d", g.d}, {"h2", g.h2}});
    j["arrows"] = nlohmann::json::array();
    for (auto [a, b] : c.arrows) j["arrows"].push_back({c.gens[a].id, c.gens[b].id});
    return j;
}

FilteredComplex complex_from_json(const nlohmann::json& j) {
    FilteredComplex c;
    try {
        c.l = j.at("l").get<int>();
        c.parity = j.at("parity").get<std::vector<int>>();
        std::map<std::string, int> idx;
        for (auto& g : j.at("gens")) {
            auto id = g.at("id").get<std::string>();
            if (idx.count(id)) throw std::invalid_argument("duplicate generator id " + id);
            idx[id] = c.add(id, g.at("d").get<int>(), g.at("h2").get<std::vector<int>>());
        }
        for (auto& a : j.at("arrows")) {
            if (a.size() != 2) throw std::invalid_argument("arrow must be a pair of ids");
            auto s = a[0].get<std::string>(), t = a[1].get<std::string>();
            if (!idx.count(s) || !idx.count(t)) throw std::invalid_argument("arrow names unknown generator");
            c.arrow(idx[s], idx[t]);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
    }
    return c;
}

nlohmann::json to_json(const MultiGradedVS& v) {
    nlohmann::json j;
    j["l"] = v.l;
    j["ranks"] = nlohmann::json::array();
    for (auto& [k, r] : v.ranks) j["ranks"].push_back({{"d", k.first}, {"h2", k.second}, {"rank", r}});
    return j;
}

MultiGradedVS table_from_json(const nlohmann::json& j) {
    MultiGradedVS v;
    try {
        v.l = j.at("l").get<int>();
        for (auto& e : j.at("ranks")) v.add(e.at("d").get<int>(), e.at("h2").get<std::vector<int>>(), e.at("rank").get<int>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed table JSON: ") + e.what());
    }
    return v;
}

nlohmann::json to_json(const Summand& s) {
    return {{"kind", kind_name(s.kind)}, {"d", s.d}, {"m", s.m}, {"shift2", s.shift2}, {"name", s.str()}};
}

Summand summand_from_json(const nlohmann::json& j) {
    try {
        return {kind_from(j.at("kind").get<std::string>()), j.at("d").get<int>(), j.value("m", 0),
                j.at("shift2").get<std::vector<int>>()};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed summand JSON: ") + e.what());
    }
}

nlohmann::json to_json(const MultiLaurent& p) {
    nlohmann::json j;
    j["l"] = p.nvars();
    j["terms"] = nlohmann::json::array();
    for (auto& [e, c] : p.terms()) {
        nlohmann::json t;
        t["e2"] = e;
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            t["c"] = static_cast<long long>(c);
        else
            t["c"] = c.str();
        j["terms"].push_back(t);
    }
    return j;
}

MultiLaurent laurent_from_json(const nlohmann::json& j) {
    try {
        MultiLaurent p(j.at("l").get<int>());
        for (auto& t : j.at("terms")) {
            Int c = t.at("c").is_string() ? Int(t.at("c").get<std::string>()) : Int(t.at("c").get<long long>());
            p.add_term(t.at("e2").get<std::vector<int>>(), c);
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

}
