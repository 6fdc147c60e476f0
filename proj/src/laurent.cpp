#include "hfl/laurent.hpp"

#include <stdexcept>
#include <sstream>

namespace hfl {

MultiLaurent::MultiLaurent(int l) : l_(l) {
    if (l < 0) throw std::invalid_argument("negative variable count");
}

MultiLaurent MultiLaurent::constant(int l, const Int& c) {
    return monomial(l, Exp2(l, 0), c);
}

MultiLaurent MultiLaurent::monomial(int l, const Exp2& e2, const Int& c) {
    MultiLaurent p(l);
    p.add_term(e2, c);
    return p;
}

Int MultiLaurent::coeff(const Exp2& e2) const {
    auto it = terms_.find(e2);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiLaurent::add_term(const Exp2& e2, const Int& c) {
    if ((int)e2.size() != l_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e2, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiLaurent::check(const MultiLaurent& o) const {
    if (l_ != o.l_) throw std::invalid_argument("variable count mismatch");
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    MultiLaurent r = *this;
    r += o;
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    check(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const { return *this + (-o); }

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    check(o);
    MultiLaurent r(l_);
    Exp2 e(l_);
    for (auto& [a, ca] : terms_)
        for (auto& [b, cb] : o.terms_) {
            for (int i = 0; i < l_; ++i) e[i] = a[i] + b[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiLaurent MultiLaurent::bar() const {
    MultiLaurent r(l_);
    for (auto& [e, c] : terms_) {
        Exp2 n(e);
        for (auto& x : n) x = -x;
        r.add_term(n, c);
    }
    return r;
}

MultiLaurent MultiLaurent::shifted(const Exp2& s) const {
    MultiLaurent r(l_);
    for (auto& [e, c] : terms_) {
        Exp2 n(e);
        for (int i = 0; i < l_; ++i) n[i] += s[i];
        r.add_term(n, c);
    }
    return r;
}

Exp2 MultiLaurent::min_exp() const {
    Exp2 m(l_, 0);
    bool first = true;
    for (auto& kv : terms_) {
        for (int i = 0; i < l_; ++i)
            if (first || kv.first[i] < m[i]) m[i] = kv.first[i];
        first = false;
    }
    return m;
}

Exp2 MultiLaurent::max_exp() const {
    Exp2 m(l_, 0);
    bool first = true;
    for (auto& kv : terms_) {
        for (int i = 0; i < l_; ++i)
            if (first || kv.first[i] > m[i]) m[i] = kv.first[i];
        first = false;
    }
    return m;
}

std::string half_str(int t) {
    if (t % 2 == 0) return std::to_string(t / 2);
    return std::to_string(t) + "/2";
}

std::string MultiLaurent::str() const {
    if (terms_.empty()) return "0";
    static const char* names2[] = {"S", "T"};
    std::ostringstream os;
    bool first = true;
    // highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c < 0 ? Int(-c) : c;
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = true;
        for (int x : e) if (x) unit = false;
        if (a != 1 || unit) os << a;
        for (int i = 0; i < l_; ++i) {
            if (!e[i]) continue;
            if (l_ <= 2) os << (l_ == 1 ? "T" : names2[i]);
            else os << "T" << i + 1;
            if (e[i] != 2) os << "^{" << half_str(e[i]) << "}";
        }
    }
    return os.str();
}

MultiLaurent spin_product(int l) {
    if (l < 1) throw std::invalid_argument("spin_product needs l >= 1");
    MultiLaurent r = MultiLaurent::constant(l, 1);
    for (int i = 0; i < l; ++i) {
        Exp2 up(l, 0), dn(l, 0);
        up[i] = 1;
        dn[i] = -1;
        r = r * (MultiLaurent::monomial(l, up) - MultiLaurent::monomial(l, dn));
    }
    return r;
}

MultiLaurent symmetric_normalize(const MultiLaurent& p) {
    if (p.is_zero()) return p;
    int l = p.nvars();
    Exp2 lo = p.min_exp(), hi = p.max_exp();
    Exp2 s(l);
    for (int i = 0; i < l; ++i) s[i] = -(lo[i] + hi[i]) / 2;
    for (int i = 0; i < l; ++i)
        if ((lo[i] + hi[i]) % 2) throw std::domain_error("no symmetric unit multiple (odd span)");
    MultiLaurent c = p.shifted(s);
    // bar-antisymmetric inputs (odd products of binomials) are centred the same way
    MultiLaurent b = c.bar();
    if (b != c && b != -c) throw std::domain_error("no symmetric unit multiple");
    if (c.terms().rbegin()->second < 0) c = -c;
    return c;
}

static bool unit_match(const MultiLaurent& p, const MultiLaurent& q, bool allow_shift) {
    if (p.nvars() != q.nvars()) return false;
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.terms().size() != q.terms().size()) return false;
    Exp2 s(p.nvars(), 0);
    if (allow_shift) {
        Exp2 a = p.min_exp(), b = q.min_exp();
        for (int i = 0; i < p.nvars(); ++i) s[i] = b[i] - a[i];
    }
    MultiLaurent ps = p.shifted(s);
    return ps == q || -ps == q;
}

bool equal_up_to_unit(const MultiLaurent& p, const MultiLaurent& q) { return unit_match(p, q, true); }
bool equal_up_to_sign(const MultiLaurent& p, const MultiLaurent& q) { return unit_match(p, q, false); }

MultiLaurent truncate_below(const MultiLaurent& p, int i, int lo) {
    MultiLaurent r(p.nvars());
    for (auto& [e, c] : p.terms())
        if (e[i] >= lo) r.add_term(e, c);
    return r;
}

SeriesTruncation series_quotient(const MultiLaurent& p, int i, int N) {
    if (N < 0) throw std::invalid_argument("negative depth");
    if (i < 0 || i >= p.nvars()) throw std::invalid_argument("variable index out of range");
    SeriesTruncation st;
    st.var = i;
    st.depth = N;
    st.min_e2 = p.is_zero() ? 0 : p.max_exp()[i] - 2 * N;
    MultiLaurent g(p.nvars());
    for (int a = 0; a <= N; ++a) {
        Exp2 e(p.nvars(), 0);
        e[i] = -2 * a;
        g.add_term(e, 1);
    }
    st.poly = truncate_below(p * g, i, st.min_e2);
    return st;
}

MultiLaurent divide_by_t_minus_one(const MultiLaurent& p, int i) {
    // peel off the top term in variable i repeatedly
    int l = p.nvars();
    MultiLaurent rem = p, q(l);
    int floor = p.min_exp()[i];
    while (!rem.is_zero()) {
        int top = rem.max_exp()[i];
        if (top < floor) throw std::domain_error("division by (T-1) is not exact");
        MultiLaurent slice(l);
        for (auto& [e, c] : rem.terms())
            if (e[i] == top) slice.add_term(e, c);
        Exp2 d(l, 0);
        d[i] = -2;
        MultiLaurent qt = slice.shifted(d);
        q += qt;
        Exp2 up(l, 0);
        up[i] = 2;
        MultiLaurent tm1 = MultiLaurent::monomial(l, up) - MultiLaurent::constant(l, 1);
        rem = rem - qt * tm1;
    }
    return q;
}

MultiLaurent exact_divide(const MultiLaurent& p, const MultiLaurent& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.nvars() != d.nvars()) throw std::invalid_argument("variable count mismatch");
    int l = p.nvars();
    MultiLaurent q(l), r = p;
    if (p.is_zero()) return q;
    Exp2 lo(l), hi(l);
    auto pmin = p.min_exp(), pmax = p.max_exp(), dmin = d.min_exp(), dmax = d.max_exp();
    for (int i = 0; i < l; ++i) {
        lo[i] = pmin[i] - dmin[i];
        hi[i] = pmax[i] - dmax[i];
    }
    auto& [dl, dc] = *d.terms().rbegin();
    while (!r.is_zero()) {
        auto& [rl, rc] = *r.terms().rbegin();
        Exp2 e(l);
        for (int i = 0; i < l; ++i) {
            e[i] = rl[i] - dl[i];
            if (e[i] < lo[i] || e[i] > hi[i]) throw std::domain_error("inexact polynomial division");
        }
        if (rc % dc != 0) throw std::domain_error("inexact polynomial division");
        MultiLaurent t = MultiLaurent::monomial(l, e, rc / dc);
        q += t;
        r = r - t * d;
    }
    return q;
}

MultiLaurent remap_vars(const MultiLaurent& p, const std::vector<int>& to, int new_l) {
    if ((int)to.size() != p.nvars()) throw std::invalid_argument("remap size mismatch");
    MultiLaurent r(new_l);
    for (auto& [e, c] : p.terms()) {
        Exp2 n(new_l, 0);
        for (int i = 0; i < p.nvars(); ++i)
            if (to[i] >= 0) n[to[i]] += e[i];
        r.add_term(n, c);
    }
    return r;
}

}
