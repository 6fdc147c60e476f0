#pragma once
// Laurent polynomials in l variables, half-integer exponents stored doubled.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace hfl {

using Int = boost::multiprecision::cpp_int;
using Exp2 = std::vector<int>;

class MultiLaurent {
public:
    explicit MultiLaurent(int l = 1);
    static MultiLaurent constant(int l, const Int& c);
    static MultiLaurent monomial(int l, const Exp2& e2, const Int& c = 1);

    int nvars() const { return l_; }
    const std::map<Exp2, Int>& terms() const { return terms_; }
    Int coeff(const Exp2& e2) const;
    void add_term(const Exp2& e2, const Int& c);
    bool is_zero() const { return terms_.empty(); }

    MultiLaurent operator+(const MultiLaurent& o) const;
    MultiLaurent operator-(const MultiLaurent& o) const;
    MultiLaurent operator*(const MultiLaurent& o) const;
    MultiLaurent operator-() const;
    MultiLaurent& operator+=(const MultiLaurent& o);
    bool operator==(const MultiLaurent& o) const { return l_ == o.l_ && terms_ == o.terms_; }
    bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

    MultiLaurent bar() const;
    MultiLaurent shifted(const Exp2& e2) const;
    // per-variable min/max of doubled exponents; empty polynomial gives zeros
    Exp2 min_exp() const;
    Exp2 max_exp() const;

    std::string str() const;

private:
    void check(const MultiLaurent& o) const;
    int l_;
    std::map<Exp2, Int> terms_;
};

MultiLaurent spin_product(int l);

// centred unit multiple (bar-fixed, or bar-antisymmetric for odd binomial products);
// sign chosen so the lexicographically highest term is positive
MultiLaurent symmetric_normalize(const MultiLaurent& p);

// true if p = +-m*q for some monomial m
bool equal_up_to_unit(const MultiLaurent& p, const MultiLaurent& q);
bool equal_up_to_sign(const MultiLaurent& p, const MultiLaurent& q);

struct SeriesTruncation {
    MultiLaurent poly;
    int var = 0;
    int depth = 0;
    int min_e2 = 0; // terms with doubled exponent of var below this are outside the window
};

SeriesTruncation series_quotient(const MultiLaurent& p, int i, int N);

// Drop every term with exponent of variable i (doubled) below lo.
MultiLaurent truncate_below(const MultiLaurent& p, int i, int lo);

// Exact quotient p / (T_i - 1); throws if not exact.
MultiLaurent divide_by_t_minus_one(const MultiLaurent& p, int i);

// Exact quotient p / d in the Laurent ring; throws if d does not divide p.
MultiLaurent exact_divide(const MultiLaurent& p, const MultiLaurent& d);

// Substitute variables: new variable index for each old one (-1 drops, i.e. sets T=1).
MultiLaurent remap_vars(const MultiLaurent& p, const std::vector<int>& to, int new_l);

std::string half_str(int twice);

}
