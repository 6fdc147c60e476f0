#pragma once
// Multi-filtered chain complexes over GF(2). Filtration values are stored doubled,
// so half-integer Alexander gradings are plain ints.

#include "hfl/laurent.hpp"

#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hfl {

struct Generator {
    std::string id;
    int d = 0;
    std::vector<int> h2;
};

struct FilteredComplex {
    int l = 1;
    std::vector<int> parity; // h2[i] mod 2, one entry per coordinate
    std::vector<Generator> gens;
    std::set<std::pair<int, int>> arrows; // (from, to) generator indices

    int add(const std::string& id, int d, const std::vector<int>& h2);
    void arrow(int from, int to) { arrows.insert({from, to}); }
    int index_of(const std::string& id) const;
    int size() const { return (int)gens.size(); }
};

struct Violation {
    std::string kind; // parity | grading | filtration | d_squared | format
    std::string detail;
};

std::optional<Violation> validate(const FilteredComplex& c);

// rank table keyed by (maslov, doubled Alexander grading)
struct MultiGradedVS {
    int l = 1;
    std::map<std::pair<int, std::vector<int>>, int> ranks;

    void add(int d, const std::vector<int>& h2, int r);
    int rank(int d, const std::vector<int>& h2) const;
    int total() const;
    std::map<int, int> by_maslov() const;
    MultiLaurent euler() const;
    bool operator==(const MultiGradedVS& o) const { return l == o.l && ranks == o.ranks; }
    bool operator!=(const MultiGradedVS& o) const { return !(*this == o); }
};

MultiGradedVS assoc_graded_homology(const FilteredComplex& c);
std::map<int, int> total_homology(const FilteredComplex& c);
// E_1, E_2, ..., last entry is E_infinity; pages of the filtration by the sum of coordinates
std::vector<MultiGradedVS> spectral_pages(const FilteredComplex& c);
// homology along arrows that change only coordinate i; coordinate i is dropped
FilteredComplex component_homology(const FilteredComplex& c, int i);
FilteredComplex shift(const FilteredComplex& c, const std::vector<int>& a2);
MultiGradedVS shift(const MultiGradedVS& v, const std::vector<int>& a2);
FilteredComplex direct_sum(const FilteredComplex& a, const FilteredComplex& b);

// rank(d,h) = sum over h1#h2 = h, d1+d2 = d; coordinate c2 of v2 merges into c1 of v1,
// remaining coordinates of v2 are appended in order
MultiGradedVS tensor_graded(const MultiGradedVS& v1, const MultiGradedVS& v2, int c1, int c2);
// new coordinate k is old coordinate perm[k]
MultiGradedVS permute(const MultiGradedVS& v, const std::vector<int>& perm);

enum class Kind { B, V, H, X, Y, E };

struct Summand {
    Kind kind = Kind::B;
    int d = 0;
    int m = 0;                 // unused for B
    std::vector<int> shift2;   // doubled; length 2, or 1 for E
    bool operator==(const Summand& o) const {
        return kind == o.kind && d == o.d && m == o.m && shift2 == o.shift2;
    }
    bool operator<(const Summand& o) const;
    std::string str() const;
};

FilteredComplex build_summand(const Summand& s);
FilteredComplex from_summands(const std::vector<Summand>& s, int l = 2);

struct not_e2_collapsed : std::domain_error {
    using std::domain_error::domain_error;
};

bool is_e2_collapsed(const FilteredComplex& c);
std::vector<Summand> decompose(const FilteredComplex& c);
// isolated cells come out as X^0 unless the rest of the list is Y-type
void normalize_isolated(std::vector<Summand>& s);

// one-coordinate complexes: E-bars plus free generators (maslov, doubled filtration)
struct KnotBars {
    std::vector<Summand> bars;
    std::vector<std::pair<int, int>> free;
    bool operator==(const KnotBars& o) const { return bars == o.bars && free == o.free; }
};
KnotBars barcodes(const FilteredComplex& c);
// tensor with the two-step space M and shift filtration by a2 (doubled)
KnotBars tensor_two_step(const KnotBars& k, int a2);

// GF(2) changes of basis e_i += e_j with d(e_j) = d(e_i) and h(e_j) <= h(e_i);
// same_position restricts to h(e_j) = h(e_i)
FilteredComplex random_basis_change(const FilteredComplex& c, std::mt19937_64& rng, int steps,
                                    bool same_position);

nlohmann::json to_json(const FilteredComplex& c);
FilteredComplex complex_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MultiGradedVS& v);
MultiGradedVS table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Summand& s);
Summand summand_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MultiLaurent& p);
MultiLaurent laurent_from_json(const nlohmann::json& j);

}
