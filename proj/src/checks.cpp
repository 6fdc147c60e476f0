#include "hfl/checks.hpp"

#include "hfl/heegaard0.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace hfl {

int CheckSuiteResult::failures() const {
    return (int)std::count_if(entries.begin(), entries.end(), [](auto& e) { return !e.pass; });
}

std::optional<std::pair<int, int>> heegaard_params(const std::string& name) {
    if (name == "hopf_plus") return std::pair{2, 3};
    if (name == "hopf_minus") return std::pair{2, 1};
    for (int n = 2; n <= 4; ++n)
        if (name == "torus_2_2n(" + std::to_string(n) + ")") return std::pair{2 * n, 4 * n - 1};
    if (name == "two_bridge(8,3)") return std::pair{8, 3};
    return std::nullopt;
}

MultiLaurent hfk_euler(const HFKTable& t, int ell) {
    MultiLaurent p(1);
    for (auto& [k, r] : t.ranks) {
        int d = (k.second - ell + 1) / 2;
        p.add_term({k.first}, d % 2 == 0 ? r : -r);
    }
    return p;
}

namespace {

struct Sink {
    std::string link;
    std::vector<CheckEntry> out;

    void add(const std::string& check, bool pass, const std::string& detail = "") {
        out.push_back({link, check, pass, pass ? "" : detail});
    }
    void add(const std::string& check, const VerifyResult& r) { add(check, r.ok, r.detail); }
    // runs f, turning exceptions into a failed entry
    void guard(const std::string& check, const std::function<void()>& f) {
        try {
            f();
        } catch (const std::exception& e) {
            add(check, false, e.what());
        }
    }
};

std::string table_diff(const MultiGradedVS& a, const MultiGradedVS& b) {
    if (a.l != b.l) return "component counts differ";
    std::set<std::pair<int, std::vector<int>>> keys;
    for (auto& [k, r] : a.ranks) keys.insert(k);
    for (auto& [k, r] : b.ranks) keys.insert(k);
    for (auto& k : keys) {
        int ra = a.rank(k.first, k.second), rb = b.rank(k.first, k.second);
        if (ra != rb) {
            std::string h;
            for (int x : k.second) h += (h.empty() ? "" : ",") + half_str(x);
            return "d=" + std::to_string(k.first) + " h=(" + h + "): " + std::to_string(ra) + " vs " +
                   std::to_string(rb);
        }
    }
    return "";
}

void complex_checks(Sink& s, const FilteredComplex& c, int n, const std::array<ComponentData, 2>& comps,
                    const MultiGradedVS& table) {
    auto v = validate(c);
    s.add("validate", !v, v ? v->kind + ": " + v->detail : "");
    auto ag = assoc_graded_homology(c);
    s.add("assoc_graded_table", ag == table, table_diff(ag, table));
    s.add("projections", check_component_projections(c, n, comps));
    s.add("total_rank_two", check_total_rank_two(c));
    auto pages = spectral_pages(c);
    s.add("spectral_e1", pages.front() == ag, table_diff(pages.front(), ag));
    int tot = 0;
    for (auto& [d, r] : total_homology(c)) tot += r;
    s.add("spectral_einf", pages.back().total() == 2 && tot == 2,
          "E_inf rank " + std::to_string(pages.back().total()) + ", total " + std::to_string(tot));
}

}

std::vector<CheckEntry> check_link(const std::string& name, const LinkDiagram& d) {
    Sink s{name, {}};
    s.guard("pd_roundtrip", [&] { s.add("pd_roundtrip", parse_pd(to_pd_string(d)) == d); });
    LinkingData lk = linking_matrix(d);
    bool sym = true;
    for (int i = 0; i < d.ncomp(); ++i)
        for (int j = 0; j < d.ncomp(); ++j) sym = sym && lk.lk[i][j] == lk.lk[j][i];
    s.add("linking_symmetric", sym);

    MultiLaurent delta;
    int sigma = 0;
    bool ok = false;
    s.guard("alexander", [&] {
        delta = multivariable_alexander(d).delta;
        bool sym = equal_up_to_unit(delta, delta.bar());
        s.add("alexander_symmetric", sym, delta.str());
        sigma = signature(d);
        s.add("signature_parity", ((sigma + d.ncomp() - 1) % 2 + 2) % 2 == 0 || delta.is_zero(),
              "sigma " + std::to_string(sigma));
        ok = true;
    });
    if (!ok) return s.out;

    if (auto var = corpus_variant(name)) {
        s.guard("variant_agrees", [&] {
            auto dv = multivariable_alexander(*var).delta;
            bool same = equal_up_to_unit(dv, delta) && signature(*var) == sigma &&
                        linking_matrix(*var).lk == lk.lk;
            s.add("variant_agrees", same, "variant Delta " + dv.str() + ", sigma " + std::to_string(signature(*var)));
        });
    }

    Classification cl = classify(d);
    if (!cl.alternating_projection || !cl.connected_projection || delta.is_zero()) return s.out;

    s.guard("hfl_alternating", [&] {
        int ell = d.ncomp();
        MultiGradedVS table;
        if (ell == 1) {
            table = hfk_alternating_knot(d);
            s.add("euler_hat", verify_euler_hat(table, delta));
        } else {
            HFLReport r = hfl_alternating(d);
            table = r.table;
            s.add("euler_hat", r.euler_ok, r.euler.str() + " vs Delta " + r.delta.str());
        }
        s.add("symmetry", verify_symmetry(table));
        s.add("euler_minus", verify_euler_minus(table, delta, 6));
        MultiLaurent want = remap_vars(ell > 1 ? spin_product(ell) * delta : delta, std::vector<int>(ell, 0), 1);
        MultiLaurent got = hfk_euler(collapse_to_hfk(table), ell);
        s.add("collapse_euler", equal_up_to_sign(got, want), got.str() + " vs " + want.str());

        if (ell == 2) {
            s.guard("cfl2", [&] {
                CFL2Result cr = two_component_cfl(d);
                std::array<ComponentData, 2> comps = {component_data(d, 0), component_data(d, 1)};
                complex_checks(s, cr.complex, lk.lk[0][1], comps, table);
                auto dec = decompose(cr.complex);
                auto want = cr.summands;
                std::sort(want.begin(), want.end());
                std::sort(dec.begin(), dec.end());
                s.add("decompose_roundtrip", dec == want);
            });
        }
        if (auto pq = heegaard_params(name)) {
            s.guard("heegaard_oracle", [&] {
                SphereDiagram hd = two_bridge_diagram(pq->first, pq->second);
                s.add("heegaard_admissible", admissibility(hd));
                auto ht = assoc_graded_homology(complex_from_diagram(hd));
                s.add("heegaard_oracle", ht == table, table_diff(ht, table));
            });
        }
    });
    return s.out;
}

std::vector<CheckEntry> check_fixture(const Fixture& f) {
    Sink s{"fixture:" + f.name, {}};
    s.guard("fixture", [&] {
        const FilteredComplex& c = f.complex;
        auto table = assoc_graded_homology(c);
        complex_checks(s, c, f.linking, fixture_components(f), table);
        s.add("symmetry", verify_symmetry(table));
        if (f.e2_collapsed) {
            s.add("e2_collapsed_flag", is_e2_collapsed(c) == *f.e2_collapsed);
            if (*f.e2_collapsed) {
                s.guard("decompose", [&] {
                    std::vector<std::string> got, want = f.summands;
                    for (auto& x : decompose(c)) got.push_back(x.str());
                    std::sort(got.begin(), got.end());
                    std::sort(want.begin(), want.end());
                    std::string g;
                    for (auto& x : got) g += x + " ";
                    s.add("decompose", want.empty() || got == want, g);
                });
            } else {
                bool refused = false;
                try {
                    decompose(c);
                } catch (const not_e2_collapsed&) {
                    refused = true;
                }
                s.add("decompose_refuses", refused);
            }
        }
        if (!f.link.empty()) {
            LinkDiagram d = fixture_link(f);
            s.add("linking", linking_matrix(d).lk[0][1] == f.linking);
            MultiLaurent delta = multivariable_alexander(d).delta;
            s.add("euler_hat", verify_euler_hat(table, delta));
            Classification cl = classify(d);
            if (cl.alternating_projection) {
                auto want = hfl_alternating(d).table;
                s.add("matches_computed", want == table, table_diff(table, want));
            }
        }
    });
    return s.out;
}

std::vector<CheckEntry> check_kunneth_pairs() {
    std::vector<CheckEntry> out;
    for (auto [a, b] : {std::pair{"hopf_plus", "hopf_plus"}, std::pair{"trefoil_right", "hopf_plus"}}) {
        Sink s{std::string(a) + "#" + b, {}};
        s.guard("kunneth", [&] {
            auto r = kunneth(corpus(a), corpus(b), 0, 0);
            s.add("kunneth", r.predicted == r.direct, table_diff(r.predicted, r.direct));
        });
        out.insert(out.end(), s.out.begin(), s.out.end());
    }
    return out;
}

CheckSuiteResult run_checks(const std::string& target) {
    std::vector<std::function<std::vector<CheckEntry>()>> jobs;
    auto add_link = [&](const std::string& n) { jobs.push_back([n] { return check_link(n, corpus(n)); }); };
    auto add_fixture = [&](const std::string& n) { jobs.push_back([n] { return check_fixture(load_fixture(n)); }); };
    if (target == "all") {
        for (auto& n : corpus_names()) add_link(n);
        for (auto& n : fixture_names()) add_fixture(n);
        jobs.push_back(check_kunneth_pairs);
    } else if (target.rfind("fixture:", 0) == 0) {
        add_fixture(target.substr(8));
    } else {
        add_link(target);
    }
    std::vector<std::future<std::vector<CheckEntry>>> fut;
    for (auto& j : jobs) fut.push_back(std::async(std::launch::async, j));
    CheckSuiteResult r;
    for (auto& f : fut) {
        auto e = f.get();
        r.entries.insert(r.entries.end(), e.begin(), e.end());
    }
    std::stable_sort(r.entries.begin(), r.entries.end(),
                     [](auto& a, auto& b) { return std::tie(a.link, a.check) < std::tie(b.link, b.check); });
    return r;
}

nlohmann::json to_json(const CheckSuiteResult& r) {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (auto& e : r.entries)
        j["checks"].push_back({{"link", e.link}, {"check", e.check}, {"pass", e.pass}, {"detail", e.detail}});
    j["failures"] = r.failures();
    return j;
}

}
