#include "hfl/checks.hpp"
#include "hfl/heegaard0.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hfl;
using nlohmann::json;

namespace {

struct Failure : std::runtime_error {
    std::string kind;
    Failure(std::string k, const std::string& msg) : std::runtime_error(msg), kind(std::move(k)) {}
};

bool g_json = false;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure("input", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LinkInput {
    std::string name; // corpus name, empty otherwise
    LinkDiagram d;
};

LinkInput read_link(const std::string& s) {
    if (s.rfind("corpus:", 0) == 0) {
        std::string n = s.substr(7);
        auto names = corpus_names();
        if (std::find(names.begin(), names.end(), n) == names.end() && n.rfind("torus_2_2n(", 0) != 0 &&
            n.rfind("two_bridge(", 0) != 0)
            throw Failure("input", "unknown corpus entry " + n);
        return {n, corpus(n)};
    }
    std::string t = s;
    if (t.rfind("PD[", 0) != 0 && t != "U") t = read_file(s);
    return {"", parse_pd(t)};
}

bool is_complex_input(const std::string& s) {
    return s.rfind("fixture:", 0) == 0 || (s.size() > 5 && s.substr(s.size() - 5) == ".json");
}

Fixture read_complex(const std::string& s) {
    if (s.rfind("fixture:", 0) == 0) return load_fixture(s.substr(8));
    json j;
    try {
        j = json::parse(read_file(s));
    } catch (const json::exception& e) {
        throw Failure("input", s + ": " + e.what());
    }
    return fixture_from_json(s, j);
}

std::string hvec(const std::vector<int>& h2) {
    std::string r = "(";
    for (size_t i = 0; i < h2.size(); ++i) r += (i ? "," : "") + half_str(h2[i]);
    return r + ")";
}

void print_table(const MultiGradedVS& v) {
    for (auto& [k, r] : v.ranks) std::cout << "  d=" << k.first << " h=" << hvec(k.second) << " rank " << r << "\n";
}

FilteredComplex knot_complex(const ComponentData& k) {
    FilteredComplex c = from_summands(k.knot.bars, 1);
    c.parity = {0};
    int i = 0;
    for (auto [d, h2] : k.knot.free) c.add("free" + std::to_string(i++), d, {h2});
    return c;
}

// complex for a link: solver output for two components, bar complex for knots
FilteredComplex link_complex(const LinkInput& in) {
    if (in.d.ncomp() == 1) {
        if (!classify(in.d).alternating_projection) throw precondition_error("non-alternating projection");
        return knot_complex(component_data(in.d, 0));
    }
    return two_component_cfl(in.d).complex;
}

std::string fixture_hint(const LinkInput& in, const std::string& what) {
    if (what.find("non-alternating") == std::string::npos) return what;
    if (auto f = fixture_for(in.name))
        return "non-alternating: homology not computable from (Delta, sigma); fixture table available via `hfl fixture " +
               *f + "`";
    return "non-alternating: homology not computable from (Delta, sigma)";
}

int cmd_alexander(const std::string& link) {
    auto in = read_link(link);
    auto a = multivariable_alexander(in.d);
    if (g_json) emit(to_json(a.delta));
    else std::cout << "Delta = " << a.delta.str() << "\n";
    return 0;
}

int cmd_signature(const std::string& link) {
    auto in = read_link(link);
    int s = signature(in.d);
    if (g_json) emit({{"sigma", s}});
    else std::cout << "sigma = " << s << "\n";
    return 0;
}

int cmd_table(const std::string& link) {
    auto in = read_link(link);
    try {
        if (in.d.ncomp() == 1) {
            auto t = hfk_alternating_knot(in.d);
            auto delta = multivariable_alexander(in.d).delta;
            int s = signature(in.d);
            if (g_json) {
                emit({{"l", 1}, {"table", to_json(t)}, {"delta", to_json(delta)}, {"sigma", s}});
            } else {
                std::cout << "Delta = " << delta.str() << ", sigma = " << s << "\n";
                print_table(t);
            }
            return 0;
        }
        HFLReport r = hfl_alternating(in.d);
        if (g_json) {
            emit(to_json(r));
        } else {
            std::cout << "Delta = " << r.delta.str() << ", sigma = " << r.sigma << ", l = " << r.l << "\n";
            print_table(r.table);
            std::cout << "euler " << (r.euler_ok ? "ok" : "FAILED") << ", symmetry "
                      << (r.symmetry_ok ? "ok" : "FAILED") << "\n";
        }
    } catch (const precondition_error& e) {
        throw Failure("precondition", fixture_hint(in, e.what()));
    }
    return 0;
}

int cmd_cfl2(const std::string& input) {
    FilteredComplex c;
    std::vector<Summand> s;
    if (is_complex_input(input)) {
        c = read_complex(input).complex;
        s = decompose(c);
    } else {
        auto in = read_link(input);
        try {
            auto r = two_component_cfl(in.d);
            c = r.complex;
            s = r.summands;
        } catch (const precondition_error& e) {
            throw Failure("precondition", fixture_hint(in, e.what()));
        }
    }
    std::sort(s.begin(), s.end());
    if (g_json) {
        json j;
        j["complex"] = to_json(c);
        j["summands"] = json::array();
        for (auto& x : s) j["summands"].push_back(to_json(x));
        emit(j);
    } else {
        for (auto& x : s) std::cout << x.str() << "\n";
        std::cout << c.size() << " generators, " << c.arrows.size() << " arrows\n";
    }
    return 0;
}

FilteredComplex complex_arg(const std::string& input) {
    if (is_complex_input(input)) return read_complex(input).complex;
    auto in = read_link(input);
    try {
        return link_complex(in);
    } catch (const precondition_error& e) {
        throw Failure("precondition", fixture_hint(in, e.what()));
    }
}

int cmd_ss(const std::string& input) {
    FilteredComplex c = complex_arg(input);
    auto pages = spectral_pages(c);
    auto th = total_homology(c);
    if (g_json) {
        json j;
        j["pages"] = json::array();
        for (auto& p : pages) j["pages"].push_back(to_json(p));
        j["total_homology"] = json::array();
        for (auto [d, r] : th)
            if (r) j["total_homology"].push_back({{"d", d}, {"rank", r}});
        emit(j);
    } else {
        for (size_t i = 0; i < pages.size(); ++i) {
            std::cout << (i + 1 == pages.size() ? "E_inf" : "E_" + std::to_string(i + 1)) << " (rank "
                      << pages[i].total() << ")\n";
            print_table(pages[i]);
        }
        std::cout << "total homology:";
        for (auto [d, r] : th)
            if (r) std::cout << " d=" << d << " rank " << r;
        std::cout << "\n";
    }
    return 0;
}

int cmd_collapse(const std::string& input) {
    MultiGradedVS v;
    if (is_complex_input(input)) {
        v = assoc_graded_homology(read_complex(input).complex);
    } else {
        auto in = read_link(input);
        try {
            v = alternating_table(in.d);
        } catch (const precondition_error& e) {
            throw Failure("precondition", fixture_hint(in, e.what()));
        }
    }
    HFKTable t = collapse_to_hfk(v);
    if (g_json) {
        emit(to_json(t));
    } else {
        for (auto& [k, r] : t.ranks)
            std::cout << "  s=" << half_str(k.first) << " d=" << half_str(k.second) << " rank " << r << "\n";
    }
    return 0;
}

int cmd_kunneth(const std::string& a, const std::string& b, int c1, int c2) {
    auto l1 = read_link(a), l2 = read_link(b);
    KunnethResult r;
    try {
        r = kunneth(l1.d, l2.d, c1, c2);
    } catch (const precondition_error& e) {
        throw Failure("precondition", e.what());
    }
    bool eq = r.predicted == r.direct;
    if (g_json) {
        emit({{"predicted", to_json(r.predicted)}, {"direct", to_json(r.direct)}, {"equal", eq}});
    } else {
        std::cout << "tensor prediction:\n";
        print_table(r.predicted);
        std::cout << "connected sum: " << (eq ? "equal" : "DIFFERENT") << "\n";
        if (!eq) print_table(r.direct);
    }
    return eq ? 0 : 1;
}

int cmd_heegaard(int p, int q, bool emit_complex) {
    SphereDiagram d;
    try {
        d = two_bridge_diagram(p, q);
    } catch (const std::invalid_argument& e) {
        throw Failure("precondition", e.what());
    }
    FilteredComplex c = complex_from_diagram(d);
    if (emit_complex) {
        emit(to_json(c));
        return 0;
    }
    auto t = assoc_graded_homology(c);
    bool adm = admissibility(d);
    if (g_json) {
        emit({{"p", p}, {"q", d.q}, {"admissible", adm}, {"generators", c.size()}, {"table", to_json(t)}});
    } else {
        std::cout << "b(" << p << "," << d.q << "): " << c.size() << " generators, "
                  << (adm ? "admissible" : "NOT admissible") << "\n";
        print_table(t);
    }
    return 0;
}

int cmd_check(const std::string& target) {
    CheckSuiteResult r;
    if (target == "corpus:all") {
        r = run_checks("all");
    } else if (target.rfind("corpus:", 0) == 0) {
        read_link(target);
        r = run_checks(target.substr(7));
    } else if (target.rfind("fixture:", 0) == 0) {
        r = run_checks(target);
    } else {
        r.entries = check_link("input", read_link(target).d);
    }
    if (g_json) {
        emit(to_json(r));
    } else {
        for (auto& e : r.entries)
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.link << " " << e.check
                      << (e.pass ? "" : ": " + e.detail) << "\n";
        std::cout << r.entries.size() << " checks, " << r.failures() << " failed\n";
    }
    return std::min(r.failures(), 125);
}

int cmd_corpus(const std::string& name) {
    if (!name.empty()) {
        auto in = read_link("corpus:" + name);
        if (g_json) emit({{"name", name}, {"pd", to_pd_string(in.d)}, {"components", in.d.ncomp()}});
        else std::cout << to_pd_string(in.d) << "\n";
        return 0;
    }
    json j = json::array();
    for (auto& n : corpus_names()) {
        LinkDiagram d = corpus(n);
        auto f = fixture_for(n);
        Classification cl = classify(d);
        if (g_json) {
            j.push_back({{"name", n}, {"components", d.ncomp()}, {"crossings", (int)d.crossings.size()},
                         {"alternating", cl.alternating_projection}, {"fixture", f ? json(*f) : json(nullptr)}});
        } else {
            std::cout << n << ": " << d.ncomp() << (d.ncomp() == 1 ? " component, " : " components, ") << d.crossings.size() << " crossings"
                      << (cl.alternating_projection ? ", alternating" : "") << (f ? ", fixture " + *f : "") << "\n";
        }
    }
    if (g_json) emit(j);
    return 0;
}

int cmd_fixture(const std::string& name) {
    if (name.empty()) {
        auto names = fixture_names();
        if (g_json) emit(names);
        else
            for (auto& n : names) std::cout << n << "\n";
        return 0;
    }
    Fixture f = load_fixture(name);
    if (g_json) {
        emit(f.raw);
        return 0;
    }
    std::cout << f.name << ": " << f.complex.size() << " generators, " << f.complex.arrows.size()
              << " arrows, linking " << f.linking;
    if (!f.link.empty()) std::cout << ", link " << f.link;
    std::cout << "\n";
    print_table(assoc_graded_homology(f.complex));
    return 0;
}

void report(const Failure& e) {
    if (g_json) std::cerr << json{{"error", {{"kind", e.kind}, {"message", e.what()}}}}.dump() << "\n";
    else std::cerr << "error: " << e.what() << "\n";
}

}

int main(int argc, char** argv) {
    CLI::App app{"Link Floer homology calculator"};
    app.name("hfl");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_json, "machine-readable output");

    std::string link, link2, target = "corpus:all", name;
    int c1 = 0, c2 = 0, p = 0, q = 0;
    bool emit_complex = false;
    std::function<int()> run;

    auto* s = app.add_subcommand("alexander", "multivariable Alexander polynomial");
    s->add_option("link", link, "corpus:NAME, PD[...] or a PD file")->required();
    s->callback([&] { run = [&] { return cmd_alexander(link); }; });
    s = app.add_subcommand("signature", "link signature");
    s->add_option("link", link)->required();
    s->callback([&] { run = [&] { return cmd_signature(link); }; });
    s = app.add_subcommand("table", "multi-graded hat table of an alternating link");
    s->add_option("link", link)->required();
    s->callback([&] { run = [&] { return cmd_table(link); }; });
    s = app.add_subcommand("cfl2", "filtered complex of a two-component alternating link");
    s->add_option("input", link, "link, fixture:NAME or complex JSON")->required();
    s->callback([&] { run = [&] { return cmd_cfl2(link); }; });
    s = app.add_subcommand("ss", "spectral sequence pages");
    s->add_option("input", link)->required();
    s->callback([&] { run = [&] { return cmd_ss(link); }; });
    s = app.add_subcommand("collapse", "one-variable collapse of the table");
    s->add_option("input", link)->required();
    s->callback([&] { run = [&] { return cmd_collapse(link); }; });
    s = app.add_subcommand("kunneth", "tensor prediction for a connected sum");
    s->add_option("link1", link)->required();
    s->add_option("link2", link2)->required();
    s->add_option("--c1", c1, "component of link1");
    s->add_option("--c2", c2, "component of link2");
    s->callback([&] { run = [&] { return cmd_kunneth(link, link2, c1, c2); }; });
    s = app.add_subcommand("heegaard", "genus-zero diagram of the two-bridge link b(p,q)");
    s->add_option("p", p)->required();
    s->add_option("q", q)->required();
    s->add_flag("--emit-complex", emit_complex);
    s->callback([&] { run = [&] { return cmd_heegaard(p, q, emit_complex); }; });
    s = app.add_subcommand("check", "invariant suite");
    s->add_option("target", target, "corpus:all, corpus:NAME, fixture:NAME or a link");
    s->callback([&] { run = [&] { return cmd_check(target); }; });
    s = app.add_subcommand("corpus", "list the corpus, or print one entry");
    s->add_option("name", name);
    s->callback([&] { run = [&] { return cmd_corpus(name); }; });
    s = app.add_subcommand("fixture", "list or print bundled complexes");
    s->add_option("name", name);
    s->callback([&] { run = [&] { return cmd_fixture(name); }; });

    if (argc > 1 && argv[1][0] != '-') {
        auto subs = app.get_subcommands([](const CLI::App*) { return true; });
        if (std::none_of(subs.begin(), subs.end(), [&](const CLI::App* a) { return a->get_name() == argv[1]; })) {
            std::cerr << "unknown subcommand: " << argv[1] << "\n" << app.help();
            return 2;
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return run();
    } catch (const Failure& e) {
        report(e);
    } catch (const not_e2_collapsed& e) {
        report(Failure("not_e2_collapsed", e.what()));
    } catch (const precondition_error& e) {
        report(Failure("precondition", e.what()));
    } catch (const std::exception& e) {
        report(Failure("error", e.what()));
    }
    return 1;
}
