// Command-line surface: load an algebra presentation, build the
// configuration model, run the verification battery, print reports.
//
// Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input,
// 3 a resource bound was exceeded.
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "confspace/confcube.hpp"
#include "confspace/confmodel.hpp"
#include "confspace/io.hpp"

using nlohmann::json;
using namespace confspace;

namespace {

struct RunConfig {
    std::string path;
    int k = 2;
    std::string format = "text";
    unsigned long seed = 20240901ul;
    int max_degree = -1; // -1: no restriction on reported degrees
    bool fixed = false;
    bool ss = false;
    std::vector<int> bounds = {4, 16}; // max k, max dim A
};

constexpr int EXIT_FAIL = 1, EXIT_INPUT = 2, EXIT_BOUND = 3;

void check_bounds(const RunConfig& cfg, const AlgebraPresentation& A) {
    if (cfg.bounds.size() != 2 || cfg.bounds[0] < 1 || cfg.bounds[1] < 1)
        throw InputError("--bounds expects two positive integers");
    if (cfg.k > cfg.bounds[0])
        throw std::length_error("k = " + std::to_string(cfg.k) +
                                " exceeds bound " +
                                std::to_string(cfg.bounds[0]));
    if (int(A.size()) > cfg.bounds[1])
        throw std::length_error("algebra dimension " +
                                std::to_string(A.size()) + " exceeds bound " +
                                std::to_string(cfg.bounds[1]));
}

json checks_json(const std::vector<AxiomCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) j["witness"] = c.witness;
        arr.push_back(std::move(j));
    }
    return arr;
}

void print_checks(const std::vector<AxiomCheck>& checks) {
    for (const auto& c : checks) {
        std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.passed) std::cout << " -- " << c.witness;
        std::cout << "\n";
    }
}

json betti_json(const BettiTable& b) {
    json j = json::object();
    for (auto& [deg, v] : b.b) j[std::to_string(deg)] = v;
    return j;
}

std::string betti_line(const BettiTable& b, int lo, int hi) {
    std::string s;
    for (int n = lo; n <= hi; ++n) {
        if (!s.empty()) s += " ";
        s += "b" + std::to_string(n) + "=" + std::to_string(b[n]);
    }
    return s.empty() ? "0" : s;
}

// {coeff, tensor: [labels], graph: [[i,j],...]} per term
json elem_json(const ConfModel& M, const ConfModel::Elem& x) {
    json arr = json::array();
    for (auto& [key, c] : x) {
        json term;
        term["coeff"] = rational_str(c);
        json tensor = json::array();
        for (std::size_t t : M.tensor().tuple(key.second))
            tensor.push_back(M.algebra().labels[t]);
        term["tensor"] = std::move(tensor);
        json graph = json::array();
        for (const Edge& e : GraphSubset(M.edge_set(), key.first).edges())
            graph.push_back({e.first, e.second});
        term["graph"] = std::move(graph);
        arr.push_back(std::move(term));
    }
    return arr;
}

int cmd_validate(const RunConfig& cfg) {
    AlgebraPresentation A = load_presentation(cfg.path);
    ValidationReport rep = validate_presentation(A);
    if (cfg.format == "json") {
        json out = {{"command", "validate"},
                    {"input", cfg.path},
                    {"passed", rep.all_passed()}};
        if (rep.structural_error)
            out["structural_error"] = rep.structural_message;
        out["checks"] = checks_json(rep.checks);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "validate " << cfg.path << "\n";
        if (rep.structural_error)
            std::cout << "  structural error: " << rep.structural_message
                      << "\n";
        print_checks(rep.checks);
        std::cout << (rep.all_passed() ? "all checks passed"
                                       : "validation FAILED")
                  << "\n";
    }
    return rep.all_passed() ? 0 : EXIT_FAIL;
}

int cmd_model(const RunConfig& cfg) {
    AlgebraPresentation A = load_presentation(cfg.path);
    check_bounds(cfg, A);
    ValidationReport vr = validate_presentation(A);
    if (!vr.all_passed()) {
        std::cerr << "input algebra fails validation; run `validate` for "
                     "details\n";
        return EXIT_INPUT;
    }
    ConfModel M(A, cfg.k);
    const ChainComplexQ& c = M.complex();
    const int lo = c.min_degree();
    const int hi = (cfg.max_degree >= 0)
                       ? std::min(c.max_degree(), cfg.max_degree)
                       : c.max_degree();
    BettiTable b = betti(c);

    json out;
    out["command"] = "model";
    out["input"] = cfg.path;
    out["k"] = cfg.k;
    json dims = json::object();
    for (int n = lo; n <= hi; ++n)
        if (c.dim(n)) dims[std::to_string(n)] = c.dim(n);
    out["dimensions"] = std::move(dims);
    out["betti"] = betti_json(b);
    out["euler"] = euler_characteristic(c);
    {
        // differentials of the edge generators, term by term
        json gens = json::object();
        for (std::size_t ei = 0; ei < M.edge_set().size(); ++ei) {
            const Edge e = M.edge_set().edge(ei);
            gens["g" + std::to_string(e.first) + std::to_string(e.second)] =
                elem_json(M, M.d(M.generator(e)));
        }
        out["generator_differentials"] = std::move(gens);
    }
    if (cfg.fixed) {
        std::vector<Perm> gens;
        for (int p = 1; p < cfg.k; ++p) {
            Perm tau = identity_perm(cfg.k);
            std::swap(tau[p - 1], tau[p]);
            gens.push_back(tau);
        }
        if (gens.empty()) gens.push_back(identity_perm(cfg.k));
        out["fixed_betti"] = betti_json(betti(M.fixed_subcomplex(gens)));
    }
    if (cfg.ss) {
        auto pages = spectral_pages(c, M.glength_filtration());
        json jp = json::array();
        for (const auto& page : pages) {
            json entries = json::array();
            for (auto& [pn, d] : page.dims)
                entries.push_back(
                    {{"p", pn.first}, {"degree", pn.second}, {"dim", d}});
            jp.push_back({{"r", page.r}, {"entries", std::move(entries)}});
        }
        out["spectral_pages"] = std::move(jp);
        // the generator-count differential lives on E_1; collapse means
        // no differentials survive past it
        const std::size_t e2 = std::min<std::size_t>(2, pages.size() - 1);
        out["collapsed_at_E2"] = pages[e2].dims == pages.back().dims;
    }

    if (cfg.format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "model " << cfg.path << ", k = " << cfg.k << "\n";
    std::cout << "  dimensions:";
    for (int n = lo; n <= hi; ++n)
        if (c.dim(n)) std::cout << " " << n << ":" << c.dim(n);
    std::cout << "\n  betti: " << betti_line(b, lo, hi) << "\n";
    std::cout << "  euler: " << out["euler"].get<long>() << "\n";
    if (cfg.fixed) {
        BettiTable fb;
        for (auto& [key, v] : out["fixed_betti"].items())
            fb.b[std::stoi(key)] = v.get<std::size_t>();
        std::cout << "  fixed-point betti: " << betti_line(fb, lo, hi)
                  << "\n";
    }
    if (cfg.ss) {
        for (const auto& page : out["spectral_pages"]) {
            std::cout << "  page E_" << page["r"].get<int>() << ":";
            for (const auto& e : page["entries"])
                std::cout << " (p=" << e["p"].get<int>() << ",n="
                          << e["degree"].get<int>() << "):"
                          << e["dim"].get<std::size_t>();
            std::cout << "\n";
        }
        std::cout << "  collapses at E_2: "
                  << (out["collapsed_at_E2"].get<bool>() ? "yes" : "no")
                  << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    AlgebraPresentation A = load_presentation(cfg.path);
    check_bounds(cfg, A);
    ValidationReport vr = validate_presentation(A);
    std::vector<AxiomCheck> checks = vr.checks;
    bool passed = vr.all_passed();
    ComparisonReport rep;
    if (passed) {
        ConfModel M(A, cfg.k);
        checks.push_back(confluence_check(M, cfg.seed, 200));
        rep = verify_comparison(M);
        checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
        passed = checks.back().passed;
        for (const auto& c : checks) passed = passed && c.passed;
    }
    if (cfg.format == "json") {
        json out = {{"command", "verify"},
                    {"input", cfg.path},
                    {"k", cfg.k},
                    {"seed", cfg.seed},
                    {"passed", passed},
                    {"checks", checks_json(checks)}};
        out["dual_multiplication_sign"] = rep.dual_mult_sign;
        json nu = json::array();
        for (auto& [g, e, v] : rep.nu_table)
            nu.push_back({{"graph", g}, {"edge", e}, {"value", v}});
        out["split_signs"] = std::move(nu);
        json lam = json::array();
        for (auto& [g, v] : rep.lambda_table)
            lam.push_back({{"graph", g}, {"value", v}});
        out["graph_signs"] = std::move(lam);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verify " << cfg.path << ", k = " << cfg.k << "\n";
        print_checks(checks);
        std::cout << "  dual multiplication sign: " << rep.dual_mult_sign
                  << "\n";
        std::cout << (passed ? "all checks passed" : "verification FAILED")
                  << "\n";
    }
    return passed ? 0 : EXIT_FAIL;
}

int cmd_totcof(const RunConfig& cfg) {
    AlgebraPresentation A = load_presentation(cfg.path);
    check_bounds(cfg, A);
    ValidationReport vr = validate_presentation(A);
    if (!vr.all_passed()) {
        std::cerr << "input algebra fails validation; run `validate` for "
                     "details\n";
        return EXIT_INPUT;
    }
    ConfModel M(A, cfg.k);
    ConfCube C(M);
    const ChainComplexQ& c = C.shifted();
    BettiTable b = betti(c);
    if (cfg.format == "json") {
        json dims = json::object();
        for (int n = c.min_degree(); n <= c.max_degree(); ++n)
            if (c.dim(n)) dims[std::to_string(n)] = c.dim(n);
        json out = {{"command", "totcof"},
                    {"input", cfg.path},
                    {"k", cfg.k},
                    {"dimensions", std::move(dims)},
                    {"betti", betti_json(b)},
                    {"euler", euler_characteristic(c)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "total cofibre for " << cfg.path << ", k = " << cfg.k
                  << " (shifted into degrees 0.." << M.m() * cfg.k << ")\n";
        std::cout << "  dimensions:";
        for (int n = c.min_degree(); n <= c.max_degree(); ++n)
            if (c.dim(n)) std::cout << " " << n << ":" << c.dim(n);
        std::cout << "\n  betti: "
                  << betti_line(b, c.min_degree(), c.max_degree()) << "\n";
        std::cout << "  euler: " << euler_characteristic(c) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "configuration model toolkit: builds the k-point configuration "
        "model of an oriented algebra, its dual-tensor cube, and runs the "
        "verification battery"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string command;
    for (auto [name, desc] :
         {std::pair<const char*, const char*>{
              "validate", "check the algebra axioms of a presentation"},
          {"model", "dimensions, Betti numbers and Euler characteristic "
                    "of the configuration model"},
          {"verify", "full verification battery including the comparison "
                     "with the total cofibre"},
          {"totcof", "Betti numbers of the shifted total cofibre alone"}}) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("input", cfg.path, "presentation JSON file")
            ->required();
        sub->add_option("--format", cfg.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (std::string(name) != "validate") {
            sub->add_option("--k", cfg.k, "number of configuration points")
                ->check(CLI::PositiveNumber);
            sub->add_option("--bounds", cfg.bounds,
                            "resource bounds: max k, max algebra dimension")
                ->expected(2);
        }
        if (std::string(name) == "model") {
            sub->add_option("--max-degree", cfg.max_degree,
                            "highest degree to report");
            sub->add_flag("--fixed", cfg.fixed,
                          "also report Betti numbers of the fixed-point "
                          "subcomplex of the full symmetric group");
            sub->add_flag("--ss", cfg.ss,
                          "also report the pages of the spectral sequence "
                          "of the generator-count filtration");
        }
        if (std::string(name) == "verify")
            sub->add_option("--seed", cfg.seed,
                            "seed for the randomized confluence check");
        sub->callback([&command, name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? EXIT_INPUT : 0;
    }

    try {
        if (command == "validate") return cmd_validate(cfg);
        if (command == "model") return cmd_model(cfg);
        if (command == "verify") return cmd_verify(cfg);
        return cmd_totcof(cfg);
    } catch (const std::length_error& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return EXIT_BOUND;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return EXIT_FAIL;
    }
}
