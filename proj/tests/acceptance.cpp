// Acceptance suite: ten end-to-end criteria, one verdict line each.
// Exits 0 only when every criterion passes.
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "confspace/confcube.hpp"
#include "confspace/confmodel.hpp"
#include "confspace/io.hpp"
#include "summand_cubes.hpp"

using namespace confspace;
using namespace confspace::testsupport;

namespace {

const char* kAll[] = {"presentations/s2.json",   "presentations/s3.json",
                      "presentations/s4.json",   "presentations/s5.json",
                      "presentations/cp2.json",  "presentations/cp3.json",
                      "presentations/s2xs2.json"};

int g_failures = 0;

void verdict(int idx, const std::string& name, bool ok,
             const std::string& detail) {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", idx,
                name.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++g_failures;
}

// degree-preserving random change of basis with exact inverse
Matrix random_basis_change(const AlgebraPresentation& A,
                           std::mt19937_64& rng) {
    const std::size_t n = A.size();
    while (true) {
        Matrix p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (A.degrees[i] != A.degrees[j]) continue;
                if (i == j)
                    // keep the unit fixed so the result stays a
                    // presentation over the same degree-0 basis
                    p(i, j) = A.degrees[i] == 0
                                  ? Rational(1)
                                  : Rational(1 + int(rng() % 3));
                else if (rng() % 2)
                    p(i, j) = Rational(int(rng() % 5) - 2);
            }
        if (rank(p) == n) return p;
    }
}

AlgebraPresentation change_basis(const AlgebraPresentation& A,
                                 const Matrix& p) {
    const std::size_t n = A.size();
    Matrix pinv = inverse(p);
    auto col = [&](const Matrix& m, std::size_t j) {
        AlgElem e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = m(i, j);
        return e;
    };
    auto back = [&](const AlgElem& x) {
        AlgElem e(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (x[j] != 0 && pinv(i, j) != 0) e[i] += pinv(i, j) * x[j];
        return e;
    };
    AlgebraPresentation B = A;
    for (std::size_t i = 0; i < n; ++i) {
        B.differential[i] = back(A.d(col(p, i)));
        Rational om = 0;
        for (std::size_t t = 0; t < n; ++t)
            om += p(t, i) * A.orientation[t];
        B.orientation[i] = om;
        for (std::size_t j = 0; j < n; ++j)
            B.products[i][j] = back(A.multiply(col(p, i), col(p, j)));
    }
    return B;
}

std::vector<Perm> adjacent_transpositions(int k) {
    std::vector<Perm> gens;
    for (int q = 1; q < k; ++q) {
        Perm tau = identity_perm(k);
        std::swap(tau[q - 1], tau[q]);
        gens.push_back(tau);
    }
    return gens;
}

bool check_named(const ComparisonReport& rep, const std::string& name,
                 std::string& why) {
    for (const auto& c : rep.checks)
        if (c.name == name) {
            if (!c.passed) why = name + ": " + c.witness;
            return c.passed;
        }
    why = name + ": check not found";
    return false;
}

void criterion1_axioms() {
    bool ok = true;
    std::string why;
    for (const char* path : kAll) {
        AlgebraPresentation A = load_presentation(path);
        if (!validate_presentation(A).all_passed()) {
            ok = false;
            why = std::string(path) + " fails validation";
            break;
        }
        // mutate one structure constant: scale a unit product row entry
        AlgebraPresentation B = A;
        const std::size_t u = *A.unit_index();
        std::size_t l = 0;
        while (A.degrees[l] == 0) ++l;
        for (auto& c : B.products[u][l]) c *= 2;
        ValidationReport rep = validate_presentation(B);
        bool witnessed = rep.structural_error;
        for (const auto& c : rep.checks)
            if (!c.passed && !c.witness.empty()) witnessed = true;
        if (rep.all_passed() || !witnessed) {
            ok = false;
            why = std::string(path) + ": mutation not caught";
            break;
        }
    }
    verdict(1, "algebra axioms hold and mutations are caught", ok, why);
}

void criterion2_diagonal() {
    bool ok = true;
    std::string why;
    std::mt19937_64 rng(2024);
    for (const char* path : kAll) {
        AlgebraPresentation A = load_presentation(path);
        DiagonalClass dc = diagonal_class(A, dual_basis(A));
        // cocycle and centrality are enforced inside diagonal_class; check
        // invariance under 20 random changes of basis
        for (int trial = 0; trial < 20 && ok; ++trial) {
            Matrix p = random_basis_change(A, rng);
            AlgebraPresentation B = change_basis(A, p);
            if (!validate_presentation(B).all_passed()) {
                ok = false;
                why = std::string(path) + ": transformed algebra invalid";
                break;
            }
            DiagonalClass dcB = diagonal_class(B, dual_basis(B));
            if (p * dcB.coeffs * p.transpose() != dc.coeffs) {
                ok = false;
                why = std::string(path) + ": diagonal not basis-invariant";
            }
        }
        if (!ok) break;
    }
    verdict(2, "diagonal class is a central cocycle, basis-independent", ok,
            why);
}

void criterion3_ideal() {
    bool ok = true;
    std::string why;
    for (const char* path : {"presentations/s2.json",
                             "presentations/s3.json",
                             "presentations/cp2.json"}) {
        AlgebraPresentation A = load_presentation(path);
        for (int k = 2; k <= 4 && ok; ++k) {
            ConfModel M(A, k);
            for (const AxiomCheck& c : differential_ideal_checks(M))
                if (!c.passed) {
                    ok = false;
                    why = std::string(path) + " k=" + std::to_string(k) +
                          ": " + c.name;
                    break;
                }
        }
        if (!ok) break;
    }
    verdict(3, "relation ideal is closed under the differential", ok, why);
}

void criterion4_action() {
    bool ok = true;
    std::string why;
    std::mt19937_64 rng(4096);
    struct Row {
        const char* path;
        int kmax;
    };
    for (const Row& row : {Row{"presentations/cp2.json", 3},
                           {"presentations/s2.json", 4},
                           {"presentations/s3.json", 4}}) {
        AlgebraPresentation A = load_presentation(row.path);
        for (int k = 2; k <= row.kmax && ok; ++k) {
            ConfModel M(A, k);
            const ChainComplexQ& c = M.complex();
            int w;
            if (!c.check_d_squared(&w)) {
                ok = false;
                why = std::string(row.path) + " k=" + std::to_string(k) +
                      ": d^2 != 0 in degree " + std::to_string(w);
                break;
            }
            for (const Perm& tau : adjacent_transpositions(k))
                for (int n = c.min_degree(); n <= c.max_degree() && ok;
                     ++n)
                    if (M.action_matrix(tau, n + 1) * c.diff(n) !=
                        c.diff(n) * M.action_matrix(tau, n)) {
                        ok = false;
                        why = std::string(row.path) +
                              " k=" + std::to_string(k) +
                              ": action is not a chain map";
                    }
            auto perms = all_perms(k);
            for (int trial = 0; trial < 12 && ok; ++trial) {
                const Perm& s = perms[rng() % perms.size()];
                const Perm& t = perms[rng() % perms.size()];
                for (int n = c.min_degree(); n <= c.max_degree(); ++n)
                    if (M.action_matrix(compose(s, t), n) !=
                        M.action_matrix(s, n) * M.action_matrix(t, n)) {
                        ok = false;
                        why = std::string(row.path) +
                              " k=" + std::to_string(k) +
                              ": action is not multiplicative";
                        break;
                    }
            }
        }
        if (!ok) break;
    }
    verdict(4, "d^2 = 0 and the symmetric group acts by chain maps", ok,
            why);
}

void criterion5_signs() {
    bool ok = true;
    std::string why;
    for (int k = 2; k <= 5 && ok; ++k) {
        AxiomCheck c = edge_sign_identity_check(k);
        if (!c.passed) {
            ok = false;
            why = c.name + ": " + c.witness;
        }
    }
    for (const char* path :
         {"presentations/s2.json", "presentations/s3.json"}) {
        AlgebraPresentation A = load_presentation(path);
        for (int k = 2; k <= 4 && ok; ++k) {
            ConfModel M(A, k);
            ComparisonReport rep = verify_comparison(M);
            for (const char* name :
                 {"split sign consistency", "graph sign edge independence"})
                if (!check_named(rep, name, why)) ok = false;
            if (k <= 3)
                for (const char* name :
                     {"transposition identity for split signs",
                      "transposition identity for graph signs",
                      "transposition action on generator products"})
                    if (!check_named(rep, name, why)) ok = false;
            if (!ok) {
                why = std::string(path) + " k=" + std::to_string(k) + ": " +
                      why;
                break;
            }
        }
        if (!ok) break;
    }
    verdict(5, "sign identities hold exhaustively", ok, why);
}

void criterion6_comparison() {
    bool ok = true;
    std::string why;
    struct Row {
        const char* path;
        int k;
        std::map<int, std::size_t> betti_expect;
    };
    const std::vector<Row> rows = {
        {"presentations/s2.json", 2, {{0, 1}, {2, 1}}},
        {"presentations/s2.json", 3, {{0, 1}, {3, 1}}},
        {"presentations/s3.json", 2, {{0, 1}, {3, 1}}},
        {"presentations/s3.json", 3, {{0, 1}, {2, 1}, {3, 1}, {5, 1}}},
        {"presentations/cp2.json", 2, {{0, 1}, {2, 2}, {4, 2}, {6, 1}}},
    };
    for (const Row& row : rows) {
        AlgebraPresentation A = load_presentation(row.path);
        ConfModel M(A, row.k);
        ComparisonReport rep = verify_comparison(M);
        for (const char* name : {"comparison map is a chain map",
                                 "comparison map is equivariant",
                                 "comparison map is a quasi-isomorphism"})
            if (!check_named(rep, name, why)) ok = false;
        if (betti(M.complex()).b != row.betti_expect) {
            ok = false;
            why = std::string(row.path) + " k=" + std::to_string(row.k) +
                  ": Betti regression";
        }
        if (!ok) {
            why = std::string(row.path) + " k=" + std::to_string(row.k) +
                  ": " + why;
            break;
        }
    }
    verdict(6, "comparison map verdicts and frozen Betti tables", ok, why);
}

void criterion7_crosschecks() {
    bool ok = true;
    std::string why;
    {
        AlgebraPresentation A = load_presentation("presentations/s2.json");
        BettiTable b = betti(ConfModel(A, 2).complex());
        if (!(b[0] == 1 && b[1] == 0 && b[2] == 1 && b[3] == 0 &&
              b[4] == 0)) {
            ok = false;
            why = "two-point model of the 2-sphere";
        }
    }
    for (const char* path :
         {"presentations/s2.json", "presentations/s4.json",
          "presentations/cp2.json", "presentations/cp3.json",
          "presentations/s2xs2.json"}) {
        if (!ok) break;
        AlgebraPresentation A = load_presentation(path);
        long chi = 0;
        for (int deg = 0; deg <= A.formal_dimension; ++deg)
            chi += (deg % 2 ? -1L : 1L) * long(A.basis_of_degree(deg).size());
        long ff = 1;
        for (int k = 1; k <= 4; ++k) {
            ff *= chi - (k - 1);
            ConfModel M(A, k);
            if (euler_characteristic(M.complex()) != ff) {
                ok = false;
                why = std::string(path) + " k=" + std::to_string(k) +
                      ": Euler characteristic != falling factorial";
                break;
            }
        }
    }
    for (const char* path :
         {"presentations/s3.json", "presentations/s5.json"}) {
        if (!ok) break;
        AlgebraPresentation A = load_presentation(path);
        for (int k = 2; k <= 4; ++k)
            if (euler_characteristic(ConfModel(A, k).complex()) != 0) {
                ok = false;
                why = std::string(path) + " k=" + std::to_string(k) +
                      ": Euler characteristic != 0";
                break;
            }
    }
    verdict(7, "known-space cross-checks (Betti and Euler)", ok, why);
}

void criterion8_totcof() {
    bool ok = true;
    std::string why;
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 10 && ok; ++trial) {
        SummandSpace sp = random_space(rng);
        const int ne = 1 + int(rng() % 3);
        CubicalDiagram cube =
            intersection_cube(sp, random_subspaces(rng, sp, ne));
        try {
            TotalCofibre tc = total_cofibre(cube);
            CubeAssociatedComplex cc = cube_associated_complex(cube);
            IteratedCone ic = iterated_mapping_cone(cc.chain, cc.maps);
            totcof_cone_isomorphism(cube, tc, cc, ic);
            BettiTable base = betti(tc.complex);
            std::vector<int> perm;
            for (int e = 0; e < ne; ++e) perm.push_back(e);
            for (int shuffle = 0; shuffle < 10; ++shuffle) {
                std::shuffle(perm.begin(), perm.end(), rng);
                if (betti(total_cofibre(relabel(cube, perm)).complex) !=
                    base) {
                    ok = false;
                    why = "Betti depends on the edge ordering";
                    break;
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
    }
    if (ok) {
        // equivariance of the differential under a cube symmetry
        SummandSpace sp{{{0, true}, {0, true}, {1, false}}};
        CubicalDiagram cube = intersection_cube(sp, {0b101, 0b110});
        TotalCofibre tc = total_cofibre(cube);
        CubeAction act;
        act.perms.push_back({1, 0});
        act.mats.emplace_back(cube.subsets());
        for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
            const std::uint32_t img = mask_act(act.perms[0], mask);
            std::uint32_t smem = 0b111, dmem = 0b111;
            for (int e = 0; e < 2; ++e) {
                if (mask >> e & 1) smem &= (e == 0) ? 0b101u : 0b110u;
                if (img >> e & 1) dmem &= (e == 0) ? 0b101u : 0b110u;
            }
            const ChainComplexQ& src = cube.module(mask);
            for (int n = src.min_degree(); n <= src.max_degree(); ++n) {
                Matrix m(cube.module(img).dim(n), src.dim(n));
                for (std::size_t s = 0; s < 3; ++s) {
                    if (!(smem >> s & 1)) continue;
                    const std::size_t to = (s == 0) ? 1 : (s == 1) ? 0 : 2;
                    const bool here =
                        sp.summands[s].degree == n ||
                        (sp.summands[s].has_boundary &&
                         sp.summands[s].degree + 1 == n);
                    if (here)
                        m(sp.slot(dmem, to, n), sp.slot(smem, s, n)) = 1;
                }
                if (!m.is_zero()) act.mats[0][mask][n] = std::move(m);
            }
        }
        for (int n = tc.complex.min_degree(); n < tc.complex.max_degree();
             ++n)
            if (totcof_action_matrix(cube, act, 0, tc, n + 1) *
                    tc.complex.diff(n) !=
                tc.complex.diff(n) *
                    totcof_action_matrix(cube, act, 0, tc, n)) {
                ok = false;
                why = "cube symmetry does not commute with the "
                      "differential";
                break;
            }
    }
    verdict(8, "total cofibre structure (cone comparison, ordering, "
               "equivariance)",
            ok, why);
}

void criterion9_spectral() {
    bool ok = true;
    std::string why;
    for (const char* path : kAll) {
        AlgebraPresentation A = load_presentation(path);
        for (int k = 2; k <= 3 && ok; ++k) {
            ConfModel M(A, k);
            auto pages = spectral_pages(M.complex(), M.glength_filtration());
            BettiTable b = betti(M.complex());
            const ChainComplexQ& c = M.complex();
            for (int n = c.min_degree(); n <= c.max_degree(); ++n)
                if (pages.back().total(n) != b[n]) {
                    ok = false;
                    why = std::string(path) + " k=" + std::to_string(k) +
                          ": limit page differs from homology in degree " +
                          std::to_string(n);
                    break;
                }
            // frozen regression: for k <= 3 all differentials vanish past
            // the page carrying the generator-count differential
            const std::size_t e2 =
                std::min<std::size_t>(2, pages.size() - 1);
            if (ok && !(pages[e2].dims == pages.back().dims)) {
                ok = false;
                why = std::string(path) + " k=" + std::to_string(k) +
                      ": unexpected higher differential";
            }
        }
        if (!ok) break;
    }
    verdict(9, "spectral sequence converges and collapses for k <= 3", ok,
            why);
}

void criterion10_fixed() {
    bool ok = true;
    std::string why;
    for (const char* path :
         {"presentations/s2.json", "presentations/s3.json"}) {
        AlgebraPresentation A = load_presentation(path);
        for (int k = 2; k <= 3 && ok; ++k) {
            ConfModel M(A, k);
            auto gens = adjacent_transpositions(k);
            BettiTable fixed = betti(M.fixed_subcomplex(gens));
            if (fixed.b != invariant_homology_dims(M, gens)) {
                ok = false;
                why = std::string(path) + " k=" + std::to_string(k) +
                      ": fixed-point Betti != invariant homology";
            }
        }
        if (!ok) break;
    }
    verdict(10, "fixed points compute the invariant homology", ok, why);
}

} // namespace

int main() {
    criterion1_axioms();
    criterion2_diagonal();
    criterion3_ideal();
    criterion4_action();
    criterion5_signs();
    criterion6_comparison();
    criterion7_crosschecks();
    criterion8_totcof();
    criterion9_spectral();
    criterion10_fixed();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
