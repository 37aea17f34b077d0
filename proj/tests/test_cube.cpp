#include <catch2/catch_amalgamated.hpp>

#include "confspace/dgcube.hpp"

using namespace confspace;

#include "summand_cubes.hpp"

using namespace confspace::testsupport;


TEST_CASE("one-edge total cofibre is the mapping cone") {
    SummandSpace sp{{{0, true}, {1, false}}};
    CubicalDiagram cube = intersection_cube(sp, {0b01});
    TotalCofibre tc = total_cofibre(cube);
    ChainMap f;
    f.source = cube.module(1);
    f.target = cube.module(0);
    for (int n = f.source.min_degree(); n <= f.source.max_degree(); ++n)
        f.set_matrix(n, cube.generator_matrix(1, 0, n));
    CHECK(betti(tc.complex) == betti(cone(f)));
}

TEST_CASE("cone-of-identity cube is acyclic") {
    SummandSpace sp{{{0, true}, {2, false}}};
    CubicalDiagram cube = intersection_cube(sp, {0b11});
    CHECK(acyclicity_check(cube));
}

TEST_CASE("inclusion-exclusion cube of two spanning subspaces is acyclic") {
    // V = Q^3 in degree 0, W_1 = <v0, v1>, W_2 = <v1, v2>; W_1 + W_2 = V
    SummandSpace sp{{{0, false}, {0, false}, {0, false}}};
    CubicalDiagram cube = intersection_cube(sp, {0b011, 0b110});
    CHECK(acyclicity_check(cube));
}

TEST_CASE("broken cube is not acyclic") {
    SummandSpace sp{{{0, false}, {0, false}, {0, false}}};
    CubicalDiagram cube = intersection_cube(sp, {0b011, 0b110});
    // zero out both maps leaving the top subset; still functorial
    for (int e = 0; e < 2; ++e) {
        const ChainComplexQ& c = cube.module(3);
        for (int n = c.min_degree(); n <= c.max_degree(); ++n)
            cube.set_generator_map(
                3, e, n,
                Matrix(cube.module(3u & ~(1u << e)).dim(n), c.dim(n)));
    }
    cube.check();
    CHECK_FALSE(acyclicity_check(cube));
}

TEST_CASE("non-functorial cubes are rejected") {
    SummandSpace sp{{{0, false}, {0, false}, {0, false}}};
    CubicalDiagram cube = intersection_cube(sp, {0b011, 0b110});
    // zero only one of the two maps out of the top subset
    cube.set_generator_map(3, 0, 0, Matrix(2, 1));
    CHECK_THROWS_AS(cube.check(), std::domain_error);
    CHECK_THROWS_AS(total_cofibre(cube), std::domain_error);
}

TEST_CASE("total cofibre is isomorphic to the iterated mapping cone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        SummandSpace sp = random_space(rng);
        const int ne = 1 + int(rng() % 3);
        CubicalDiagram cube =
            intersection_cube(sp, random_subspaces(rng, sp, ne));
        TotalCofibre tc = total_cofibre(cube);
        CubeAssociatedComplex cc = cube_associated_complex(cube);
        IteratedCone ic = iterated_mapping_cone(cc.chain, cc.maps);
        ChainMap iso = totcof_cone_isomorphism(cube, tc, cc, ic);
        for (int n = tc.complex.min_degree(); n <= tc.complex.max_degree();
             ++n)
            CHECK(tc.complex.dim(n) == ic.complex.dim(n));
        CHECK(betti(tc.complex) == betti(ic.complex));
    }
}

TEST_CASE("Betti numbers do not depend on the ordering of the edge set") {
    std::mt19937_64 rng(11);
    SummandSpace sp = random_space(rng);
    CubicalDiagram cube =
        intersection_cube(sp, random_subspaces(rng, sp, 3));
    BettiTable base = betti(total_cofibre(cube).complex);
    std::vector<int> perm = {0, 1, 2};
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(betti(total_cofibre(relabel(cube, perm)).complex) == base);
    }
}

TEST_CASE("swap action on a symmetric cube commutes with the differential") {
    // three summands; W_0 = {s0, s2}, W_1 = {s1, s2}; the involution
    // swapping s0 and s1 maps the cube to itself with edges exchanged
    SummandSpace sp{{{0, true}, {0, true}, {1, false}}};
    CubicalDiagram cube = intersection_cube(sp, {0b101, 0b110});
    TotalCofibre tc = total_cofibre(cube);

    CubeAction act;
    act.perms.push_back({1, 0});
    act.mats.emplace_back(cube.subsets());
    for (std::uint32_t mask = 0; mask < cube.subsets(); ++mask) {
        const std::uint32_t img = mask_act(act.perms[0], mask);
        const ChainComplexQ& src = cube.module(mask);
        const ChainComplexQ& dst = cube.module(img);
        for (int n = src.min_degree(); n <= src.max_degree(); ++n) {
            // swap the s0 and s1 slots wherever both are present
            Matrix m(dst.dim(n), src.dim(n));
            std::uint32_t smem = 0b111, dmem = 0b111;
            for (int e = 0; e < 2; ++e) {
                if (mask >> e & 1)
                    smem &= (e == 0) ? 0b101u : 0b110u;
                if (img >> e & 1) dmem &= (e == 0) ? 0b101u : 0b110u;
            }
            for (std::size_t s = 0; s < 3; ++s) {
                if (!(smem >> s & 1)) continue;
                const std::size_t to = (s == 0) ? 1 : (s == 1) ? 0 : 2;
                const bool here = sp.summands[s].degree == n ||
                                  (sp.summands[s].has_boundary &&
                                   sp.summands[s].degree + 1 == n);
                if (here)
                    m(sp.slot(dmem, to, n), sp.slot(smem, s, n)) = 1;
            }
            if (!m.is_zero()) act.mats[0][mask][n] = std::move(m);
        }
    }
    for (int n = tc.complex.min_degree(); n < tc.complex.max_degree(); ++n) {
        Matrix an = totcof_action_matrix(cube, act, 0, tc, n);
        Matrix an1 = totcof_action_matrix(cube, act, 0, tc, n + 1);
        CHECK(an1 * tc.complex.diff(n) == tc.complex.diff(n) * an);
        CHECK(an * an == Matrix::identity(tc.complex.dim(n)));
    }
}

TEST_CASE("signs of edge-set permutations on subsets") {
    std::vector<int> swap01 = {1, 0, 2};
    CHECK(mask_sgn(swap01, 0b011) == -1);
    CHECK(mask_sgn(swap01, 0b101) == 1);
    CHECK(mask_sgn(swap01, 0b001) == 1);
    CHECK(mask_pos(0b101, 2) == 2);
    CHECK(mask_pos(0b101, 0) == 1);
    CHECK(mask_act(swap01, 0b001) == 0b010);
}
