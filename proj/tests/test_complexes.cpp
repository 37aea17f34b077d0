#include <catch2/catch_amalgamated.hpp>

#include "confspace/chain_complex.hpp"

using namespace confspace;

namespace {

// 0 -> Q^2 -> Q -> 0 in degrees 0, 1 with d = (1 1): b0 = 1, b1 = 0
ChainComplexQ tiny() {
    ChainComplexQ c;
    c.set_dim(0, 2);
    c.set_dim(1, 1);
    Matrix d(1, 2);
    d(0, 0) = 1;
    d(0, 1) = 1;
    c.set_diff(0, d);
    return c;
}

// two-sphere-like: Q in degrees 0 and 2, zero differential
ChainComplexQ sphere_like() {
    ChainComplexQ c;
    c.set_dim(0, 1);
    c.set_dim(2, 1);
    return c;
}

} // namespace

TEST_CASE("betti numbers and euler characteristic") {
    BettiTable b = betti(tiny());
    CHECK(b[0] == 1);
    CHECK(b[1] == 0);
    CHECK(b.euler() == 1);
    CHECK(euler_characteristic(tiny()) == 1);
    CHECK(betti(sphere_like()).euler() == 2);
}

TEST_CASE("d^2 = 0 is enforced with a witness") {
    ChainComplexQ c;
    c.set_dim(0, 1);
    c.set_dim(1, 1);
    c.set_dim(2, 1);
    Matrix one(1, 1);
    one(0, 0) = 1;
    c.set_diff(0, one);
    c.set_diff(1, one);
    int w = 99;
    CHECK_FALSE(c.check_d_squared(&w));
    CHECK(w == 0);
    CHECK_THROWS_AS(betti(c), std::domain_error);
}

TEST_CASE("suspension shifts degrees and twists the differential") {
    ChainComplexQ s = suspend(tiny(), 3);
    CHECK(s.dim(-3) == 2);
    CHECK(s.dim(-2) == 1);
    CHECK(s.diff(-3) == tiny().diff(0) * Rational(-1));
    BettiTable b = betti(s);
    CHECK(b[-3] == 1);
    CHECK(suspend(suspend(tiny(), 3), -3).diff(0) == tiny().diff(0));
}

TEST_CASE("dual of the dual has the original dimensions and homology") {
    ChainComplexQ d1 = dualize(tiny());
    CHECK(d1.dim(0) == 2);
    CHECK(d1.dim(-1) == 1);
    CHECK(betti(d1)[0] == 1);
    CHECK(betti(d1)[-1] == 0);
    ChainComplexQ d2 = dualize(d1);
    for (int n = -2; n <= 2; ++n) CHECK(d2.dim(n) == tiny().dim(n));
    CHECK(betti(d2) == betti(tiny()));
    int w;
    CHECK(d1.check_d_squared(&w));
}

TEST_CASE("cone of the identity is acyclic") {
    ChainMap id;
    id.source = id.target = sphere_like();
    id.set_matrix(0, Matrix::identity(1));
    id.set_matrix(2, Matrix::identity(1));
    CHECK(betti(cone(id)).all_zero());
    CHECK(is_quasi_iso(id));
}

TEST_CASE("zero map between non-acyclic complexes is not a quasi-iso") {
    ChainMap z;
    z.source = z.target = sphere_like();
    CHECK(z.is_chain_map());
    CHECK_FALSE(is_quasi_iso(z));
}

TEST_CASE("non-chain maps are rejected") {
    // a line in degree 0 mapped onto a vector with nonzero boundary
    ChainComplexQ line;
    line.set_dim(0, 1);
    ChainMap f;
    f.source = line;
    f.target = tiny();
    Matrix m(2, 1);
    m(0, 0) = 1;
    f.set_matrix(0, m);
    int w;
    CHECK_FALSE(f.is_chain_map(&w));
    CHECK(w == 0);
    CHECK_THROWS_AS(cone(f), std::domain_error);
}

TEST_CASE("restriction to a d-stable span") {
    // span the first summand of tiny()^0 plus its boundary
    ChainComplexQ c = tiny();
    std::map<int, Matrix> spans;
    Matrix s0(2, 1);
    s0(0, 0) = 1;
    spans[0] = s0;
    Matrix s1(1, 1);
    s1(0, 0) = 1;
    spans[1] = s1;
    ChainComplexQ r = restrict_to_span(c, spans);
    CHECK(r.dim(0) == 1);
    CHECK(r.dim(1) == 1);
    CHECK(betti(r).all_zero());
    // a span that is not closed under d must be rejected
    std::map<int, Matrix> bad;
    bad[0] = s0;
    CHECK_THROWS_AS(restrict_to_span(c, bad), std::domain_error);
}

TEST_CASE("spectral sequence of the trivial filtration is the homology") {
    Filtration f;
    f.levels.resize(1);
    ChainComplexQ c = tiny();
    for (int n = 0; n <= 1; ++n)
        f.levels[0][n] = Matrix::identity(c.dim(n));
    auto pages = spectral_pages(c, f);
    REQUIRE(pages.size() >= 2);
    BettiTable b = betti(c);
    for (int n = 0; n <= 1; ++n) CHECK(pages.back().total(n) == b[n]);
}

TEST_CASE("two-step filtration converges to homology") {
    ChainComplexQ c = tiny();
    Filtration f;
    f.levels.resize(2);
    for (int n = 0; n <= 1; ++n)
        f.levels[0][n] = Matrix::identity(c.dim(n));
    // F^1: the kernel line in degree 0
    Matrix k(2, 1);
    k(0, 0) = 1;
    k(1, 0) = -1;
    f.levels[1][0] = k;
    auto pages = spectral_pages(c, f);
    BettiTable b = betti(c);
    for (int n = 0; n <= 1; ++n) CHECK(pages.back().total(n) == b[n]);
}

TEST_CASE("filtrations not preserved by d are rejected") {
    ChainComplexQ c = tiny();
    Filtration f;
    f.levels.resize(2);
    for (int n = 0; n <= 1; ++n)
        f.levels[0][n] = Matrix::identity(c.dim(n));
    // F^1: a line of degree 0 with nonzero boundary, and 0 in degree 1
    Matrix s(2, 1);
    s(0, 0) = 1;
    f.levels[1][0] = s;
    CHECK_THROWS_AS(spectral_pages(c, f), std::domain_error);
}
