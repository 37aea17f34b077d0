#include <catch2/catch_amalgamated.hpp>

#include "confspace/matrix.hpp"
#include "confspace/rational.hpp"

using namespace confspace;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (auto& r : rows) {
        std::size_t j = 0;
        for (int v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(rational_str(parse_rational("-2/6")) == "-1/3");
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("matrix arithmetic") {
    Matrix a = from_rows({{1, 2}, {3, 4}});
    Matrix b = from_rows({{0, 1}, {1, 0}});
    CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
    CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
    CHECK(a - a == Matrix(2, 2));
    CHECK((a * Rational(2)) == from_rows({{2, 4}, {6, 8}}));
    CHECK(a.transpose() == from_rows({{1, 3}, {2, 4}}));
    CHECK(Matrix::identity(2) * a == a);
    CHECK(a.apply({Rational(1), Rational(0)}) ==
          std::vector<Rational>{Rational(1), Rational(3)});
}

TEST_CASE("rank over exact rationals") {
    CHECK(rank(Matrix(3, 3)) == 0);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(from_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
    CHECK(rank(from_rows({{1, 2}, {3, 4}, {5, 6}})) == 2);
    // ill-conditioned over floats, full rank over exact rationals
    Matrix h(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            h(i, j) = Rational(1, (unsigned long)(i + j + 1));
    CHECK(rank(h) == 3);
    CHECK(rank(from_rows({{1, 2, 3}, {4, 5, 6}, {5, 7, 9}})) == 2);
}

TEST_CASE("kernel columns really span the kernel") {
    Matrix a = from_rows({{1, 2, 3}, {4, 5, 6}});
    Matrix k = kernel(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).is_zero());
    CHECK(rank(k) == 1);
    CHECK(kernel(Matrix::identity(3)).cols() == 0);
}

TEST_CASE("solve and inverse") {
    Matrix a = from_rows({{2, 1}, {1, 1}});
    std::vector<Rational> x;
    REQUIRE(solve(a, {Rational(3), Rational(2)}, x));
    CHECK(x == std::vector<Rational>{Rational(1), Rational(1)});
    Matrix inv = inverse(a);
    CHECK(a * inv == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(from_rows({{1, 2}, {2, 4}})), std::domain_error);
    // inconsistent system
    Matrix s = from_rows({{1, 1}, {1, 1}});
    CHECK_FALSE(solve(s, {Rational(0), Rational(1)}, x));
}

TEST_CASE("column space is a basis of the image") {
    Matrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    Matrix cs = column_space(a);
    CHECK(cs.cols() == 2);
    CHECK(rank(cs) == 2);
    CHECK(rank(cs.augment(a)) == 2); // image unchanged
}

TEST_CASE("rref produces pivots") {
    Matrix a = from_rows({{0, 1, 2}, {1, 1, 1}});
    auto piv = rref(a);
    CHECK(piv.size() == 2);
    for (std::size_t r = 0; r < piv.size(); ++r) CHECK(a(r, piv[r]) == 1);
}
