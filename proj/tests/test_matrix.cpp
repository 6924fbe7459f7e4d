#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "wst/matrix.hpp"

using wst::RationalMatrix;
using wsttest::q;

TEST_CASE("construction and basic algebra") {
    RationalMatrix a{{q(1), q(2)}, {q(3), q(4)}};
    CHECK(a.rows() == 2);
    CHECK(a.cols() == 2);
    CHECK(a(1, 0) == q(3));

    CHECK_THROWS_AS((RationalMatrix{{q(1)}, {q(1), q(2)}}), std::invalid_argument);

    auto id = RationalMatrix::identity(2);
    CHECK(a * id == a);
    CHECK(id * a == a);

    RationalMatrix b{{q(0), q(1)}, {q(1), q(0)}};
    RationalMatrix ab{{q(2), q(1)}, {q(4), q(3)}};
    CHECK(a * b == ab);
    CHECK((a + b) - b == a);
    CHECK(a.scaled(q(-2))(0, 1) == q(-4));
    CHECK(a.transpose()(0, 1) == q(3));
    CHECK(a.trace() == q(5));
    CHECK_FALSE(a.is_symmetric());
    CHECK(RationalMatrix::diagonal({q(1), q(2)}).is_symmetric());
}

TEST_CASE("hcat, vcat and column selection") {
    RationalMatrix a{{q(1)}, {q(2)}};
    RationalMatrix b{{q(3)}, {q(4)}};
    auto h = wst::hcat(a, b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 2);
    CHECK(h(0, 1) == q(3));

    auto v = wst::vcat(a.transpose(), b.transpose());
    CHECK(v.rows() == 2);
    CHECK(v(1, 1) == q(4));

    auto picked = h.select_columns({1});
    CHECK(picked.cols() == 1);
    CHECK(picked(1, 0) == q(4));
}

TEST_CASE("reduced row echelon form is canonical") {
    RationalMatrix a{{q(0), q(2), q(4)}, {q(1), q(1), q(1)}, {q(1), q(3), q(5)}};
    auto ech = wst::reduced_row_echelon(a);
    CHECK(ech.rank == 2);
    CHECK(ech.pivot_columns == std::vector<std::size_t>{0, 1});
    RationalMatrix expected{
        {q(1), q(0), q(-1)}, {q(0), q(1), q(2)}, {q(0), q(0), q(0)}};
    CHECK(ech.rref == expected);

    CHECK(wst::rank(RationalMatrix(3, 3)) == 0);
    CHECK(wst::rank(RationalMatrix::identity(4)) == 4);
}

TEST_CASE("kernel basis uses unit free variables") {
    RationalMatrix a{{q(1), q(2), q(3)}};
    auto k = wst::kernel_basis(a);
    CHECK(k.rows() == 3);
    CHECK(k.cols() == 2);
    // free columns 1 and 2 each carry a 1, pivots are back-filled
    CHECK(k(0, 0) == q(-2));
    CHECK(k(1, 0) == q(1));
    CHECK(k(2, 0) == q(0));
    CHECK(k(0, 1) == q(-3));
    CHECK(k(2, 1) == q(1));
    CHECK((a * k).is_zero());

    // a matrix with no rows kills nothing
    auto full = wst::kernel_basis(RationalMatrix(0, 3));
    CHECK(full == RationalMatrix::identity(3));

    CHECK(wst::kernel_basis(RationalMatrix::identity(2)).cols() == 0);
}

TEST_CASE("solve returns the canonical preimage or nothing") {
    RationalMatrix a{{q(1), q(1)}, {q(0), q(1)}};
    RationalMatrix b{{q(3)}, {q(1)}};
    auto x = wst::solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    CHECK((*x)(0, 0) == q(2));

    // underdetermined: free variables stay at zero
    RationalMatrix wide{{q(1), q(2), q(0)}};
    auto y = wst::solve(wide, RationalMatrix{{q(4)}});
    REQUIRE(y.has_value());
    CHECK((*y)(0, 0) == q(4));
    CHECK((*y)(1, 0) == q(0));
    CHECK((*y)(2, 0) == q(0));

    RationalMatrix tall{{q(1)}, {q(1)}};
    CHECK_FALSE(wst::solve(tall, RationalMatrix{{q(1)}, {q(2)}}).has_value());

    // multiple right-hand sides are solved in one pass
    auto multi = wst::solve(a, RationalMatrix::identity(2));
    REQUIRE(multi.has_value());
    CHECK(a * *multi == RationalMatrix::identity(2));
}

TEST_CASE("determinant tracks row swaps") {
    CHECK(wst::determinant(RationalMatrix(0, 0)) == q(1));
    CHECK(wst::determinant(RationalMatrix{{q(0), q(1)}, {q(1), q(0)}}) == q(-1));
    RationalMatrix a{{q(2), q(1), q(0)}, {q(1), q(2), q(1)}, {q(0), q(1), q(2)}};
    CHECK(wst::determinant(a) == q(4));
    RationalMatrix singular{{q(1), q(2)}, {q(2), q(4)}};
    CHECK(wst::determinant(singular) == q(0));
}

TEST_CASE("characteristic polynomial by trace recursion") {
    RationalMatrix a{{q(2), q(1)}, {q(1), q(2)}};
    auto c = wst::char_poly(a);
    // lambda^2 - 4 lambda + 3
    CHECK(c == std::vector<wst::Rational>{q(1), q(-4), q(3)});

    auto d = wst::char_poly(RationalMatrix::diagonal({q(0), q(2), q(3)}));
    // lambda^3 - 5 lambda^2 + 6 lambda
    CHECK(d == std::vector<wst::Rational>{q(1), q(-5), q(6), q(0)});

    CHECK(wst::char_poly(RationalMatrix(0, 0)) == std::vector<wst::Rational>{q(1)});
}

TEST_CASE("pseudo determinant multiplies the nonzero spectrum") {
    CHECK(wst::pseudo_det(RationalMatrix(0, 0)) == q(1));
    CHECK(wst::pseudo_det(RationalMatrix(3, 3)) == q(1));
    CHECK(wst::pseudo_det(RationalMatrix::diagonal({q(0), q(2), q(3)})) == q(6));

    // triangle graph Laplacian: spectrum 0, 3, 3
    RationalMatrix lap{
        {q(2), q(-1), q(-1)}, {q(-1), q(2), q(-1)}, {q(-1), q(-1), q(2)}};
    CHECK(wst::char_poly(lap) == std::vector<wst::Rational>{q(1), q(-6), q(9), q(0)});
    CHECK(wst::pseudo_det(lap) == q(9));

    CHECK(wst::pseudo_det(RationalMatrix::diagonal({q(1, 2), q(0), q(4)})) == q(2));

    CHECK_THROWS_AS(wst::pseudo_det(RationalMatrix{{q(0), q(1)}, {q(0), q(0)}}),
                    std::invalid_argument);
}

TEST_CASE("positive semidefinite detection") {
    CHECK(wst::is_psd(RationalMatrix(0, 0)));
    CHECK(wst::is_psd(RationalMatrix(2, 2)));
    CHECK(wst::is_psd(RationalMatrix::diagonal({q(1), q(0), q(3, 7)})));
    CHECK(wst::is_psd(RationalMatrix{{q(2), q(-1)}, {q(-1), q(2)}}));
    CHECK_FALSE(wst::is_psd(RationalMatrix{{q(1), q(2)}, {q(2), q(1)}}));
    CHECK_FALSE(wst::is_psd(RationalMatrix::diagonal({q(1), q(-1)})));
    // zero diagonal entry with a live off-diagonal row is indefinite
    CHECK_FALSE(wst::is_psd(RationalMatrix{{q(0), q(1)}, {q(1), q(0)}}));
    // asymmetric input is rejected outright
    CHECK_FALSE(wst::is_psd(RationalMatrix{{q(1), q(1)}, {q(0), q(1)}}));

    // rank-one Gram matrix of (1,2,3)
    RationalMatrix gram{
        {q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(3), q(6), q(9)}};
    CHECK(wst::is_psd(gram));
    CHECK(wst::pseudo_det(gram) == q(14));
}

TEST_CASE("rational parsing and exact square roots") {
    CHECK(wst::parse_rational("3/4") == q(3, 4));
    CHECK(wst::parse_rational("-7") == q(-7));
    CHECK(wst::parse_rational("0.25") == q(1, 4));
    CHECK(wst::parse_rational("-1.5") == q(-3, 2));
    CHECK_THROWS_AS(wst::parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(wst::parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(wst::parse_rational(""), std::invalid_argument);

    CHECK(wst::is_perfect_square(q(9, 4)));
    CHECK_FALSE(wst::is_perfect_square(q(2)));
    CHECK(wst::sqrt_exact(q(9, 4)) == q(3, 2));
    CHECK_THROWS_AS(wst::sqrt_exact(q(2)), std::domain_error);
    CHECK_THROWS_AS(wst::sqrt_exact(q(-1)), wst::ZeroScalar);

    CHECK(wst::pow_int(q(2, 3), -2) == q(9, 4));
    CHECK(wst::pow_int(q(5), 0) == q(1));
    CHECK_THROWS_AS(wst::pow_int(q(0), -1), wst::ZeroScalar);
}
