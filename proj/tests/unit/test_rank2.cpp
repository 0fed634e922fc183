#include "doctest.h"
#include "qpaths/errors.hpp"
#include "qpaths/rank2/rank2.hpp"

using namespace qp;

TEST_CASE("rank-2 recursion first terms") {
    VarRegistry reg;
    const auto s22 = Rank2System::make(2, 2, reg);
    const auto x0 = s22.seed(0), x1 = s22.seed(1);
    CHECK(iterate(s22, 2) == exact_div(LaurentPoly(1) + x1 * x1, x0));
    CHECK(iterate(s22, -1) == exact_div(LaurentPoly(1) + x0 * x0, x1));

    const auto s14 = Rank2System::make(1, 4, reg);
    CHECK(iterate(s14, 2) == exact_div(LaurentPoly(1) + x1, x0));
    CHECK(iterate(s14, 3) == exact_div(LaurentPoly(1) + iterate(s14, 2).pow(4), x1));
    CHECK(iterate(s14, -1) == exact_div(LaurentPoly(1) + x0.pow(4), x1));

    // Going forward then reading back recovers the seed.
    for (int n = -6; n <= 8; ++n) {
        const auto xn = iterate(s14, n);
        const auto xm = iterate(s14, n - 1), xp = iterate(s14, n + 1);
        CHECK(xp * xm == LaurentPoly(1) + xn.pow(n % 2 != 0 ? 1 : 4));
        CHECK(is_positive(xn));
    }
    CHECK_THROWS_AS(Rank2System::make(3, 1, reg), std::invalid_argument);
}

TEST_CASE("(4,1) is (1,4) read backwards with swapped seed") {
    VarRegistry reg;
    const auto s41 = Rank2System::make(4, 1, reg);
    const Rank2System swapped{1, 4, 0, s41.second, s41.first};
    for (int n = -5; n <= 7; ++n) {
        const auto xn = iterate(s41, n);
        CHECK(xn == iterate(swapped, 1 - n));
        CHECK(iterate(s41, n + 1) * iterate(s41, n - 1) == LaurentPoly(1) + xn.pow(n % 2 != 0 ? 4 : 1));
    }
}

TEST_CASE("conserved quantities") {
    VarRegistry reg;
    const auto s22 = Rank2System::make(2, 2, reg);
    for (int n = -4; n <= 6; ++n) CHECK(conserved_22_at(s22, n) == conserved_22(s22));
    for (int k = 0; k <= 1; ++k) {
        const auto s14 = Rank2System::make(1, 4, reg, k);
        for (int n = -3; n <= 4; ++n) CHECK(conserved_14_at(s14, n) == conserved_14(s14));
    }
    CHECK_THROWS_AS(conserved_14(s22), std::invalid_argument);
}

TEST_CASE("generating functions") {
    VarRegistry reg;
    const auto s22 = Rank2System::make(2, 2, reg);
    const auto X = series_22(s22, 10);
    for (int n = 0; n <= 10; ++n) CHECK(X[n] == iterate(s22, n));

    // Path model on two vertices: x_{n+1} = x_1 times coefficient n.
    const auto R = resolvent_series(transfer_22_compact(s22), 0, 0, 9);
    for (int n = 0; n <= 9; ++n) CHECK(s22.seed(1) * R[n] == iterate(s22, n + 1));

    for (int k = 0; k <= 1; ++k) {
        const auto s14 = Rank2System::make(1, 4, reg, k);
        const auto U = series_14(s14, 8);
        for (int n = 0; n <= 8; ++n) CHECK(U[n] == iterate(s14, 2 * (n + k)));
        const auto a = weights_14(s14);
        const auto R14 = resolvent_series(transfer_14(a), 0, 0, 8);
        const auto u0 = iterate(s14, 2 * k);
        for (int n = 0; n <= 8; ++n) CHECK(u0 * R14[n] == U[n]);
        for (const auto& w : a) CHECK(is_positive(w));
    }
}

TEST_CASE("closed forms for (1,4)") {
    VarRegistry reg;
    const auto c0 = Rank2System::make(1, 4, reg, 0);
    const auto c1 = Rank2System::make(1, 4, reg, 1);
    for (int n = 0; n <= 5; ++n) {
        CHECK(closed_form_14(c0, n) == iterate(c0, 2 * n));
        CHECK(closed_form_14(c1, n) == iterate(c1, 2 * n + 2));
    }
    for (int n = 0; n <= 3; ++n) {
        CHECK(odd_from_even_14(c0, n) == iterate(c0, 2 * n + 1));
        CHECK(odd_from_even_14(c1, n) == iterate(c1, 2 * n + 3));
    }
    CHECK_THROWS_AS(closed_form_14(c0, -1), std::invalid_argument);
}
