#include "doctest.h"
#include "qpaths/algebra/multinomial.hpp"
#include "qpaths/compact/compact.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/qsystem/qsystem.hpp"
#include "qpaths/qsystem/weights.hpp"

using namespace qp;

TEST_CASE("multinomial convention") {
    CHECK(multinomial(4, {1, 2}) == 12);
    CHECK(multinomial(3, {}) == 1);
    CHECK(multinomial(2, {3}) == 0);
    CHECK(multinomial(-1, {-1, 0}) == 1);
    CHECK(multinomial(-1, {0, 0}) == 1);
    CHECK(multinomial(-1, {-1, -1}) == 0);
    CHECK(multinomial(-2, {-2}) == 0);
}

TEST_CASE("compactification of the zero path") {
    VarRegistry reg;
    for (int r = 1; r <= 4; ++r) {
        const auto y = symbolic_weights(reg, 2 * r + 1);
        const auto c = compactify(build_gamma(MotzkinPath::zero(r), y));
        const auto T = c.transfer();
        const auto n = static_cast<std::size_t>(r + 1);
        Matrix<LaurentPoly> U(n, n), D(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            D(i, i) = y[2 * i];
            if (i + 1 < n) {
                U(i + 1, i) = LaurentPoly(1);
                D(i, i + 1) = y[2 * i + 1];
            }
        }
        CHECK(T.U == U);
        CHECK(T.D == D);
        CHECK(build_gamma_prime_direct(MotzkinPath::zero(r), y).transfer().D == D);
    }
}

TEST_CASE("nine-step example identifications") {
    VarRegistry reg;
    const MotzkinPath m({2, 1, 2, 2, 2, 1, 0, 0, 1});
    const auto y = symbolic_weights(reg, 19);
    const auto c = compactify(build_gamma(m, y));
    const std::vector<std::pair<std::string, std::string>> expected{
        {"0", "1"}, {"2", "2'"}, {"3", "4"}, {"5", "5'"}, {"6", "6'"},
        {"7", "7'"}, {"8", "8'"}, {"9", "9'"}, {"10", "11"}, {"12", "13"}};
    CHECK(c.merge == expected);
    CHECK(merge_map_text(c).rfind("1: 0 ~ 1\n", 0) == 0);
    const auto d = build_gamma_prime_direct(m, y).transfer();
    CHECK(c.transfer().U == d.U);
    CHECK(c.transfer().D == d.D);
}

TEST_CASE("signed up-steps for (0,1,2)") {
    VarRegistry reg;
    const auto c = build_gamma_prime_direct(MotzkinPath({0, 1, 2}), symbolic_weights(reg, 7));
    const auto T = c.transfer();
    CHECK(T.U(2, 0) == LaurentPoly(-1));  // 1 -> 3
    CHECK(T.U(3, 1) == LaurentPoly(-1));  // 2 -> 4
    CHECK(T.U(3, 0) == LaurentPoly(1));   // 1 -> 4
}

TEST_CASE("direct and compactified constructions agree") {
    VarRegistry reg;
    for (int r = 1; r <= 5; ++r) {
        const auto y = symbolic_weights(reg, 2 * r + 1);
        for (const auto& m : fundamental_domain(r)) {
            const auto a = compactify(build_gamma(m, y)).transfer();
            const auto b = build_gamma_prime_direct(m, y).transfer();
            CHECK(a.U == b.U);
            CHECK(a.D == b.D);
        }
    }
}

TEST_CASE("inclusion-exclusion for vertical chains") {
    VarRegistry reg;
    for (int k = 0; k <= 3; ++k) {
        const auto y = symbolic_weights(reg, 2 * k + 1);
        CHECK(verify_hk_lemma(k, y, k == 3 ? 6 : 8));
    }
}

TEST_CASE("resolvent equality") {
    VarRegistry reg;
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : fundamental_domain(r)) {
            CHECK(verify_resolvent_equality(m, 6));
            CHECK(verify_resolvent_equality(m, symbolic_weights(reg, 2 * r + 1), 6));
        }
    // Both sides are the generating function of R_{1,n+1}/R_{1,1} for the zero path.
    Seed s(MotzkinPath::zero(2));
    QSystem q(s);
    const auto w = weights_from_seed(q);
    const TSeries z = resolvent_series(build_gamma_prime_direct(s.path(), w.y).transfer(), 0, 0, 8);
    for (int n = 0; n <= 8; ++n) CHECK(z[n] * q.R(1, 1) == q.R(1, n + 1));
    CHECK(verify_resolvent_equality(s.path(), 8));
}

TEST_CASE("compact resolvents are positive") {
    for (const auto& m : fundamental_domain(3)) {
        const auto w = weights_from_seed(Seed(m));
        const TSeries z = resolvent_series(build_gamma_prime_direct(m, w.y).transfer(), 0, 0, 6);
        for (int n = 0; n <= 6; ++n) CHECK(is_positive(z[n]));
    }
}

TEST_CASE("closed expansion for the zero path") {
    for (int r = 1; r <= 3; ++r) {
        Seed s(MotzkinPath::zero(r));
        QSystem q(s);
        for (int n = 0; n <= 5; ++n) CHECK(closed_expansion_m0(s, n) == q.R(1, n + 1));
    }
}
