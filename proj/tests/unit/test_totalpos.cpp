#include "doctest.h"
#include "qpaths/compact/compact.hpp"
#include "qpaths/errors.hpp"
#include "qpaths/graphs/digraph.hpp"
#include "qpaths/qsystem/weights.hpp"
#include "qpaths/totalpos/factorization.hpp"

using namespace qp;

TEST_CASE("sigma and tau") {
    auto [s, t] = sigma_tau(MotzkinPath({2, 1, 2, 2, 2, 1, 0, 0, 1}));
    CHECK(s == std::vector<int>{8, 9, 7, 6, 5, 4, 2, 3, 1});
    CHECK(t == std::vector<int>{9, 8, 5, 6, 7, 4, 3, 1, 2});
    for (int r = 1; r <= 5; ++r) {
        auto [s0, t0] = sigma_tau(MotzkinPath::zero(r));
        std::vector<int> desc;
        for (int i = r; i >= 1; --i) desc.push_back(i);
        CHECK(s0 == desc);
        CHECK(t0 == desc);
    }
    auto [s01, t01] = sigma_tau(MotzkinPath({0, 1}));
    CHECK(s01 == std::vector<int>{1, 2});
    CHECK(t01 == std::vector<int>{2, 1});
}

TEST_CASE("elementary matrices") {
    auto f = elementary(ElemKind::f, 2, 1, LaurentPoly(1));
    CHECK(f(0, 0) == LaurentPoly(1));
    CHECK(f(1, 0) == LaurentPoly(1));
    CHECK(f(0, 1).is_zero());
    VarRegistry reg;
    auto y = symbolic_weights(reg, 2);
    auto d = elementary(ElemKind::d, 3, 2, y[0]);
    CHECK(d(1, 1) == y[0]);
    CHECK(d(0, 0) == LaurentPoly(1));
    auto e = elementary(ElemKind::e, 3, 2, y[1]);
    CHECK(e(1, 2) == y[1]);
    CHECK_THROWS_AS(elementary(ElemKind::e, 3, 3, y[1]), std::out_of_range);
}

TEST_CASE("N + B decomposition") {
    VarRegistry reg;
    for (int r = 1; r <= 4; ++r) {
        const auto y = symbolic_weights(reg, 2 * r + 1);
        for (const auto& m : fundamental_domain(r)) CHECK_NOTHROW(build_N_B(m, y));
    }
    const MotzkinPath big({2, 1, 2, 2, 2, 1, 0, 0, 1});
    CHECK_NOTHROW(build_N_B(big, symbolic_weights(reg, 19)));
    for (const auto& m : fundamental_domain(3)) CHECK_NOTHROW(build_N_B(m, weights_from_seed(Seed(m)).y));
}

TEST_CASE("zero path network identity") {
    VarRegistry reg;
    for (int r = 1; r <= 4; ++r) {
        const auto y = symbolic_weights(reg, 2 * r + 1);
        const MotzkinPath m0 = MotzkinPath::zero(r);
        const auto f = ElemFactorization::make(m0, y);
        const auto F = build_F(f);
        const auto n = static_cast<std::size_t>(r + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK(F(i, j) == LaurentPoly(i >= j ? 1 : 0));
        // I - tP = F (I - T'), split by powers of t.
        const auto P = build_P(m0, y);
        const auto Tc = build_gamma_prime_direct(m0, y).transfer();
        const auto I = SquareMatrixLP::identity(n);
        CHECK(F * (I - Tc.U) == I);
        CHECK(F * Tc.D == P);
    }
}

TEST_CASE("conjugate network matrix") {
    VarRegistry reg;
    for (int r = 1; r <= 3; ++r) {
        const auto y = symbolic_weights(reg, 2 * r + 1);
        for (const auto& m : fundamental_domain(r)) {
            const auto f = ElemFactorization::make(m, y);
            const auto F = build_F(f);
            const auto Fi = unitriangular_inverse(F);
            CHECK(Fi * F == SquareMatrixLP::identity(F.rows()));
            CHECK(build_P_prime(m, y) == Fi * build_P(m, y) * F);
            // ((I - tP)^{-1} F)_{1,1} = ((I - tP')^{-1})_{1,1}
            const TransferMatrix Tp{SquareMatrixLP(F.rows(), F.rows()), build_P(m, y)};
            const TransferMatrix Tq{SquareMatrixLP(F.rows(), F.rows()), build_P_prime(m, y)};
            TSeries lhs(std::vector<LaurentPoly>{}, 5);
            for (std::size_t a = 0; a < F.rows(); ++a)
                lhs += resolvent_series(Tp, 0, a, 5) * TSeries(F(a, 0));
            CHECK(lhs == resolvent_series(Tq, 0, 0, 5));
        }
    }
}

TEST_CASE("network resolvent identity") {
    VarRegistry reg;
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : fundamental_domain(r)) {
            CHECK(verify_resolvent_theorem(m, 6));
            CHECK(verify_resolvent_theorem(m, symbolic_weights(reg, 2 * r + 1), 6));
        }
    CHECK(resolvent_branch_bound(MotzkinPath({0, 1})) == 2);
    CHECK(resolvent_branch_bound(MotzkinPath({0, 0, 0})) == 4);
    CHECK(resolvent_branch_bound(MotzkinPath({1, 0, 1, 2})) == 3);
    // The first column of F is what the branch bound describes.
    for (int r = 1; r <= 4; ++r)
        for (const auto& m : fundamental_domain(r)) {
            const auto F = build_F(ElemFactorization::make(m, symbolic_weights(reg, 2 * r + 1)));
            const int A = resolvent_branch_bound(m);
            for (int a = 1; a <= r + 1; ++a) CHECK(F(a - 1, 0) == LaurentPoly(a <= A ? 1 : 0));
        }
}

TEST_CASE("total positivity at positive points") {
    for (int r = 2; r <= 3; ++r)
        for (const auto& m : fundamental_domain(r)) {
            if (r == 3 && !(m == MotzkinPath::zero(3))) continue;
            Seed s(m);
            std::map<VarId, mpq_class> ones;
            for (VarId v : s.all_ids()) ones[v] = 1;
            CHECK(check_total_positivity(s, ones, r + 1));
            std::map<VarId, mpq_class> other;
            int k = 2;
            for (VarId v : s.all_ids()) other[v] = mpq_class(k++, 3);
            CHECK(check_total_positivity(s, other, r + 1));
        }
    Seed s(MotzkinPath::zero(2));
    std::map<VarId, mpq_class> pt;
    for (VarId v : s.all_ids()) pt[v] = 1;
    pt[s.var_id(1, 0)] = 0;
    CHECK_THROWS_AS(check_total_positivity(s, pt, 2), DivisionByZero);
}

TEST_CASE("network DOT") {
    VarRegistry reg;
    const auto y = symbolic_weights(reg, 5);
    const auto a = network_dot(MotzkinPath::zero(2), y, reg);
    CHECK(a == network_dot(MotzkinPath::zero(2), y, reg));
    CHECK(a.find("f2: 1") != std::string::npos);
    CHECK(a.find("d1: 1*y1^1") != std::string::npos);
}
