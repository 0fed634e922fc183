#include <algorithm>
#include <set>

#include "doctest.h"
#include "qpaths/errors.hpp"
#include "qpaths/graphs/continued_fraction.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/graphs/paths.hpp"
#include "qpaths/qsystem/hard_particle.hpp"
#include "qpaths/qsystem/qsystem.hpp"
#include "qpaths/qsystem/weights.hpp"

using namespace qp;

namespace {

std::vector<Fraction> as_fractions(const std::vector<LaurentPoly>& y) {
    return std::vector<Fraction>(y.begin(), y.end());
}

std::vector<std::string> labels(const WeightedDigraph& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices) out.push_back(v.label);
    return out;
}

std::set<std::pair<std::string, std::string>> extra_edges(const WeightedDigraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges)
        if (e.skeleton == 0) out.insert({g.vertices[e.from].label, g.vertices[e.to].label});
    return out;
}

}  // namespace

TEST_CASE("Gamma_m of the nine-step example") {
    VarRegistry reg;
    const MotzkinPath m({2, 1, 2, 2, 2, 1, 0, 0, 1});
    const auto y = symbolic_weights(reg, 19);
    const auto g = build_gamma(m, y);
    CHECK(labels(g) == std::vector<std::string>{"0", "1", "2", "2'", "3", "4", "5", "5'", "6", "6'", "7", "7'",
                                                "8", "8'", "9", "9'", "10", "11", "12", "13"});
    CHECK(extra_edges(g) ==
          std::set<std::pair<std::string, std::string>>{{"3", "1"}, {"8", "6"}, {"9", "7"}, {"9", "6"}});
    CHECK(extra_weight(m, 3, 1, y) == parse_laurent("y2*y4*y3^-1", reg));
    CHECK(extra_weight(m, 9, 6, y) == parse_laurent("y14*y12*y10*y13^-1*y11^-1", reg));
    CHECK_THROWS_AS(extra_weight(m, 4, 1, y), std::invalid_argument);
    CHECK(check_intertwining(m, y));
    // Skeleton edge p joins position p to its parent and carries t*y_p downwards.
    for (const auto& e : g.edges)
        if (e.skeleton > 0 && e.t_degree == 1) CHECK(e.weight == y[e.skeleton - 1]);
}

TEST_CASE("Gamma_m shapes") {
    VarRegistry reg;
    for (int r = 1; r <= 5; ++r) {
        const auto g = build_gamma(MotzkinPath::zero(r), symbolic_weights(reg, 2 * r + 1));
        CHECK(g.size() == static_cast<std::size_t>(2 * r + 2));
        CHECK(extra_edges(g).empty());
        for (int k = 2; k <= r; ++k) CHECK(g.find(std::to_string(k) + "'").has_value());
    }
    const auto desc = build_gamma(MotzkinPath({2, 1, 0}), symbolic_weights(reg, 7));
    CHECK(extra_edges(desc).size() == 3);
    for (int r = 1; r <= 4; ++r)
        for (const auto& m : fundamental_domain(r))
            CHECK(check_intertwining(m, symbolic_weights(reg, 2 * r + 1)));
}

TEST_CASE("resolvent basics") {
    VarRegistry reg;
    const auto y = symbolic_weights(reg, 3);
    const auto g0 = tilde_G(0, {y[0]});
    const TSeries z0 = resolvent_series(transfer_matrix(g0), 0, 0, 6);
    for (int n = 0; n <= 6; ++n) CHECK(z0[n] == y[0].pow(n));

    WeightedDigraph cyc;
    cyc.vertices = {{"0", 0, false}, {"1", 1, false}};
    cyc.add_edge(0, 1, 0, LaurentPoly(1));
    cyc.add_edge(1, 0, 0, LaurentPoly(1));
    CHECK_THROWS_AS(resolvent_series(transfer_matrix(cyc), 0, 0, 2), NotNilpotent);
}

TEST_CASE("rerooting formula on the fundamental domain") {
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : fundamental_domain(r)) {
            Seed seed(m);
            QSystem q(seed);
            const auto w = weights_from_seed(q);
            const TSeries Z = resolvent_series(transfer_matrix(build_gamma(m, w)), 0, 0, 6);
            const int m1 = m.at(1);
            for (int n = 0; n <= 6; ++n) CHECK(q.R(1, m1) * Z[n] == q.R(1, n + m1));
        }
}

TEST_CASE("A_2 resolvent gives R_{1,n}/R_{1,0}") {
    Seed seed(MotzkinPath::zero(2));
    QSystem q(seed);
    const TSeries Z = resolvent_series(transfer_matrix(build_gamma(seed.path(), weights_from_seed(q))), 0, 0, 5);
    for (int n = 0; n <= 5; ++n) CHECK(Fraction(Z[n]) == Fraction(q.R(1, n), q.R(1, 0)));
}

TEST_CASE("hard-particle determinant") {
    VarRegistry reg;
    auto y = symbolic_weights(reg, 3);
    const TSeries d1 = hard_particle_det(1, y);
    CHECK(d1.degree() == 2);
    CHECK(d1[0] == LaurentPoly(1));
    CHECK(d1[1] == parse_laurent("y1 + y2 + y3", reg));
    CHECK(d1[2] == parse_laurent("y1*y3", reg));
    const TSeries d0 = hard_particle_det(0, {y[0]});
    CHECK(d0 == TSeries(std::vector<LaurentPoly>{LaurentPoly(1), y[0]}, TSeries::kPolynomial));
    for (int r = 2; r <= 4; ++r) {
        auto w = symbolic_weights(reg, 2 * r + 1);
        const TSeries d = hard_particle_det(r, w);
        const auto G = HardParticleGraph::make(r);
        for (int k = 0; k <= r + 2; ++k) CHECK(d[k] == hard_particle_Z(G, w, k));
    }
}

TEST_CASE("heap identity") {
    VarRegistry reg;
    const int N = 8;
    for (int r = 1; r <= 3; ++r) {
        auto y = symbolic_weights(reg, 2 * r + 1);
        const auto G = HardParticleGraph::make(r);
        auto partition = [&](std::vector<LaurentPoly> w) {
            std::vector<LaurentPoly> c;
            for (int k = 0; k <= r + 1; ++k) {
                LaurentPoly z = hard_particle_Z(G, w, k);
                c.push_back(k % 2 ? -z : z);
            }
            return TSeries(std::move(c), TSeries::kPolynomial);
        };
        auto y0 = y;
        y0[0] = LaurentPoly(0);
        const TSeries lhs = resolvent_series(transfer_matrix(tilde_G(r, y)), 0, 0, N);
        const TSeries rhs = (partition(y0) * partition(y).inverse(N)).truncated(N);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("continued fractions") {
    VarRegistry reg;
    auto y = symbolic_weights(reg, 3);
    const auto cf1 = stieltjes_cf(as_fractions(y));
    CHECK(eval_cf(cf1, 8) == resolvent_series(transfer_matrix(tilde_G(1, y)), 0, 0, 8));
    CHECK(eval_cf(ContinuedFraction{}, 5) == TSeries(std::vector<LaurentPoly>{LaurentPoly(1)}, 5));

    auto y2 = symbolic_weights(reg, 5, "w");
    const auto T2 = transfer_matrix(tilde_G(2, y2));
    CHECK(eval_cf(continued_fraction(2, as_fractions(y2)), 6) == resolvent_series(T2, 0, 0, 6));
    CHECK(eval_cf(continued_fraction(1, as_fractions(y)), 8) == eval_cf(cf1, 8));
    auto y3 = symbolic_weights(reg, 7, "v");
    CHECK(eval_cf(continued_fraction(3, as_fractions(y3)), 6) ==
          resolvent_series(transfer_matrix(tilde_G(3, y3)), 0, 0, 6));
    CHECK(eval_cf(jacobi_cf(2, as_fractions(y2)), 6) == resolvent_series(T2, 1, 1, 6));
}

TEST_CASE("continued fraction rearrangements") {
    VarRegistry reg;
    auto y = symbolic_weights(reg, 5);
    const auto cf = stieltjes_cf(as_fractions(y));
    const TSeries ref = eval_cf(cf, 8);
    for (std::size_t k = 0; k < 5; ++k) {
        const auto r1 = rearrange_R1(cf, k);
        CHECK(eval_cf(r1, 8) == ref);
    }
    const auto r1 = rearrange_R1(cf, 0);
    CHECK(r1.head_constant.size() == 1);
    CHECK(r1.head_scale == CFTerm{1, Fraction(y[0])});
    CHECK(r1.levels.front().constant.size() == 1);

    // a + b/(1 - c) as the bottom of a continued fraction.
    auto abc = symbolic_weights(reg, 3, "s");
    ContinuedFraction j;
    j.levels.push_back({{{1, Fraction(abc[0])}}, {{1, Fraction(abc[1])}}});
    j.levels.push_back({{{1, Fraction(abc[2])}}, {}});
    const auto r2 = rearrange_R2(j, 0);
    CHECK(r2.levels.size() == 3);
    const Fraction s = Fraction(abc[0]) + Fraction(abc[1]);
    CHECK(r2.levels[0].descent.front().weight == s);
    CHECK(r2.levels[1].descent.front().weight == Fraction(abc[1] * abc[2]) / s);
    CHECK(r2.levels[2].descent.front().weight == Fraction(abc[0] * abc[2]) / s);
    CHECK(eval_cf(r2, 8) == eval_cf(j, 8));
    CHECK_THROWS_AS(rearrange_R2(j, 0, true), NonExactWeight);

    ContinuedFraction zero;
    zero.levels.push_back({{{1, Fraction(abc[0])}}, {{1, -Fraction(abc[0])}}});
    zero.levels.push_back({{{1, Fraction(abc[2])}}, {}});
    CHECK_THROWS_AS(rearrange_R2(zero, 0), NonExactWeight);
}

TEST_CASE("weight mutations agree with the seed weights") {
    int checked = 0;
    for (int r = 1; r <= 3; ++r)
        for (const auto& m : fundamental_domain(r))
            for (int a = 1; a <= r; ++a) {
                auto reg = std::make_shared<VarRegistry>();
                Seed seed(m, reg);
                QSystem q(seed);
                const auto w = weights_from_seed(q);
                std::vector<Fraction> mutated;
                try {
                    mutated = mutate_weights(m, a, as_fractions(w.y));
                } catch (const CaseMismatch&) {
                    continue;
                }
                auto vals = m.values();
                ++vals[a - 1];
                const MotzkinPath m2(vals);
                Seed seed2(m2, reg);
                const auto w2 = weights_from_seed(seed2);
                std::map<VarId, Fraction> back;
                for (int b = 1; b <= r; ++b)
                    for (int e = 0; e <= 1; ++e)
                        back[seed2.var_id(b, m2.at(b) + e)] = Fraction(q.R(b, m2.at(b) + e));
                for (int i = 0; i < 2 * r + 1; ++i) CHECK(substitute_fraction(w2.y[i], back) == mutated[i]);
                ++checked;
            }
    CHECK(checked > 10);
    CHECK_THROWS_AS(mutate_weights(MotzkinPath({1, 0}), 1, std::vector<Fraction>(5, Fraction(1))), CaseMismatch);
}

TEST_CASE("path enumeration matches resolvents") {
    for (const auto& m : fundamental_domain(3)) {
        Seed seed(m);
        const auto g = build_gamma(m, weights_from_seed(seed));
        const TSeries Z = resolvent_series(transfer_matrix(g), 0, 0, 4);
        for (int n = 0; n <= 4; ++n) CHECK(path_sum(enumerate_paths(g, 0, 0, n)) == Z[n]);
    }
    VarRegistry reg;
    auto y = symbolic_weights(reg, 3);
    const auto g1 = tilde_G(1, y);
    const auto p0 = enumerate_paths(g1, 0, 0, 0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].weight == LaurentPoly(1));
    const auto p1 = enumerate_paths(g1, 0, 0, 1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].vertices == std::vector<std::size_t>{0, 1, 0});
    CHECK(p1[0].weight == y[0]);
}

TEST_CASE("LGV determinants") {
    Seed s2(MotzkinPath::zero(2));
    QSystem q2(s2);
    const auto g = build_gamma(s2.path(), weights_from_seed(q2));
    const auto fam = vertex_disjoint_families(g, 2, 3);
    CHECK(fam.count == 6);
    const LaurentPoly det = lgv_R(s2, 2, 3);
    CHECK(fam.weight == det);
    CHECK(det * q2.R(1, 0).pow(2) == q2.R(2, 3));

    for (const auto& m : fundamental_domain(3)) {
        Seed seed(m);
        QSystem q(seed);
        for (int a = 1; a <= 3; ++a)
            for (int n = a - 1; n <= a + 1; ++n)
                CHECK(lgv_R(seed, a, n) * q.R(1, m.at(1)).pow(a) == q.R(a, n + m.at(1)));
    }
    Seed s3(MotzkinPath::zero(3));
    for (int n = 2; n <= 4; ++n) CHECK(lgv_R(s3, 3, n) * s3.var(1, 0).pow(3) == det_formula_R(s3, 3, n));
}

TEST_CASE("DOT export is deterministic") {
    VarRegistry reg;
    const MotzkinPath m({0, 1, 0});
    const auto y = symbolic_weights(reg, 7);
    const std::string a = to_dot(build_gamma(m, y), reg);
    const std::string b = to_dot(build_gamma(m, y), reg);
    CHECK(a == b);
    CHECK(a.find("t^1 * 1*y1^1") != std::string::npos);
}
