#include <sstream>

#include "doctest.h"
#include "qpaths/errors.hpp"
#include "qpaths/qsystem/hard_particle.hpp"
#include "qpaths/qsystem/qsystem.hpp"
#include "qpaths/qsystem/weights.hpp"

using namespace qp;

namespace {
LaurentPoly P(const Seed& s, std::string_view text) { return parse_laurent(text, *s.registry()); }
}  // namespace

TEST_CASE("Motzkin paths") {
    CHECK_THROWS_AS(MotzkinPath({0, 2}), MotzkinViolation);
    CHECK(fundamental_domain(1).size() == 1);
    CHECK(fundamental_domain(3).size() == 9);
    CHECK(fundamental_domain(4).size() == 27);
    MotzkinPath m({2, 1, 2, 2, 2, 1, 0, 0, 1});
    CHECK(m.ascending_segments() == std::vector<std::pair<int, int>>{{2, 3}, {8, 9}});
    CHECK(m.descending_segments() == std::vector<std::pair<int, int>>{{1, 2}, {5, 7}});
    CHECK(parse_motzkin("(0,1,2)") == MotzkinPath({0, 1, 2}));
}

TEST_CASE("A1 mutations") {
    Seed s(MotzkinPath::zero(1));
    auto st = SeedState::from_seed(s);
    auto fwd = mutate(st, 1, Direction::Forward);
    CHECK(fwd.value(1, 2) == P(s, "R1_1^2*R1_0^-1 + R1_0^-1"));
    auto bwd = mutate(st, 1, Direction::Backward);
    CHECK(bwd.value(1, -1) == P(s, "R1_0^2*R1_1^-1 + R1_1^-1"));
    CHECK(compute_R(s, 1, 3) ==
          exact_div(P(s, "R1_1^4 + 2*R1_1^2 + 1 + R1_0^2"), P(s, "R1_0^2*R1_1")));
    CHECK(compute_R(s, 1, 0) == s.var(1, 0));
}

TEST_CASE("A2 mutation and determinant formula") {
    Seed s(MotzkinPath::zero(2));
    auto st = mutate(SeedState::from_seed(s), 1, Direction::Forward);
    CHECK(st.value(1, 2) == P(s, "R1_1^2*R1_0^-1 + R2_1*R1_0^-1"));
    CHECK_THROWS_AS(mutate(st, 1, Direction::Forward), MotzkinViolation);
    CHECK(det_formula_R(s, 2, 1) == s.var(2, 1));
    for (int n = -2; n <= 4; ++n) CHECK(det_formula_R(s, 2, n) == compute_R(s, 2, n));
}

TEST_CASE("conserved quantity of A1") {
    Seed s(MotzkinPath::zero(1));
    auto c = conserved_c(s, 1, 0);
    CHECK(c == P(s, "R1_1*R1_0^-1 + R1_0^-1*R1_1^-1 + R1_0*R1_1^-1"));
    CHECK(conserved_c(s, 1, 5) == c);
}

TEST_CASE("hard particles") {
    VarRegistry reg;
    auto y = [&](int n) {
        std::vector<LaurentPoly> v;
        for (int i = 1; i <= n; ++i) v.push_back(LaurentPoly::variable(reg.intern("y" + std::to_string(i))));
        return v;
    };
    auto g0 = HardParticleGraph::make(0);
    auto w0 = y(1);
    CHECK(hard_particle_Z(g0, w0, 1) == w0[0]);
    auto g1 = HardParticleGraph::make(1);
    auto w1 = y(3);
    CHECK(hard_particle_Z(g1, w1, 1) == w1[0] + w1[1] + w1[2]);
    CHECK(hard_particle_Z(g1, w1, 2) == w1[0] * w1[2]);
    for (int r = 0; r <= 5; ++r) {
        auto g = HardParticleGraph::make(r);
        auto w = y(2 * r + 1);
        for (int m = 0; m <= r + 1; ++m) CHECK(hard_particle_Z(g, w, m) == hard_particle_Z_brute(g, w, m));
        LaurentPoly full(1);
        for (int i = 0; i <= r; ++i) full *= w[2 * i];
        CHECK(hard_particle_Z(g, w, r + 1) == full);
    }
}

TEST_CASE("weights and conserved quantities") {
    Seed s1(MotzkinPath::zero(1));
    auto w = weights_from_seed(s1);
    CHECK(w(1) == P(s1, "R1_1*R1_0^-1"));
    CHECK(w(2) == P(s1, "R1_0^-1*R1_1^-1"));
    CHECK(w(3) == P(s1, "R1_0*R1_1^-1"));
    for (int r = 1; r <= 3; ++r) {
        QSystem q(Seed(MotzkinPath::zero(r)));
        auto ws = weights_from_seed(q);
        auto g = HardParticleGraph::make(r);
        auto w1 = weights_at_time(q, 1);
        for (int p = 1; p <= r; ++p) {
            CHECK(q.conserved(p) == hard_particle_Z(g, ws.y, p));
            std::vector<Fraction> w0(ws.y.begin(), ws.y.end());
            CHECK(hard_particle_Z(g, w0, p) == hard_particle_Z(g, w1, p));
        }
    }
    for (int r = 1; r <= 4; ++r)
        for (const auto& m : fundamental_domain(r)) CHECK_NOTHROW(weights_from_seed(Seed(m)));
}

TEST_CASE("seed files") {
    std::istringstream in("# seed\nR 1 1 = a\nR 1 2 = b\nR 2 0 = c\nR 2 1 = d\n");
    Seed s = parse_seed(in);
    CHECK(s.path() == MotzkinPath({1, 0}));
    CHECK(s.registry()->name(s.var_id(1, 2)) == "b");
    std::istringstream bad("R 1 0 = a\nR 1 2 = b\n");
    CHECK_THROWS_AS(parse_seed(bad), ParseError);
    std::istringstream notm("R 1 0 = a\nR 1 1 = b\nR 2 2 = c\nR 2 3 = d\n");
    CHECK_THROWS_AS(parse_seed(notm), MotzkinViolation);
}

TEST_CASE("reflection symmetry n <-> 1-n") {
    auto reg = std::make_shared<VarRegistry>();
    Seed s(MotzkinPath::zero(2), reg);
    std::vector<std::array<VarId, 2>> swapped;
    for (int a = 1; a <= 2; ++a) swapped.push_back({s.var_id(a, 1), s.var_id(a, 0)});
    Seed t(MotzkinPath::zero(2), reg, swapped);
    for (int a = 1; a <= 2; ++a)
        for (int n = -2; n <= 3; ++n) CHECK(compute_R(s, a, 1 - n) == compute_R(t, a, n));
}
