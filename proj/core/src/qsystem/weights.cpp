#include "qpaths/qsystem/weights.hpp"

#include "qpaths/errors.hpp"

namespace qp {

namespace {

// Numerator and denominator of a weight as lists of R factors.
struct Ratio {
    std::vector<std::pair<int, int>> num, den;
    void times(int a, int n) { num.emplace_back(a, n); }
    void divide(int a, int n) { den.emplace_back(a, n); }
    void lambda(int a, int n, bool invert) {
        // lambda_{a,n} = R_{a,n+1}/R_{a,n}
        if (invert) {
            divide(a, n + 1);
            times(a, n);
        } else {
            times(a, n + 1);
            divide(a, n);
        }
    }
    void mu(int a, int n, bool invert) {
        // mu_{a,n} = R_{a,n}/R_{a-1,n}
        if (invert) {
            divide(a, n);
            times(a - 1, n);
        } else {
            times(a, n);
            divide(a - 1, n);
        }
    }
};

LaurentPoly evaluate(QSystem& q, const Ratio& r, int index) {
    LaurentPoly num(1), den(1);
    for (auto [a, n] : r.num) num *= q.R(a, n);
    for (auto [a, n] : r.den) den *= q.R(a, n);
    auto quotient = try_exact_div(num, den);
    if (!quotient || !quotient->is_monomial() || quotient->coefficient(0) != 1)
        throw NotMonomial("weight y_" + std::to_string(index) + " is not a unit Laurent monomial");
    return *quotient;
}

}  // namespace

WeightSystem weights_from_seed(QSystem& q) {
    const MotzkinPath& m = q.seed().path();
    const int r = m.rank();
    WeightSystem ws{r, {}, m};
    ws.y.resize(static_cast<std::size_t>(2 * r + 1));
    auto M = [&](int a) { return m.at(a); };
    for (int a = 1; a <= r + 1; ++a) {
        Ratio w;
        if (a <= r) w.lambda(a, M(a), false);
        if (a >= 2) w.lambda(a - 1, M(a - 1), true);
        ws.y[static_cast<std::size_t>(2 * a - 2)] = evaluate(q, w, 2 * a - 1);
    }
    for (int a = 1; a <= r; ++a) {
        Ratio w;
        w.mu(a + 1, M(a) + 1, false);
        w.mu(a, M(a), true);
        if (a < r && M(a) == M(a + 1) + 1) {
            w.lambda(a + 1, M(a + 1), false);
            w.lambda(a + 1, M(a), true);
        }
        if (a > 1 && M(a - 1) == M(a) + 1) {
            w.lambda(a - 1, M(a), false);
            w.lambda(a - 1, M(a - 1), true);
        }
        ws.y[static_cast<std::size_t>(2 * a - 1)] = evaluate(q, w, 2 * a);
    }
    return ws;
}

WeightSystem weights_from_seed(const Seed& seed) {
    QSystem q(seed);
    return weights_from_seed(q);
}

std::vector<Fraction> weights_at_time(QSystem& q, int k) {
    const int r = q.rank();
    std::vector<Fraction> y(static_cast<std::size_t>(2 * r + 1));
    for (int a = 1; a <= r + 1; ++a)
        y[static_cast<std::size_t>(2 * a - 2)] =
            Fraction(q.R(a - 1, k) * q.R(a, k + 1), q.R(a, k) * q.R(a - 1, k + 1));
    for (int a = 1; a <= r; ++a)
        y[static_cast<std::size_t>(2 * a - 1)] =
            Fraction(q.R(a - 1, k) * q.R(a + 1, k + 1), q.R(a, k) * q.R(a, k + 1));
    return y;
}

}  // namespace qp
