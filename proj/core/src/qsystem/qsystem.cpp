#include "qpaths/qsystem/qsystem.hpp"

#include "qpaths/algebra/determinant.hpp"
#include "qpaths/errors.hpp"

namespace qp {

QSystem::QSystem(Seed seed) : seed_(std::move(seed)) {}

const LaurentPoly& QSystem::R(int alpha, int n) {
    const int r = rank();
    if (alpha < 0 || alpha > r + 1) throw std::out_of_range("Q-system index alpha out of range");
    if (alpha == 0 || alpha == r + 1) return one_;
    auto k = key(alpha, n);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    LaurentPoly value;
    if (seed_.contains(alpha, n)) {
        value = seed_.var(alpha, n);
    } else {
        // s = +1 moves forward from the two times below n, s = -1 backward.
        const int s = n > seed_.path().at(alpha) + 1 ? 1 : -1;
        const int p = n - s, q = n - 2 * s;
        LaurentPoly num = R(alpha, p) * R(alpha, p);
        num += R(alpha + 1, p) * R(alpha - 1, p);
        value = exact_div(num, R(alpha, q));
    }
    return memo_.emplace(k, std::move(value)).first->second;
}

LaurentPoly QSystem::det_formula(int alpha, int n) {
    if (alpha < 1 || alpha > rank() + 1) throw std::out_of_range("det_formula: alpha out of range");
    Matrix<LaurentPoly> m(static_cast<std::size_t>(alpha), static_cast<std::size_t>(alpha));
    for (int i = 1; i <= alpha; ++i)
        for (int j = 1; j <= alpha; ++j) m(i - 1, j - 1) = R(1, n + i + j - alpha - 1);
    return bareiss_det(std::move(m));
}

LaurentPoly QSystem::conserved_at(int p, int n) {
    const int r = rank();
    if (p < 0 || p > r + 1) throw std::out_of_range("conserved quantity index out of range");
    const int skip = r + 2 - p;
    Matrix<LaurentPoly> m(static_cast<std::size_t>(r + 1), static_cast<std::size_t>(r + 1));
    for (int i = 1; i <= r + 1; ++i) {
        int col = 0;
        for (int j = 1; j <= r + 2; ++j) {
            if (j == skip) continue;
            m(i - 1, col++) = R(1, n + i + j - 2);
        }
    }
    return bareiss_det(std::move(m));
}

LaurentPoly QSystem::conserved(int p) {
    LaurentPoly c = conserved_at(p, 0);
    for (int n = 1; n <= 2; ++n)
        if (!(conserved_at(p, n) == c))
            throw ConservationFailure("c_" + std::to_string(p) + " differs between n=0 and n=" + std::to_string(n));
    return c;
}

LaurentPoly compute_R(const Seed& seed, int alpha, int n) {
    if (alpha < 1 || alpha > seed.rank()) throw std::out_of_range("compute_R: alpha out of range");
    QSystem q(seed);
    return q.R(alpha, n);
}

LaurentPoly det_formula_R(const Seed& seed, int alpha, int n) {
    if (alpha < 1 || alpha > seed.rank()) throw std::out_of_range("det_formula_R: alpha out of range");
    QSystem q(seed);
    return q.det_formula(alpha, n);
}

LaurentPoly conserved_c(const Seed& seed, int p, int n) {
    QSystem q(seed);
    LaurentPoly c = q.conserved(p);
    if (n < 0 || n > 2) {
        if (!(q.conserved_at(p, n) == c))
            throw ConservationFailure("c_" + std::to_string(p) + " differs at n=" + std::to_string(n));
    }
    return c;
}

SeedState SeedState::from_seed(const Seed& seed) {
    SeedState s{seed.path(), {}};
    for (int a = 1; a <= seed.rank(); ++a)
        for (int e = 0; e < 2; ++e) {
            int n = seed.path().at(a) + e;
            s.values.emplace(std::make_pair(a, n), seed.var(a, n));
        }
    return s;
}

const LaurentPoly& SeedState::value(int alpha, int n) const {
    static const LaurentPoly one(1);
    if (alpha == 0 || alpha == path.rank() + 1) return one;
    auto it = values.find({alpha, n});
    if (it == values.end())
        throw std::out_of_range("R_{" + std::to_string(alpha) + "," + std::to_string(n) + "} not in the cluster");
    return it->second;
}

SeedState mutate(const SeedState& state, int alpha, Direction dir) {
    const int delta = dir == Direction::Forward ? 1 : -1;
    MotzkinPath next = state.path.shifted(alpha, delta);  // throws MotzkinViolation
    const int m = state.path.at(alpha);
    // Forward: drop n = m, create m+2 from time m+1. Backward: drop m+1,
    // create m-1 from time m.
    const int drop = dir == Direction::Forward ? m : m + 1;
    const int pivot = dir == Direction::Forward ? m + 1 : m;
    const int made = dir == Direction::Forward ? m + 2 : m - 1;
    LaurentPoly num = state.value(alpha, pivot) * state.value(alpha, pivot);
    num += state.value(alpha + 1, pivot) * state.value(alpha - 1, pivot);
    LaurentPoly v = exact_div(num, state.value(alpha, drop));
    SeedState out{std::move(next), state.values};
    out.values.erase({alpha, drop});
    out.values.emplace(std::make_pair(alpha, made), std::move(v));
    return out;
}

}  // namespace qp
