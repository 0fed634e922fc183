#pragma once

#include <map>
#include <unordered_map>
#include <utility>

#include "qpaths/laurent/laurent_poly.hpp"
#include "qpaths/qsystem/seed.hpp"

namespace qp {

// Evaluation context for the A_r Q-system
//     R_{a,n+1} R_{a,n-1} = R_{a,n}^2 + R_{a+1,n} R_{a-1,n},
// with R_{0,n} = R_{r+1,n} = 1, expressed in the variables of one seed.
// Values are memoized per context; a context is not thread-safe, but
// independent contexts may run concurrently.
class QSystem {
public:
    explicit QSystem(Seed seed);

    const Seed& seed() const { return seed_; }
    int rank() const { return seed_.rank(); }

    // R_{alpha,n}. Rows alpha = 0 and r+1 give 1. Times above the seed are
    // reached by forward mutations, times below by backward ones.
    const LaurentPoly& R(int alpha, int n);

    // det_{1<=i,j<=alpha} R_{1,n+i+j-alpha-1}.
    LaurentPoly det_formula(int alpha, int n);

    // c_p at time n: the (r+1)x(r+2) matrix R_{1,n+i+j-2} with column
    // r+2-p removed. 0 <= p <= r+1.
    LaurentPoly conserved_at(int p, int n);
    // c_p, checked to agree at n = 0, 1, 2 (ConservationFailure otherwise).
    LaurentPoly conserved(int p);

private:
    Seed seed_;
    std::unordered_map<std::int64_t, LaurentPoly> memo_;
    LaurentPoly one_{1};

    static std::int64_t key(int alpha, int n) {
        return (static_cast<std::int64_t>(alpha) << 32) ^ static_cast<std::uint32_t>(n);
    }
};

LaurentPoly compute_R(const Seed& seed, int alpha, int n);
LaurentPoly det_formula_R(const Seed& seed, int alpha, int n);
LaurentPoly conserved_c(const Seed& seed, int p, int n);

enum class Direction { Forward, Backward };

// A cluster along with the values of its 2r entries, keyed by (alpha, n).
struct SeedState {
    MotzkinPath path;
    std::map<std::pair<int, int>, LaurentPoly> values;

    static SeedState from_seed(const Seed& seed);
    const LaurentPoly& value(int alpha, int n) const;
};

// One cluster mutation at alpha: forward replaces R_{a,m_a} by R_{a,m_a+2},
// backward replaces R_{a,m_a+1} by R_{a,m_a-1}.
SeedState mutate(const SeedState& state, int alpha, Direction dir);

}  // namespace qp
