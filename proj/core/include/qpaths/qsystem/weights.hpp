#pragma once

#include <vector>

#include "qpaths/laurent/fraction.hpp"
#include "qpaths/qsystem/qsystem.hpp"

namespace qp {

// Skeleton weights y_1..y_{2r+1} of a seed (stored 0-based). Every entry is
// a coefficient-one Laurent monomial in the seed variables.
struct WeightSystem {
    int r = 0;
    std::vector<LaurentPoly> y;
    MotzkinPath source;

    const LaurentPoly& operator()(int i) const { return y.at(static_cast<std::size_t>(i - 1)); }
};

// Weights for a seed in the fundamental domain, built from the ratios
// lambda_{a,n} = R_{a,n+1}/R_{a,n} and mu_{a,n} = R_{a,n}/R_{a-1,n}.
// Each weight is computed as one exact quotient of R-products and must be
// a monomial (NotMonomial otherwise). Paths that are Motzkin but not
// fundamental are accepted as well, since the formula is translation
// invariant.
WeightSystem weights_from_seed(const Seed& seed);
WeightSystem weights_from_seed(QSystem& q);

// The weights y_{i,k} written directly as ratios of R_{.,k} and R_{.,k+1};
// for k = 0 in the seed x_0 these coincide with weights_from_seed.
std::vector<Fraction> weights_at_time(QSystem& q, int k);

}  // namespace qp
