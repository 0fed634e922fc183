#pragma once

#include <vector>

#include "qpaths/algebra/series.hpp"
#include "qpaths/laurent/fraction.hpp"
#include "qpaths/qsystem/motzkin.hpp"

namespace qp {

// t^d * w
struct CFTerm {
    int t_degree = 0;
    Fraction weight;

    friend bool operator==(const CFTerm& a, const CFTerm& b) {
        return a.t_degree == b.t_degree && a.weight == b.weight;
    }
};

// One level k of a finite continued fraction:
//     V_k = 1 / (1 - sum(constant) - descent * V_{k+1}),
// where V_{K+1} = 1 past the last level. An absent descent is empty.
struct CFLevel {
    std::vector<CFTerm> constant;
    std::vector<CFTerm> descent;  // zero or one term
};

// value = sum(head_constant) + head_scale * V_1
struct ContinuedFraction {
    std::vector<CFTerm> head_constant;
    CFTerm head_scale{0, Fraction(1)};
    std::vector<CFLevel> levels;

    std::size_t depth() const { return levels.size(); }
};

// 1/(1 - t y_1/(1 - t y_2/(... /(1 - t y_k)))).
ContinuedFraction stieltjes_cf(const std::vector<Fraction>& y);
// Root generating function of the zero-path graph of rank r:
//     1/(1 - t y_1/(1 - t y_2/(1 - t y_3 - t y_4/(1 - t y_5 - ...)))).
ContinuedFraction continued_fraction(int r, const std::vector<Fraction>& y);
// Rank r compact form: level i has constant t y_{2i-1} and descent t y_{2i}.
ContinuedFraction jacobi_cf(int r, const std::vector<Fraction>& y);

FSeries eval_cf_fraction(const ContinuedFraction& cf, int N);
// Same, with every coefficient converted to a Laurent polynomial.
TSeries eval_cf(const ContinuedFraction& cf, int N);

// 1/(1 - a/(1 - b)) = 1 + a/(1 - a - b), applied at `level` (0-based). The
// level must have no constant part and a descent a; b is the whole
// denominator part of the next level.
ContinuedFraction rearrange_R1(const ContinuedFraction& cf, std::size_t level);

// a + b/(1 - c) = a'/(1 - b'/(1 - c')) with a' = a+b, b' = bc/(a+b),
// c' = ac/(a+b). The level must carry one constant term a and the descent
// b, and the following level must be the last one, with only the constant
// c. With require_laurent each new weight must be a Laurent polynomial
// (NonExactWeight otherwise); a + b = 0 always raises NonExactWeight.
ContinuedFraction rearrange_R2(const ContinuedFraction& cf, std::size_t level, bool require_laurent = false);

// Weights of m + e_alpha from those of m (1-based index in the formulas,
// 0-based storage), for the forward mutations
//   (i)  m_{alpha-1} = m_alpha < m_{alpha+1}
//   (ii) m_{alpha-1} = m_alpha = m_{alpha+1}
// with the obvious truncations at alpha = 1 and alpha = r. Anything else
// raises CaseMismatch.
std::vector<Fraction> mutate_weights(const MotzkinPath& m, int alpha, const std::vector<Fraction>& y);

}  // namespace qp
