#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qpaths/algebra/matrix.hpp"
#include "qpaths/graphs/digraph.hpp"
#include "qpaths/qsystem/motzkin.hpp"
#include "qpaths/qsystem/seed.hpp"

namespace qp {

using SquareMatrixLP = Matrix<LaurentPoly>;

// Start from (r, r-1, ..., 1) and, for each ascending (resp. descending)
// segment [a, b] in order, reverse the stretch of the sequence that holds
// the values a..b.
std::pair<std::vector<int>, std::vector<int>> sigma_tau(const MotzkinPath& m);

struct ElemFactorization {
    std::vector<int> sigma, tau;
    std::vector<LaurentPoly> lambda;  // all 1
    std::vector<LaurentPoly> mu;      // mu_i = y_{2i-1}, i = 1..r+1
    std::vector<LaurentPoly> nu;      // nu_i = y_{2i}/y_{2i-1}, i = 1..r

    static ElemFactorization make(const MotzkinPath& m, const std::vector<LaurentPoly>& y);
};

enum class ElemKind { f, e, d };

// In dimension n, with 1-based i:
//   f_i = I + p E_{i+1,i},  e_i = I + p E_{i,i+1},  d_i = I with (i,i) = p.
SquareMatrixLP elementary(ElemKind kind, std::size_t n, int i, const LaurentPoly& param);

// F = f_{sigma_1} ... f_{sigma_r}, its inverse (by back-substitution),
// D = d_1 ... d_{r+1} and E = e_{tau_1} ... e_{tau_r}.
SquareMatrixLP build_F(const ElemFactorization& f);
SquareMatrixLP unitriangular_inverse(const SquareMatrixLP& L);
SquareMatrixLP build_D(const ElemFactorization& f);
SquareMatrixLP build_E(const ElemFactorization& f);

// N = I - F^{-1} and B = t D E, returned as the t^0 and t^1 parts of one
// transfer matrix. Raises DecompositionMismatch unless N + B equals the
// transfer matrix of the compact graph of m.
TransferMatrix build_N_B(const MotzkinPath& m, const std::vector<LaurentPoly>& y);

// P = F D E and P' = D E F.
SquareMatrixLP build_P(const MotzkinPath& m, const std::vector<LaurentPoly>& y);
SquareMatrixLP build_P_prime(const MotzkinPath& m, const std::vector<LaurentPoly>& y);

// Checks to order N that (I - T')^{-1} = (I - tP)^{-1} F as matrices and
// that ((I - T')^{-1})_{1,1} = sum_{a=1}^{A} ((I - tP)^{-1})_{1,a} with
// A = min(a_1, r) + 1, where a_1 is the start of the first ascending
// segment (a_1 = infinity when there is none).
bool verify_resolvent_theorem(const MotzkinPath& m, const std::vector<LaurentPoly>& y, int N);
bool verify_resolvent_theorem(const MotzkinPath& m, int N);

// Upper summation bound A of the identity above.
int resolvent_branch_bound(const MotzkinPath& m);

// Every minor of size <= k_max of P_m, with the seed weights evaluated at
// the point and t = 1, is non-negative. A zero coordinate raises
// DivisionByZero; negative coordinates are rejected.
bool check_total_positivity(const Seed& seed, const std::map<VarId, mpq_class>& point, int k_max);

// Planar network of F D E: rails 1..r+1 drawn left to right, one column
// per elementary factor in product order.
std::string network_dot(const MotzkinPath& m, const std::vector<LaurentPoly>& y, const VarRegistry& reg);

}  // namespace qp
