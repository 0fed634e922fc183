#pragma once

#include <array>

#include "qpaths/algebra/series.hpp"
#include "qpaths/graphs/digraph.hpp"
#include "qpaths/laurent/laurent_poly.hpp"

namespace qp {

// The recursion x_{n+1} x_{n-1} = 1 + x_n^b for odd n and 1 + x_n^c for
// even n, with b c = 4, written in the seed (x_k, x_{k+1}). For (1,4) the
// seed k = 0 is "case 0" and k = 1 is "case 1".
struct Rank2System {
    int b = 2;
    int c = 2;
    int k = 0;
    VarId first = 0;   // x_k
    VarId second = 1;  // x_{k+1}

    // Interns the seed variables "x{k}" and "x{k+1}".
    static Rank2System make(int b, int c, VarRegistry& reg, int k = 0);

    LaurentPoly seed(int i) const;  // i = k or k+1
};

// x_n for any integer n, by exact division at every step. (4,1) is computed
// through (1,4) using x_n(x_0, x_1) = x_{1-n}(x_1, x_0).
LaurentPoly iterate(const Rank2System& sys, int n);

// c = (x_{n-1} + x_{n+1}) / x_n for (2,2), in the seed (k = 0).
LaurentPoly conserved_22(const Rank2System& sys);
LaurentPoly conserved_22_at(const Rank2System& sys, int n);

// For (1,4), with u_n = x_{2n}: c = (u_{n+1} + u_{n-1}) / u_n.
LaurentPoly conserved_14(const Rank2System& sys);
LaurentPoly conserved_14_at(const Rank2System& sys, int n);

// Generating functions from the linear two-term recursions:
// sum_{n<=N} x_n t^n for (2,2), and sum u_{n+k} t^n for (1,4).
TSeries series_22(const Rank2System& sys, int N);
TSeries series_14(const Rank2System& sys, int N);

// The explicit multinomial sums: x_{2n} for case 0, x_{2n+2} for case 1.
LaurentPoly closed_form_14(const Rank2System& sys, int n);

// x_{2n+1+k} = x_{2n+k} x_{2n+k+2} - 1 from the closed forms. The product
// must have constant term exactly 1 and the result must be positive
// (PositivityViolation otherwise).
LaurentPoly odd_from_even_14(const Rank2System& sys, int n);

// Path weights (a_1, a_2, a_3) of the two-vertex graph for (1,4).
std::array<LaurentPoly, 3> weights_14(const Rank2System& sys);
// T = t [[a_1, a_2], [1, a_3]]; its (0,0) resolvent times x_{2k} is series_14.
TransferMatrix transfer_14(const std::array<LaurentPoly, 3>& a);
// T = [[t y_1, t y_2], [1, t y_3]] with the (2,2) weights y_1 = x_1/x_0,
// y_2 = 1/(x_0 x_1), y_3 = x_0/x_1; x_{n+1} = x_1 times its coefficient n.
TransferMatrix transfer_22_compact(const Rank2System& sys);

}  // namespace qp
