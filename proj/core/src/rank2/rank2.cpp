#include "qpaths/rank2/rank2.hpp"

#include <map>
#include <stdexcept>

#include "qpaths/algebra/multinomial.hpp"
#include "qpaths/errors.hpp"

namespace qp {

namespace {

bool odd(int n) { return n % 2 != 0; }

void check_kind(const Rank2System& s) {
    if (!((s.b == 2 && s.c == 2) || (s.b == 1 && s.c == 4) || (s.b == 4 && s.c == 1)))
        throw std::invalid_argument("rank-2 system needs (b,c) in {(2,2),(1,4),(4,1)}");
}

void require(const Rank2System& s, int b, int c) {
    check_kind(s);
    if (s.b != b || s.c != c) throw std::invalid_argument("operation not available for this (b,c)");
}

LaurentPoly mono(const Rank2System& s, long coef, Exponent e_first, Exponent e_second) {
    return LaurentPoly::monomial(mpz_class(coef), {{s.first, e_first}, {s.second, e_second}});
}

// x_{2k} for a (1,4) system, u_0 of its even sequence.
LaurentPoly u_start(const Rank2System& s) { return iterate(s, 2 * s.k); }

}  // namespace

Rank2System Rank2System::make(int b, int c, VarRegistry& reg, int k) {
    Rank2System s{b, c, k, reg.intern("x" + std::to_string(k)), reg.intern("x" + std::to_string(k + 1))};
    check_kind(s);
    return s;
}

LaurentPoly Rank2System::seed(int i) const {
    if (i == k) return LaurentPoly::variable(first);
    if (i == k + 1) return LaurentPoly::variable(second);
    throw std::out_of_range("not a seed index");
}

LaurentPoly iterate(const Rank2System& sys, int n) {
    check_kind(sys);
    if (sys.b == 4) {
        // Seed (x_k, x_{k+1}) of (4,1) is the seed (x'_{-k}, x'_{1-k}) of (1,4).
        Rank2System mirror{1, 4, -sys.k, sys.second, sys.first};
        return iterate(mirror, 1 - n);
    }
    auto exponent = [&](int i) { return odd(i) ? sys.b : sys.c; };
    LaurentPoly lo = sys.seed(sys.k), hi = sys.seed(sys.k + 1);
    if (n == sys.k) return lo;
    if (n == sys.k + 1) return hi;
    if (n > sys.k + 1) {
        for (int i = sys.k + 1; i < n; ++i) {
            // x_{i+1} = (1 + x_i^e) / x_{i-1}
            LaurentPoly next = exact_div(LaurentPoly(1) + hi.pow(exponent(i)), lo);
            lo = std::move(hi);
            hi = std::move(next);
        }
        return hi;
    }
    for (int i = sys.k; i > n; --i) {
        // x_{i-1} = (1 + x_i^e) / x_{i+1}
        LaurentPoly prev = exact_div(LaurentPoly(1) + lo.pow(exponent(i)), hi);
        hi = std::move(lo);
        lo = std::move(prev);
    }
    return lo;
}

LaurentPoly conserved_22(const Rank2System& sys) {
    require(sys, 2, 2);
    return mono(sys, 1, -1, 1) + mono(sys, 1, -1, -1) + mono(sys, 1, 1, -1);
}

LaurentPoly conserved_22_at(const Rank2System& sys, int n) {
    require(sys, 2, 2);
    return exact_div(iterate(sys, n - 1) + iterate(sys, n + 1), iterate(sys, n));
}

LaurentPoly conserved_14(const Rank2System& sys) {
    require(sys, 1, 4);
    // (z^4 + (1 + x_1)^2) / (z^2 x_1) with z = x_0 (case 0) or x_2 (case 1).
    const LaurentPoly x1 = iterate(sys, 1);
    const LaurentPoly z = sys.k == 0 ? sys.seed(0) : iterate(sys, 2);
    const LaurentPoly one_x1 = LaurentPoly(1) + x1;
    return exact_div(z.pow(4) + one_x1 * one_x1, z * z * x1);
}

LaurentPoly conserved_14_at(const Rank2System& sys, int n) {
    require(sys, 1, 4);
    return exact_div(iterate(sys, 2 * (n - 1)) + iterate(sys, 2 * (n + 1)), iterate(sys, 2 * n));
}

TSeries series_22(const Rank2System& sys, int N) {
    require(sys, 2, 2);
    if (N < 0) throw std::invalid_argument("negative truncation order");
    const LaurentPoly c = conserved_22(sys);
    std::vector<LaurentPoly> x{iterate(sys, 0), iterate(sys, 1)};
    while (static_cast<int>(x.size()) <= N) x.push_back(c * x[x.size() - 1] - x[x.size() - 2]);
    x.resize(static_cast<std::size_t>(N) + 1);
    return TSeries(std::move(x), N);
}

TSeries series_14(const Rank2System& sys, int N) {
    require(sys, 1, 4);
    if (sys.k != 0 && sys.k != 1) throw std::invalid_argument("series_14 needs case 0 or 1");
    if (N < 0) throw std::invalid_argument("negative truncation order");
    const LaurentPoly c = conserved_14(sys);
    std::vector<LaurentPoly> u{u_start(sys), iterate(sys, 2 * sys.k + 2)};
    while (static_cast<int>(u.size()) <= N) u.push_back(c * u[u.size() - 1] - u[u.size() - 2]);
    u.resize(static_cast<std::size_t>(N) + 1);
    return TSeries(std::move(u), N);
}

LaurentPoly closed_form_14(const Rank2System& sys, int n) {
    require(sys, 1, 4);
    if (n < 0) throw std::invalid_argument("closed_form_14 needs n >= 0");
    LaurentPoly total;
    // Outside these ranges one of the multinomials vanishes.
    if (sys.k == 0) {
        for (long q = 0; q <= n + 1; ++q)
            for (long l = 0; q + l <= n + 1; ++l)
                for (long r = 0; r <= q + 1; ++r) {
                    const mpz_class c1 = multinomial(n - q - l, {q - r, r});
                    if (c1 == 0) continue;
                    for (long s = 0; s <= l + 1; ++s) {
                        const mpz_class c2 = multinomial(q + l - 1, {l - s, s});
                        if (c2 == 0) continue;
                        const long top = n + 2 * r + s - 2 * q - l;
                        for (long m = 0; m <= top + 1; ++m) {
                            const mpz_class c3 = multinomial(top, {m});
                            if (c3 == 0) continue;
                            total += LaurentPoly::monomial(
                                c1 * c2 * c3, {{sys.first, static_cast<Exponent>(1 + 4 * (q + l) - 2 * n - 4 * (r + s))},
                                               {sys.second, static_cast<Exponent>(m - q - l)}});
                        }
                    }
                }
        return total;
    }
    if (sys.k != 1) throw std::invalid_argument("closed_form_14 needs case 0 or 1");
    // Seed (x_1, x_2): first = x_1, second = x_2.
    for (long q = 0; q <= n + 1; ++q)
        for (long l = 0; q + l <= n + 1; ++l) {
            const mpz_class c2 = multinomial(q + l - 1, {l});
            if (c2 == 0) continue;
            for (long r = 0; r <= q + 1; ++r)
                for (long s = 0; s <= n + 1; ++s) {
                    const mpz_class c1 = multinomial(n - q - l, {q - r, r, s});
                    if (c1 == 0) continue;
                    const long top = 2 * r + s + l;
                    for (long m = 0; m <= top + 1; ++m) {
                        const mpz_class c3 = multinomial(top, {m});
                        if (c3 == 0) continue;
                        total += LaurentPoly::monomial(
                            c1 * c2 * c3, {{sys.second, static_cast<Exponent>(1 + 2 * n - 4 * (q + l + r + s))},
                                           {sys.first, static_cast<Exponent>(q + l + m - n)}});
                    }
                }
        }
    return total;
}

LaurentPoly odd_from_even_14(const Rank2System& sys, int n) {
    const LaurentPoly prod = closed_form_14(sys, n) * closed_form_14(sys, n + 1);
    if (prod.constant_term() != 1) throw PositivityViolation("x_{2n} x_{2n+2} does not have constant term 1");
    LaurentPoly x = prod - LaurentPoly(1);
    if (!is_positive(x)) throw PositivityViolation("odd variable is not a positive Laurent polynomial");
    return x;
}

std::array<LaurentPoly, 3> weights_14(const Rank2System& sys) {
    require(sys, 1, 4);
    const LaurentPoly x1 = iterate(sys, 1);
    const LaurentPoly one_x1 = LaurentPoly(1) + x1;
    if (sys.k == 0) {
        const LaurentPoly x0 = sys.seed(0);
        return {exact_div(one_x1, x0.pow(2)), exact_div(x0.pow(4) + one_x1 * one_x1, x0.pow(4) * x1),
                exact_div(x0.pow(4) + one_x1, x0.pow(2) * x1)};
    }
    if (sys.k != 1) throw std::invalid_argument("weights_14 needs case 0 or 1");
    const LaurentPoly x2 = sys.seed(2);
    return {exact_div(x2.pow(4) + one_x1, x2.pow(2) * x1), exact_div(x2.pow(4) + one_x1 * one_x1, x2.pow(4) * x1),
            exact_div(one_x1, x2.pow(2))};
}

TransferMatrix transfer_14(const std::array<LaurentPoly, 3>& a) {
    TransferMatrix T{Matrix<LaurentPoly>(2, 2), Matrix<LaurentPoly>(2, 2)};
    T.D(0, 0) = a[0];
    T.D(0, 1) = a[1];
    T.D(1, 0) = LaurentPoly(1);
    T.D(1, 1) = a[2];
    return T;
}

TransferMatrix transfer_22_compact(const Rank2System& sys) {
    require(sys, 2, 2);
    TransferMatrix T{Matrix<LaurentPoly>(2, 2), Matrix<LaurentPoly>(2, 2)};
    T.D(0, 0) = mono(sys, 1, -1, 1);
    T.D(0, 1) = mono(sys, 1, -1, -1);
    T.D(1, 1) = mono(sys, 1, 1, -1);
    T.U(1, 0) = LaurentPoly(1);
    return T;
}

}  // namespace qp
