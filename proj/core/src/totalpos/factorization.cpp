#include "qpaths/totalpos/factorization.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qpaths/algebra/determinant.hpp"
#include "qpaths/compact/compact.hpp"
#include "qpaths/errors.hpp"
#include "qpaths/qsystem/weights.hpp"

namespace qp {

namespace {

std::vector<int> reversed_over(int r, const std::vector<std::pair<int, int>>& segs) {
    std::vector<int> s(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) s[i] = r - i;
    for (auto [a, b] : segs) {
        std::size_t lo = s.size(), hi = 0;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (s[k] >= a && s[k] <= b) {
                lo = std::min(lo, k);
                hi = std::max(hi, k);
            }
        std::reverse(s.begin() + static_cast<std::ptrdiff_t>(lo), s.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    }
    return s;
}

void check_weights(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    if (static_cast<int>(y.size()) != 2 * m.rank() + 1) throw std::invalid_argument("expected 2r+1 skeleton weights");
}

std::size_t dim(const ElemFactorization& f) { return f.mu.size(); }

TransferMatrix network_transfer(const SquareMatrixLP& P) {
    return {SquareMatrixLP(P.rows(), P.cols()), P};
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> sigma_tau(const MotzkinPath& m) {
    return {reversed_over(m.rank(), m.ascending_segments()), reversed_over(m.rank(), m.descending_segments())};
}

ElemFactorization ElemFactorization::make(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    check_weights(m, y);
    const int r = m.rank();
    ElemFactorization f;
    std::tie(f.sigma, f.tau) = sigma_tau(m);
    f.lambda.assign(static_cast<std::size_t>(r), LaurentPoly(1));
    for (int i = 1; i <= r + 1; ++i) f.mu.push_back(y[2 * i - 2]);
    for (int i = 1; i <= r; ++i) {
        auto q = try_exact_div(y[2 * i - 1], y[2 * i - 2]);
        if (!q) throw NotMonomial("nu_i is not a Laurent polynomial");
        f.nu.push_back(std::move(*q));
    }
    return f;
}

SquareMatrixLP elementary(ElemKind kind, std::size_t n, int i, const LaurentPoly& param) {
    const auto k = static_cast<std::size_t>(i);
    const std::size_t limit = kind == ElemKind::d ? n : n - 1;
    if (i < 1 || k > limit) throw std::out_of_range("elementary matrix index out of range");
    SquareMatrixLP M = SquareMatrixLP::identity(n);
    switch (kind) {
        case ElemKind::f: M(k, k - 1) = param; break;
        case ElemKind::e: M(k - 1, k) = param; break;
        case ElemKind::d: M(k - 1, k - 1) = param; break;
    }
    return M;
}

SquareMatrixLP build_F(const ElemFactorization& f) {
    SquareMatrixLP F = SquareMatrixLP::identity(dim(f));
    for (int i : f.sigma) F = F * elementary(ElemKind::f, dim(f), i, f.lambda[static_cast<std::size_t>(i - 1)]);
    return F;
}

SquareMatrixLP unitriangular_inverse(const SquareMatrixLP& L) {
    const std::size_t n = L.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!(L(i, i) == LaurentPoly(1))) throw std::invalid_argument("matrix is not unitriangular");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!L(i, j).is_zero()) throw std::invalid_argument("matrix is not lower triangular");
    }
    SquareMatrixLP X(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = c; k < n; ++k) {
            LaurentPoly v(k == c ? 1 : 0);
            for (std::size_t l = c; l < k; ++l)
                if (!L(k, l).is_zero()) v -= L(k, l) * X(l, c);
            X(k, c) = std::move(v);
        }
    return X;
}

SquareMatrixLP build_D(const ElemFactorization& f) {
    SquareMatrixLP D = SquareMatrixLP::identity(dim(f));
    for (std::size_t i = 1; i <= dim(f); ++i)
        D = D * elementary(ElemKind::d, dim(f), static_cast<int>(i), f.mu[i - 1]);
    return D;
}

SquareMatrixLP build_E(const ElemFactorization& f) {
    SquareMatrixLP E = SquareMatrixLP::identity(dim(f));
    for (int j : f.tau) E = E * elementary(ElemKind::e, dim(f), j, f.nu[static_cast<std::size_t>(j - 1)]);
    return E;
}

TransferMatrix build_N_B(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    const auto f = ElemFactorization::make(m, y);
    const auto n = dim(f);
    TransferMatrix T{SquareMatrixLP::identity(n) - unitriangular_inverse(build_F(f)), build_D(f) * build_E(f)};
    const TransferMatrix ref = build_gamma_prime_direct(m, y).transfer();
    if (!(T.U == ref.U) || !(T.D == ref.D)) throw DecompositionMismatch("N + B differs from the compact transfer matrix");
    return T;
}

SquareMatrixLP build_P(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    const auto f = ElemFactorization::make(m, y);
    return build_F(f) * build_D(f) * build_E(f);
}

SquareMatrixLP build_P_prime(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    const auto f = ElemFactorization::make(m, y);
    return build_D(f) * build_E(f) * build_F(f);
}

int resolvent_branch_bound(const MotzkinPath& m) {
    const int r = m.rank();
    const auto asc = m.ascending_segments();
    const int a1 = asc.empty() ? r : std::min(asc.front().first, r);
    return a1 + 1;
}

bool verify_resolvent_theorem(const MotzkinPath& m, const std::vector<LaurentPoly>& y, int N) {
    const auto f = ElemFactorization::make(m, y);
    const auto n = dim(f);
    const SquareMatrixLP F = build_F(f);
    const SquareMatrixLP P = F * build_D(f) * build_E(f);
    const TransferMatrix Tc = build_gamma_prime_direct(m, y).transfer();
    const TransferMatrix Tp = network_transfer(P);

    // Columns of (I - tP)^{-1}, then the product with F column by column.
    std::vector<std::vector<TSeries>> Rp;
    for (std::size_t a = 0; a < n; ++a) Rp.push_back(resolvent_column(Tp, a, N));
    for (std::size_t j = 0; j < n; ++j) {
        const auto lhs = resolvent_column(Tc, j, N);
        for (std::size_t i = 0; i < n; ++i) {
            TSeries rhs(std::vector<LaurentPoly>{}, N);
            for (std::size_t a = 0; a < n; ++a)
                if (!F(a, j).is_zero()) rhs += Rp[a][i] * TSeries(F(a, j));
            if (!(lhs[i] == rhs)) return false;
        }
    }
    TSeries branch(std::vector<LaurentPoly>{}, N);
    for (int a = 1; a <= resolvent_branch_bound(m); ++a) branch += Rp[static_cast<std::size_t>(a - 1)][0];
    return branch == resolvent_column(Tc, 0, N)[0];
}

bool verify_resolvent_theorem(const MotzkinPath& m, int N) {
    return verify_resolvent_theorem(m, weights_from_seed(Seed(m)).y, N);
}

bool check_total_positivity(const Seed& seed, const std::map<VarId, mpq_class>& point, int k_max) {
    for (const auto& [v, x] : point) {
        if (x == 0) throw DivisionByZero("total positivity check at a point with a zero coordinate");
        if (x < 0) throw std::invalid_argument("total positivity check needs positive coordinates");
    }
    const SquareMatrixLP P = build_P(seed.path(), weights_from_seed(seed).y);
    const std::size_t n = P.rows();
    const Matrix<mpq_class> Pv = P.map([&](const LaurentPoly& p) { return eval_rational(p, point); });
    const std::size_t kmax = std::min(n, static_cast<std::size_t>(std::max(k_max, 0)));
    // Walk all k-subsets of rows and columns via bitmasks.
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::vector<std::size_t>> subsets;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u) s.push_back(i);
            subsets.push_back(std::move(s));
        }
        for (const auto& rs : subsets)
            for (const auto& cs : subsets)
                if (rational_det(Pv.select(rs, cs)) < 0) return false;
    }
    return true;
}

std::string network_dot(const MotzkinPath& m, const std::vector<LaurentPoly>& y, const VarRegistry& reg) {
    const auto f = ElemFactorization::make(m, y);
    const auto n = static_cast<int>(dim(f));
    struct Element {
        ElemKind kind;
        int i;
        LaurentPoly w;
    };
    std::vector<Element> elems;
    for (int i : f.sigma) elems.push_back({ElemKind::f, i, f.lambda[i - 1]});
    for (int i = 1; i <= n; ++i) elems.push_back({ElemKind::d, i, f.mu[i - 1]});
    for (int j : f.tau) elems.push_back({ElemKind::e, j, f.nu[j - 1]});

    std::ostringstream os;
    auto node = [](int rail, std::size_t col) { return "\"r" + std::to_string(rail) + "c" + std::to_string(col) + "\""; };
    os << "digraph network {\n  rankdir=LR;\n  node [shape=point];\n";
    const std::size_t cols = elems.size() + 1;
    for (int rail = 1; rail <= n; ++rail) {
        os << "  { rank=same;";
        for (std::size_t c = 0; c <= cols; ++c) os << " " << node(rail, c) << ";";
        os << " }\n";
    }
    for (std::size_t c = 0; c < elems.size(); ++c) {
        const auto& e = elems[c];
        const std::string w = to_string(e.w, reg);
        for (int rail = 1; rail <= n; ++rail) {
            os << "  " << node(rail, c) << " -> " << node(rail, c + 1);
            if (e.kind == ElemKind::d && rail == e.i) os << " [label=\"d" << e.i << ": " << w << "\"]";
            os << ";\n";
        }
        if (e.kind == ElemKind::f)
            os << "  " << node(e.i + 1, c) << " -> " << node(e.i, c + 1) << " [label=\"f" << e.i << ": " << w << "\"];\n";
        if (e.kind == ElemKind::e)
            os << "  " << node(e.i, c) << " -> " << node(e.i + 1, c + 1) << " [label=\"e" << e.i << ": " << w << "\"];\n";
    }
    for (int rail = 1; rail <= n; ++rail)
        os << "  " << node(rail, cols - 1) << " -> " << node(rail, cols) << " [label=\"" << rail << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace qp
