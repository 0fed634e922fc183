#include "qpaths/compact/compact.hpp"

#include <sstream>
#include <stdexcept>

#include "qpaths/algebra/multinomial.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/graphs/paths.hpp"
#include "qpaths/qsystem/weights.hpp"

namespace qp {

namespace {

WeightedDigraph chain_vertices(std::size_t n, int first_label) {
    WeightedDigraph g;
    for (std::size_t i = 0; i < n; ++i) {
        const int l = first_label + static_cast<int>(i);
        g.vertices.push_back({std::to_string(l), l, false});
    }
    return g;
}

// Edges j -> i for every nonzero entry of U (t^0) and D (t^1).
void add_matrix_edges(WeightedDigraph& g, const Matrix<LaurentPoly>& U, const Matrix<LaurentPoly>& D) {
    for (std::size_t j = 0; j < U.cols(); ++j)
        for (std::size_t i = 0; i < U.rows(); ++i) {
            if (!D(i, j).is_zero()) g.add_edge(j, i, 1, D(i, j));
            if (!U(i, j).is_zero()) g.add_edge(j, i, 0, U(i, j));
        }
}

LaurentPoly sign(long e) { return LaurentPoly(e % 2 == 0 ? 1 : -1); }

// Signed ascending edges compensating a run of K identified vertical pairs
// whose lowest compact vertex is base + 1.
void add_run_corrections(Matrix<LaurentPoly>& U, std::size_t base, std::size_t K) {
    for (std::size_t j = 0; j < K; ++j)
        for (std::size_t a = 0; a < K - j; ++a) U(base + j + 2 + a, base + j) += sign(static_cast<long>(a) + 1);
}

}  // namespace

CompactGraph compactify(const WeightedDigraph& gamma) {
    const std::size_t n = gamma.size();
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("compactify: expected a graph with 2r+2 vertices");
    const std::size_t r = n / 2 - 1;
    const TransferMatrix T = transfer_matrix(gamma);

    Matrix<LaurentPoly> U(r + 1, r + 1), D(r + 1, r + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i / 2 == j / 2) continue;
            U(i / 2, j / 2) += T.U(i, j);
            D(i / 2, j / 2) += T.D(i, j);
        }
    for (std::size_t k = 0; k <= r; ++k) D(k, k) += T.U(2 * k + 1, 2 * k) * T.D(2 * k, 2 * k + 1);

    // A pair is vertical when its upper vertex continues the spine: it is
    // neither the root pair, nor the topmost vertex, nor a primed leaf.
    auto vertical = [&](std::size_t k) {
        const std::size_t lo = 2 * k, hi = 2 * k + 1;
        const Edge* up = gamma.edge(lo, hi);
        if (!up || up->t_degree != 0) return false;
        return lo != 0 && hi != n - 1 && !gamma.vertices[hi].prime;
    };
    for (std::size_t k = 0; k <= r;) {
        if (!vertical(k)) {
            ++k;
            continue;
        }
        std::size_t e = k;
        while (e + 1 <= r && vertical(e + 1)) ++e;
        add_run_corrections(U, k - 1, e - k + 1);
        k = e + 1;
    }

    CompactGraph out;
    out.graph = chain_vertices(r + 1, 1);
    add_matrix_edges(out.graph, U, D);
    for (std::size_t k = 0; k <= r; ++k)
        out.merge.emplace_back(gamma.vertices[2 * k].label, gamma.vertices[2 * k + 1].label);
    return out;
}

CompactGraph build_gamma_prime_direct(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    const int r = m.rank();
    if (static_cast<int>(y.size()) != 2 * r + 1) throw std::invalid_argument("expected 2r+1 skeleton weights");
    auto Y = [&](int i) -> const LaurentPoly& { return y[static_cast<std::size_t>(i - 1)]; };
    const auto n = static_cast<std::size_t>(r + 1);
    Matrix<LaurentPoly> U(n, n), D(n, n);
    for (int i = 1; i <= r + 1; ++i) D(i - 1, i - 1) += Y(2 * i - 1);
    for (int i = 1; i <= r; ++i) {
        U(i, i - 1) += LaurentPoly(1);
        D(i - 1, i) += Y(2 * i);
    }
    for (auto [s, e] : m.descending_segments()) {
        const int L = e - s + 1;
        for (int p = 2; p <= L; ++p)
            for (int q = 0; q + 1 < p; ++q) {
                LaurentPoly num(1), den(1);
                for (int j = s + q; j < s + p; ++j) num *= Y(2 * j);
                for (int j = s + q + 1; j < s + p; ++j) den *= Y(2 * j - 1);
                D(s + q - 1, s + p - 1) += exact_div(num, den);
            }
    }
    for (auto [s, e] : m.ascending_segments()) {
        const int L = e - s + 1;
        for (int p = 2; p <= L; ++p)
            for (int q = 0; q + 1 < p; ++q) U(s + p - 1, s + q - 1) += sign(p - q - 1);
    }
    CompactGraph out;
    out.graph = chain_vertices(n, 1);
    add_matrix_edges(out.graph, U, D);
    return out;
}

std::string merge_map_text(const CompactGraph& g) {
    std::ostringstream os;
    for (std::size_t k = 0; k < g.merge.size(); ++k)
        os << g.graph.vertices[k].label << ": " << g.merge[k].first << " ~ " << g.merge[k].second << "\n";
    return os.str();
}

WeightedDigraph build_H_tilde(int k, const std::vector<LaurentPoly>& y) {
    if (k < 0 || static_cast<int>(y.size()) != 2 * k + 1) throw std::invalid_argument("build_H_tilde: need 2k+1 weights");
    WeightedDigraph g = chain_vertices(static_cast<std::size_t>(2 * k + 2), 0);
    for (std::size_t i = 1; i < g.size(); ++i) {
        g.add_edge(i - 1, i, 0, LaurentPoly(1), static_cast<int>(i));
        g.add_edge(i, i - 1, 1, y[i - 1], static_cast<int>(i));
    }
    return g;
}

WeightedDigraph build_H_tilde_prime(int k, const std::vector<LaurentPoly>& y) {
    if (k < 0 || static_cast<int>(y.size()) != 2 * k + 1)
        throw std::invalid_argument("build_H_tilde_prime: need 2k+1 weights");
    const auto n = static_cast<std::size_t>(k + 2);
    Matrix<LaurentPoly> U(n, n), D(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        U(i, i - 1) += LaurentPoly(1);
        D(i - 1, i) += y[2 * i - 2];
        if (i <= static_cast<std::size_t>(k)) D(i, i) += y[2 * i - 1];
    }
    for (int j = 0; j < k; ++j)
        for (int a = 0; a <= k - 1 - j; ++a) U(j + 2 + a, j) += sign(a + 1);
    WeightedDigraph g = chain_vertices(n, 0);
    add_matrix_edges(g, U, D);
    return g;
}

bool verify_hk_lemma(int k, const std::vector<LaurentPoly>& y, int N) {
    const auto H = build_H_tilde(k, y);
    const auto Hp = build_H_tilde_prime(k, y);
    const TSeries a = resolvent_series(transfer_matrix(H), 0, 0, N);
    const TSeries b = resolvent_series(transfer_matrix(Hp), 0, 0, N);
    if (!(a == b)) return false;
    for (int d = 0; d <= N; ++d) {
        if (!(path_sum(enumerate_paths(H, 0, 0, d)) == a[d])) return false;
        if (!(path_sum(enumerate_paths(Hp, 0, 0, d)) == a[d])) return false;
    }
    return true;
}

bool verify_resolvent_equality(const MotzkinPath& m, const std::vector<LaurentPoly>& y, int N) {
    const TSeries a = resolvent_series(transfer_matrix(build_gamma(m, y)), 1, 1, N);
    const TSeries b = resolvent_series(build_gamma_prime_direct(m, y).transfer(), 0, 0, N);
    const TSeries c = resolvent_series(compactify(build_gamma(m, y)).transfer(), 0, 0, N);
    return a == b && a == c;
}

bool verify_resolvent_equality(const MotzkinPath& m, int N) {
    return verify_resolvent_equality(m, weights_from_seed(Seed(m)).y, N);
}

LaurentPoly closed_expansion_m0(const Seed& seed, int n) {
    const int r = seed.rank();
    for (int a = 1; a <= r; ++a)
        if (seed.path().at(a) != 0) throw std::invalid_argument("closed_expansion_m0: seed must be the zero path");
    if (n < 0) throw std::invalid_argument("closed_expansion_m0: n must be non-negative");
    const int len = 2 * r + 1;
    // p[0] and p[2r+2] are fixed to 0.
    std::vector<long> p(static_cast<std::size_t>(len) + 2, 0);
    LaurentPoly total;
    auto visit = [&]() {
        mpz_class c = 1;
        for (int l = 0; l <= r && c != 0; ++l) {
            const long p0 = l > 0 ? p[2 * l] : 1;
            c *= multinomial(p0 + p[2 * l + 1] + p[2 * l + 2] - 1, {p0 - 1, p[2 * l + 1]});
        }
        if (c == 0) return;
        std::vector<std::pair<VarId, Exponent>> exps;
        for (int i = 1; i <= r; ++i) {
            const long e0 = p[2 * i + 2] + p[2 * i + 1] - p[2 * i] - p[2 * i - 1];
            const long e1 = -(p[2 * i + 1] + p[2 * i] - p[2 * i - 1] - p[2 * i - 2]);
            exps.emplace_back(seed.var_id(i, 0), static_cast<Exponent>(e0));
            exps.emplace_back(seed.var_id(i, 1), static_cast<Exponent>(e1));
        }
        total += LaurentPoly::monomial(c, exps);
    };
    auto rec = [&](auto&& self, int idx, long left) -> void {
        if (idx == len) {
            p[static_cast<std::size_t>(idx)] = left;
            visit();
            return;
        }
        for (long v = 0; v <= left; ++v) {
            p[static_cast<std::size_t>(idx)] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 1, n);
    return total * seed.var(1, 1);
}

}  // namespace qp
