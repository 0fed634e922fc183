#pragma once

#include <stdexcept>
#include <vector>

#include "qpaths/algebra/matrix.hpp"

namespace qp {

// The graph G_r on vertices 1..2r+1 (stored 0-based).
struct HardParticleGraph {
    int r = 0;
    Matrix<int> adjacency;

    static HardParticleGraph make(int r);
    int vertex_count() const { return 2 * r + 1; }
};

// Z_m^{G_r} by the recursion on r, peeling off vertices 2r+1 and 2r.
// weights[i] is the fugacity of vertex i+1.
template <class T>
T hard_particle_Z(const HardParticleGraph& g, const std::vector<T>& weights, int m) {
    const int r = g.r;
    if (static_cast<int>(weights.size()) != 2 * r + 1)
        throw std::invalid_argument("hard_particle_Z: expected 2r+1 weights");
    if (m < 0 || m > r + 1) return T(0);
    auto y = [&](int i) -> const T& { return weights[static_cast<std::size_t>(i - 1)]; };
    // table[k][j] = Z_j^{G_k} for the weight prefix y_1..y_{2k+1}.
    std::vector<std::vector<T>> table;
    table.push_back({T(1), y(1)});
    if (r >= 1) table.push_back({T(1), y(1) + y(2) + y(3), y(1) * y(3)});
    for (int k = 2; k <= r; ++k) {
        std::vector<T> row(static_cast<std::size_t>(k) + 2, T(0));
        for (int j = 0; j <= k + 1; ++j) {
            auto at = [&](int kk, int jj) -> T {
                if (jj < 0 || jj >= static_cast<int>(table[kk].size())) return T(0);
                return table[kk][jj];
            };
            row[j] = at(k - 1, j) + y(2 * k + 1) * at(k - 1, j - 1) + y(2 * k) * at(k - 2, j - 1);
        }
        table.push_back(std::move(row));
    }
    return table[r][m];
}

// Reference value: direct sum over independent sets of size m.
template <class T>
T hard_particle_Z_brute(const HardParticleGraph& g, const std::vector<T>& weights, int m) {
    const int nv = g.vertex_count();
    if (static_cast<int>(weights.size()) != nv) throw std::invalid_argument("hard_particle_Z_brute: weight count");
    if (nv > 24) throw std::invalid_argument("hard_particle_Z_brute: graph too large");
    T total(0);
    for (unsigned mask = 0; mask < (1u << nv); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        bool ok = true;
        for (int i = 0; i < nv && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (int j = i + 1; j < nv; ++j)
                if ((mask >> j & 1u) && g.adjacency(i, j)) {
                    ok = false;
                    break;
                }
        }
        if (!ok) continue;
        T w(1);
        for (int i = 0; i < nv; ++i)
            if (mask >> i & 1u) w *= weights[static_cast<std::size_t>(i)];
        total += w;
    }
    return total;
}

}  // namespace qp
