#pragma once

#include <vector>

#include "qpaths/graphs/digraph.hpp"
#include "qpaths/qsystem/seed.hpp"

namespace qp {

struct WeightedPath {
    std::vector<std::size_t> vertices;
    LaurentPoly weight;
};

// Every walk from -> to using exactly n_down edges of t-degree 1, found by
// depth-first search. The t^0 part of the graph must be acyclic.
std::vector<WeightedPath> enumerate_paths(const WeightedDigraph& g, std::size_t from, std::size_t to, int n_down);

LaurentPoly path_sum(const std::vector<WeightedPath>& paths);

// det_{1<=i,j<=alpha} Z(n+i+j-alpha-1), where Z(k) is the coefficient of t^k
// in the root resolvent of Gamma_m with the skeleton weights of the seed.
// Multiplying by R_{1,m_1}^alpha gives R_{alpha,n+m_1}. Requires
// n >= alpha - 1 so that all indices are non-negative.
LaurentPoly lgv_R(const Seed& seed, int alpha, int n);

struct DisjointFamilies {
    std::size_t count = 0;
    LaurentPoly weight;
};

// Families of alpha root-to-root walks on a graph without level-skipping
// edges, one step per time unit. Walk i (1-based) starts at time
// 2(alpha-i) and ends at time 2(n+i-1), so that it has n+2i-alpha-1 down
// steps; the walks must not share any (time, vertex) pair. The weighted
// count of these families is the LGV determinant above.
DisjointFamilies vertex_disjoint_families(const WeightedDigraph& g, int alpha, int n);

}  // namespace qp
