#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpaths/graphs/digraph.hpp"
#include "qpaths/qsystem/motzkin.hpp"
#include "qpaths/qsystem/seed.hpp"

namespace qp {

// A graph on the vertices 1..r+1 (stored 0..r) with a loop at every vertex.
// When produced by compactify, `merge` lists for every compact vertex the
// two labels of Gamma_m that were identified into it.
struct CompactGraph {
    WeightedDigraph graph;
    std::vector<std::pair<std::string, std::string>> merge;

    TransferMatrix transfer() const { return transfer_matrix(graph); }
};

// Identifies the vertices at positions 2k and 2k+1 of Gamma_m into vertex
// k+1, turns the resulting double edges into loops, and adds the signed
// ascending edges that compensate each maximal run of vertical pairs.
CompactGraph compactify(const WeightedDigraph& gamma);

// The same graph built from the path: the compact chain with loops t*y_{2i-1},
// descents t*y_{2i} and unit ascents, plus the descending edges of every
// descending segment and the signed ascending edges of every ascending one.
CompactGraph build_gamma_prime_direct(const MotzkinPath& m, const std::vector<LaurentPoly>& y);

// Plain-text merge map, one "k: a ~ b" line per compact vertex.
std::string merge_map_text(const CompactGraph& g);

// The vertical chain on 0..2k+1 with down weights y_1..y_{2k+1}, and its
// compactified form on 0..k+1.
WeightedDigraph build_H_tilde(int k, const std::vector<LaurentPoly>& y);
WeightedDigraph build_H_tilde_prime(int k, const std::vector<LaurentPoly>& y);

// Compares the root resolvents of the two graphs above to order N, both by
// the series solve and by enumerating walks.
bool verify_hk_lemma(int k, const std::vector<LaurentPoly>& y, int N);

// ((I - T_m)^{-1})_{1,1} on Gamma_m against ((I - T'_m)^{-1})_{1,1} on the
// compact graph, coefficient by coefficient up to t^N. The first form uses
// the given skeleton weights, the second the weights of the seed x_m.
bool verify_resolvent_equality(const MotzkinPath& m, const std::vector<LaurentPoly>& y, int N);
bool verify_resolvent_equality(const MotzkinPath& m, int N);

// R_{1,n+1} in the seed of the zero path, as the explicit multinomial sum
// over (p_1..p_{2r+1}) with total n.
LaurentPoly closed_expansion_m0(const Seed& seed, int n);

}  // namespace qp
