#pragma once

#include <utility>
#include <vector>

#include "qpaths/graphs/digraph.hpp"
#include "qpaths/qsystem/motzkin.hpp"
#include "qpaths/qsystem/weights.hpp"

namespace qp {

// Combinatorial skeleton of Gamma_m, in positions 0..2r+1 of the canonical
// bottom-to-top order. Skeleton edge p (1 <= p <= 2r+1) joins position p to
// parent[p]; extra edges go down from a spine vertex to a lower one.
struct GammaShape {
    int r = 0;
    std::vector<int> parent;  // parent[0] == -1
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> extra;  // (from, to) positions, from above to

    int position_of_spine(int label) const;
    // Position of the primed companion of the spine vertex at position p, or -1.
    int prime_of(int p) const;
    bool is_leaf(int p) const;
};

GammaShape gamma_shape(const MotzkinPath& m);

// y is the skeleton weight list y_1..y_{2r+1}, stored 0-based. Up edges carry
// weight 1 and t-degree 0; the down edge from position p carries t*y_p;
// every extra edge a -> b carries t*y_{a,b}.
WeightedDigraph build_gamma(const MotzkinPath& m, const std::vector<LaurentPoly>& y);
WeightedDigraph build_gamma(const MotzkinPath& m, const WeightSystem& w);

// The graph of the zero path of rank r, also for r = 0 (two vertices).
WeightedDigraph tilde_G(int r, const std::vector<LaurentPoly>& y);

// y_{a,b}(m) for spine labels a > b + 1 joined by an extra edge.
LaurentPoly extra_weight(const MotzkinPath& m, int a, int b, const std::vector<LaurentPoly>& y);
LaurentPoly extra_weight(const MotzkinPath& m, int a, int b, const WeightSystem& w);

// Checks y_{a,b} y_{a',b'} = y_{a,b'} y_{a',b} for every a > a' > b > b' for
// which all four edges exist (skeleton down edges count as y_{b+1,b}).
bool check_intertwining(const MotzkinPath& m, const std::vector<LaurentPoly>& y);

// det(I - T_r(-t y)) on the graph of the zero path of rank r, a polynomial
// in t whose coefficients are the hard-particle partition functions of G_r.
TSeries hard_particle_det(int r, const std::vector<LaurentPoly>& y);

}  // namespace qp
