#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpaths/algebra/matrix.hpp"
#include "qpaths/algebra/series.hpp"
#include "qpaths/laurent/laurent_poly.hpp"

namespace qp {

struct Vertex {
    std::string label;
    int spine = 0;       // integer part of the label
    bool prime = false;  // true for a primed vertex i'
};

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    int t_degree = 0;  // 0 or 1
    LaurentPoly weight{1};
    int skeleton = 0;  // skeleton edge label 1..2r+1, 0 for anything else
};

// Directed graph with weights of the form t^d * w. Vertices are stored in
// canonical order; edges of t-degree 0 are expected to form an acyclic
// subgraph, which resolvent_series checks.
class WeightedDigraph {
public:
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::size_t root = 0;

    std::size_t size() const { return vertices.size(); }
    std::optional<std::size_t> find(const std::string& label) const;
    std::size_t index_of(const std::string& label) const;  // throws std::out_of_range
    // First edge from -> to, if any.
    const Edge* edge(std::size_t from, std::size_t to) const;

    void add_edge(std::size_t from, std::size_t to, int t_degree, LaurentPoly w, int skeleton = 0);
};

// T = U + t D with T(i, j) the total weight of the edges j -> i.
struct TransferMatrix {
    Matrix<LaurentPoly> U;
    Matrix<LaurentPoly> D;

    std::size_t size() const { return U.rows(); }
};

TransferMatrix transfer_matrix(const WeightedDigraph& g);

// Coefficients t^0..t^N of ((I - T)^{-1})_{i,j}. The t^0 part must be
// nilpotent (NotNilpotent otherwise).
TSeries resolvent_series(const TransferMatrix& T, std::size_t i, std::size_t j, int N);
// The whole column j: entry k is ((I - T)^{-1})_{k,j}.
std::vector<TSeries> resolvent_column(const TransferMatrix& T, std::size_t j, int N);

// Graphviz text. Edge labels read "t^d * w" in the Laurent text syntax.
std::string to_dot(const WeightedDigraph& g, const VarRegistry& reg, const std::string& name = "G");

// Monomials y1..yk interned in reg under the given prefix, returned 0-based.
std::vector<LaurentPoly> symbolic_weights(VarRegistry& reg, int count, const std::string& prefix = "y");

}  // namespace qp
