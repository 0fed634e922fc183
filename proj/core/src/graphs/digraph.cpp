#include "qpaths/graphs/digraph.hpp"

#include <sstream>
#include <stdexcept>

#include "qpaths/errors.hpp"

namespace qp {

std::optional<std::size_t> WeightedDigraph::find(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].label == label) return i;
    return std::nullopt;
}

std::size_t WeightedDigraph::index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw std::out_of_range("no vertex labeled " + label);
}

const Edge* WeightedDigraph::edge(std::size_t from, std::size_t to) const {
    for (const auto& e : edges)
        if (e.from == from && e.to == to) return &e;
    return nullptr;
}

void WeightedDigraph::add_edge(std::size_t from, std::size_t to, int t_degree, LaurentPoly w, int skeleton) {
    if (from >= size() || to >= size()) throw std::out_of_range("edge endpoint out of range");
    if (t_degree != 0 && t_degree != 1) throw std::invalid_argument("edge t-degree must be 0 or 1");
    if (w.is_zero()) throw std::invalid_argument("edge weight must be nonzero");
    edges.push_back({from, to, t_degree, std::move(w), skeleton});
}

TransferMatrix transfer_matrix(const WeightedDigraph& g) {
    const std::size_t n = g.size();
    TransferMatrix T{Matrix<LaurentPoly>(n, n), Matrix<LaurentPoly>(n, n)};
    for (const auto& e : g.edges) {
        auto& M = e.t_degree == 0 ? T.U : T.D;
        M(e.to, e.from) += e.weight;
    }
    return T;
}

namespace {

// Order in which x = b + U x can be solved one entry at a time.
std::vector<std::size_t> solve_order(const Matrix<LaurentPoly>& U) {
    const std::size_t n = U.rows();
    std::vector<int> pending(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!U(i, j).is_zero()) {
                if (i == j) throw NotNilpotent("t^0 part has a loop");
                ++pending[i];
            }
    std::vector<std::size_t> order, ready;
    for (std::size_t i = n; i-- > 0;)
        if (pending[i] == 0) ready.push_back(i);
    while (!ready.empty()) {
        std::size_t j = ready.back();
        ready.pop_back();
        order.push_back(j);
        for (std::size_t i = n; i-- > 0;)
            if (!U(i, j).is_zero() && --pending[i] == 0) ready.push_back(i);
    }
    if (order.size() != n) throw NotNilpotent("t^0 part has a cycle");
    return order;
}

}  // namespace

std::vector<TSeries> resolvent_column(const TransferMatrix& T, std::size_t j, int N) {
    const std::size_t n = T.size();
    if (j >= n) throw std::out_of_range("resolvent index");
    if (N < 0) throw std::invalid_argument("negative truncation order");
    const auto order = solve_order(T.U);
    auto solve = [&](std::vector<LaurentPoly> x) {
        for (std::size_t k : order)
            for (std::size_t l = 0; l < n; ++l)
                if (!T.U(k, l).is_zero() && !x[l].is_zero()) x[k] += T.U(k, l) * x[l];
        return x;
    };
    std::vector<std::vector<LaurentPoly>> coef(n, std::vector<LaurentPoly>(static_cast<std::size_t>(N) + 1));
    std::vector<LaurentPoly> e(n);
    e[j] = LaurentPoly(1);
    auto X = solve(std::move(e));
    for (int d = 0;; ++d) {
        for (std::size_t k = 0; k < n; ++k) coef[k][d] = X[k];
        if (d == N) break;
        std::vector<LaurentPoly> b(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                if (!T.D(k, l).is_zero() && !X[l].is_zero()) b[k] += T.D(k, l) * X[l];
        X = solve(std::move(b));
    }
    std::vector<TSeries> out;
    out.reserve(n);
    for (auto& c : coef) out.emplace_back(std::move(c), N);
    return out;
}

TSeries resolvent_series(const TransferMatrix& T, std::size_t i, std::size_t j, int N) {
    if (i >= T.size()) throw std::out_of_range("resolvent index");
    return resolvent_column(T, j, N)[i];
}

std::string to_dot(const WeightedDigraph& g, const VarRegistry& reg, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (const auto& v : g.vertices) os << "  \"" << v.label << "\";\n";
    for (const auto& e : g.edges) {
        os << "  \"" << g.vertices[e.from].label << "\" -> \"" << g.vertices[e.to].label << "\" [label=\"t^"
           << e.t_degree << " * " << to_string(e.weight, reg) << "\"";
        if (e.skeleton > 0) os << ", xlabel=\"" << e.skeleton << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::vector<LaurentPoly> symbolic_weights(VarRegistry& reg, int count, const std::string& prefix) {
    std::vector<LaurentPoly> y;
    for (int i = 1; i <= count; ++i) y.push_back(LaurentPoly::variable(reg.intern(prefix + std::to_string(i))));
    return y;
}

}  // namespace qp
