#include "qpaths/graphs/paths.hpp"

#include <set>
#include <stdexcept>

#include "qpaths/algebra/determinant.hpp"
#include "qpaths/graphs/gamma.hpp"
#include "qpaths/qsystem/weights.hpp"

namespace qp {

namespace {

std::vector<std::vector<const Edge*>> out_edges(const WeightedDigraph& g) {
    std::vector<std::vector<const Edge*>> out(g.size());
    for (const auto& e : g.edges) out[e.from].push_back(&e);
    return out;
}

}  // namespace

std::vector<WeightedPath> enumerate_paths(const WeightedDigraph& g, std::size_t from, std::size_t to, int n_down) {
    if (from >= g.size() || to >= g.size()) throw std::out_of_range("enumerate_paths: vertex out of range");
    if (n_down < 0) return {};
    // Guards against cycles of t-degree 0, which would make the walk set infinite.
    (void)resolvent_series(transfer_matrix(g), 0, 0, 0);
    const auto out = out_edges(g);
    std::vector<WeightedPath> result;
    WeightedPath cur{{from}, LaurentPoly(1)};
    auto dfs = [&](auto&& self, std::size_t v, int left) -> void {
        if (v == to && left == 0) result.push_back(cur);
        for (const Edge* e : out[v]) {
            if (e->t_degree > left) continue;
            LaurentPoly saved = cur.weight;
            cur.vertices.push_back(e->to);
            cur.weight *= e->weight;
            self(self, e->to, left - e->t_degree);
            cur.vertices.pop_back();
            cur.weight = std::move(saved);
        }
    };
    dfs(dfs, from, n_down);
    return result;
}

LaurentPoly path_sum(const std::vector<WeightedPath>& paths) {
    LaurentPoly s;
    for (const auto& p : paths) s += p.weight;
    return s;
}

LaurentPoly lgv_R(const Seed& seed, int alpha, int n) {
    if (alpha < 1) throw std::invalid_argument("lgv_R: alpha must be positive");
    if (n < alpha - 1) throw std::invalid_argument("lgv_R: need n >= alpha - 1");
    const WeightSystem w = weights_from_seed(seed);
    const TSeries Z = resolvent_series(transfer_matrix(build_gamma(seed.path(), w)), 0, 0, n + alpha - 1);
    Matrix<LaurentPoly> H(static_cast<std::size_t>(alpha), static_cast<std::size_t>(alpha));
    for (int i = 1; i <= alpha; ++i)
        for (int j = 1; j <= alpha; ++j) H(i - 1, j - 1) = Z[static_cast<std::size_t>(n + i + j - alpha - 1)];
    return bareiss_det(std::move(H));
}

DisjointFamilies vertex_disjoint_families(const WeightedDigraph& g, int alpha, int n) {
    if (alpha < 1 || n < alpha - 1) throw std::invalid_argument("vertex_disjoint_families: need n >= alpha - 1 >= 0");
    const auto out = out_edges(g);
    for (const auto& e : g.edges)
        if (e.skeleton == 0)
            throw std::invalid_argument("vertex_disjoint_families: graph has level-skipping edges");

    // All root-to-root walks with a given number of steps, as vertex lists.
    auto walks = [&](int steps) {
        std::vector<WeightedPath> res;
        WeightedPath cur{{g.root}, LaurentPoly(1)};
        auto dfs = [&](auto&& self, std::size_t v, int left) -> void {
            if (left == 0) {
                if (v == g.root) res.push_back(cur);
                return;
            }
            for (const Edge* e : out[v]) {
                LaurentPoly saved = cur.weight;
                cur.vertices.push_back(e->to);
                cur.weight *= e->weight;
                self(self, e->to, left - 1);
                cur.vertices.pop_back();
                cur.weight = std::move(saved);
            }
        };
        dfs(dfs, g.root, steps);
        return res;
    };

    std::vector<std::vector<WeightedPath>> cand;
    std::vector<int> start;
    for (int i = 1; i <= alpha; ++i) {
        start.push_back(2 * (alpha - i));
        cand.push_back(walks(2 * (n + i - 1) - 2 * (alpha - i)));
    }
    DisjointFamilies result;
    std::set<std::pair<int, std::size_t>> used;
    auto choose = [&](auto&& self, int i, const LaurentPoly& w) -> void {
        if (i == alpha) {
            ++result.count;
            result.weight += w;
            return;
        }
        for (const auto& p : cand[i]) {
            bool clash = false;
            for (std::size_t s = 0; s < p.vertices.size() && !clash; ++s)
                clash = used.count({start[i] + static_cast<int>(s), p.vertices[s]}) > 0;
            if (clash) continue;
            for (std::size_t s = 0; s < p.vertices.size(); ++s) used.insert({start[i] + static_cast<int>(s), p.vertices[s]});
            self(self, i + 1, w * p.weight);
            for (std::size_t s = 0; s < p.vertices.size(); ++s) used.erase({start[i] + static_cast<int>(s), p.vertices[s]});
        }
    };
    choose(choose, 0, LaurentPoly(1));
    return result;
}

}  // namespace qp
