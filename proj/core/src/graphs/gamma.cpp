#include "qpaths/graphs/gamma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qpaths/algebra/determinant.hpp"
#include "qpaths/errors.hpp"

namespace qp {

int GammaShape::position_of_spine(int label) const {
    for (std::size_t p = 0; p < vertices.size(); ++p)
        if (!vertices[p].prime && vertices[p].spine == label) return static_cast<int>(p);
    throw std::out_of_range("no spine vertex " + std::to_string(label));
}

int GammaShape::prime_of(int p) const {
    if (p + 1 < static_cast<int>(vertices.size()) && vertices[p + 1].prime && parent[p + 1] == p) return p + 1;
    return -1;
}

bool GammaShape::is_leaf(int p) const {
    return std::find(parent.begin(), parent.end(), p) == parent.end();
}

GammaShape gamma_shape(const MotzkinPath& m) {
    const int r = m.rank();
    // Maximal strictly descending runs (alpha, length), 0-based alpha.
    std::vector<std::pair<int, int>> segs;
    for (int a = 0; a < r;) {
        int k = 1;
        while (a + k < r && m.at(a + k + 1) == m.at(a + k) - 1) ++k;
        segs.emplace_back(a, k);
        a += k;
    }

    // Build the tree with provisional node ids, then relabel.
    int count = 0;
    std::map<int, int> parent;  // child -> parent
    std::vector<std::pair<int, int>> extra;
    int prev_top1 = -1, prev_top2 = -1;
    bool prev_flat = false;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        const int k = segs[s].second;
        std::vector<int> spine(static_cast<std::size_t>(k) + 3);
        if (s == 0) {
            spine[0] = count++;
            spine[1] = count++;
            parent[spine[1]] = spine[0];
        } else if (prev_flat) {
            spine[0] = prev_top2;
            spine[1] = prev_top1;
        } else {
            spine[0] = prev_top1;
            spine[1] = prev_top2;
        }
        for (int j = 2; j <= k + 1; ++j) {
            spine[j] = count++;
            parent[spine[j]] = spine[j - 1];
        }
        for (int j = 2; j <= k; ++j) parent[count++] = spine[j];
        spine[k + 2] = count++;
        parent[spine[k + 2]] = spine[k + 1];
        for (int a = 3; a <= k + 1; ++a)
            for (int b = 1; b <= a - 2; ++b) extra.emplace_back(spine[a], spine[b]);
        if (s + 1 < segs.size()) {
            const int next = segs[s + 1].first;  // 0-based alpha of the next run
            prev_flat = m.at(next + 1) == m.at(next);
            prev_top1 = spine[k + 1];
            prev_top2 = spine[k + 2];
        }
    }
    if (count != 2 * r + 2) throw std::logic_error("gamma_shape: unexpected vertex count");

    std::vector<std::vector<int>> children(static_cast<std::size_t>(count));
    for (auto [c, p] : parent) children[p].push_back(c);
    // Walk up from the root: a spine vertex, then its leaf child if it has
    // two children, then the continuing child.
    std::vector<int> order;
    for (int v = 0;;) {
        order.push_back(v);
        const auto& ch = children[v];
        if (ch.empty()) break;
        int cont = ch[0];
        if (ch.size() == 2) {
            int leaf = children[ch[0]].empty() ? ch[0] : ch[1];
            cont = leaf == ch[0] ? ch[1] : ch[0];
            order.push_back(leaf);
        } else if (ch.size() > 2) {
            throw std::logic_error("gamma_shape: vertex with three children");
        }
        v = cont;
    }
    std::vector<int> pos(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pos[order[i]] = i;

    GammaShape g;
    g.r = r;
    g.parent.assign(static_cast<std::size_t>(count), -1);
    for (auto [c, p] : parent) g.parent[pos[c]] = pos[p];
    g.vertices.resize(static_cast<std::size_t>(count));
    int label = -1;
    for (int i = 0; i < count; ++i) {
        const bool leaf = children[order[i]].empty();
        const bool prime = leaf && i + 1 < count;
        if (!prime) ++label;
        g.vertices[i] = {std::to_string(label) + (prime ? "'" : ""), label, prime};
    }
    for (auto [a, b] : extra) g.extra.emplace_back(pos[a], pos[b]);
    std::sort(g.extra.begin(), g.extra.end());
    return g;
}

namespace {

// Weight of the spine walk from position a down to position b: product of
// the down weights along the way over the primed weights strictly between.
LaurentPoly spine_weight(const GammaShape& g, int a, int b, const std::vector<LaurentPoly>& y) {
    LaurentPoly num(1), den(1);
    int v = a;
    while (v != b) {
        if (v < 0) throw std::invalid_argument("vertices are not on one spine chain");
        num *= y.at(static_cast<std::size_t>(v - 1));
        const int p = g.parent[v];
        if (p != b) {
            const int q = g.prime_of(p);
            if (q < 0) throw std::invalid_argument("intermediate spine vertex without a primed companion");
            den *= y.at(static_cast<std::size_t>(q - 1));
        }
        v = p;
    }
    auto q = try_exact_div(num, den);
    if (!q || !q->is_monomial()) throw NotMonomial("extra weight is not a Laurent monomial");
    return *q;
}

void check_weight_count(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    if (static_cast<int>(y.size()) != 2 * m.rank() + 1)
        throw std::invalid_argument("expected 2r+1 skeleton weights");
}

}  // namespace

WeightedDigraph build_gamma(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    check_weight_count(m, y);
    const GammaShape s = gamma_shape(m);
    WeightedDigraph g;
    g.vertices = s.vertices;
    g.root = 0;
    for (std::size_t p = 1; p < s.vertices.size(); ++p) {
        const auto q = static_cast<std::size_t>(s.parent[p]);
        g.add_edge(q, p, 0, LaurentPoly(1), static_cast<int>(p));
        g.add_edge(p, q, 1, y[p - 1], static_cast<int>(p));
    }
    for (auto [a, b] : s.extra)
        g.add_edge(static_cast<std::size_t>(a), static_cast<std::size_t>(b), 1, spine_weight(s, a, b, y));
    return g;
}

WeightedDigraph build_gamma(const MotzkinPath& m, const WeightSystem& w) { return build_gamma(m, w.y); }

WeightedDigraph tilde_G(int r, const std::vector<LaurentPoly>& y) {
    if (r < 0) throw std::invalid_argument("negative rank");
    if (r >= 1) return build_gamma(MotzkinPath::zero(r), y);
    if (y.size() != 1) throw std::invalid_argument("expected one weight for r = 0");
    WeightedDigraph g;
    g.vertices = {{"0", 0, false}, {"1", 1, false}};
    g.add_edge(0, 1, 0, LaurentPoly(1), 1);
    g.add_edge(1, 0, 1, y[0], 1);
    return g;
}

LaurentPoly extra_weight(const MotzkinPath& m, int a, int b, const std::vector<LaurentPoly>& y) {
    check_weight_count(m, y);
    const GammaShape s = gamma_shape(m);
    const int pa = s.position_of_spine(a), pb = s.position_of_spine(b);
    if (std::find(s.extra.begin(), s.extra.end(), std::make_pair(pa, pb)) == s.extra.end())
        throw std::invalid_argument("no extra edge " + std::to_string(a) + " -> " + std::to_string(b));
    return spine_weight(s, pa, pb, y);
}

LaurentPoly extra_weight(const MotzkinPath& m, int a, int b, const WeightSystem& w) {
    return extra_weight(m, a, b, w.y);
}

bool check_intertwining(const MotzkinPath& m, const std::vector<LaurentPoly>& y) {
    check_weight_count(m, y);
    const GammaShape s = gamma_shape(m);
    // Down edges between spine vertices, keyed by spine labels.
    std::map<std::pair<int, int>, LaurentPoly> w;
    for (std::size_t p = 1; p < s.vertices.size(); ++p) {
        const int q = s.parent[p];
        if (!s.vertices[p].prime && !s.vertices[q].prime)
            w[{s.vertices[p].spine, s.vertices[q].spine}] = y[p - 1];
    }
    for (auto [a, b] : s.extra) w[{s.vertices[a].spine, s.vertices[b].spine}] = spine_weight(s, a, b, y);
    for (const auto& [e1, w1] : w)
        for (const auto& [e2, w2] : w) {
            auto [a, b] = e1;
            auto [a2, b2] = e2;
            if (!(a > a2 && a2 > b && b > b2)) continue;
            auto x = w.find({a, b2}), z = w.find({a2, b});
            if (x == w.end() || z == w.end()) continue;
            if (!(w1 * w2 == x->second * z->second)) return false;
        }
    return true;
}

TSeries hard_particle_det(int r, const std::vector<LaurentPoly>& y) {
    const TransferMatrix T = transfer_matrix(tilde_G(r, y));
    const std::size_t n = T.size();
    Matrix<TSeries> A(n, n);
    const TSeries t = TSeries::monomial(LaurentPoly(1), 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            TSeries e = (i == j) ? TSeries(1) : TSeries(0);
            e -= TSeries(T.U(i, j));
            e += t * TSeries(T.D(i, j));
            A(i, j) = std::move(e);
        }
    return berkowitz_det(A);
}

}  // namespace qp
