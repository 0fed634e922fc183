#include "qpaths/graphs/continued_fraction.hpp"

#include <stdexcept>

#include "qpaths/errors.hpp"

namespace qp {

namespace {

CFTerm times(const CFTerm& a, const CFTerm& b) { return {a.t_degree + b.t_degree, a.weight * b.weight}; }

FSeries term_series(const std::vector<CFTerm>& terms, int N) {
    FSeries s(std::vector<Fraction>{}, N);
    for (const auto& t : terms)
        if (t.t_degree <= N) s += FSeries::monomial(t.weight, t.t_degree, N);
    return s;
}

Fraction checked(Fraction f, bool require_laurent) {
    if (require_laurent && !f.is_laurent()) throw NonExactWeight("rearranged weight is not a Laurent polynomial");
    return f;
}

}  // namespace

ContinuedFraction stieltjes_cf(const std::vector<Fraction>& y) {
    ContinuedFraction cf;
    for (const auto& w : y) cf.levels.push_back({{}, {{1, w}}});
    if (!y.empty()) cf.levels.push_back({});
    return cf;
}

ContinuedFraction continued_fraction(int r, const std::vector<Fraction>& y) {
    if (r < 0 || static_cast<int>(y.size()) != 2 * r + 1)
        throw std::invalid_argument("continued_fraction: need 2r+1 weights");
    if (r == 0) return stieltjes_cf(y);
    ContinuedFraction cf;
    cf.levels.push_back({{}, {{1, y[0]}}});
    ContinuedFraction rest = jacobi_cf(r - 1, std::vector<Fraction>(y.begin() + 2, y.end()));
    cf.levels.push_back({{}, {{1, y[1]}}});
    cf.levels.insert(cf.levels.end(), rest.levels.begin(), rest.levels.end());
    return cf;
}

ContinuedFraction jacobi_cf(int r, const std::vector<Fraction>& y) {
    if (r < 0 || static_cast<int>(y.size()) != 2 * r + 1) throw std::invalid_argument("jacobi_cf: need 2r+1 weights");
    ContinuedFraction cf;
    for (int i = 1; i <= r + 1; ++i) {
        CFLevel l;
        l.constant.push_back({1, y[2 * i - 2]});
        if (i <= r) l.descent.push_back({1, y[2 * i - 1]});
        cf.levels.push_back(std::move(l));
    }
    return cf;
}

FSeries eval_cf_fraction(const ContinuedFraction& cf, int N) {
    if (N < 0) throw std::invalid_argument("negative truncation order");
    FSeries V(std::vector<Fraction>{Fraction(1)}, N);
    for (std::size_t k = cf.levels.size(); k-- > 0;) {
        const auto& l = cf.levels[k];
        FSeries den = FSeries(std::vector<Fraction>{Fraction(1)}, N) - term_series(l.constant, N);
        if (!l.descent.empty()) den -= term_series(l.descent, N) * V;
        V = den.inverse(N);
    }
    return term_series(cf.head_constant, N) + term_series({cf.head_scale}, N) * V;
}

TSeries eval_cf(const ContinuedFraction& cf, int N) {
    FSeries f = eval_cf_fraction(cf, N);
    std::vector<LaurentPoly> c;
    for (const auto& x : f.coefficients()) c.push_back(x.to_laurent());
    return TSeries(std::move(c), N);
}

ContinuedFraction rearrange_R1(const ContinuedFraction& cf, std::size_t level) {
    if (level >= cf.levels.size()) throw std::out_of_range("rearrange_R1: no such level");
    const CFLevel& here = cf.levels[level];
    if (!here.constant.empty() || here.descent.size() != 1)
        throw std::invalid_argument("rearrange_R1: level must be 1/(1 - a/(1 - b))");
    const CFTerm a = here.descent.front();

    ContinuedFraction out;
    out.head_constant = cf.head_constant;
    out.head_scale = cf.head_scale;
    out.levels.assign(cf.levels.begin(), cf.levels.begin() + static_cast<std::ptrdiff_t>(level));

    // V_level = 1 + a V' where V' = 1/(1 - a - b).
    CFLevel merged;
    merged.constant.push_back(a);
    if (level + 1 < cf.levels.size()) {
        const CFLevel& next = cf.levels[level + 1];
        merged.constant.insert(merged.constant.end(), next.constant.begin(), next.constant.end());
        merged.descent = next.descent;
    }
    if (level == 0) {
        out.head_constant.push_back(out.head_scale);
        out.head_scale = times(out.head_scale, a);
    } else {
        CFLevel& parent = out.levels.back();
        if (parent.descent.empty()) throw std::invalid_argument("rearrange_R1: level is unreachable");
        parent.constant.push_back(parent.descent.front());
        parent.descent.front() = times(parent.descent.front(), a);
    }
    out.levels.push_back(std::move(merged));
    if (level + 2 < cf.levels.size())
        out.levels.insert(out.levels.end(), cf.levels.begin() + static_cast<std::ptrdiff_t>(level + 2), cf.levels.end());
    return out;
}

ContinuedFraction rearrange_R2(const ContinuedFraction& cf, std::size_t level, bool require_laurent) {
    if (level + 2 != cf.levels.size()) throw std::invalid_argument("rearrange_R2: level must be next to last");
    const CFLevel& here = cf.levels[level];
    const CFLevel& last = cf.levels[level + 1];
    if (here.constant.size() != 1 || here.descent.size() != 1 || last.constant.size() != 1 || !last.descent.empty())
        throw std::invalid_argument("rearrange_R2: levels must read a + b/(1 - c)");
    const CFTerm& a = here.constant.front();
    const CFTerm& b = here.descent.front();
    const CFTerm& c = last.constant.front();
    if (a.t_degree != b.t_degree) throw std::invalid_argument("rearrange_R2: a and b differ in t-degree");
    const Fraction s = a.weight + b.weight;
    if (s.is_zero()) throw NonExactWeight("rearrange_R2: a + b vanishes");

    ContinuedFraction out = cf;
    out.levels.resize(level);
    const CFTerm a2{a.t_degree, checked(s, require_laurent)};
    const CFTerm b2{b.t_degree + c.t_degree - a.t_degree, checked(b.weight * c.weight / s, require_laurent)};
    const CFTerm c2{c.t_degree, checked(a.weight * c.weight / s, require_laurent)};
    out.levels.push_back({{}, {a2}});
    out.levels.push_back({{}, {b2}});
    out.levels.push_back({{}, {c2}});
    return out;
}

std::vector<Fraction> mutate_weights(const MotzkinPath& m, int alpha, const std::vector<Fraction>& y) {
    const int r = m.rank();
    if (alpha < 1 || alpha > r) throw std::out_of_range("mutate_weights: alpha out of range");
    if (static_cast<int>(y.size()) != 2 * r + 1) throw std::invalid_argument("mutate_weights: need 2r+1 weights");
    const int ma = m.at(alpha);
    if (alpha > 1 && m.at(alpha - 1) != ma) throw CaseMismatch("mutate_weights: m_{alpha-1} != m_alpha");
    bool rescale_next = false;
    if (alpha < r) {
        if (m.at(alpha + 1) == ma) rescale_next = true;
        else if (m.at(alpha + 1) != ma + 1) throw CaseMismatch("mutate_weights: m_{alpha+1} < m_alpha");
    }
    auto at = [&](int i) -> const Fraction& { return y[static_cast<std::size_t>(i - 1)]; };
    const Fraction a = at(2 * alpha - 1), b = at(2 * alpha), c = at(2 * alpha + 1);
    const Fraction s = a + b;
    std::vector<Fraction> out = y;
    out[2 * alpha - 2] = s;
    out[2 * alpha - 1] = b * c / s;
    out[2 * alpha] = a * c / s;
    if (rescale_next) out[2 * alpha + 1] = at(2 * alpha + 2) * a / s;
    return out;
}

}  // namespace qp
