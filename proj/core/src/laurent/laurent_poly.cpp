#include "qpaths/laurent/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qpaths/errors.hpp"

namespace qp {

// ---------------------------------------------------------------- registry

VarId VarRegistry::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<VarId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<VarId> VarRegistry::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& VarRegistry::name(VarId id) const {
    if (id >= names_.size()) throw std::out_of_range("unknown variable id " + std::to_string(id));
    return names_[id];
}

// ---------------------------------------------------------------- helpers

namespace {

// Lexicographic comparison of two exponent slices of equal width.
inline int lex_cmp(const Exponent* a, const Exponent* b, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline std::uint64_t slice_hash(const Exponent* e, std::size_t w) {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < w; ++i) {
        h ^= static_cast<std::uint32_t>(e[i]);
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return h;
}

// Open-addressing accumulator keyed by exponent vectors. Used by
// multiplication and substitution, where many products collide.
class TermAccumulator {
public:
    explicit TermAccumulator(std::size_t width, std::size_t expected = 16) : w_(width) {
        std::size_t cap = 16;
        while (cap < 2 * expected) cap <<= 1;
        table_.assign(cap, kEmpty);
        exps_.reserve(expected * w_);
        coefs_.reserve(expected);
    }

    // Adds c1*c2 to the coefficient of `key`.
    void add_product(const Exponent* key, const mpz_class& c1, const mpz_class& c2) {
        std::size_t idx = slot_for(key);
        mpz_addmul(coefs_[idx].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
    }
    void add(const Exponent* key, const mpz_class& c) {
        std::size_t idx = slot_for(key);
        coefs_[idx] += c;
    }

    LaurentPoly finish() {
        return LaurentPoly::from_terms(w_, std::move(exps_), std::move(coefs_));
    }

private:
    static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();
    std::size_t w_;
    std::vector<std::uint32_t> table_;
    std::vector<Exponent> exps_;
    std::vector<mpz_class> coefs_;

    std::size_t slot_for(const Exponent* key) {
        if (2 * (coefs_.size() + 1) > table_.size()) grow();
        std::size_t mask = table_.size() - 1;
        std::size_t pos = slice_hash(key, w_) & mask;
        while (true) {
            std::uint32_t idx = table_[pos];
            if (idx == kEmpty) {
                table_[pos] = static_cast<std::uint32_t>(coefs_.size());
                exps_.insert(exps_.end(), key, key + w_);
                coefs_.emplace_back(0);
                return coefs_.size() - 1;
            }
            if (w_ == 0 || std::memcmp(exps_.data() + idx * w_, key, w_ * sizeof(Exponent)) == 0) {
                return idx;
            }
            pos = (pos + 1) & mask;
        }
    }

    void grow() {
        std::vector<std::uint32_t> fresh(table_.size() * 2, kEmpty);
        std::size_t mask = fresh.size() - 1;
        for (std::uint32_t idx = 0; idx < coefs_.size(); ++idx) {
            std::size_t pos = slice_hash(exps_.data() + idx * w_, w_) & mask;
            while (fresh[pos] != kEmpty) pos = (pos + 1) & mask;
            fresh[pos] = idx;
        }
        table_.swap(fresh);
    }
};

// Holds either a reference to the original polynomial or a widened copy.
class Widened {
public:
    Widened(const LaurentPoly& p, std::size_t w) : ref_(&p) {
        if (p.width() < w) {
            copy_ = p.widened_copy(w);
            ref_ = &copy_;
        }
    }
    const LaurentPoly& operator*() const { return *ref_; }
    const LaurentPoly* operator->() const { return ref_; }

private:
    const LaurentPoly* ref_;
    LaurentPoly copy_;
};

}  // namespace

// ---------------------------------------------------------------- basics

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coefs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
    if (c != 0) coefs_.push_back(c);
}

LaurentPoly LaurentPoly::variable(VarId v, Exponent e) {
    return monomial(1, {{v, e}});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c,
                                  const std::vector<std::pair<VarId, Exponent>>& exps) {
    if (c == 0) return {};
    std::size_t w = 0;
    for (auto& [v, e] : exps) w = std::max<std::size_t>(w, v + 1);
    std::vector<Exponent> ex(w, 0);
    for (auto& [v, e] : exps) ex[v] += e;
    return from_terms(w, std::move(ex), {c});
}

LaurentPoly LaurentPoly::from_terms(std::size_t width, std::vector<Exponent> exps,
                                    std::vector<mpz_class> coefs) {
    const std::size_t n = coefs.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    const Exponent* base = exps.data();
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return lex_cmp(base + a * width, base + b * width, width) > 0;
    });
    LaurentPoly out;
    out.nv_ = width;
    out.exps_.reserve(n * width);
    out.coefs_.reserve(n);
    for (std::size_t k = 0; k < n;) {
        std::uint32_t i = order[k];
        mpz_class c = std::move(coefs[i]);
        std::size_t l = k + 1;
        while (l < n && lex_cmp(base + order[l] * width, base + i * width, width) == 0) {
            c += coefs[order[l]];
            ++l;
        }
        if (c != 0) {
            out.exps_.insert(out.exps_.end(), base + i * width, base + (i + 1) * width);
            out.coefs_.push_back(std::move(c));
        }
        k = l;
    }
    out.trim_width();
    return out;
}

void LaurentPoly::trim_width() {
    std::size_t used = 0;
    const std::size_t n = coefs_.size();
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t v = nv_; v > used; --v) {
            if (exps_[t * nv_ + v - 1] != 0) {
                used = v;
                break;
            }
        }
    }
    if (used == nv_) return;
    std::vector<Exponent> fresh(n * used);
    for (std::size_t t = 0; t < n; ++t) {
        std::copy_n(exps_.begin() + t * nv_, used, fresh.begin() + t * used);
    }
    exps_.swap(fresh);
    nv_ = used;
}

LaurentPoly LaurentPoly::widened_copy(std::size_t w) const {
    if (w <= nv_) return *this;
    LaurentPoly out;
    out.nv_ = w;
    out.coefs_ = coefs_;
    out.exps_.assign(coefs_.size() * w, 0);
    for (std::size_t t = 0; t < coefs_.size(); ++t) {
        std::copy_n(exps_.begin() + t * nv_, nv_, out.exps_.begin() + t * w);
    }
    return out;
}

bool LaurentPoly::is_constant() const {
    return coefs_.empty() || (coefs_.size() == 1 && nv_ == 0);
}

mpz_class LaurentPoly::constant_term() const {
    for (std::size_t t = 0; t < coefs_.size(); ++t) {
        bool zero = true;
        for (std::size_t v = 0; v < nv_ && zero; ++v) zero = exps_[t * nv_ + v] == 0;
        if (zero) return coefs_[t];
    }
    return 0;
}

std::vector<VarId> LaurentPoly::variables() const {
    std::vector<VarId> out;
    for (std::size_t v = 0; v < nv_; ++v) {
        for (std::size_t t = 0; t < coefs_.size(); ++t) {
            if (exps_[t * nv_ + v] != 0) {
                out.push_back(static_cast<VarId>(v));
                break;
            }
        }
    }
    return out;
}

Exponent LaurentPoly::min_exponent(VarId v) const {
    Exponent m = std::numeric_limits<Exponent>::max();
    for (std::size_t t = 0; t < coefs_.size(); ++t) m = std::min(m, exponent(t, v));
    return coefs_.empty() ? 0 : m;
}

Exponent LaurentPoly::max_exponent(VarId v) const {
    Exponent m = std::numeric_limits<Exponent>::min();
    for (std::size_t t = 0; t < coefs_.size(); ++t) m = std::max(m, exponent(t, v));
    return coefs_.empty() ? 0 : m;
}

LaurentPoly LaurentPoly::lowest_monomial() const {
    std::vector<std::pair<VarId, Exponent>> ex;
    for (std::size_t v = 0; v < nv_; ++v) ex.emplace_back(static_cast<VarId>(v), min_exponent(v));
    return monomial(1, ex);
}

std::size_t LaurentPoly::hash() const {
    std::uint64_t h = slice_hash(exps_.data(), exps_.size());
    for (auto& c : coefs_) h = h * 31 + mpz_get_ui(c.get_mpz_t()) + (sgn(c) < 0 ? 7 : 0);
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- arithmetic

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& c : out.coefs_) c = -c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero()) return b0;
    if (b0.is_zero()) return a0;
    const std::size_t w = std::max(a0.nv_, b0.nv_);
    Widened wa(a0, w), wb(b0, w);
    const LaurentPoly& a = *wa;
    const LaurentPoly& b = *wb;
    LaurentPoly out;
    out.nv_ = w;
    out.exps_.reserve((a.size() + b.size()) * w);
    out.coefs_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto push = [&](const LaurentPoly& p, std::size_t t, mpz_class c) {
        out.exps_.insert(out.exps_.end(), p.exps_.begin() + t * w, p.exps_.begin() + (t + 1) * w);
        out.coefs_.push_back(std::move(c));
    };
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i == a.size()) cmp = -1;
        else if (j == b.size()) cmp = 1;
        else cmp = lex_cmp(a.exps_.data() + i * w, b.exps_.data() + j * w, w);
        if (cmp > 0) {
            push(a, i, a.coefs_[i]);
            ++i;
        } else if (cmp < 0) {
            push(b, j, b.coefs_[j]);
            ++j;
        } else {
            mpz_class c = a.coefs_[i] + b.coefs_[j];
            if (c != 0) push(a, i, std::move(c));
            ++i;
            ++j;
        }
    }
    out.trim_width();
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = *this + o; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = *this - o; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::times_term(const LaurentPoly& m) const {
    // Multiplying by a single term preserves the (translation invariant)
    // lexicographic order, so no sorting is needed.
    const std::size_t w = std::max(nv_, m.nv_);
    LaurentPoly a = widened_copy(w);
    LaurentPoly mm = m.widened_copy(w);
    for (std::size_t t = 0; t < a.size(); ++t) {
        for (std::size_t v = 0; v < w; ++v) a.exps_[t * w + v] += mm.exps_[v];
        a.coefs_[t] *= mm.coefs_[0];
    }
    a.trim_width();
    return a;
}

LaurentPoly operator*(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return {};
    if (b0.size() == 1) return a0.times_term(b0);
    if (a0.size() == 1) return b0.times_term(a0);
    const std::size_t w = std::max(a0.nv_, b0.nv_);
    Widened wa(a0, w), wb(b0, w);
    const LaurentPoly& a = *wa;
    const LaurentPoly& b = *wb;
    if (auto fast = LaurentPoly::mul_packed(a, b)) return std::move(*fast);
    TermAccumulator acc(w, std::max(a.size(), b.size()) * 4);
    std::vector<Exponent> key(w);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Exponent* ea = a.exps_.data() + i * w;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Exponent* eb = b.exps_.data() + j * w;
            for (std::size_t v = 0; v < w; ++v) key[v] = ea[v] + eb[v];
            acc.add_product(key.data(), a.coefs_[i], b.coefs_[j]);
        }
    }
    return acc.finish();
}

LaurentPoly LaurentPoly::pow(Exponent e) const {
    if (e < 0) {
        if (!is_monomial() || (coefs_[0] != 1 && coefs_[0] != -1)) {
            throw NotDivisible("negative power of a non-unit Laurent polynomial");
        }
        LaurentPoly inv = *this;
        for (auto& x : inv.exps_) x = -x;
        return inv.pow(-e);
    }
    LaurentPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::rename(const std::map<VarId, VarId>& mapping) const {
    std::size_t w = nv_;
    for (auto& [from, to] : mapping) {
        if (from < nv_) w = std::max<std::size_t>(w, to + 1);
    }
    std::vector<Exponent> ex(coefs_.size() * w, 0);
    for (std::size_t t = 0; t < coefs_.size(); ++t) {
        for (std::size_t v = 0; v < nv_; ++v) {
            Exponent e = exps_[t * nv_ + v];
            if (e == 0) continue;
            auto it = mapping.find(static_cast<VarId>(v));
            VarId target = it == mapping.end() ? static_cast<VarId>(v) : it->second;
            ex[t * w + target] += e;
        }
    }
    return from_terms(w, std::move(ex), coefs_);
}

// ---------------------------------------------------------------- division

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a0, const LaurentPoly& b0) {
    if (b0.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (a0.is_zero()) return LaurentPoly{};

    if (b0.is_monomial()) {
        const mpz_class& lc = b0.coefs_[0];
        for (auto& c : a0.coefs_) {
            if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        }
        const std::size_t w = std::max(a0.nv_, b0.nv_);
        LaurentPoly q = a0.widened_copy(w);
        LaurentPoly m = b0.widened_copy(w);
        for (std::size_t t = 0; t < q.size(); ++t) {
            for (std::size_t v = 0; v < w; ++v) q.exps_[t * w + v] -= m.exps_[v];
            mpz_divexact(q.coefs_[t].get_mpz_t(), q.coefs_[t].get_mpz_t(), lc.get_mpz_t());
        }
        q.trim_width();
        return q;
    }

    // Leading-term elimination in heap form: the products q_i * b_j that
    // are still owed to the remainder are merged lazily, one active entry
    // per quotient term.
    const std::size_t w = std::max(a0.nv_, b0.nv_);
    Widened wa(a0, w), wb(b0, w);
    const LaurentPoly& a = *wa;
    const LaurentPoly& b = *wb;
    bool not_divisible = false;
    if (auto fast = LaurentPoly::div_packed(a, b, not_divisible)) return fast;
    if (not_divisible) return std::nullopt;
    const std::size_t nb = b.size();
    const mpz_class& lcb = b.coefs_[0];

    // Every quotient monomial lies lexicographically between these two.
    std::vector<Exponent> low(w), high(w);
    for (std::size_t v = 0; v < w; ++v) {
        low[v] = a.exps_[(a.size() - 1) * w + v] - b.exps_[(nb - 1) * w + v];
        high[v] = a.exps_[v] - b.exps_[v];
    }
    // Degrees in each single variable add under multiplication, which
    // confines the quotient to a finite box and guarantees termination.
    std::vector<Exponent> box_lo(w), box_hi(w);
    for (std::size_t v = 0; v < w; ++v) {
        auto id = static_cast<VarId>(v);
        box_lo[v] = a.min_exponent(id) - b.min_exponent(id);
        box_hi[v] = a.max_exponent(id) - b.max_exponent(id);
        if (box_lo[v] > box_hi[v]) return std::nullopt;
    }

    std::vector<Exponent> qexps;
    std::vector<mpz_class> qcoefs;
    std::vector<Exponent> keys;  // keys[i*w..] = q_i + b_{next[i]}
    std::vector<std::size_t> next;

    auto key_of = [&](std::size_t i) { return keys.data() + i * w; };
    auto heap_cmp = [&](std::size_t x, std::size_t y) { return lex_cmp(key_of(x), key_of(y), w) < 0; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(heap_cmp)> heap(heap_cmp);

    auto set_key = [&](std::size_t i) {
        const Exponent* qe = qexps.data() + i * w;
        const Exponent* be = b.exps_.data() + next[i] * w;
        for (std::size_t v = 0; v < w; ++v) keys[i * w + v] = qe[v] + be[v];
    };

    std::vector<Exponent> cur(w);
    std::size_t k = 0;
    mpz_class c;
    while (k < a.size() || !heap.empty()) {
        // Pick the largest pending monomial.
        bool from_a = false;
        if (k < a.size() && (heap.empty() || lex_cmp(a.exps_.data() + k * w, key_of(heap.top()), w) >= 0)) {
            std::copy_n(a.exps_.data() + k * w, w, cur.data());
            from_a = true;
        } else {
            std::copy_n(key_of(heap.top()), w, cur.data());
        }
        c = 0;
        if (from_a || (k < a.size() && lex_cmp(a.exps_.data() + k * w, cur.data(), w) == 0)) {
            c = a.coefs_[k];
            ++k;
        }
        while (!heap.empty() && lex_cmp(key_of(heap.top()), cur.data(), w) == 0) {
            std::size_t i = heap.top();
            heap.pop();
            mpz_submul(c.get_mpz_t(), qcoefs[i].get_mpz_t(), b.coefs_[next[i]].get_mpz_t());
            if (++next[i] < nb) {
                set_key(i);
                heap.push(i);
            }
        }
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), lcb.get_mpz_t())) return std::nullopt;
        std::vector<Exponent> qm(w);
        for (std::size_t v = 0; v < w; ++v) qm[v] = cur[v] - b.exps_[v];
        if (lex_cmp(qm.data(), low.data(), w) < 0 || lex_cmp(qm.data(), high.data(), w) > 0) {
            return std::nullopt;
        }
        for (std::size_t v = 0; v < w; ++v)
            if (qm[v] < box_lo[v] || qm[v] > box_hi[v]) return std::nullopt;
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), lcb.get_mpz_t());
        std::size_t idx = qcoefs.size();
        qexps.insert(qexps.end(), qm.begin(), qm.end());
        qcoefs.push_back(c);
        next.push_back(1);
        keys.resize(keys.size() + w);
        set_key(idx);
        heap.push(idx);
    }

    // Quotient terms were produced in strictly decreasing order already.
    LaurentPoly q;
    q.nv_ = w;
    q.exps_ = std::move(qexps);
    q.coefs_ = std::move(qcoefs);
    q.trim_width();
    return q;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NotDivisible("exact_div: no Laurent polynomial quotient exists");
    return std::move(*q);
}

// ---------------------------------------------------------------- substitution

LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& bindings) {
    if (p.is_zero()) return p;
    // Split exponents into bound and free parts; powers of bindings are cached.
    std::map<std::pair<VarId, Exponent>, LaurentPoly> powers;
    auto power_of = [&](VarId v, Exponent e) -> const LaurentPoly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        const LaurentPoly& val = bindings.at(v);
        if (e < 0 && !(val.is_monomial() && (val.coefficient(0) == 1 || val.coefficient(0) == -1))) {
            throw NonInvertibleSubstitution("substitute: negative power of a variable bound to a non-unit");
        }
        return powers.emplace(key, val.pow(e)).first->second;
    };

    std::vector<LaurentPoly> parts;
    for (std::size_t t = 0; t < p.size(); ++t) {
        std::vector<std::pair<VarId, Exponent>> free_part, bound_part;
        for (std::size_t v = 0; v < p.width(); ++v) {
            Exponent e = p.exponent(t, static_cast<VarId>(v));
            if (e == 0) continue;
            if (bindings.count(static_cast<VarId>(v))) bound_part.emplace_back(static_cast<VarId>(v), e);
            else free_part.emplace_back(static_cast<VarId>(v), e);
        }
        LaurentPoly term = LaurentPoly::monomial(p.coefficient(t), free_part);
        for (auto& [v, e] : bound_part) term *= power_of(v, e);
        parts.push_back(std::move(term));
    }
    // Pairwise summation keeps the intermediate merges balanced.
    while (parts.size() > 1) {
        std::vector<LaurentPoly> next;
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts.swap(next);
    }
    return parts.empty() ? LaurentPoly{} : std::move(parts.front());
}

mpq_class eval_rational(const LaurentPoly& p, const std::map<VarId, mpq_class>& point) {
    mpq_class total = 0;
    for (std::size_t t = 0; t < p.size(); ++t) {
        mpq_class term = p.coefficient(t);
        for (std::size_t v = 0; v < p.width(); ++v) {
            Exponent e = p.exponent(t, static_cast<VarId>(v));
            if (e == 0) continue;
            auto it = point.find(static_cast<VarId>(v));
            if (it == point.end()) throw Error("eval_rational: variable " + std::to_string(v) + " is unbound");
            const mpq_class& x = it->second;
            if (x == 0 && e < 0) throw DivisionByZero("eval_rational: negative power of zero");
            mpz_class num, den;
            unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
            mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), ae);
            mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), ae);
            mpq_class f = e > 0 ? mpq_class(num, den) : mpq_class(den, num);
            f.canonicalize();
            term *= f;
        }
        total += term;
    }
    return total;
}

bool is_positive(const LaurentPoly& p) {
    if (p.is_zero()) return false;
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (sgn(p.coefficient(t)) <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- text

std::string to_string(const LaurentPoly& p, const VarRegistry& reg) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (t) os << " + ";
        os << p.coefficient(t).get_str();
        for (std::size_t v = 0; v < p.width(); ++v) {
            Exponent e = p.exponent(t, static_cast<VarId>(v));
            if (e != 0) os << '*' << reg.name(static_cast<VarId>(v)) << '^' << e;
        }
    }
    return os.str();
}

namespace {

class Parser {
public:
    Parser(std::string_view s, VarRegistry& reg) : s_(s), reg_(reg) {}

    LaurentPoly parse() {
        skip_ws();
        if (done()) fail("empty input");
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++i_;
        } else if (peek() == '+') {
            ++i_;
        }
        LaurentPoly acc = parse_term(sign);
        while (true) {
            skip_ws();
            if (done()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++i_;
            acc += parse_term(op == '-' ? -1 : 1);
        }
        return acc;
    }

private:
    std::string_view s_;
    VarRegistry& reg_;
    std::size_t i_ = 0;

    bool done() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("laurent parse error at offset " + std::to_string(i_) + ": " + what);
    }

    std::string read_int() {
        std::string out;
        if (!done() && (peek() == '-' || peek() == '+')) out.push_back(s_[i_++]);
        skip_ws();
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s_[i_++]);
        if (out.empty() || out == "-" || out == "+") fail("expected an integer");
        if (out[0] == '+') out.erase(0, 1);
        return out;
    }

    LaurentPoly parse_term(int sign) {
        skip_ws();
        mpz_class coef = sign;
        std::vector<std::pair<VarId, Exponent>> exps;
        bool first = true;
        while (true) {
            skip_ws();
            if (done()) fail("expected a factor");
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch)) || (first && ch == '-')) {
                coef *= mpz_class(read_int());
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                std::string name;
                while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                                   peek() == '\'')) {
                    name.push_back(s_[i_++]);
                }
                Exponent e = 1;
                skip_ws();
                if (!done() && peek() == '^') {
                    ++i_;
                    skip_ws();
                    long v = std::stol(read_int());
                    e = static_cast<Exponent>(v);
                }
                exps.emplace_back(reg_.intern(name), e);
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            first = false;
            skip_ws();
            if (!done() && peek() == '*') {
                ++i_;
                continue;
            }
            break;
        }
        return LaurentPoly::monomial(coef, exps);
    }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, VarRegistry& reg) { return Parser(text, reg).parse(); }

}  // namespace qp
