#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>
#include <vector>

#include "qpaths/laurent/laurent_poly.hpp"

namespace qp {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;
using u64 = std::uint64_t;

// Fixed-width packing of exponent vectors into one unsigned word. Variable 0
// occupies the most significant field and every field is biased to be
// non-negative, so unsigned comparison of packed words is the lexicographic
// order, and adding two packed words (minus one bias) adds exponents.
struct Packing {
    std::size_t w = 0;
    unsigned bits = 0;
    Exponent bias = 0;
    u64 bias_word = 0;
    u64 field_mask = 0;

    static std::optional<Packing> make(std::size_t w, const std::vector<Exponent>& lo,
                                       const std::vector<Exponent>& hi) {
        Packing p;
        p.w = w;
        if (w == 0) return p;
        p.bits = static_cast<unsigned>(std::min<std::size_t>(64 / w, 16));
        if (p.bits < 4) return std::nullopt;
        p.bias = static_cast<Exponent>(1) << (p.bits - 1);
        // The all-ones field is kept free so that no key equals ~0.
        for (std::size_t v = 0; v < w; ++v)
            if (lo[v] < -p.bias || hi[v] > p.bias - 2) return std::nullopt;
        p.field_mask = p.bits == 64 ? ~u64{0} : ((u64{1} << p.bits) - 1);
        for (std::size_t v = 0; v < w; ++v) p.bias_word |= static_cast<u64>(p.bias) << shift(p, v);
        return p;
    }
    static unsigned shift(const Packing& p, std::size_t v) {
        return static_cast<unsigned>((p.w - 1 - v) * p.bits);
    }
    u64 pack(const Exponent* e) const {
        u64 k = 0;
        for (std::size_t v = 0; v < w; ++v) k |= static_cast<u64>(e[v] + bias) << shift(*this, v);
        return k;
    }
    void unpack(u64 k, Exponent* out) const {
        for (std::size_t v = 0; v < w; ++v)
            out[v] = static_cast<Exponent>((k >> shift(*this, v)) & field_mask) - bias;
    }
};

bool small_coefs(const std::vector<mpz_class>& c, unsigned& max_bits) {
    max_bits = 0;
    for (const auto& x : c) {
        std::size_t b = mpz_sizeinbase(x.get_mpz_t(), 2);
        if (b > 62) return false;
        max_bits = std::max<unsigned>(max_bits, static_cast<unsigned>(b));
    }
    return true;
}

unsigned bit_length(std::size_t n) {
    unsigned b = 0;
    while (n) {
        ++b;
        n >>= 1;
    }
    return b;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<u64>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<u64>(u)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

void exponent_range(const std::vector<Exponent>& exps, std::size_t n, std::size_t w, std::vector<Exponent>& lo,
                    std::vector<Exponent>& hi) {
    lo.assign(w, std::numeric_limits<Exponent>::max());
    hi.assign(w, std::numeric_limits<Exponent>::min());
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t v = 0; v < w; ++v) {
            Exponent e = exps[t * w + v];
            lo[v] = std::min(lo[v], e);
            hi[v] = std::max(hi[v], e);
        }
}

// Open-addressing map from packed monomial to a 128-bit accumulator.
class PackedAccumulator {
public:
    explicit PackedAccumulator(std::size_t expected) {
        std::size_t cap = 64;
        while (cap < 2 * expected) cap <<= 1;
        keys_.assign(cap, kEmpty);
        vals_.assign(cap, 0);
    }
    void add(u64 key, i128 v) {
        if (2 * (count_ + 1) > keys_.size()) grow();
        std::size_t mask = keys_.size() - 1;
        std::size_t pos = mix(key) & mask;
        while (keys_[pos] != kEmpty && keys_[pos] != key) pos = (pos + 1) & mask;
        if (keys_[pos] == kEmpty) {
            keys_[pos] = key;
            ++count_;
        }
        vals_[pos] += v;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty && vals_[i] != 0) f(keys_[i], vals_[i]);
    }

private:
    // Never a valid key, see Packing::make.
    static constexpr u64 kEmpty = ~u64{0};
    std::vector<u64> keys_;
    std::vector<i128> vals_;
    std::size_t count_ = 0;

    static std::size_t mix(u64 k) {
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
    void grow() {
        std::vector<u64> ok = std::move(keys_);
        std::vector<i128> ov = std::move(vals_);
        keys_.assign(ok.size() * 2, kEmpty);
        vals_.assign(ok.size() * 2, 0);
        std::size_t mask = keys_.size() - 1;
        for (std::size_t i = 0; i < ok.size(); ++i) {
            if (ok[i] == kEmpty) continue;
            std::size_t pos = mix(ok[i]) & mask;
            while (keys_[pos] != kEmpty) pos = (pos + 1) & mask;
            keys_[pos] = ok[i];
            vals_[pos] = ov[i];
        }
    }
};

// Max-heap of packed monomials in which entries with equal keys are
// chained together, so every distinct monomial is popped once.
class ChainedHeap {
public:
    bool empty() const { return nodes_.empty(); }
    u64 top() const { return nodes_.front().key; }

    void insert(u64 key, std::size_t item) {
        if (item >= link_.size()) link_.resize(item + 1);
        link_[item] = kNone;
        std::size_t j = nodes_.size();
        while (j > 0) {
            std::size_t p = (j - 1) / 2;
            if (nodes_[p].key == key) {
                link_[item] = nodes_[p].head;
                nodes_[p].head = item;
                return;
            }
            if (nodes_[p].key > key) break;
            j = p;
        }
        std::size_t k = nodes_.size();
        nodes_.push_back({});
        while (k > j) {
            std::size_t p = (k - 1) / 2;
            nodes_[k] = nodes_[p];
            k = p;
        }
        nodes_[j] = {key, item};
    }

    // Removes the top node and appends its chained items to `out`.
    void pop(std::vector<std::size_t>& out) {
        for (std::size_t it = nodes_.front().head; it != kNone; it = link_[it]) out.push_back(it);
        Node last = nodes_.back();
        nodes_.pop_back();
        if (nodes_.empty()) return;
        std::size_t i = 0;
        const std::size_t n = nodes_.size();
        while (true) {
            std::size_t c = 2 * i + 1;
            if (c >= n) break;
            if (c + 1 < n && nodes_[c + 1].key > nodes_[c].key) ++c;
            if (nodes_[c].key <= last.key) break;
            nodes_[i] = nodes_[c];
            i = c;
        }
        nodes_[i] = last;
    }

private:
    static constexpr std::size_t kNone = ~std::size_t{0};
    struct Node {
        u64 key = 0;
        std::size_t head = kNone;
    };
    std::vector<Node> nodes_;
    std::vector<std::size_t> link_;
};

}  // namespace

std::optional<LaurentPoly> LaurentPoly::mul_packed(const LaurentPoly& a, const LaurentPoly& b) {
    const std::size_t w = a.nv_;  // callers pass equal widths
    if (w == 0 || b.nv_ != w) return std::nullopt;
    unsigned ba = 0, bb = 0;
    if (!small_coefs(a.coefs_, ba) || !small_coefs(b.coefs_, bb)) return std::nullopt;
    if (ba + bb + bit_length(std::min(a.size(), b.size())) + 1 > 126) return std::nullopt;

    std::vector<Exponent> la, ha, lb, hb;
    exponent_range(a.exps_, a.size(), w, la, ha);
    exponent_range(b.exps_, b.size(), w, lb, hb);
    std::vector<Exponent> lo(w), hi(w);
    for (std::size_t v = 0; v < w; ++v) {
        lo[v] = std::min({la[v], lb[v], static_cast<Exponent>(la[v] + lb[v])});
        hi[v] = std::max({ha[v], hb[v], static_cast<Exponent>(ha[v] + hb[v])});
    }
    auto pk = Packing::make(w, lo, hi);
    if (!pk) return std::nullopt;

    std::vector<u64> ka(a.size()), kb(b.size());
    std::vector<std::int64_t> ca(a.size()), cb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ka[i] = pk->pack(a.exps_.data() + i * w);
        ca[i] = mpz_get_si(a.coefs_[i].get_mpz_t());
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        kb[j] = pk->pack(b.exps_.data() + j * w);
        cb[j] = mpz_get_si(b.coefs_[j].get_mpz_t());
    }

    const bool square = &a == &b || (a.coefs_ == b.coefs_ && a.exps_ == b.exps_);
    PackedAccumulator acc(std::max(a.size(), b.size()) * 8);
    const u64 bias = pk->bias_word;
    if (square) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            acc.add(ka[i] + ka[i] - bias, static_cast<i128>(ca[i]) * ca[i]);
            const i128 twice = 2 * static_cast<i128>(ca[i]);
            for (std::size_t j = i + 1; j < a.size(); ++j) acc.add(ka[i] + ka[j] - bias, twice * ca[j]);
        }
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const i128 ci = ca[i];
            for (std::size_t j = 0; j < b.size(); ++j) acc.add(ka[i] + kb[j] - bias, ci * cb[j]);
        }
    }

    std::vector<std::pair<u64, i128>> terms;
    acc.for_each([&](u64 k, i128 v) { terms.emplace_back(k, v); });
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    LaurentPoly out;
    out.nv_ = w;
    out.exps_.resize(terms.size() * w);
    out.coefs_.reserve(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
        pk->unpack(terms[t].first, out.exps_.data() + t * w);
        out.coefs_.push_back(to_mpz(terms[t].second));
    }
    out.trim_width();
    return out;
}

std::optional<LaurentPoly> LaurentPoly::div_packed(const LaurentPoly& a, const LaurentPoly& b,
                                                   bool& not_divisible) {
    not_divisible = false;
    const std::size_t w = a.nv_;
    if (w == 0 || b.nv_ != w) return std::nullopt;
    unsigned ba = 0, bb = 0;
    if (!small_coefs(a.coefs_, ba) || !small_coefs(b.coefs_, bb)) return std::nullopt;

    std::vector<Exponent> la, ha, lb, hb;
    exponent_range(a.exps_, a.size(), w, la, ha);
    exponent_range(b.exps_, b.size(), w, lb, hb);
    std::vector<Exponent> qlo(w), qhi(w), lo(w), hi(w);
    for (std::size_t v = 0; v < w; ++v) {
        qlo[v] = la[v] - lb[v];
        qhi[v] = ha[v] - hb[v];
        if (qlo[v] > qhi[v]) {
            not_divisible = true;
            return std::nullopt;
        }
        lo[v] = std::min({la[v], lb[v], qlo[v]});
        hi[v] = std::max({ha[v], hb[v], qhi[v]});
    }
    auto pk = Packing::make(w, lo, hi);
    if (!pk) return std::nullopt;
    const u64 bias = pk->bias_word;

    std::vector<u64> ka(a.size()), kb(b.size());
    std::vector<i128> ca(a.size()), cb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ka[i] = pk->pack(a.exps_.data() + i * w);
        ca[i] = mpz_get_si(a.coefs_[i].get_mpz_t());
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        kb[j] = pk->pack(b.exps_.data() + j * w);
        cb[j] = mpz_get_si(b.coefs_[j].get_mpz_t());
    }
    const i128 lcb = cb[0];
    const u64 lead_b = kb[0];

    // Heap item i stands for the product q_i * b_{next[i]}.
    std::vector<u64> qk;
    std::vector<i128> qc;
    std::vector<std::size_t> next;
    ChainedHeap heap;
    std::vector<std::size_t> popped;
    const i128 limit = static_cast<i128>(1) << 120;
    std::vector<Exponent> cur(w), qe(w), be(w);
    pk->unpack(lead_b, be.data());

    std::size_t k = 0;
    while (k < a.size() || !heap.empty()) {
        u64 key;
        if (heap.empty() || (k < a.size() && ka[k] >= heap.top())) key = ka[k];
        else key = heap.top();
        i128 c = 0;
        if (k < a.size() && ka[k] == key) c = ca[k++];
        popped.clear();
        while (!heap.empty() && heap.top() == key) heap.pop(popped);
        for (std::size_t i : popped) {
            i128 prod;
            if (__builtin_mul_overflow(qc[i], cb[next[i]], &prod) || __builtin_sub_overflow(c, prod, &c))
                return std::nullopt;
            if (++next[i] < b.size()) heap.insert(qk[i] + kb[next[i]] - bias, i);
        }
        if (c == 0) continue;
        if (c > limit || c < -limit) return std::nullopt;
        if (c % lcb != 0) {
            not_divisible = true;
            return std::nullopt;
        }
        pk->unpack(key, cur.data());
        for (std::size_t v = 0; v < w; ++v) {
            qe[v] = cur[v] - be[v];
            if (qe[v] < qlo[v] || qe[v] > qhi[v]) {
                not_divisible = true;
                return std::nullopt;
            }
        }
        const std::size_t idx = qk.size();
        qk.push_back(pk->pack(qe.data()));
        qc.push_back(c / lcb);
        next.push_back(1);
        if (b.size() > 1) heap.insert(qk[idx] + kb[1] - bias, idx);
    }

    LaurentPoly out;
    out.nv_ = w;
    out.exps_.resize(qk.size() * w);
    out.coefs_.reserve(qk.size());
    for (std::size_t t = 0; t < qk.size(); ++t) {
        pk->unpack(qk[t], out.exps_.data() + t * w);
        out.coefs_.push_back(to_mpz(qc[t]));
    }
    out.trim_width();
    return out;
}

}  // namespace qp
