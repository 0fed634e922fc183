#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qpaths/laurent/fraction.hpp"
#include "qpaths/laurent/laurent_poly.hpp"

namespace qp {

inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) { return exact_div(a, b); }
inline Fraction exact_quotient(const Fraction& a, const Fraction& b) { return a / b; }

// Power series in the formal variable t with coefficients in C.
//
// A series is either an exact polynomial (order() == kPolynomial, trailing
// zero coefficients stripped) or truncated at order N, in which case it
// stores exactly N+1 coefficients, zeros included. Mixing the two yields a
// truncated result at the smaller order.
template <class C>
class BasicSeries {
public:
    static constexpr int kPolynomial = -1;

    BasicSeries() = default;
    BasicSeries(long c) : coef_{C(c)} { normalize(); }  // NOLINT(google-explicit-constructor)
    BasicSeries(C c) : coef_{std::move(c)} { normalize(); }  // NOLINT(google-explicit-constructor)
    BasicSeries(std::vector<C> coefs, int order) : coef_(std::move(coefs)), order_(order) { normalize(); }

    static BasicSeries monomial(C c, int degree, int order = kPolynomial) {
        std::vector<C> v(static_cast<std::size_t>(degree) + 1, C(0));
        v[degree] = std::move(c);
        return BasicSeries(std::move(v), order);
    }

    int order() const { return order_; }
    bool is_polynomial() const { return order_ == kPolynomial; }
    // Highest stored index; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coef_.size()) - 1; }

    const C& operator[](std::size_t n) const { return n < coef_.size() ? coef_[n] : zero(); }
    const std::vector<C>& coefficients() const { return coef_; }

    BasicSeries truncated(int order) const {
        if (!is_polynomial() && order > order_) throw std::invalid_argument("cannot extend a truncated series");
        return BasicSeries(coef_, order);
    }

    BasicSeries operator-() const {
        BasicSeries r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }
    friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
        int ord = combine(a.order_, b.order_);
        std::vector<C> v(std::max(a.coef_.size(), b.coef_.size()), C(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) v[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) v[i] += b.coef_[i];
        return BasicSeries(std::move(v), ord);
    }
    friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) { return a + (-b); }
    friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
        int ord = combine(a.order_, b.order_);
        if (a.coef_.empty() || b.coef_.empty()) return BasicSeries(std::vector<C>{}, ord);
        std::size_t len = a.coef_.size() + b.coef_.size() - 1;
        if (ord != kPolynomial) len = std::min(len, static_cast<std::size_t>(ord) + 1);
        std::vector<C> v(len, C(0));
        for (std::size_t i = 0; i < a.coef_.size() && i < len; ++i) {
            if (a.coef_[i] == C(0)) continue;
            for (std::size_t j = 0; j < b.coef_.size() && i + j < len; ++j)
                if (!(b.coef_[j] == C(0))) v[i + j] += a.coef_[i] * b.coef_[j];
        }
        return BasicSeries(std::move(v), ord);
    }
    BasicSeries& operator+=(const BasicSeries& o) { return *this = *this + o; }
    BasicSeries& operator-=(const BasicSeries& o) { return *this = *this - o; }
    BasicSeries& operator*=(const BasicSeries& o) { return *this = *this * o; }
    friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
        return a.order_ == b.order_ && a.coef_ == b.coef_;
    }

    // Multiplicative inverse to the given order; the constant coefficient
    // must be a unit of C.
    BasicSeries inverse(int order) const {
        if (order < 0) throw std::invalid_argument("series inverse needs a finite order");
        if (!is_polynomial()) order = std::min(order, order_);
        if (coef_.empty() || coef_[0] == C(0)) throw std::domain_error("series inverse: zero constant term");
        std::vector<C> b(static_cast<std::size_t>(order) + 1, C(0));
        b[0] = exact_quotient(C(1), coef_[0]);
        for (int n = 1; n <= order; ++n) {
            C s(0);
            for (int k = 1; k <= n && k < static_cast<int>(coef_.size()); ++k)
                if (!(coef_[k] == C(0))) s += coef_[k] * b[n - k];
            b[n] = exact_quotient(-s, coef_[0]);
        }
        return BasicSeries(std::move(b), order);
    }

private:
    std::vector<C> coef_;
    int order_ = kPolynomial;

    static const C& zero() {
        static const C z(0);
        return z;
    }
    static int combine(int a, int b) {
        if (a == kPolynomial) return b;
        if (b == kPolynomial) return a;
        return std::min(a, b);
    }
    void normalize() {
        if (order_ == kPolynomial) {
            while (!coef_.empty() && coef_.back() == C(0)) coef_.pop_back();
        } else {
            if (order_ < 0) throw std::invalid_argument("negative truncation order");
            coef_.resize(static_cast<std::size_t>(order_) + 1, C(0));
        }
    }
};

using TSeries = BasicSeries<LaurentPoly>;
using FSeries = BasicSeries<Fraction>;

}  // namespace qp
