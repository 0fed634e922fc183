#include "qpaths/laurent/fraction.hpp"

#include "qpaths/errors.hpp"

namespace qp {

Fraction::Fraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
    reduce();
}

void Fraction::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_ == LaurentPoly(1)) return;
    if (auto q = try_exact_div(num_, den_)) {
        num_ = std::move(*q);
        den_ = LaurentPoly(1);
        return;
    }
    // Move any monomial content of the denominator into the numerator so
    // that the representation stays small.
    if (den_.is_monomial() && (den_.coefficient(0) == 1 || den_.coefficient(0) == -1)) {
        num_ = num_ * den_.pow(-1);
        den_ = LaurentPoly(1);
    }
}

LaurentPoly Fraction::to_laurent() const {
    if (is_laurent()) return num_;
    return exact_div(num_, den_);
}

Fraction Fraction::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of zero fraction");
    return Fraction(den_, num_);
}

Fraction Fraction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Fraction out(1), base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return out;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_.is_zero()) throw DivisionByZero("fraction division by zero");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Fraction substitute_fraction(const LaurentPoly& p, const std::map<VarId, Fraction>& bindings) {
    Fraction total(0);
    std::map<std::pair<VarId, int>, Fraction> cache;
    auto power = [&](VarId v, int e) -> const Fraction& {
        auto key = std::make_pair(v, e);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache.emplace(key, bindings.at(v).pow(e)).first->second;
    };
    for (std::size_t t = 0; t < p.size(); ++t) {
        std::vector<std::pair<VarId, Exponent>> free_part;
        std::vector<std::pair<VarId, int>> neg;
        Fraction pos_part(1);
        for (std::size_t v = 0; v < p.width(); ++v) {
            auto id = static_cast<VarId>(v);
            Exponent e = p.exponent(t, id);
            if (e == 0) continue;
            if (!bindings.count(id)) {
                free_part.emplace_back(id, e);
            } else if (e < 0) {
                neg.emplace_back(id, -e);
            } else {
                pos_part *= power(id, e);
            }
        }
        Fraction piece = Fraction(LaurentPoly::monomial(p.coefficient(t), free_part)) * pos_part;
        for (auto& [v, e] : neg) piece = piece / power(v, e);
        total += piece;
    }
    return total;
}

Fraction substitute_fraction(const Fraction& f, const std::map<VarId, Fraction>& bindings) {
    return substitute_fraction(f.num(), bindings) / substitute_fraction(f.den(), bindings);
}

}  // namespace qp
