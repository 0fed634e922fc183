#pragma once

#include <map>

#include "qpaths/laurent/laurent_poly.hpp"

namespace qp {

// Quotient of two Laurent polynomials. No gcd is taken; after every
// operation the denominator is divided out when it divides the numerator
// exactly, which is the common case in this library. Equality is decided
// by cross-multiplication.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Fraction(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Fraction(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentPoly(1); }

    // The Laurent polynomial equal to this fraction; NotDivisible otherwise.
    LaurentPoly to_laurent() const;

    Fraction inverse() const;
    Fraction pow(int e) const;

    Fraction operator-() const { return Fraction(-num_, den_); }
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }
    friend bool operator==(const Fraction& a, const Fraction& b);

private:
    LaurentPoly num_;
    LaurentPoly den_;
    void reduce();
};

// Substitutes rational functions for variables. Negative exponents are
// handled by inverting the bound value.
Fraction substitute_fraction(const LaurentPoly& p, const std::map<VarId, Fraction>& bindings);
Fraction substitute_fraction(const Fraction& f, const std::map<VarId, Fraction>& bindings);

}  // namespace qp
