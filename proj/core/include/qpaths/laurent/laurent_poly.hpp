#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpaths/laurent/var_registry.hpp"

namespace qp {

using Exponent = std::int32_t;

// Multivariate Laurent polynomial with arbitrary-precision integer
// coefficients.
//
// Terms are kept in a flat layout: every term owns `width()` exponent slots,
// slot v holding the exponent of VarId v. Terms are sorted in strictly
// decreasing lexicographic order of their exponent vectors (VarId 0 is the
// most significant position), carry nonzero coefficients, and the width is
// trimmed so that the last slot is used by at least one term. Two equal
// polynomials therefore have identical storage.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor): integer constants
    explicit LaurentPoly(const mpz_class& c);

    static LaurentPoly variable(VarId v, Exponent e = 1);
    static LaurentPoly monomial(const mpz_class& c,
                                const std::vector<std::pair<VarId, Exponent>>& exps);

    std::size_t size() const { return coefs_.size(); }
    std::size_t width() const { return nv_; }
    bool is_zero() const { return coefs_.empty(); }
    bool is_monomial() const { return coefs_.size() == 1; }
    bool is_constant() const;

    std::span<const Exponent> exponents(std::size_t term) const {
        return {exps_.data() + term * nv_, nv_};
    }
    Exponent exponent(std::size_t term, VarId v) const {
        return v < nv_ ? exps_[term * nv_ + v] : 0;
    }
    const mpz_class& coefficient(std::size_t term) const { return coefs_[term]; }

    mpz_class constant_term() const;
    std::vector<VarId> variables() const;
    Exponent min_exponent(VarId v) const;
    Exponent max_exponent(VarId v) const;

    // Coefficient-1 monomial whose exponents are the termwise minimum; the
    // product p * lowest_monomial()^-1 has only non-negative exponents.
    LaurentPoly lowest_monomial() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nv_ == b.nv_ && a.exps_ == b.exps_ && a.coefs_ == b.coefs_;
    }

    // Negative powers are only defined for monomials with unit coefficient.
    LaurentPoly pow(Exponent e) const;

    // Renames variables; ids absent from the mapping are kept. The mapping
    // must be injective on the variables that occur.
    LaurentPoly rename(const std::map<VarId, VarId>& mapping) const;

    std::size_t hash() const;

    // Copy whose exponent rows are padded with zeros to width w.
    LaurentPoly widened_copy(std::size_t w) const;

    // Internal constructor from unsorted, possibly duplicated terms.
    static LaurentPoly from_terms(std::size_t width, std::vector<Exponent> exps,
                                  std::vector<mpz_class> coefs);

private:
    std::size_t nv_ = 0;
    std::vector<Exponent> exps_;
    std::vector<mpz_class> coefs_;

    void trim_width();
    LaurentPoly times_term(const LaurentPoly& m) const;

    // Fast kernels on 64-bit packed monomials with 128-bit coefficients.
    // They return nullopt when exponents or coefficients do not fit, in
    // which case the general code path is taken. div_packed reports a
    // genuine non-divisibility through `not_divisible`.
    static std::optional<LaurentPoly> mul_packed(const LaurentPoly& a, const LaurentPoly& b);
    static std::optional<LaurentPoly> div_packed(const LaurentPoly& a, const LaurentPoly& b,
                                                 bool& not_divisible);

    friend LaurentPoly exact_div(const LaurentPoly&, const LaurentPoly&);
    friend std::optional<LaurentPoly> try_exact_div(const LaurentPoly&, const LaurentPoly&);
};

// Quotient q with q*b == a; throws NotDivisible when no Laurent quotient
// exists and std::invalid_argument for b == 0.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Ring homomorphism sending each bound variable to its image. A variable
// occurring with a negative exponent must be bound to a unit monomial.
LaurentPoly substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& bindings);

mpq_class eval_rational(const LaurentPoly& p, const std::map<VarId, mpq_class>& point);

// True iff p != 0 and every coefficient is strictly positive.
bool is_positive(const LaurentPoly& p);

// Text form: terms joined by " + ", each term written "c*v1^e1*v2^e2" with
// variables in increasing id order. The zero polynomial prints as "0".
std::string to_string(const LaurentPoly& p, const VarRegistry& reg);

// Accepts the output of to_string plus some slack: omitted coefficients or
// exponents, " - " between terms, and arbitrary whitespace. Unknown
// variable names are interned.
LaurentPoly parse_laurent(std::string_view text, VarRegistry& reg);

}  // namespace qp
