#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

using Int = boost::multiprecision::cpp_int;

// Univariate Laurent polynomial in q with arbitrary-precision integer
// coefficients, stored sparsely by exponent. Canonical form: no zero
// coefficient is ever stored, so equality is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long value) { if (value != 0) terms_[0] = value; }
    LaurentPoly(Int value) { if (value != 0) terms_[0] = std::move(value); }

    static LaurentPoly monomial(Int coeff, int exp);
    static LaurentPoly q() { return monomial(1, 1); }

    // Dense construction: coeffs[i] is the coefficient of q^(offset + i).
    static LaurentPoly from_dense(int offset, const std::vector<Int>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Int>& terms() const { return terms_; }
    Int coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly pow(unsigned e) const;

    // q -> q^r on every term.
    LaurentPoly subst_q_power(unsigned r) const;

    // Evaluation at q = 1: the integer sum of coefficients.
    Int eval_one() const;

    bool operator==(const LaurentPoly& o) const = default;

    // Adds `coeff * q^exp` in place; keeps canonical form.
    void add_term(const Int& coeff, int exp);

    // Canonical text rendering, e.g. "1 + 2*q + q^3", "q^-2 + q^2", "0".
    std::string to_string() const;

    // Inverse of to_string; throws InvalidParams on malformed input.
    static LaurentPoly parse(std::string_view text);

private:
    std::map<int, Int> terms_;
};

// Exact quotient num / den over integer Laurent polynomials.
// Throws NotDivisible when no exact quotient exists.
LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

} // namespace qcomb
