#pragma once

#include <string>
#include <vector>

#include "qcomb/laurent.hpp"

namespace qcomb {

// Polynomial in t whose coefficients are Laurent polynomials in q.
// Dense by t-degree, trailing zero coefficients trimmed. Also used for
// polynomials in the auxiliary variable z of the q-binomial theorem.
class TPoly {
public:
    TPoly() = default;
    TPoly(LaurentPoly constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    TPoly(long constant) : TPoly(LaurentPoly(constant)) {}

    static TPoly t() { return monomial(LaurentPoly(1), 1); }
    static TPoly monomial(LaurentPoly coeff, unsigned deg);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    LaurentPoly coeff(unsigned deg) const {
        return deg < coeffs_.size() ? coeffs_[deg] : LaurentPoly();
    }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
    friend TPoly operator*(const LaurentPoly& s, TPoly p);

    TPoly pow(unsigned e) const;

    // Substitute t by a Laurent polynomial in q.
    LaurentPoly eval(const LaurentPoly& t_value) const;

    bool operator==(const TPoly& o) const = default;

    // "(1) + (1 + q)*t + (q^2)*t^2" style; coefficients use the canonical
    // LaurentPoly rendering.
    std::string to_string(const char* var = "t") const;

private:
    void trim();
    std::vector<LaurentPoly> coeffs_;
};

} // namespace qcomb
