#pragma once

#include <string>
#include <vector>

#include "qcomb/tpoly.hpp"

namespace qcomb {

// Formal power series in t over Laurent polynomials in q, truncated at a
// fixed order M (exclusive). Arithmetic between two series requires equal
// orders; mixing orders throws rather than silently re-truncating.
class TSeries {
public:
    explicit TSeries(unsigned order) : coeffs_(order) {}
    TSeries(const TPoly& p, unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()); }
    const LaurentPoly& coeff(unsigned m) const { return coeffs_.at(m); }
    LaurentPoly& coeff(unsigned m) { return coeffs_.at(m); }
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);

    // Multiplicative inverse; requires constant coefficient 1.
    TSeries inverse() const;

    bool operator==(const TSeries& o) const = default;

    std::string to_string() const;

private:
    void check_order(const TSeries& o) const;
    std::vector<LaurentPoly> coeffs_;
};

// Truncated expansion of numer / prod(denom_factors) to order M. Every
// denominator factor must have constant t-coefficient equal to 1.
TSeries series_from_rational(const TPoly& numer, const std::vector<TPoly>& denom_factors,
                             unsigned order);

} // namespace qcomb
