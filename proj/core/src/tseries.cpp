#include "qcomb/tseries.hpp"

#include <sstream>

namespace qcomb {

TSeries::TSeries(const TPoly& p, unsigned order) : coeffs_(order) {
    for (unsigned m = 0; m < order; ++m) coeffs_[m] = p.coeff(m);
}

void TSeries::check_order(const TSeries& o) const {
    if (order() != o.order())
        throw InvalidParams("TSeries order mismatch: " + std::to_string(order()) + " vs " +
                            std::to_string(o.order()));
}

TSeries& TSeries::operator+=(const TSeries& o) {
    check_order(o);
    for (unsigned m = 0; m < order(); ++m) coeffs_[m] += o.coeffs_[m];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
    check_order(o);
    for (unsigned m = 0; m < order(); ++m) coeffs_[m] -= o.coeffs_[m];
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
    a.check_order(b);
    TSeries r(a.order());
    for (unsigned i = 0; i < a.order(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j < b.order(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TSeries TSeries::inverse() const {
    if (order() == 0) return *this;
    if (!(coeffs_[0] == LaurentPoly(1)))
        throw InvalidParams("TSeries::inverse requires constant coefficient 1");
    TSeries r(order());
    r.coeffs_[0] = LaurentPoly(1);
    for (unsigned m = 1; m < order(); ++m) {
        LaurentPoly s;
        for (unsigned j = 1; j <= m; ++j) s += coeffs_[j] * r.coeffs_[m - j];
        r.coeffs_[m] = -s;
    }
    return r;
}

std::string TSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned m = 0; m < order(); ++m) {
        if (coeffs_[m].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << coeffs_[m].to_string() << ")";
        if (m == 1) out << "*t";
        else if (m > 1) out << "*t^" << m;
    }
    if (first) out << "0";
    out << " + O(t^" << order() << ")";
    return out.str();
}

TSeries series_from_rational(const TPoly& numer, const std::vector<TPoly>& denom_factors,
                             unsigned order) {
    TSeries result(numer, order);
    for (const auto& f : denom_factors) {
        if (!(f.coeff(0) == LaurentPoly(1)))
            throw InvalidParams("series_from_rational: factor constant term is not 1: " +
                                f.to_string());
        result = result * TSeries(f, order).inverse();
    }
    return result;
}

} // namespace qcomb
