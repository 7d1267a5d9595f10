#include "qcomb/tpoly.hpp"

#include <sstream>

namespace qcomb {

TPoly TPoly::monomial(LaurentPoly coeff, unsigned deg) {
    TPoly p;
    if (coeff.is_zero()) return p;
    p.coeffs_.resize(deg + 1);
    p.coeffs_[deg] = std::move(coeff);
    return p;
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

TPoly operator*(const LaurentPoly& s, TPoly p) {
    for (auto& c : p.coeffs_) c = s * c;
    p.trim();
    return p;
}

TPoly TPoly::pow(unsigned e) const {
    TPoly result(1);
    TPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

LaurentPoly TPoly::eval(const LaurentPoly& t_value) const {
    LaurentPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t_value + *it;
    return r;
}

std::string TPoly::to_string(const char* var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << "(" << coeffs_[i].to_string() << ")";
        if (i == 1) out << "*" << var;
        else if (i > 1) out << "*" << var << "^" << i;
    }
    return out.str();
}

} // namespace qcomb
