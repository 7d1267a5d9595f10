#include "qcomb/laurent.hpp"

#include <cctype>
#include <sstream>

namespace qcomb {

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

LaurentPoly LaurentPoly::from_dense(int offset, const std::vector<Int>& coeffs) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.terms_[offset + static_cast<int>(i)] = coeffs[i];
    return p;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::add_term(const Int& coeff, int exp) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ca * cb, ea + eb);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

LaurentPoly LaurentPoly::subst_q_power(unsigned r) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_[e * static_cast<int>(r)] = c;
    return p;
}

Int LaurentPoly::eval_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            if (e == 1) out << "q";
            else out << "q^" << e;
        }
    }
    return out.str();
}

namespace {

[[noreturn]] void bad_poly(std::string_view text) {
    throw InvalidParams("malformed polynomial text: \"" + std::string(text) + "\"");
}

// One term of the grammar: INT | [INT*]q[^INT]
void parse_term(std::string_view term, std::string_view whole, LaurentPoly& out, bool negate) {
    if (term.empty()) bad_poly(whole);
    Int coeff = 1;
    int exp = 0;
    std::size_t pos = 0;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
        std::size_t end = 0;
        while (end < term.size() && std::isdigit(static_cast<unsigned char>(term[end]))) ++end;
        coeff = Int(std::string(term.substr(0, end)));
        pos = end;
        if (pos < term.size()) {
            if (term[pos] != '*') bad_poly(whole);
            ++pos;
        }
    }
    if (pos < term.size()) {
        if (term[pos] != 'q') bad_poly(whole);
        ++pos;
        exp = 1;
        if (pos < term.size()) {
            if (term[pos] != '^') bad_poly(whole);
            ++pos;
            bool neg_exp = pos < term.size() && term[pos] == '-';
            if (neg_exp) ++pos;
            if (pos >= term.size()) bad_poly(whole);
            int v = 0;
            for (; pos < term.size(); ++pos) {
                if (!std::isdigit(static_cast<unsigned char>(term[pos]))) bad_poly(whole);
                v = v * 10 + (term[pos] - '0');
            }
            exp = neg_exp ? -v : v;
        }
    } else if (pos == 0) {
        bad_poly(whole);
    }
    out.add_term(negate ? Int(-coeff) : coeff, exp);
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    if (text == "0") return LaurentPoly();
    LaurentPoly out;
    bool negate = false;
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '-') {
        negate = true;
        pos = 1;
    }
    while (pos <= text.size()) {
        std::size_t plus = text.find(" + ", pos);
        std::size_t minus = text.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        parse_term(text.substr(pos, cut == std::string_view::npos ? cut : cut - pos), text, out, negate);
        if (cut == std::string_view::npos) break;
        negate = (cut == minus);
        pos = cut + 3;
    }
    return out;
}

LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw InvalidParams("div_exact: zero denominator");
    if (num.is_zero()) return LaurentPoly();
    const int max_quot = num.max_exp() - den.max_exp();
    LaurentPoly rem = num;
    LaurentPoly quot;
    const Int& den_low = den.terms().begin()->second;
    const int den_low_exp = den.min_exp();
    while (!rem.is_zero()) {
        const int e = rem.min_exp() - den_low_exp;
        if (e > max_quot)
            throw NotDivisible("div_exact: " + num.to_string() + " not divisible by " + den.to_string());
        const Int& c = rem.terms().begin()->second;
        if (c % den_low != 0)
            throw NotDivisible("div_exact: " + num.to_string() + " not divisible by " + den.to_string());
        Int t = c / den_low;
        quot.add_term(t, e);
        for (const auto& [ed, cd] : den.terms()) rem.add_term(-t * cd, ed + e);
    }
    return quot;
}

} // namespace qcomb
