#include "qcomb/qfun.hpp"

#include <mutex>
#include <vector>

namespace qcomb {

LaurentPoly q_int(unsigned k) {
    std::vector<Int> ones(k, Int(1));
    return LaurentPoly::from_dense(0, ones);
}

LaurentPoly q_factorial(unsigned k) {
    LaurentPoly p(1);
    for (unsigned i = 1; i <= k; ++i) p *= q_int(i);
    return p;
}

namespace {
std::mutex qbin_mutex;
// qbin_rows[n][k] for 0 <= k <= n.
std::vector<std::vector<LaurentPoly>> qbin_rows;

void grow_qbin_rows(unsigned n) {
    while (qbin_rows.size() <= n) {
        unsigned m = static_cast<unsigned>(qbin_rows.size());
        std::vector<LaurentPoly> row(m + 1);
        row[0] = LaurentPoly(1);
        row[m] = LaurentPoly(1);
        for (unsigned k = 1; k < m; ++k)
            row[k] = qbin_rows[m - 1][k - 1] +
                     LaurentPoly::monomial(1, static_cast<int>(k)) * qbin_rows[m - 1][k];
        qbin_rows.push_back(std::move(row));
    }
}
} // namespace

LaurentPoly q_binomial(unsigned n, int k) {
    if (k < 0 || static_cast<unsigned>(k) > n) return LaurentPoly();
    std::lock_guard<std::mutex> lock(qbin_mutex);
    grow_qbin_rows(n);
    return qbin_rows[n][static_cast<unsigned>(k)];
}

LaurentPoly q_binomial_base(unsigned n, int k, unsigned r) {
    return q_binomial(n, k).subst_q_power(r);
}

Int binomial(unsigned n, int k) {
    if (k < 0 || static_cast<unsigned>(k) > n) return 0;
    Int r = 1;
    unsigned kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    for (unsigned i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;
    }
    return r;
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

TPoly falling_factorial(FallingKind kind, unsigned n, unsigned k) {
    using Family = FallingKind::Family;
    if (kind.family == Family::D && k > n)
        throw InvalidParams("falling_factorial: kind D requires k <= n");
    if (kind.family == Family::R && kind.r < 1)
        throw InvalidParams("falling_factorial: kind R requires r >= 1");
    const TPoly t = TPoly::t();
    TPoly p(1);
    switch (kind.family) {
        case Family::A:
            for (unsigned i = 0; i < k; ++i) p *= t - TPoly(q_int(i));
            break;
        case Family::B:
            for (unsigned i = 1; i <= k; ++i) p *= t - TPoly(q_int(2 * i - 1));
            break;
        case Family::R:
            for (unsigned i = 0; i < k; ++i) p *= t - TPoly(q_int(kind.r * i + 1));
            break;
        case Family::D:
            if (k < n) {
                for (unsigned i = 1; i <= k; ++i) p *= t - TPoly(q_int(2 * i - 1));
            } else if (k > 0) {  // k == n >= 1
                for (unsigned i = 1; i + 1 <= n; ++i) p *= t - TPoly(q_int(2 * i - 1));
                p *= t - TPoly(q_int(n - 1));
            }
            break;
    }
    return p;
}

} // namespace qcomb
