#pragma once

#include "qcomb/tpoly.hpp"

namespace qcomb {

// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
LaurentPoly q_int(unsigned k);

// [k]_q! = [1]_q [2]_q ... [k]_q; empty product for k = 0.
LaurentPoly q_factorial(unsigned k);

// Gaussian binomial; zero when k < 0 or k > n. Computed by the Pascal-type
// recurrence {n k} = {n-1 k-1} + q^k {n-1 k}, memoized.
LaurentPoly q_binomial(unsigned n, int k);

// {n k} with q replaced by q^r.
LaurentPoly q_binomial_base(unsigned n, int k, unsigned r);

// Integer binomial coefficient; zero outside 0 <= k <= n.
Int binomial(unsigned n, int k);
Int factorial(unsigned n);

// Families of falling factorials in t with q-integer roots. The D family
// carries the ambient n: for k < n it agrees with the B family, and at
// k = n the last root [2n-1]_q is replaced by [n-1]_q.
struct FallingKind {
    enum class Family { A, B, D, R } family;
    unsigned r = 1;  // only used by Family::R

    static FallingKind a() { return {Family::A}; }
    static FallingKind b() { return {Family::B}; }
    static FallingKind d() { return {Family::D}; }
    static FallingKind colored(unsigned r) { return {Family::R, r}; }
};

TPoly falling_factorial(FallingKind kind, unsigned n, unsigned k);

} // namespace qcomb
