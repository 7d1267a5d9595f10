#pragma once

#include "qcomb/laurent.hpp"

namespace qcomb {

// Triangular recurrences for the five q-Stirling families. Tables are
// memoized per family (with r part of the key) behind a single-flight
// lock; out-of-range (n, k) yields the zero polynomial so that identity
// summations need no special-casing.

// S[n,k] = S[n-1,k-1] + [k]_q S[n-1,k], delta at n = 0.
LaurentPoly stirling_a(int n, int k);

// S_B[n,k] = S_B[n-1,k-1] + [2k+1]_q S_B[n-1,k], delta at n = 0.
LaurentPoly stirling_b(int n, int k);

// Chow-Gessel S_{n,k}(q) = q^(2k-1)(1+q) S_{n-1,k-1} + [2k+1]_q S_{n-1,k},
// boundary S_{n,0} = 1 for all n >= 0.
LaurentPoly chow_gessel(int n, int k);

// S_r[n,k] = S_r[n-1,k-1] + [rk+1]_q S_r[n-1,k], delta at n = 0.
LaurentPoly stirling_r(unsigned r, int n, int k);

// Division-free closed form for the type D family:
//   S_D[n,k] = S_B[n,k] - n [2]^(n-k-1) q^(n-k-1) S[n-1,k]_{q^2}  (k < n),
// and 1 at k = n. The enumeration definition over D_subset([n], k) is the
// oracle that validates this in tests.
LaurentPoly stirling_d(int n, int k);

// Integer (q = 1) values of the classical families, by the integer
// recurrences; used as independent cross-checks.
Int stirling_count_a(int n, int k);
Int stirling_count_b(int n, int k);
Int stirling_count_r(unsigned r, int n, int k);
Int stirling_count_d(int n, int k);

} // namespace qcomb
