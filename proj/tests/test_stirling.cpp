#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcomb/partitions.hpp"
#include "qcomb/qfun.hpp"
#include "qcomb/stirling.hpp"

using namespace qcomb;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("type A triangle") {
    CHECK(stirling_a(0, 0) == P("1"));
    CHECK(stirling_a(3, 2) == P("2 + q"));
    for (int n = 1; n <= 8; ++n) {
        CHECK(stirling_a(n, 0).is_zero());
        CHECK(stirling_a(n, n) == P("1"));
    }
    CHECK(stirling_a(3, 4).is_zero());
    CHECK(stirling_a(3, -1).is_zero());
    CHECK(stirling_a(-1, 0).is_zero());
    // Recurrence holds at every cell.
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(stirling_a(n, k) ==
                  stirling_a(n - 1, k - 1) +
                      q_int(static_cast<unsigned>(k)) * stirling_a(n - 1, k));
}

TEST_CASE("type B triangle") {
    CHECK(stirling_b(2, 1) == P("2 + q + q^2"));
    for (int n = 0; n <= 8; ++n) {
        CHECK(stirling_b(n, 0) == P("1"));
        CHECK(stirling_b(n, n) == P("1"));
    }
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(stirling_b(n, k) ==
                  stirling_b(n - 1, k - 1) +
                      q_int(static_cast<unsigned>(2 * k + 1)) * stirling_b(n - 1, k));
}

TEST_CASE("Chow-Gessel triangle") {
    for (int n = 0; n <= 6; ++n) CHECK(chow_gessel(n, 0) == P("1"));
    CHECK(chow_gessel(1, 1) == P("q + q^2"));
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(chow_gessel(n, k) ==
                  P("1 + q").pow(static_cast<unsigned>(k)) *
                      LaurentPoly::monomial(1, k * k) * stirling_b(n, k));
}

TEST_CASE("colored triangle") {
    CHECK(stirling_r(3, 1, 0) == P("1"));
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling_r(1, n, k) == stirling_a(n + 1, k + 1));
            CHECK(stirling_r(2, n, k) == stirling_b(n, k));
        }
    for (unsigned r = 1; r <= 5; ++r)
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(stirling_r(r, n, k) ==
                      stirling_r(r, n - 1, k - 1) +
                          q_int(r * static_cast<unsigned>(k) + 1) * stirling_r(r, n - 1, k));
    CHECK_THROWS_AS(stirling_r(0, 1, 1), InvalidParams);
    CHECK_THROWS_AS(stirling_r(6, 1, 1), InvalidParams);
}

TEST_CASE("type D closed form against the enumeration oracle") {
    CHECK(stirling_d(1, 0).is_zero());
    for (int n = 0; n <= 6; ++n) CHECK(stirling_d(n, n) == P("1"));
    CHECK(stirling_d(2, 1).eval_one() == 2);
    // Defining enumeration: sum of q^m over D_subset([n], k) divided by
    // q^(k^2) [2]^k.
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            LaurentPoly w = d_subset_weight(static_cast<unsigned>(n), static_cast<unsigned>(k));
            LaurentPoly expected =
                w.is_zero() ? LaurentPoly()
                            : div_exact(w, LaurentPoly::monomial(1, k * k) *
                                               q_int(2).pow(static_cast<unsigned>(k)));
            CHECK(stirling_d(n, k) == expected);
        }
}

TEST_CASE("integer counts agree with q = 1 evaluations") {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling_count_a(n, k) == stirling_a(n, k).eval_one());
            CHECK(stirling_count_b(n, k) == stirling_b(n, k).eval_one());
            CHECK(stirling_count_d(n, k) == stirling_d(n, k).eval_one());
            CHECK(stirling_count_r(3, n, k) == stirling_r(3, n, k).eval_one());
        }
    CHECK(stirling_count_a(4, 2) == 7);
    CHECK(stirling_count_b(2, 1) == 4);
}
