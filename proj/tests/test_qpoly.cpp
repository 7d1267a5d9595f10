#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcomb/qfun.hpp"
#include "qcomb/tseries.hpp"

using namespace qcomb;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("laurent canonical form and arithmetic") {
    CHECK(LaurentPoly().is_zero());
    CHECK(LaurentPoly(0).is_zero());
    CHECK((LaurentPoly(3) - LaurentPoly(3)).is_zero());

    LaurentPoly p = P("1 + q");
    CHECK(p * p == P("1 + 2*q + q^2"));
    CHECK(p - p == LaurentPoly());
    CHECK(-p == P("-1 - q"));
    CHECK(p.pow(0) == LaurentPoly(1));
    CHECK(p.pow(3) == P("1 + 3*q + 3*q^2 + q^3"));
    CHECK(LaurentPoly::monomial(2, -1) * LaurentPoly::q() == LaurentPoly(2));

    LaurentPoly lp = P("q^-2 + q^2");
    CHECK(lp.min_exp() == -2);
    CHECK(lp.max_exp() == 2);
    CHECK(lp.coeff(2) == 1);
    CHECK(lp.coeff(0) == 0);
    CHECK(lp.eval_one() == 2);
}

TEST_CASE("laurent text round trip") {
    const char* samples[] = {"0",      "1",           "-1",           "q",
                             "2*q",    "1 + 2*q + q^3", "q^-2 + q^2", "-3 + q - 2*q^5",
                             "5*q^-7", "1 - q"};
    for (const char* s : samples) {
        LaurentPoly p = LaurentPoly::parse(s);
        CHECK(p.to_string() == s);
        CHECK(LaurentPoly::parse(p.to_string()) == p);
    }
    CHECK_THROWS_AS(LaurentPoly::parse(""), InvalidParams);
    CHECK_THROWS_AS(LaurentPoly::parse("q +"), InvalidParams);
    CHECK_THROWS_AS(LaurentPoly::parse("2q"), InvalidParams);
    CHECK_THROWS_AS(LaurentPoly::parse("x^2"), InvalidParams);
    CHECK_THROWS_AS(LaurentPoly::parse("q^"), InvalidParams);
}

TEST_CASE("q-integers, factorials, binomials") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == LaurentPoly(1));
    CHECK(q_int(3) == P("1 + q + q^2"));

    CHECK(q_factorial(0) == LaurentPoly(1));
    CHECK(q_factorial(2) == P("1 + q"));
    CHECK(q_factorial(3) == P("1 + 2*q + 2*q^2 + q^3"));

    for (unsigned n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == LaurentPoly(1));
    CHECK(q_binomial(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(q_binomial(3, 5).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    // Factorial quotient definition, cross-checked against the Pascal rule.
    for (unsigned n = 0; n <= 8; ++n)
        for (int k = 0; k <= static_cast<int>(n); ++k)
            CHECK(q_binomial(n, k) * q_factorial(static_cast<unsigned>(k)) *
                      q_factorial(n - static_cast<unsigned>(k)) ==
                  q_factorial(n));

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
}

TEST_CASE("substitution q -> q^r") {
    CHECK(P("1 + q").subst_q_power(2) == P("1 + q^2"));
    CHECK(P("q^-1 + q").subst_q_power(3) == P("q^-3 + q^3"));
    CHECK(q_int(3).subst_q_power(2) == P("1 + q^2 + q^4"));
    CHECK(q_binomial_base(4, 2, 2) == q_binomial(4, 2).subst_q_power(2));
}

TEST_CASE("exact division") {
    CHECK(div_exact(P("1 + 2*q + q^2"), P("1 + q")) == P("1 + q"));
    CHECK(div_exact(P("q^3 + q^4"), P("q")) == P("q^2 + q^3"));
    CHECK_THROWS_AS(div_exact(P("1 + q + q^2"), P("1 + q")), NotDivisible);
    CHECK_THROWS_AS(div_exact(P("1"), LaurentPoly()), InvalidParams);
    CHECK(div_exact(LaurentPoly(), P("1 + q")).is_zero());
    // Randomized-free structural property: (a*b)/b == a on a small grid.
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = 1; j <= 4; ++j)
            CHECK(div_exact(q_int(i) * q_factorial(j), q_factorial(j)) == q_int(i));
}

TEST_CASE("falling factorial families") {
    const TPoly t = TPoly::t();
    CHECK(falling_factorial(FallingKind::b(), 5, 1) == t - TPoly(1));
    CHECK(falling_factorial(FallingKind::d(), 2, 2) == (t - TPoly(1)) * (t - TPoly(1)));
    for (unsigned k = 0; k <= 4; ++k)
        CHECK(falling_factorial(FallingKind::colored(2), 6, k) ==
              falling_factorial(FallingKind::b(), 6, k));
    // D agrees with B strictly below the diagonal.
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned k = 0; k < n; ++k)
            CHECK(falling_factorial(FallingKind::d(), n, k) ==
                  falling_factorial(FallingKind::b(), n, k));
    CHECK(falling_factorial(FallingKind::a(), 4, 2) == t * (t - TPoly(1)));
    CHECK_THROWS_AS(falling_factorial(FallingKind::d(), 2, 3), InvalidParams);
    CHECK_THROWS_AS(falling_factorial(FallingKind::colored(0), 2, 1), InvalidParams);
}

TEST_CASE("t-polynomials") {
    TPoly p = TPoly::monomial(LaurentPoly::q(), 2) + TPoly(1);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == LaurentPoly::q());
    CHECK(p.coeff(5).is_zero());
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.to_string() == "(1) + (q)*t^2");
    CHECK(p.eval(LaurentPoly(1)) == P("1 + q"));
    CHECK((TPoly::t() - TPoly(1)).pow(2) == TPoly::monomial(LaurentPoly(1), 2) -
                                                TPoly::monomial(LaurentPoly(2), 1) + TPoly(1));
}

TEST_CASE("truncated series") {
    TPoly one_minus_t = TPoly(1) - TPoly::t();
    TPoly one_minus_tq = TPoly(1) - TPoly::monomial(LaurentPoly::q(), 1);

    TSeries geo = series_from_rational(TPoly(1), {one_minus_t}, 3);
    TSeries expect(3);
    expect.coeff(0) = LaurentPoly(1);
    expect.coeff(1) = LaurentPoly(1);
    expect.coeff(2) = LaurentPoly(1);
    CHECK(geo == expect);

    TSeries two = series_from_rational(TPoly(1), {one_minus_t, one_minus_tq}, 2);
    TSeries expect2(2);
    expect2.coeff(0) = LaurentPoly(1);
    expect2.coeff(1) = P("1 + q");
    CHECK(two == expect2);

    TSeries shifted = series_from_rational(TPoly::t(), {one_minus_t}, 2);
    TSeries expect3(2);
    expect3.coeff(1) = LaurentPoly(1);
    CHECK(shifted == expect3);

    // Inverse really inverts.
    TSeries s(TPoly(1) - TPoly::monomial(P("q^2"), 1), 6);
    CHECK(s * s.inverse() == TSeries(TPoly(1), 6));

    CHECK_THROWS_AS(TSeries(TPoly(1), 3) + TSeries(TPoly(1), 4), InvalidParams);
    CHECK_THROWS_AS(TSeries(TPoly(2), 3).inverse(), InvalidParams);
    CHECK_THROWS_AS(series_from_rational(TPoly(1), {TPoly::t()}, 3), InvalidParams);
}
