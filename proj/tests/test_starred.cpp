#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qcomb/qfun.hpp"
#include "qcomb/starred.hpp"
#include "qcomb/stirling.hpp"

using namespace qcomb;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

StarredPerm SP(std::vector<int> window, std::set<int> stars = {}) {
    return make_starred(SignedPerm{std::move(window)}, std::move(stars));
}
}  // namespace

TEST_CASE("starred enumeration") {
    std::set<StarredPerm> size1_k0;
    for_each_starred(1, 0, [&](const StarredPerm& sp) { size1_k0.insert(sp); });
    CHECK(size1_k0 == std::set<StarredPerm>{SP({1}), SP({-1})});

    std::set<StarredPerm> size1_k1;
    for_each_starred(1, 1, [&](const StarredPerm& sp) { size1_k1.insert(sp); });
    CHECK(size1_k1 == std::set<StarredPerm>{SP({-1}, {0})});

    // (n, n): stars forced to the full descent set.
    int count = 0;
    for_each_starred(3, 3, [&](const StarredPerm& sp) {
        ++count;
        CHECK(sp.stars.size() == 3);
        CHECK(stats_b(sp.perm).des_b == 3);
    });
    CHECK(count > 0);
}

TEST_CASE("make_starred validates the star set") {
    CHECK_THROWS_AS(make_starred(SignedPerm{{1, 2}}, {1}), InvalidParams);
    CHECK_NOTHROW(make_starred(SignedPerm{{2, 1}}, {1}));
}

TEST_CASE("fmaj of a starred permutation") {
    CHECK(fmaj_starred(SP({-1}, {0})) == 0);
    for_each_bn(3, [&](const SignedPerm& pi) {
        CHECK(fmaj_starred(StarredPerm{pi, {}}) == stats_b(pi).fmaj);
    });
    StarredPerm big = SP({4, 3, -1, 7, -2, -6, 8, -5}, {1, 2, 4, 7});
    CHECK(stats_b(big.perm).fmaj == 42);
    CHECK(fmaj_starred(big) == 20);
}

TEST_CASE("fmaj labelling") {
    // Gap labels of 4 3* 1bar* 7 2bar* 6bar 8 5bar*: label 0 at gap 8,
    // the unstarred descent 5 takes 1, then gaps 0, 3, 6 left to right.
    StarredPerm big = SP({4, 3, -1, 7, -2, -6, 8, -5}, {1, 2, 4, 7});
    CHECK(fmaj_labelling(big) == std::vector<int>{8, 5, 0, 3, 6});

    CHECK(fmaj_labelling(SP({1})) == std::vector<int>{1, 0});

    // All descents starred: label 0 at gap n, ascent gaps front to back.
    StarredPerm all = SP({2, -1, 3}, {1});
    CHECK(fmaj_labelling(all) == std::vector<int>{3, 0, 2});
}

TEST_CASE("insertion maps on the n = 1 seed") {
    StarredPerm seed = SP({1});

    StarredPerm a = insert_bar(1, 1, seed);
    CHECK(a == SP({2, 1}));
    CHECK(fmaj_starred(a) == 2);

    StarredPerm b = insert_bar(-1, 1, seed);
    CHECK(b == SP({-2, 1}));
    CHECK(fmaj_starred(b) == 1);

    StarredPerm c = insert_bar(-1, 0, seed);
    CHECK(c == SP({1, -2}));
    CHECK(fmaj_starred(c) == 3);

    StarredPerm d = insert_star(1, 1, seed);
    CHECK(d == SP({2, 1}, {1}));
    CHECK(fmaj_starred(d) == 1);

    StarredPerm e = insert_star(-1, 1, seed);
    CHECK(e == SP({-2, 1}, {0}));
    CHECK(fmaj_starred(e) == 0);

    StarredPerm f = insert_star(-1, 0, seed);
    CHECK(f == SP({1, -2}, {1}));
    CHECK(fmaj_starred(f) == 2);

    CHECK_THROWS_AS(insert_bar(1, 2, seed), InvalidLabel);
    CHECK_THROWS_AS(insert_bar(1, -1, seed), InvalidLabel);
    CHECK_THROWS_AS(insert_star(1, 0, seed), InvalidLabel);
    CHECK_THROWS_AS(insert_star(-1, 2, seed), InvalidLabel);
}

TEST_CASE("bfmaj polynomials") {
    auto row1 = bfmaj_row(1);
    REQUIRE(row1.size() == 2);
    CHECK(row1[0] == P("1 + q"));
    CHECK(row1[1] == P("1"));
    CHECK(bfmaj_enum(1, 0) == P("1 + q"));
    CHECK(bfmaj_enum(2, 3).is_zero());

    // Star-choice count at q = 1.
    for (unsigned n = 1; n <= 4; ++n) {
        auto row = bfmaj_row(n);
        std::vector<Int> counts(n + 1, 0);
        for_each_bn(n, [&](const SignedPerm& pi) {
            int d = stats_b(pi).des_b;
            for (int k = 0; k <= d; ++k) counts[static_cast<std::size_t>(k)] +=
                binomial(static_cast<unsigned>(d), k);
        });
        for (unsigned k = 0; k <= n; ++k) CHECK(row[k].eval_one() == counts[k]);
    }
}

TEST_CASE("bfmaj recurrence and ordered Stirling closed form") {
    CHECK(bfmaj_rec(1, 0) == P("1 + q"));
    CHECK(bfmaj_rec(2, -1).is_zero());
    for (int n = 0; n <= 5; ++n) {
        auto row = bfmaj_row(static_cast<unsigned>(n));
        for (int k = 0; k <= n; ++k) {
            CHECK(bfmaj_rec(n, k) == row[static_cast<std::size_t>(k)]);
            CHECK(ordered_stirling_b(n, k) == row[static_cast<std::size_t>(n - k)]);
        }
    }

    CHECK(ordered_stirling_b(0, 0) == P("1"));
    CHECK(ordered_stirling_b(1, 1) == P("1 + q"));
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(ordered_stirling_b(n, k) ==
                  q_int(2).pow(static_cast<unsigned>(k)) *
                      q_factorial(static_cast<unsigned>(k)).subst_q_power(2) *
                      stirling_b(n, k));
}

TEST_CASE("ordered sign partition encoding") {
    OrderedSignPartition p{{{0, -3, -1, -4}, {-2, 7}, {-6}, {8, -5}}};
    StarredPerm sp = partition_to_starred(p);
    CHECK(sp.perm == SignedPerm{{-1, -3, -4, 7, -2, -6, 8, -5}});
    CHECK(sp.stars == std::set<int>{0, 1, 2, 4, 7});
    CHECK(starred_to_partition(sp) ==
          OrderedSignPartition{{{0, -1, -3, -4}, {7, -2}, {-6}, {8, -5}}});

    OrderedSignPartition singles{{{0}, {1}, {2}, {3}}};
    StarredPerm id = partition_to_starred(singles);
    CHECK(id.perm == SignedPerm{{1, 2, 3}});
    CHECK(id.stars.empty());

    for (unsigned k = 0; k <= 4; ++k)
        for_each_starred(4, k, [&](const StarredPerm& s) {
            CHECK(partition_to_starred(starred_to_partition(s)) == s);
        });

    CHECK_THROWS_AS(partition_to_starred({{{1}, {2}}}), InvalidPartition);
    CHECK_THROWS_AS(partition_to_starred({{{0, 1}}}), InvalidPartition);
    CHECK_THROWS_AS(partition_to_starred({{{0}, {1}, {1}}}), InvalidPartition);
    CHECK_THROWS_AS(partition_to_starred({{{0}, {}}}), InvalidPartition);
    CHECK_THROWS_AS(partition_to_starred({{{0}, {3}}}), InvalidPartition);
}

TEST_CASE("rendering") {
    CHECK(SP({-2, 1}, {0}).to_string() == "0* -2 1");
    CHECK(SP({2, 1}, {1}).to_string() == "2* 1");
}
