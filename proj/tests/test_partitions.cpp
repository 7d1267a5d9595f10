#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "qcomb/partitions.hpp"
#include "qcomb/qfun.hpp"
#include "qcomb/stirling.hpp"

using namespace qcomb;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

template <typename Enum>
int count_of(Enum&& enumerate) {
    int c = 0;
    enumerate([&](const auto&) { ++c; });
    return c;
}
}  // namespace

TEST_CASE("m statistic") {
    CHECK(m_stat(Pssp{{{1}}}).m == 1);
    CHECK(m_stat(Pssp{{{1}}}).pos == 1);
    CHECK(m_stat(Pssp{{{-1}}}).m == 2);
    CHECK(m_stat(Pssp{{{-1}}}).pos == 0);
    CHECK(m_stat(Pssp{{{2, -1}}}).m == 3);
    CHECK(m_stat(Pssp{{{2, -1}}}).pos == 1);
    CHECK(m_stat(Pssp{}).m == 0);
}

TEST_CASE("signed partition enumeration") {
    std::set<Pssp> ssp1;
    for_each_ssp({1}, 1, [&](const Pssp& p) { ssp1.insert(p); });
    CHECK(ssp1 == std::set<Pssp>{Pssp{{{1}}}, Pssp{{{-1}}}});
    CHECK_THROWS_AS(for_each_ssp({0, 1}, 1, [](const Pssp&) {}), InvalidParams);

    std::set<Pssp> pssp1;
    for_each_pssp(1, 1, [&](const Pssp& p) { pssp1.insert(p); });
    CHECK(pssp1 == ssp1);

    CHECK(count_of([](auto fn) { for_each_pssp(3, 0, fn); }) == 1);
    // Every block keeps distinct absolute values and min-abs ordering.
    for_each_pssp(4, 2, [&](const Pssp& p) {
        REQUIRE(p.blocks.size() == 2);
        int prev_min = 0;
        for (const auto& b : p.blocks) {
            REQUIRE(!b.empty());
            int mn = 1 << 20;
            std::set<int> abses;
            for (int v : b) {
                abses.insert(v < 0 ? -v : v);
                mn = std::min(mn, v < 0 ? -v : v);
            }
            CHECK(abses.size() == b.size());
            CHECK(mn > prev_min);
            prev_min = mn;
        }
    });
}

TEST_CASE("type B partitions") {
    CHECK(count_of([](auto fn) { for_each_type_b_partition(2, 1, fn); }) == 4);
    CHECK(count_of([](auto fn) { for_each_type_b_partition(3, 0, fn); }) == 1);
    CHECK(count_of([](auto fn) { for_each_type_b_partition(3, 3, fn); }) == 1);
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(count_of([&](auto fn) { for_each_type_b_partition(n, k, fn); }) ==
                  stirling_count_b(static_cast<int>(n), static_cast<int>(k)));

    // Type D predicate: both printed formulations agree on every partition.
    for (unsigned k = 0; k <= 4; ++k)
        for_each_type_b_partition(4, k, [](const TypeBPartition& t) {
            CHECK_NOTHROW(static_cast<void>(t.is_type_d()));
        });
    CHECK(TypeBPartition{{0}, {}}.is_type_d());
    CHECK_FALSE(TypeBPartition{{-1, 0, 1}, {}}.is_type_d());
}

TEST_CASE("D-subset enumeration") {
    CHECK(count_of([](auto fn) { for_each_d_subset(2, 1, fn); }) == 4);
    CHECK(count_of([](auto fn) { for_each_d_subset(1, 0, fn); }) == 0);
    for (unsigned n = 0; n <= 5; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            Int type_d = 0;
            for_each_type_b_partition(n, k, [&](const TypeBPartition& t) {
                if (t.is_type_d()) ++type_d;
            });
            CHECK(count_of([&](auto fn) { for_each_d_subset(n, k, fn); }) ==
                  (Int(1) << k) * type_d);
            CHECK(type_d == stirling_count_d(static_cast<int>(n), static_cast<int>(k)));
        }
}

TEST_CASE("ordered signed partitions") {
    std::set<OrderedSignPartition> seq;
    for_each_ordered_signed(1, 1, [&](const OrderedSignPartition& p) { seq.insert(p); });
    CHECK(seq == std::set<OrderedSignPartition>{OrderedSignPartition{{{0}, {1}}},
                                                OrderedSignPartition{{{0}, {-1}}}});
    CHECK(count_of([](auto fn) { for_each_ordered_signed(2, 0, fn); }) == 1);
    CHECK(count_of([](auto fn) { for_each_ordered_signed(2, 1, fn); }) == 8);
}

TEST_CASE("weight polynomials") {
    CHECK(pssp_weight(3, 0) == P("1"));
    CHECK(pssp_weight(1, 1) == P("q + q^2"));
    CHECK(pssp_weight(2, 1) ==
          LaurentPoly::q() * P("1 + q") * stirling_b(2, 1));
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(pssp_weight(n, k) == LaurentPoly::monomial(1, static_cast<int>(k * k)) *
                                           q_int(2).pow(k) * stirling_b(static_cast<int>(n),
                                                                        static_cast<int>(k)));

    CHECK(btilde_enum(1, 1) == P("q + q^2"));
    CHECK(d_subset_weight(1, 0).is_zero());
    CHECK(d_subset_weight(2, 1).eval_one() == 4);
}
