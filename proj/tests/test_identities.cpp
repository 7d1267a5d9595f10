#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qcomb/identities.hpp"
#include "qcomb/laurent.hpp"

using namespace qcomb;

TEST_CASE("registry structure") {
    const auto& reg = registry();
    CHECK(reg.size() >= 40);
    std::set<std::string> ids;
    for (const auto& e : reg) {
        CHECK(!e.id.empty());
        CHECK(!e.claim.empty());
        CHECK(!e.lhs_route.empty());
        CHECK(!e.rhs_route.empty());
        CHECK(e.grid != nullptr);
        CHECK(e.check != nullptr);
        CHECK(ids.insert(e.id).second);
    }
    // A sample of the documented ids must be present.
    for (const char* id :
         {"thm-main-B", "a-q", "cg-relation", "b-symmetry", "starred-product", "bfmaj-rec",
          "so-closed-form", "pssp-weight", "d-count", "b-from-a-q", "b-from-d-q", "btilde",
          "basis-A", "basis-B-q", "basis-D-q", "basis-bd-bridge", "basis-r-q", "genfun-r",
          "carlitz-r", "frobenius-r", "thm-main-r", "q-extension", "chu-vandermonde",
          "frobenius-A", "specialize-r1", "specialize-r2", "index-sums", "des-complement",
          "fmaj-deltas", "q-binom-theorem", "q-binom-negative"})
        CHECK(ids.count(id));
}

TEST_CASE("declared route disjointness is real") {
    for (const auto& e : registry()) {
        if (!e.routes_disjoint) continue;
        for (const auto& l : e.lhs_route)
            CHECK(std::find(e.rhs_route.begin(), e.rhs_route.end(), l) == e.rhs_route.end());
    }
}

TEST_CASE("hand-checked sample points") {
    IdentityReport r = verify("thm-main-B", Params{.n = 1, .k = 1});
    CHECK(r.equal);
    CHECK(r.lhs == "1 + q");
    CHECK(r.rhs == "1 + q");
    CHECK(r.witness.empty());

    IdentityReport basis = verify("basis-B-q", Params{.n = 2});
    CHECK(basis.equal);
    CHECK(basis.lhs == "(1)*t^2");

    IdentityReport cg = verify("cg-relation", Params{.n = 3, .k = 2});
    CHECK(cg.equal);
}

TEST_CASE("negative controls fail with a located witness") {
    const auto& entry = find_entry("thm-main-B-corrupted");
    CHECK(entry.negative_control);
    for (const Params& p : entry.grid(GridConfig{})) {
        IdentityReport r = entry.check(p);
        CHECK_FALSE(r.equal);
        CHECK(!r.witness.empty());
        CHECK(r.witness.find("q^") != std::string::npos);
    }
    const auto& basis = find_entry("basis-B-q-corrupted");
    for (const Params& p : basis.grid(GridConfig{})) CHECK_FALSE(basis.check(p).equal);
}

TEST_CASE("lookup and report serialization") {
    CHECK_THROWS_AS(find_entry("no-such-id"), UnknownIdentity);
    CHECK_THROWS_AS(verify("no-such-id", Params{}), UnknownIdentity);

    IdentityReport r = verify("thm-main-B", Params{.n = 2, .k = 1});
    CHECK(r.equal);
    std::string j = r.to_json();
    CHECK(j.find("\"id\":\"thm-main-B\"") != std::string::npos);
    CHECK(j.find("\"equal\":true") != std::string::npos);
    CHECK(j.find("\"witness\":\"\"") != std::string::npos);
    CHECK(j.find("\"lhs\"") != std::string::npos);
    CHECK(j.find("\"rhs\"") != std::string::npos);
    // The rendered sides parse back to the same polynomial.
    CHECK(LaurentPoly::parse(r.lhs) == LaurentPoly::parse(r.rhs));

    CHECK(Params{.n = 3, .k = 1}.to_string() == "n=3 k=1");
    CHECK(Params{.n = 2, .r = 3, .order = 8}.to_string() == "n=2 r=3 order=8");
}

TEST_CASE("verify_all on a reduced grid") {
    GridConfig small;
    small.max_n = 2;
    small.r_values = {1, 2};
    small.order = 4;

    auto reports = verify_all(small);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
        CHECK(r.equal);
        CHECK(r.witness.empty());
    }

    // Report order follows registry order.
    std::vector<std::string> order_seen;
    for (const auto& r : reports)
        if (order_seen.empty() || order_seen.back() != r.id) order_seen.push_back(r.id);
    std::vector<std::string> expected;
    for (const auto& e : registry()) {
        if (e.negative_control) continue;
        if (!e.grid(small).empty()) expected.push_back(e.id);
    }
    CHECK(order_seen == expected);

    auto with_controls = verify_all(small, /*include_negative_controls=*/true);
    int failures = 0;
    for (const auto& r : with_controls)
        if (!r.equal) ++failures;
    CHECK(failures > 0);
    for (const auto& r : with_controls)
        if (!r.equal)
            CHECK((r.id == "thm-main-B-corrupted" || r.id == "basis-B-q-corrupted"));
}

TEST_CASE("degenerate grid") {
    GridConfig zero;
    zero.max_n = 0;
    zero.order = 3;
    zero.r_values = {1, 2};
    for (const auto& r : verify_all(zero)) CHECK(r.equal);
}
