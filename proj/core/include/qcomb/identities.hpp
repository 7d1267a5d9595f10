#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcomb/laurent.hpp"

namespace qcomb {

// Instantiated parameters of one identity check. Unused fields stay at
// their sentinel (-1 for indices, 0 for r/order) and are omitted from the
// rendering.
struct Params {
    int n = -1;
    int k = -1;
    int ell = -1;
    int m = -1;
    int r = 0;
    int order = 0;

    std::string to_string() const;
};

struct IdentityReport {
    std::string id;
    Params params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    // First differing coefficient location, empty when equal.
    std::string witness;

    // {"id", "params", "equal", "lhs", "rhs", "witness"}; stable field
    // names are a compatibility contract for the CLI.
    std::string to_json() const;
};

// Grid overrides for verify_all and the CLI. max_n, when set, replaces the
// per-entry default bound on n; r_values and order apply to the entries
// that use them.
struct GridConfig {
    std::optional<int> max_n;
    std::vector<int> r_values{1, 2, 3, 4};
    int order = 8;
};

struct IdentityEntry {
    std::string id;
    std::string claim;
    // Distinguishing computation routes of each side, for the independence
    // discipline. Shared low-level polynomial arithmetic is not declared.
    std::vector<std::string> lhs_route;
    std::vector<std::string> rhs_route;
    // Entries whose two sides necessarily run through the same enumerator
    // or table (symmetries, involutions, element-wise statistics) set this
    // to false; everything else keeps disjoint routes.
    bool routes_disjoint = true;
    bool negative_control = false;
    std::function<std::vector<Params>(const GridConfig&)> grid;
    std::function<IdentityReport(const Params&)> check;
};

// All registered identities, in fixed registry order.
const std::vector<IdentityEntry>& registry();

// Lookup by id; throws UnknownIdentity.
const IdentityEntry& find_entry(const std::string& id);

// One check at explicit parameters.
IdentityReport verify(const std::string& id, const Params& params);

// Every non-control entry over its grid (controls included on request),
// reports in registry order then grid order.
std::vector<IdentityReport> verify_all(const GridConfig& config,
                                       bool include_negative_controls = false);

} // namespace qcomb
