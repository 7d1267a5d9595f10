#pragma once

#include <set>
#include <string>
#include <vector>

#include "qcomb/groups.hpp"

namespace qcomb {

// Descent-starred signed permutation: a signed permutation together with a
// set of starred type-B descent positions (position 0 allowed). Gap i is
// the space after pi_i for i in {0, ..., n}, with gap 0 sitting after the
// implicit 0; only descent gaps may carry stars, and gap n never does.
struct StarredPerm {
    SignedPerm perm;
    std::set<int> stars;

    int n() const { return perm.n(); }
    bool operator==(const StarredPerm& o) const = default;
    auto operator<=>(const StarredPerm& o) const = default;
    std::string to_string() const;
};

// Validating constructor; throws InvalidParams when stars are not a subset
// of the type B descent set.
StarredPerm make_starred(SignedPerm perm, std::set<int> stars);

// All (pi, S) with |S| = k, each exactly once, in the B_n enumeration order
// with star subsets in ascending bitmask order of the descent list.
void for_each_starred(unsigned n, unsigned k, const std::function<void(const StarredPerm&)>& fn,
                      const EnumCaps& caps = kDefaultCaps);

// fmaj(pi) minus, for each starred gap j, twice the number of descents at
// position >= j less one.
int fmaj_starred(const StarredPerm& sp);

// The fmaj-labelling: gap_of_label[i] is the gap carrying label i. Starred
// gaps are unlabelled. Label 0 is the rightmost gap n; unstarred descent
// gaps then take 1, 2, ... right to left; the remaining unstarred gaps take
// the following labels left to right.
std::vector<int> fmaj_labelling(const StarredPerm& sp);

// Insertion maps. `letter` is +1 for the new largest letter n and -1 for
// its negative; sp ranges over size n-1 and the result over size n.
// insert_bar keeps the star count; insert_star stars the rightmost descent
// of the result. Label ranges are validated strictly.
StarredPerm insert_bar(int letter, int label, const StarredPerm& sp);
StarredPerm insert_star(int letter, int label, const StarredPerm& sp);

// B^fmaj_{n,k}(q) by exhaustive enumeration; bfmaj_row gives all k at once
// from a single sweep of B_n.
std::vector<LaurentPoly> bfmaj_row(unsigned n, const EnumCaps& caps = kDefaultCaps);
LaurentPoly bfmaj_enum(unsigned n, unsigned k, const EnumCaps& caps = kDefaultCaps);

// B^fmaj_{n,k}(q) by the recurrence
//   [2n-2k]_q B^fmaj_{n-1,k} + [2n-2k+1]_q B^fmaj_{n-1,k-1},
// with value 1 at k = n and 0 outside 0 <= k <= n.
LaurentPoly bfmaj_rec(int n, int k);

// S^o_B[n,k] = [2k]_q S^o_B[n-1,k-1] + [2k+1]_q S^o_B[n-1,k], delta at n=0.
LaurentPoly ordered_stirling_b(int n, int k);

// Ordered set partition with sign (S_0, S_1, ..., S_k): S_0 holds 0 and
// only non-positive entries; S_1..S_k are nonempty; absolute values other
// than 0 are distinct and cover [n].
struct OrderedSignPartition {
    std::vector<std::vector<int>> parts;

    bool operator==(const OrderedSignPartition& o) const = default;
    auto operator<=>(const OrderedSignPartition& o) const = default;
    std::string to_string() const;
};

// Mutually inverse encodings between ordered set partitions with sign and
// descent-starred signed permutations: each part is written in decreasing
// natural order and every within-part gap is starred.
StarredPerm partition_to_starred(const OrderedSignPartition& p);
OrderedSignPartition starred_to_partition(const StarredPerm& sp);

} // namespace qcomb
