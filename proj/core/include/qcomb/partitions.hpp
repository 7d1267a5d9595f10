#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcomb/laurent.hpp"
#include "qcomb/starred.hpp"

namespace qcomb {

// Partial standard signed partition: disjoint blocks of signed letters with
// distinct absolute values, ordered by the minimum absolute value of each
// block. A Pssp covering all of [n] in absolute value is an SSP.
struct Pssp {
    // Blocks in canonical order; elements stored descending in the natural
    // order for rendering.
    std::vector<std::vector<int>> blocks;

    unsigned k() const { return static_cast<unsigned>(blocks.size()); }
    bool operator==(const Pssp& o) const = default;
    auto operator<=>(const Pssp& o) const = default;
    std::string to_string() const;
};

// Type B set partition of <n>: a symmetric zero block containing 0 plus
// paired blocks {T, -T}. Each pair is stored by the representative whose
// minimal-absolute-value element is positive.
struct TypeBPartition {
    std::vector<int> zero_block;              // symmetric, contains 0
    std::vector<std::vector<int>> pair_reps;  // canonical representatives

    bool operator==(const TypeBPartition& o) const = default;

    // Zero block is {0} or has at least two positive elements
    // (equivalently #T_0 != 3 given symmetry).
    bool is_type_d() const;
};

struct MStat {
    long m = 0;
    int pos = 0;
};

// pos = positive entries across blocks; m = 2 * sum_i i*|S_i| - pos.
MStat m_stat(const Pssp& p);

// All PSSPs of [n] with k blocks (the set B_subset([n], k)), deterministic:
// covered subsets ascend by bitmask, unsigned partitions in lexicographic
// block-assignment order, then sign words ascend.
void for_each_pssp(unsigned n, unsigned k, const std::function<void(const Pssp&)>& fn);

// All SSPs covering exactly the given positive letters.
void for_each_ssp(const std::vector<int>& letters, unsigned k,
                  const std::function<void(const Pssp&)>& fn);

// PSSPs of [n] whose uncovered letter set has size != 1 (the D_subset set).
void for_each_d_subset(unsigned n, unsigned k, const std::function<void(const Pssp&)>& fn);

void for_each_type_b_partition(unsigned n, unsigned k,
                               const std::function<void(const TypeBPartition&)>& fn);

// Ordered signed partitions (T_0, T_1, ..., T_2k) of <n>, emitted through
// the equivalent (S_0, ..., S_k) form of OrderedSignPartition.
void for_each_ordered_signed(unsigned n, unsigned k,
                             const std::function<void(const OrderedSignPartition&)>& fn);

// Sum of q^m over B_subset([n], k); equals q^(k^2) [2]^k S_B[n,k].
LaurentPoly pssp_weight(unsigned n, unsigned k);

// Sum of q^m over D_subset([n], k).
LaurentPoly d_subset_weight(unsigned n, unsigned k);

// Sum of q^m over full SSPs of [n] with k blocks (the B-tilde polynomial).
LaurentPoly btilde_enum(unsigned n, unsigned k);

} // namespace qcomb
