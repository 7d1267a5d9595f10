#include "qcomb/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcomb/errors.hpp"

namespace qcomb {

std::string Pssp::to_string() const {
    std::ostringstream out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) out << ' ';
        out << '{';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out << ',';
            out << blocks[b][i];
        }
        out << '}';
    }
    return out.str();
}

bool TypeBPartition::is_type_d() const {
    int positives = 0;
    for (int v : zero_block)
        if (v > 0) ++positives;
    bool by_positives = zero_block.size() == 1 || positives >= 2;
    bool by_cardinality = zero_block.size() != 3;
    if (by_positives != by_cardinality)
        throw std::logic_error("type D predicate formulations disagree");
    return by_positives;
}

MStat m_stat(const Pssp& p) {
    MStat s;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        s.m += 2 * static_cast<long>(i + 1) * static_cast<long>(p.blocks[i].size());
        for (int v : p.blocks[i])
            if (v > 0) ++s.pos;
    }
    s.m -= s.pos;
    return s;
}

namespace {

// Unsigned set partitions of `letters` (ascending) into exactly k blocks,
// in lexicographic block-assignment order; blocks are ordered by their
// minimal element. For each, all 2^|letters| sign words.
void emit_signed_partitions(const std::vector<int>& letters, unsigned k,
                            const std::function<void(const Pssp&)>& fn) {
    const std::size_t n = letters.size();
    if (k == 0) {
        if (n == 0) fn(Pssp{});
        return;
    }
    if (n < k) return;
    std::vector<int> assign(n, 0);

    auto emit_signs = [&](const std::vector<std::vector<std::size_t>>& blocks) {
        Pssp p;
        p.blocks.resize(blocks.size());
        for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                auto& out = p.blocks[b];
                out.clear();
                for (std::size_t idx : blocks[b]) {
                    bool negative = (mask >> idx) & 1ULL;
                    out.push_back(negative ? -letters[idx] : letters[idx]);
                }
                std::sort(out.begin(), out.end(), std::greater<int>());
            }
            fn(p);
        }
    };

    std::vector<std::vector<std::size_t>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == n) {
            if (blocks.size() == k) emit_signs(blocks);
            return;
        }
        if (n - idx < k - blocks.size()) return;  // cannot reach k blocks
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(idx);
            rec(idx + 1);
            blocks[b].pop_back();
        }
        if (blocks.size() < k) {
            blocks.push_back({idx});
            rec(idx + 1);
            blocks.pop_back();
        }
    };
    rec(0);
}

} // namespace

void for_each_ssp(const std::vector<int>& letters, unsigned k,
                  const std::function<void(const Pssp&)>& fn) {
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted)
        if (v <= 0) throw InvalidParams("for_each_ssp: letters must be positive");
    emit_signed_partitions(sorted, k, fn);
}

void for_each_pssp(unsigned n, unsigned k, const std::function<void(const Pssp&)>& fn) {
    for (unsigned long long subset = 0; subset < (1ULL << n); ++subset) {
        std::vector<int> letters;
        for (unsigned i = 0; i < n; ++i)
            if ((subset >> i) & 1ULL) letters.push_back(static_cast<int>(i) + 1);
        emit_signed_partitions(letters, k, fn);
    }
}

void for_each_d_subset(unsigned n, unsigned k, const std::function<void(const Pssp&)>& fn) {
    for_each_pssp(n, k, [&](const Pssp& p) {
        std::size_t covered = 0;
        for (const auto& b : p.blocks) covered += b.size();
        if (covered + 1 != static_cast<std::size_t>(n)) fn(p);
    });
}

void for_each_type_b_partition(unsigned n, unsigned k,
                               const std::function<void(const TypeBPartition&)>& fn) {
    for_each_pssp(n, k, [&](const Pssp& p) {
        // Keep the canonical pair representative: the minimal-absolute
        // letter of every block must be positive.
        std::vector<bool> covered(n + 1, false);
        for (const auto& b : p.blocks) {
            int min_abs_entry = 0;
            int best = 0;
            for (int v : b) {
                covered[static_cast<std::size_t>(std::abs(v))] = true;
                if (best == 0 || std::abs(v) < best) {
                    best = std::abs(v);
                    min_abs_entry = v;
                }
            }
            if (min_abs_entry < 0) return;
        }
        TypeBPartition t;
        for (int i = static_cast<int>(n); i >= 1; --i)
            if (!covered[static_cast<std::size_t>(i)]) t.zero_block.push_back(-i);
        t.zero_block.push_back(0);
        for (int i = 1; i <= static_cast<int>(n); ++i)
            if (!covered[static_cast<std::size_t>(i)]) t.zero_block.push_back(i);
        t.pair_reps = p.blocks;
        fn(t);
    });
}

void for_each_ordered_signed(unsigned n, unsigned k,
                             const std::function<void(const OrderedSignPartition&)>& fn) {
    for_each_pssp(n, k, [&](const Pssp& p) {
        std::vector<bool> covered(n + 1, false);
        for (const auto& b : p.blocks)
            for (int v : b) covered[static_cast<std::size_t>(std::abs(v))] = true;
        std::vector<int> zero_part{0};
        for (int i = 1; i <= static_cast<int>(n); ++i)
            if (!covered[static_cast<std::size_t>(i)]) zero_part.push_back(-i);

        std::vector<std::size_t> order(p.blocks.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            OrderedSignPartition osp;
            osp.parts.push_back(zero_part);
            for (std::size_t b : order) osp.parts.push_back(p.blocks[b]);
            fn(osp);
        } while (std::next_permutation(order.begin(), order.end()));
    });
}

namespace {

LaurentPoly weight_sum(unsigned n, unsigned k,
                       void (*enumerate)(unsigned, unsigned,
                                         const std::function<void(const Pssp&)>&)) {
    LaurentPoly sum;
    enumerate(n, k, [&](const Pssp& p) { sum.add_term(1, static_cast<int>(m_stat(p).m)); });
    return sum;
}

} // namespace

LaurentPoly pssp_weight(unsigned n, unsigned k) { return weight_sum(n, k, &for_each_pssp); }

LaurentPoly d_subset_weight(unsigned n, unsigned k) { return weight_sum(n, k, &for_each_d_subset); }

LaurentPoly btilde_enum(unsigned n, unsigned k) {
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 1);
    LaurentPoly sum;
    for_each_ssp(letters, k, [&](const Pssp& p) { sum.add_term(1, static_cast<int>(m_stat(p).m)); });
    return sum;
}

} // namespace qcomb
