#include "qcomb/starred.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qcomb/errors.hpp"
#include "qcomb/qfun.hpp"

namespace qcomb {

std::string StarredPerm::to_string() const {
    std::ostringstream out;
    if (stars.count(0)) out << "0* ";
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) out << ' ';
        out << perm.at(i);
        if (stars.count(i)) out << '*';
    }
    return out.str();
}

StarredPerm make_starred(SignedPerm perm, std::set<int> stars) {
    StatsB s = stats_b(perm);
    for (int j : stars) {
        if (!std::binary_search(s.des_set.begin(), s.des_set.end(), j))
            throw InvalidParams("make_starred: star at non-descent position " + std::to_string(j));
    }
    return StarredPerm{std::move(perm), std::move(stars)};
}

void for_each_starred(unsigned n, unsigned k, const std::function<void(const StarredPerm&)>& fn,
                      const EnumCaps& caps) {
    for_each_bn(n, [&](const SignedPerm& pi) {
        StatsB s = stats_b(pi);
        const unsigned d = static_cast<unsigned>(s.des_set.size());
        if (k > d) return;
        for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
            if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
            StarredPerm sp{pi, {}};
            for (unsigned b = 0; b < d; ++b)
                if ((mask >> b) & 1ULL) sp.stars.insert(s.des_set[b]);
            fn(sp);
        }
    }, caps);
}

int fmaj_starred(const StarredPerm& sp) {
    StatsB s = stats_b(sp.perm);
    int v = s.fmaj;
    for (int j : sp.stars) {
        auto it = std::lower_bound(s.des_set.begin(), s.des_set.end(), j);
        int tail = static_cast<int>(s.des_set.end() - it);
        v -= 2 * tail - 1;
    }
    return v;
}

std::vector<int> fmaj_labelling(const StarredPerm& sp) {
    const int n = sp.n();
    StatsB s = stats_b(sp.perm);
    std::vector<bool> is_descent(static_cast<std::size_t>(n) + 1, false);
    for (int d : s.des_set) is_descent[static_cast<std::size_t>(d)] = true;
    std::vector<int> gaps;
    gaps.push_back(n);
    for (int g = n - 1; g >= 0; --g)
        if (is_descent[static_cast<std::size_t>(g)] && !sp.stars.count(g)) gaps.push_back(g);
    for (int g = 0; g < n; ++g)
        if (!is_descent[static_cast<std::size_t>(g)]) gaps.push_back(g);
    return gaps;
}

namespace {

// Shared mechanics of both insertion maps: insert the letter at the gap
// carrying `label`, then re-seat every star that sat right of the
// insertion onto the previous descent of the new permutation.
StarredPerm insert_at_label(int letter, int label, const StarredPerm& sp) {
    const int m = sp.n();
    const int value = letter > 0 ? m + 1 : -(m + 1);
    std::vector<int> gaps = fmaj_labelling(sp);
    const int g = gaps.at(static_cast<std::size_t>(label));

    SignedPerm out{std::vector<int>()};
    out.window.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= g; ++i) out.window.push_back(sp.perm.at(i));
    out.window.push_back(value);
    for (int i = g + 1; i <= m; ++i) out.window.push_back(sp.perm.at(i));

    StatsB s = stats_b(out);
    std::set<int> stars;
    for (int j : sp.stars) {
        if (j < g) {
            stars.insert(j);
        } else {
            // Shifted star would sit at j + 1; move it one descent left.
            auto it = std::lower_bound(s.des_set.begin(), s.des_set.end(), j + 1);
            stars.insert(*std::prev(it));
        }
    }
    return make_starred(std::move(out), std::move(stars));
}

} // namespace

StarredPerm insert_bar(int letter, int label, const StarredPerm& sp) {
    const int m = sp.n();
    const int k = static_cast<int>(sp.stars.size());
    const int max_label = m - k;  // labels 0 .. (m+1) - k - 1
    if (label < 0 || label > max_label)
        throw InvalidLabel("insert_bar: label " + std::to_string(label) + " outside [0, " +
                           std::to_string(max_label) + "]");
    return insert_at_label(letter, label, sp);
}

StarredPerm insert_star(int letter, int label, const StarredPerm& sp) {
    const int m = sp.n();
    const int k = static_cast<int>(sp.stars.size()) + 1;  // stars in the target
    const int max_label = m + 1 - k;
    const int min_label = letter > 0 ? 1 : 0;
    if (label < min_label || label > max_label)
        throw InvalidLabel("insert_star: label " + std::to_string(label) + " outside [" +
                           std::to_string(min_label) + ", " + std::to_string(max_label) + "]");
    StarredPerm out = insert_at_label(letter, label, sp);
    StatsB s = stats_b(out.perm);
    const int rightmost = s.des_set.back();
    if (out.stars.count(rightmost))
        throw InvalidLabel("insert_star: rightmost descent already starred");
    out.stars.insert(rightmost);
    return out;
}

std::vector<LaurentPoly> bfmaj_row(unsigned n, const EnumCaps& caps) {
    // Dense per-exponent accumulation: fmaj((pi,S)) lies in [0, n^2 + n].
    const std::size_t width = static_cast<std::size_t>(n) * n + n + 1;
    std::vector<std::vector<Int>> acc(n + 1, std::vector<Int>(width, Int(0)));
    for_each_bn(n, [&](const SignedPerm& pi) {
        StatsB s = stats_b(pi);
        const unsigned d = static_cast<unsigned>(s.des_set.size());
        std::vector<int> weight(d);
        for (unsigned b = 0; b < d; ++b) weight[b] = 2 * static_cast<int>(d - b) - 1;
        for (unsigned long long mask = 0; mask < (1ULL << d); ++mask) {
            int sub = 0;
            for (unsigned long long rest = mask; rest;) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(rest));
                sub += weight[b];
                rest &= rest - 1;
            }
            unsigned k = static_cast<unsigned>(__builtin_popcountll(mask));
            ++acc[k][static_cast<std::size_t>(s.fmaj - sub)];
        }
    }, caps);
    std::vector<LaurentPoly> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) row[k] = LaurentPoly::from_dense(0, acc[k]);
    return row;
}

LaurentPoly bfmaj_enum(unsigned n, unsigned k, const EnumCaps& caps) {
    if (k > n) return LaurentPoly();
    return bfmaj_row(n, caps)[k];
}

namespace {
std::mutex rec_mutex;
std::map<std::pair<int, int>, LaurentPoly> bfmaj_rec_cache;
std::map<std::pair<int, int>, LaurentPoly> sob_cache;
} // namespace

LaurentPoly bfmaj_rec(int n, int k) {
    if (k < 0 || k > n || n < 0) return LaurentPoly();
    if (k == n) return LaurentPoly(1);
    {
        std::lock_guard<std::mutex> lock(rec_mutex);
        if (auto it = bfmaj_rec_cache.find({n, k}); it != bfmaj_rec_cache.end()) return it->second;
    }
    LaurentPoly v = q_int(static_cast<unsigned>(2 * (n - k))) * bfmaj_rec(n - 1, k) +
                    q_int(static_cast<unsigned>(2 * (n - k) + 1)) * bfmaj_rec(n - 1, k - 1);
    std::lock_guard<std::mutex> lock(rec_mutex);
    return bfmaj_rec_cache.emplace(std::make_pair(n, k), std::move(v)).first->second;
}

LaurentPoly ordered_stirling_b(int n, int k) {
    if (n < 0 || k < 0 || k > n) return LaurentPoly();
    if (n == 0) return LaurentPoly(k == 0 ? 1 : 0);
    {
        std::lock_guard<std::mutex> lock(rec_mutex);
        if (auto it = sob_cache.find({n, k}); it != sob_cache.end()) return it->second;
    }
    LaurentPoly v = q_int(static_cast<unsigned>(2 * k)) * ordered_stirling_b(n - 1, k - 1) +
                    q_int(static_cast<unsigned>(2 * k + 1)) * ordered_stirling_b(n - 1, k);
    std::lock_guard<std::mutex> lock(rec_mutex);
    return sob_cache.emplace(std::make_pair(n, k), std::move(v)).first->second;
}

std::string OrderedSignPartition::to_string() const {
    std::ostringstream out;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (p) out << ' ';
        out << '{';
        for (std::size_t i = 0; i < parts[p].size(); ++i) {
            if (i) out << ',';
            out << parts[p][i];
        }
        out << '}';
    }
    return out.str();
}

StarredPerm partition_to_starred(const OrderedSignPartition& p) {
    if (p.parts.empty()) throw InvalidPartition("empty partition");
    std::vector<std::vector<int>> sorted = p.parts;
    std::vector<bool> seen_abs;
    int count = 0;
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        auto& part = sorted[idx];
        if (part.empty()) throw InvalidPartition("empty part");
        std::sort(part.begin(), part.end(), std::greater<int>());
        for (int v : part) {
            if (idx == 0 && v > 0) throw InvalidPartition("positive entry in the zero part");
            if (idx > 0 && v == 0) throw InvalidPartition("0 outside the zero part");
            if (v != 0) ++count;
        }
    }
    if (sorted[0].empty() || sorted[0][0] != 0)
        throw InvalidPartition("zero part must contain 0");
    seen_abs.assign(static_cast<std::size_t>(count) + 1, false);
    for (const auto& part : sorted)
        for (int v : part) {
            if (v == 0) continue;
            int a = std::abs(v);
            if (a < 1 || a > count || seen_abs[static_cast<std::size_t>(a)])
                throw InvalidPartition("absolute values must be distinct and cover [n]");
            seen_abs[static_cast<std::size_t>(a)] = true;
        }

    SignedPerm perm{std::vector<int>()};
    std::set<int> stars;
    int pos = 0;  // gap index before the next letter
    for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
        for (std::size_t i = 0; i < sorted[idx].size(); ++i) {
            int v = sorted[idx][i];
            if (v == 0) continue;  // the implicit leading 0
            bool within_part = (idx == 0) || (i > 0);
            if (within_part) stars.insert(pos);
            perm.window.push_back(v);
            ++pos;
        }
    }
    return make_starred(std::move(perm), std::move(stars));
}

OrderedSignPartition starred_to_partition(const StarredPerm& sp) {
    OrderedSignPartition p;
    p.parts.push_back({0});
    for (int i = 1; i <= sp.n(); ++i) {
        if (!sp.stars.count(i - 1)) p.parts.emplace_back();
        p.parts.back().push_back(sp.perm.at(i));
    }
    return p;
}

} // namespace qcomb
