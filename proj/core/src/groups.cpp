#include "qcomb/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qcomb/errors.hpp"

namespace qcomb {

std::string perm_to_string(const std::vector<int>& perm) {
    std::ostringstream out;
    // Digits are unambiguous up to n = 9; beyond that fall back to spaces.
    bool compact = perm.size() <= 9;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i && !compact) out << ' ';
        out << perm[i];
    }
    return out.str();
}

std::string SignedPerm::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (i) out << ' ';
        out << window[i];
    }
    return out.str();
}

std::string ColoredPerm::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (i) out << ' ';
        out << base[i];
        if (colors[i] != 0) out << '^' << colors[i];
    }
    return out.str();
}

StatsA stats_a(const std::vector<int>& perm) {
    StatsA s;
    for (std::size_t i = 1; i < perm.size(); ++i) {
        if (perm[i - 1] > perm[i]) {
            ++s.des;
            s.maj += static_cast<int>(i);
        }
    }
    return s;
}

StatsB stats_b(const SignedPerm& pi) {
    StatsB s;
    const int n = pi.n();
    for (int i = 0; i < n; ++i) {
        if (pi.at(i) > pi.at(i + 1)) {
            s.des_set.push_back(i);
            s.fmaj += 2 * i;
        }
        if (pi.at(i + 1) < 0) ++s.neg;
    }
    s.des_b = static_cast<int>(s.des_set.size());
    s.fmaj += s.neg;
    return s;
}

StatsR stats_r(const ColoredPerm& pi) {
    StatsR s;
    const int n = pi.n();
    long prev = 0;  // key of pi_0 = 0
    int color_sum = 0;
    for (int i = 0; i < n; ++i) {
        long cur = colored_order_key(pi.base[i], pi.colors[i], pi.r);
        if (prev > cur) {
            ++s.des_r;
            s.fmaj_r += static_cast<int>(pi.r) * i;
        }
        color_sum += pi.colors[i];
        prev = cur;
    }
    s.fmaj_r += color_sum;
    return s;
}

void for_each_sn(unsigned n, const std::function<void(const std::vector<int>&)>& fn,
                 const EnumCaps& caps) {
    if (n > caps.sn_max)
        throw CapExceeded("for_each_sn: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.sn_max));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void for_each_bn(unsigned n, const std::function<void(const SignedPerm&)>& fn,
                 const EnumCaps& caps) {
    if (n > caps.bn_max)
        throw CapExceeded("for_each_bn: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.bn_max));
    for_each_sn(
        n,
        [&](const std::vector<int>& abs) {
            SignedPerm pi{abs};
            // Sign patterns in lex order, + before -, leftmost position
            // most significant.
            const unsigned long long total = 1ULL << n;
            for (unsigned long long mask = 0; mask < total; ++mask) {
                for (unsigned i = 0; i < n; ++i) {
                    bool negative = (mask >> (n - 1 - i)) & 1ULL;
                    pi.window[i] = negative ? -abs[i] : abs[i];
                }
                fn(pi);
            }
        },
        EnumCaps{std::max(caps.sn_max, n), caps.bn_max, caps.colored_max_size});
}

void for_each_colored(unsigned r, unsigned n, const std::function<void(const ColoredPerm&)>& fn,
                      const EnumCaps& caps) {
    if (r < 1) throw InvalidParams("for_each_colored: r must be >= 1");
    unsigned long long size = 1;
    for (unsigned i = 1; i <= n; ++i) {
        size *= i;
        size *= r;
        if (size > caps.colored_max_size)
            throw CapExceeded("for_each_colored: r^n * n! exceeds cap " +
                              std::to_string(caps.colored_max_size));
    }
    for_each_sn(
        n,
        [&](const std::vector<int>& base) {
            ColoredPerm pi{r, base, std::vector<int>(n, 0)};
            // Color words as a base-r counter, leftmost digit most
            // significant.
            while (true) {
                fn(pi);
                int i = static_cast<int>(n) - 1;
                while (i >= 0 && pi.colors[i] == static_cast<int>(r) - 1) pi.colors[i--] = 0;
                if (i < 0) break;
                ++pi.colors[i];
            }
        },
        EnumCaps{std::max(caps.sn_max, n), caps.bn_max, caps.colored_max_size});
}

namespace {

std::mutex euler_mutex;
std::map<unsigned, std::vector<LaurentPoly>> euler_a_cache;
std::map<unsigned, std::vector<LaurentPoly>> euler_b_cache;
std::map<std::pair<unsigned, unsigned>, std::vector<LaurentPoly>> euler_r_cache;

} // namespace

std::vector<LaurentPoly> eulerian_a(unsigned n, const EnumCaps& caps) {
    {
        std::lock_guard<std::mutex> lock(euler_mutex);
        if (auto it = euler_a_cache.find(n); it != euler_a_cache.end()) return it->second;
    }
    std::vector<LaurentPoly> row(n == 0 ? 1 : n);
    for_each_sn(n, [&](const std::vector<int>& perm) {
        StatsA s = stats_a(perm);
        row[static_cast<std::size_t>(s.des)].add_term(1, s.maj);
    }, caps);
    std::lock_guard<std::mutex> lock(euler_mutex);
    return euler_a_cache.emplace(n, std::move(row)).first->second;
}

std::vector<LaurentPoly> eulerian_b(unsigned n, const EnumCaps& caps) {
    {
        std::lock_guard<std::mutex> lock(euler_mutex);
        if (auto it = euler_b_cache.find(n); it != euler_b_cache.end()) return it->second;
    }
    std::vector<LaurentPoly> row(n + 1);
    for_each_bn(n, [&](const SignedPerm& pi) {
        StatsB s = stats_b(pi);
        row[static_cast<std::size_t>(s.des_b)].add_term(1, s.fmaj);
    }, caps);
    std::lock_guard<std::mutex> lock(euler_mutex);
    return euler_b_cache.emplace(n, std::move(row)).first->second;
}

std::vector<LaurentPoly> eulerian_r(unsigned r, unsigned n, const EnumCaps& caps) {
    {
        std::lock_guard<std::mutex> lock(euler_mutex);
        if (auto it = euler_r_cache.find({r, n}); it != euler_r_cache.end()) return it->second;
    }
    std::vector<LaurentPoly> row(n + 1);
    for_each_colored(r, n, [&](const ColoredPerm& pi) {
        StatsR s = stats_r(pi);
        row[static_cast<std::size_t>(s.des_r)].add_term(1, s.fmaj_r);
    }, caps);
    std::lock_guard<std::mutex> lock(euler_mutex);
    return euler_r_cache.emplace(std::make_pair(r, n), std::move(row)).first->second;
}

std::vector<Int> eulerian_a_counts(unsigned n) {
    std::vector<Int> row{1};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Int> next(m, 0);
        for (unsigned k = 0; k < m; ++k) {
            Int v = 0;
            if (k < row.size()) v += Int(k + 1) * row[k];
            if (k >= 1 && k - 1 < row.size()) v += Int(m - k) * row[k - 1];
            next[k] = v;
        }
        row = std::move(next);
    }
    return row;
}

std::vector<Int> eulerian_b_counts(unsigned n) {
    std::vector<Int> row{1};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<Int> next(m + 1, 0);
        for (unsigned k = 0; k <= m; ++k) {
            Int v = 0;
            if (k < row.size()) v += Int(2 * k + 1) * row[k];
            if (k >= 1 && k - 1 < row.size()) v += Int(2 * (m - k) + 1) * row[k - 1];
            next[k] = v;
        }
        row = std::move(next);
    }
    return row;
}

SignedPerm psi(const SignedPerm& pi) {
    const int n = pi.n();
    SignedPerm out{std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 1; i <= n; ++i) {
        int v = pi.window[static_cast<std::size_t>(n - i)];
        out.window[static_cast<std::size_t>(i) - 1] = v > 0 ? v - n - 1 : v + n + 1;
    }
    return out;
}

SignTypeProfile sign_type_profile(const SignedPerm& pi) {
    SignTypeProfile p;
    const int n = pi.n();
    for (int i = 1; i <= n - 1; ++i) {
        int a = pi.at(i), b = pi.at(i + 1);
        bool descent = a > b;
        if (a > 0 && b > 0) (descent ? p.desc_pp : p.asc_pp).push_back(i);
        else if (a < 0 && b < 0) (descent ? p.desc_mm : p.asc_mm).push_back(i);
        else if (a > 0 && b < 0) p.desc_pm.push_back(i);  // +- is always a descent
        else p.asc_mp.push_back(i);                       // -+ is always an ascent
    }
    return p;
}

} // namespace qcomb
