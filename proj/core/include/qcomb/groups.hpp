#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qcomb/laurent.hpp"

namespace qcomb {

// Enumeration caps. Exceeding a cap raises CapExceeded instead of running
// unbounded; every cap can be overridden per call.
struct EnumCaps {
    unsigned sn_max = 10;
    unsigned bn_max = 8;
    unsigned long long colored_max_size = 10'000'000;
};

inline constexpr EnumCaps kDefaultCaps{};

// Element of the hyperoctahedral group B_n in window notation: a sequence
// of nonzero integers whose absolute values are a permutation of [n].
struct SignedPerm {
    std::vector<int> window;

    int n() const { return static_cast<int>(window.size()); }
    // Entry with the convention pi_0 = 0; i in [0, n].
    int at(int i) const { return i == 0 ? 0 : window[static_cast<std::size_t>(i) - 1]; }
    bool operator==(const SignedPerm& o) const = default;
    auto operator<=>(const SignedPerm& o) const = default;
    std::string to_string() const;
};

// Element of the wreath product Z_r wr S_n: a permutation of [n] with a
// color in [0, r-1] attached to each letter.
struct ColoredPerm {
    unsigned r = 1;
    std::vector<int> base;
    std::vector<int> colors;

    int n() const { return static_cast<int>(base.size()); }
    bool operator==(const ColoredPerm& o) const = default;
    std::string to_string() const;
};

// Comparison key realizing the total order
//   n^{r-1} < ... < n^1 < ... < 1^{r-1} < ... < 1^1 < 0 < 1 < ... < n:
// color-0 letters sit above 0 in value order; colored letters sit below 0,
// ordered by decreasing value and, within a value, by decreasing color.
// The natural order on <n> is the r = 2 specialization (color 1 <-> minus).
inline long colored_order_key(int value, int color, unsigned r) {
    return color == 0 ? value : -(static_cast<long>(value) * static_cast<long>(r) + color);
}

struct StatsA {
    int des = 0;
    int maj = 0;
};
struct StatsB {
    int des_b = 0;
    int fmaj = 0;
    int neg = 0;
    std::vector<int> des_set;  // positions in {0} u [n-1], ascending
};
struct StatsR {
    int des_r = 0;
    int fmaj_r = 0;
};

StatsA stats_a(const std::vector<int>& perm);
StatsB stats_b(const SignedPerm& pi);
StatsR stats_r(const ColoredPerm& pi);

// Deterministic exhaustive enumeration. S_n streams in lexicographic
// one-line order; B_n lexicographically on (|pi| one-line, sign pattern)
// with + before -; colored elements on (base one-line, color word).
void for_each_sn(unsigned n, const std::function<void(const std::vector<int>&)>& fn,
                 const EnumCaps& caps = kDefaultCaps);
void for_each_bn(unsigned n, const std::function<void(const SignedPerm&)>& fn,
                 const EnumCaps& caps = kDefaultCaps);
void for_each_colored(unsigned r, unsigned n, const std::function<void(const ColoredPerm&)>& fn,
                      const EnumCaps& caps = kDefaultCaps);

// q-Eulerian polynomial coefficient lists; index k holds the q-count of the
// group elements with k descents. Cached per (family, n); cached rows are
// immutable once built.
std::vector<LaurentPoly> eulerian_a(unsigned n, const EnumCaps& caps = kDefaultCaps);
std::vector<LaurentPoly> eulerian_b(unsigned n, const EnumCaps& caps = kDefaultCaps);
std::vector<LaurentPoly> eulerian_r(unsigned r, unsigned n, const EnumCaps& caps = kDefaultCaps);

// Integer descent counts by the classical Eulerian recurrences; an
// enumeration-free route used by the q = 1 identity checks.
std::vector<Int> eulerian_a_counts(unsigned n);
std::vector<Int> eulerian_b_counts(unsigned n);

// The involution pi -> (pi^r)^c complementing the type B descent number.
SignedPerm psi(const SignedPerm& pi);

// Classification of every i in [n-1] by descent/ascent and the sign pair
// (sign of pi_i, sign of pi_{i+1}).
struct SignTypeProfile {
    std::vector<int> desc_pp, desc_mm, desc_pm;  // Pi_1, Pi_2, Pi_3
    std::vector<int> asc_pp, asc_mm, asc_mp;     // Pi'_1, Pi'_2, Pi'_3
};

SignTypeProfile sign_type_profile(const SignedPerm& pi);

std::string perm_to_string(const std::vector<int>& perm);

} // namespace qcomb
