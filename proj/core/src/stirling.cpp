#include "qcomb/stirling.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "qcomb/qfun.hpp"

namespace qcomb {

namespace {

// Memoized triangle built row by row under a single lock, so concurrent
// requests never duplicate work observably. `step` maps the q-weight of
// the "stay" term for column k; the "new block" term always has weight 1.
class Triangle {
public:
    Triangle(LaurentPoly (*stay_weight)(unsigned k), bool boundary_row_one)
        : stay_weight_(stay_weight), boundary_row_one_(boundary_row_one) {}

    LaurentPoly at(int n, int k) {
        if (n < 0 || k < 0 || k > n) return LaurentPoly();
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(rows_.size()) <= n) {
            const int m = static_cast<int>(rows_.size());
            std::vector<LaurentPoly> row(static_cast<std::size_t>(m) + 1);
            if (m == 0) {
                row[0] = LaurentPoly(1);
            } else {
                const auto& prev = rows_.back();
                for (int kk = 0; kk <= m; ++kk) {
                    LaurentPoly v;
                    if (kk == 0 && boundary_row_one_) {
                        v = LaurentPoly(1);
                    } else {
                        if (kk >= 1) v += weight_new(static_cast<unsigned>(kk)) *
                                          prev[static_cast<std::size_t>(kk) - 1];
                        if (kk < m) v += stay_weight_(static_cast<unsigned>(kk)) *
                                         prev[static_cast<std::size_t>(kk)];
                    }
                    row[static_cast<std::size_t>(kk)] = std::move(v);
                }
            }
            rows_.push_back(std::move(row));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    // Weight of the term descending from (n-1, k-1); identity except for
    // the Chow-Gessel triangle, which overrides it.
    virtual LaurentPoly weight_new(unsigned /*k*/) { return LaurentPoly(1); }
    virtual ~Triangle() = default;

private:
    LaurentPoly (*stay_weight_)(unsigned);
    bool boundary_row_one_;
    std::mutex mutex_;
    std::vector<std::vector<LaurentPoly>> rows_;
};

class ChowGesselTriangle : public Triangle {
public:
    ChowGesselTriangle()
        : Triangle([](unsigned k) { return q_int(2 * k + 1); }, /*boundary_row_one=*/true) {}
    LaurentPoly weight_new(unsigned k) override {
        return LaurentPoly::monomial(1, static_cast<int>(2 * k - 1)) *
               (LaurentPoly(1) + LaurentPoly::q());
    }
};

} // namespace

LaurentPoly stirling_a(int n, int k) {
    static Triangle tri([](unsigned k) { return q_int(k); }, false);
    return tri.at(n, k);
}

LaurentPoly stirling_b(int n, int k) {
    static Triangle tri([](unsigned k) { return q_int(2 * k + 1); }, false);
    return tri.at(n, k);
}

LaurentPoly chow_gessel(int n, int k) {
    static ChowGesselTriangle tri;
    return tri.at(n, k);
}

LaurentPoly stirling_r(unsigned r, int n, int k) {
    if (r < 1) throw InvalidParams("stirling_r: r must be >= 1");
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<Triangle>> triangles;
    Triangle* tri;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto& slot = triangles[r];
        if (!slot) {
            // Capture-free trampoline keyed by r through a per-r static.
            switch (r) {
                case 1: slot = std::make_unique<Triangle>(
                            [](unsigned k) { return q_int(k + 1); }, false);
                        break;
                case 2: slot = std::make_unique<Triangle>(
                            [](unsigned k) { return q_int(2 * k + 1); }, false);
                        break;
                case 3: slot = std::make_unique<Triangle>(
                            [](unsigned k) { return q_int(3 * k + 1); }, false);
                        break;
                case 4: slot = std::make_unique<Triangle>(
                            [](unsigned k) { return q_int(4 * k + 1); }, false);
                        break;
                case 5: slot = std::make_unique<Triangle>(
                            [](unsigned k) { return q_int(5 * k + 1); }, false);
                        break;
                default:
                    throw InvalidParams("stirling_r: r > 5 not supported by the table cache");
            }
        }
        tri = slot.get();
    }
    return tri->at(n, k);
}

LaurentPoly stirling_d(int n, int k) {
    if (k < 0 || k > n || n < 0) return LaurentPoly();
    if (k == n) return LaurentPoly(1);
    LaurentPoly sub;
    LaurentPoly inner = stirling_a(n - 1, k).subst_q_power(2);
    if (!inner.is_zero()) {
        unsigned e = static_cast<unsigned>(n - k - 1);
        sub = LaurentPoly(n) * q_int(2).pow(e) * LaurentPoly::monomial(1, static_cast<int>(e)) *
              inner;
    }
    return stirling_b(n, k) - sub;
}

namespace {

Int count_with(int n, int k, const std::function<Int(int)>& stay) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    return count_with(n - 1, k - 1, stay) + stay(k) * count_with(n - 1, k, stay);
}

} // namespace

Int stirling_count_a(int n, int k) {
    return count_with(n, k, [](int kk) { return Int(kk); });
}

Int stirling_count_b(int n, int k) {
    return count_with(n, k, [](int kk) { return Int(2 * kk + 1); });
}

Int stirling_count_r(unsigned r, int n, int k) {
    return count_with(n, k, [r](int kk) { return Int(r * static_cast<unsigned>(kk) + 1); });
}

Int stirling_count_d(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k == n) return 1;
    Int pow2 = Int(1) << static_cast<unsigned>(n - k - 1);
    return stirling_count_b(n, k) - Int(n) * pow2 * stirling_count_a(n - 1, k);
}

} // namespace qcomb
