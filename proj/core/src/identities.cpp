#include "qcomb/identities.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcomb/groups.hpp"
#include "qcomb/partitions.hpp"
#include "qcomb/qfun.hpp"
#include "qcomb/starred.hpp"
#include "qcomb/stirling.hpp"
#include "qcomb/tseries.hpp"

namespace qcomb {

std::string Params::to_string() const {
    std::ostringstream out;
    const char* sep = "";
    auto put = [&](const char* name, int v) {
        out << sep << name << '=' << v;
        sep = " ";
    };
    if (n >= 0) put("n", n);
    if (k >= 0) put("k", k);
    if (ell >= 0) put("ell", ell);
    if (m >= 0) put("m", m);
    if (r > 0) put("r", r);
    if (order > 0) put("order", order);
    return out.str();
}

std::string IdentityReport::to_json() const {
    nlohmann::json p;
    if (params.n >= 0) p["n"] = params.n;
    if (params.k >= 0) p["k"] = params.k;
    if (params.ell >= 0) p["ell"] = params.ell;
    if (params.m >= 0) p["m"] = params.m;
    if (params.r > 0) p["r"] = params.r;
    if (params.order > 0) p["order"] = params.order;
    nlohmann::json j{{"id", id},     {"params", p}, {"equal", equal},
                     {"lhs", lhs},   {"rhs", rhs},  {"witness", witness}};
    return j.dump();
}

namespace {

// ---------------------------------------------------------------- reports

LaurentPoly qpow(long e) { return LaurentPoly::monomial(1, static_cast<int>(e)); }

std::string laurent_witness(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly diff = a - b;
    if (diff.is_zero()) return {};
    int e = diff.min_exp();
    std::ostringstream out;
    out << "q^" << e << ": lhs=" << a.coeff(e) << " rhs=" << b.coeff(e);
    return out.str();
}

IdentityReport make(std::string id, const Params& p, const LaurentPoly& l, const LaurentPoly& r) {
    IdentityReport rep{std::move(id), p, l.to_string(), r.to_string(), l == r,
                       laurent_witness(l, r)};
    return rep;
}

IdentityReport make_int(std::string id, const Params& p, const Int& l, const Int& r) {
    return make(std::move(id), p, LaurentPoly(l), LaurentPoly(r));
}

IdentityReport make(std::string id, const Params& p, const TPoly& l, const TPoly& r,
                    const char* var = "t") {
    std::string witness;
    if (l != r) {
        int dmax = std::max(l.degree(), r.degree());
        for (int d = 0; d <= dmax && witness.empty(); ++d) {
            std::string w = laurent_witness(l.coeff(static_cast<unsigned>(d)),
                                            r.coeff(static_cast<unsigned>(d)));
            if (!w.empty()) witness = std::string(var) + "^" + std::to_string(d) + " " + w;
        }
    }
    IdentityReport rep{std::move(id), p, l.to_string(var), r.to_string(var), l == r,
                       std::move(witness)};
    return rep;
}

IdentityReport make(std::string id, const Params& p, const TSeries& l, const TSeries& r) {
    std::string witness;
    if (l != r) {
        for (unsigned m = 0; m < l.order() && witness.empty(); ++m) {
            std::string w = laurent_witness(l.coeff(m), r.coeff(m));
            if (!w.empty()) witness = "t^" + std::to_string(m) + " " + w;
        }
    }
    IdentityReport rep{std::move(id), p, l.to_string(), r.to_string(), l == r,
                       std::move(witness)};
    return rep;
}

IdentityReport make_property(std::string id, const Params& p, long long violations,
                             std::string first_witness) {
    IdentityReport rep{std::move(id),
                       p,
                       std::to_string(violations) + " violations",
                       "0 violations",
                       violations == 0,
                       std::move(first_witness)};
    return rep;
}

// ------------------------------------------------------------------ grids

int bound(const GridConfig& g, int fallback) { return g.max_n ? *g.max_n : fallback; }

std::function<std::vector<Params>(const GridConfig&)> nk_grid(int default_n, int n_min = 0) {
    return [=](const GridConfig& g) {
        std::vector<Params> out;
        for (int n = n_min; n <= bound(g, default_n); ++n)
            for (int k = 0; k <= n; ++k) out.push_back(Params{.n = n, .k = k});
        return out;
    };
}

std::function<std::vector<Params>(const GridConfig&)> n_grid(int default_n, int n_min = 0) {
    return [=](const GridConfig& g) {
        std::vector<Params> out;
        for (int n = n_min; n <= bound(g, default_n); ++n) out.push_back(Params{.n = n});
        return out;
    };
}

std::function<std::vector<Params>(const GridConfig&)> rn_grid(int default_n, bool with_k,
                                                              bool series, int max_r,
                                                              int r4_n = -1) {
    return [=](const GridConfig& g) {
        std::vector<Params> out;
        for (int r : g.r_values) {
            if (r > max_r) continue;
            int def = (r == 4 && r4_n >= 0) ? r4_n : default_n;
            for (int n = 0; n <= bound(g, def); ++n) {
                if (with_k) {
                    for (int k = 0; k <= n; ++k)
                        out.push_back(Params{.n = n, .k = k, .r = r,
                                             .order = series ? g.order : 0});
                } else {
                    out.push_back(Params{.n = n, .r = r, .order = series ? g.order : 0});
                }
            }
        }
        return out;
    };
}

// --------------------------------------------------------------- caches

std::mutex cache_mutex;
std::map<unsigned, std::vector<LaurentPoly>> bfmaj_cache;

const std::vector<LaurentPoly>& bfmaj_row_cached(unsigned n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = bfmaj_cache.find(n);
    if (it == bfmaj_cache.end()) it = bfmaj_cache.emplace(n, bfmaj_row(n)).first;
    return it->second;
}

// ------------------------------------------------------------ ingredients

// [k]_{q^r}!
LaurentPoly q_factorial_base(unsigned k, unsigned r) {
    return q_factorial(k).subst_q_power(r);
}

// q^{r*C(k+1,2) + (1-r)k} [r]_q^k [k]_{q^r}! S_r[n,k]
LaurentPoly colored_stirling_prefactor(int r, int n, int k) {
    long e = static_cast<long>(r) * k * (k + 1) / 2 + static_cast<long>(1 - r) * k;
    return qpow(e) * q_int(static_cast<unsigned>(r)).pow(static_cast<unsigned>(k)) *
           q_factorial_base(static_cast<unsigned>(k), static_cast<unsigned>(r)) *
           stirling_r(static_cast<unsigned>(r), n, k);
}

// Denominator factors (1 - t q^{r i}) for i = 0..top.
std::vector<TPoly> geometric_factors(int r, int top) {
    std::vector<TPoly> f;
    for (int i = 0; i <= top; ++i)
        f.push_back(TPoly(1) - TPoly::monomial(qpow(static_cast<long>(r) * i), 1));
    return f;
}

// sum_{m < order} [rm+1]_q^n t^m.
TSeries power_sum_series(int r, int n, unsigned order) {
    TSeries s(order);
    for (unsigned m = 0; m < order; ++m)
        s.coeff(m) = q_int(static_cast<unsigned>(r) * m + 1).pow(static_cast<unsigned>(n));
    return s;
}

TPoly row_to_tpoly(const std::vector<LaurentPoly>& row) {
    TPoly p;
    for (unsigned k = 0; k < row.size(); ++k) p += TPoly::monomial(row[k], k);
    return p;
}

// sum_k prefactor(k) t^k / prod_{i<=k}(1 - t q^{ri}), truncated.
TSeries stirling_side_series(int r, int n, unsigned order,
                             const std::function<LaurentPoly(int)>& prefactor) {
    TSeries s(order);
    for (int k = 0; k <= n; ++k) {
        LaurentPoly c = prefactor(k);
        if (c.is_zero()) continue;
        s += series_from_rational(TPoly::monomial(c, static_cast<unsigned>(k)),
                                  geometric_factors(r, k), order);
    }
    return s;
}

// S_D[n,k] straight from its definition: the m-statistic weight of the
// restricted partial signed partitions, divided by q^{k^2}[2]_q^k.
LaurentPoly stirling_d_by_enumeration(int n, int k) {
    LaurentPoly w = d_subset_weight(static_cast<unsigned>(n), static_cast<unsigned>(k));
    if (w.is_zero()) return LaurentPoly();
    return div_exact(w, qpow(static_cast<long>(k) * k) *
                            q_int(2).pow(static_cast<unsigned>(k)));
}

// Number of type B set partitions of <n> with 2k+1 blocks whose zero block
// satisfies the type D condition.
Int count_type_d(int n, int k) {
    Int c = 0;
    for_each_type_b_partition(static_cast<unsigned>(n), static_cast<unsigned>(k),
                              [&](const TypeBPartition& p) {
                                  if (p.is_type_d()) ++c;
                              });
    return c;
}

Int count_d_subset(int n, int k) {
    Int c = 0;
    for_each_d_subset(static_cast<unsigned>(n), static_cast<unsigned>(k),
                      [&](const Pssp&) { ++c; });
    return c;
}

TPoly tpoly_at_q1(const TPoly& p) {
    TPoly out;
    for (int d = 0; d <= p.degree(); ++d)
        out += TPoly::monomial(LaurentPoly(p.coeff(static_cast<unsigned>(d)).eval_one()),
                               static_cast<unsigned>(d));
    return out;
}

TPoly t_power(int n) { return TPoly::monomial(LaurentPoly(1), static_cast<unsigned>(n)); }

// ------------------------------------------------------------- the table

std::vector<IdentityEntry> build_registry() {
    std::vector<IdentityEntry> reg;
    auto add = [&](IdentityEntry e) { reg.push_back(std::move(e)); };

    // -- type A -----------------------------------------------------------

    // The point n = k = 0 is excluded: with the empty-sum convention the
    // right side vanishes there while the left side is 1.
    add({.id = "a-classical",
         .claim = "k! S(n,k) = sum_{l=1..k} A_{n,l-1} C(n-l, k-l)",
         .lhs_route = {"stirling/count-recurrence"},
         .rhs_route = {"groups/eulerian-count-recurrence", "qfun/binomial"},
         .grid = nk_grid(10, 1),
         .check = [](const Params& p) {
             Int lhs = factorial(static_cast<unsigned>(p.k)) * stirling_count_a(p.n, p.k);
             Int rhs = 0;
             auto row = eulerian_a_counts(static_cast<unsigned>(p.n));
             for (int l = 1; l <= p.k; ++l)
                 if (l - 1 < static_cast<int>(row.size()))
                     rhs += row[static_cast<std::size_t>(l) - 1] *
                            binomial(static_cast<unsigned>(p.n - l), p.k - l);
             return make_int("a-classical", p, lhs, rhs);
         }});

    add({.id = "a-q",
         .claim = "q^C(k,2) [k]_q! S[n,k] = sum_{l=1..k} q^{k(k-l)} A_{n,l-1}(q) qbinom(n-l, k-l)",
         .lhs_route = {"stirling/type-a-recurrence", "qfun/q-factorial"},
         .rhs_route = {"groups/sn-enumeration", "qfun/q-binomial"},
         .grid = nk_grid(8, 1),
         .check = [](const Params& p) {
             LaurentPoly lhs = qpow(static_cast<long>(p.k) * (p.k - 1) / 2) *
                               q_factorial(static_cast<unsigned>(p.k)) * stirling_a(p.n, p.k);
             LaurentPoly rhs;
             auto row = eulerian_a(static_cast<unsigned>(p.n));
             for (int l = 1; l <= p.k; ++l)
                 if (l - 1 < static_cast<int>(row.size()))
                     rhs += qpow(static_cast<long>(p.k) * (p.k - l)) *
                            row[static_cast<std::size_t>(l) - 1] *
                            q_binomial(static_cast<unsigned>(p.n - l), p.k - l);
             return make("a-q", p, lhs, rhs);
         }});

    add({.id = "a-q-shifted",
         .claim = "q^C(k+1,2) [k]_q! S[n+1,k+1] = sum_{l=0..k} q^{k(k-l)} A_{n,l}(q) qbinom(n-l, k-l)",
         .lhs_route = {"stirling/type-a-recurrence", "qfun/q-factorial"},
         .rhs_route = {"groups/sn-enumeration", "qfun/q-binomial"},
         .grid = nk_grid(8),
         .check = [](const Params& p) {
             LaurentPoly lhs = qpow(static_cast<long>(p.k) * (p.k + 1) / 2) *
                               q_factorial(static_cast<unsigned>(p.k)) *
                               stirling_a(p.n + 1, p.k + 1);
             LaurentPoly rhs;
             auto row = eulerian_a(static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 if (l < static_cast<int>(row.size()))
                     rhs += qpow(static_cast<long>(p.k) * (p.k - l)) *
                            row[static_cast<std::size_t>(l)] *
                            q_binomial(static_cast<unsigned>(p.n - l), p.k - l);
             return make("a-q-shifted", p, lhs, rhs);
         }});

    // -- type B main identity ----------------------------------------------

    add({.id = "b-classical",
         .claim = "2^k k! S_B(n,k) = sum_{l=0..k} B_{n,l} C(n-l, k-l)",
         .lhs_route = {"stirling/count-recurrence"},
         .rhs_route = {"groups/eulerian-count-recurrence", "qfun/binomial"},
         .grid = nk_grid(10),
         .check = [](const Params& p) {
             Int lhs = (Int(1) << static_cast<unsigned>(p.k)) *
                       factorial(static_cast<unsigned>(p.k)) * stirling_count_b(p.n, p.k);
             Int rhs = 0;
             auto row = eulerian_b_counts(static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 rhs += row[static_cast<std::size_t>(l)] *
                        binomial(static_cast<unsigned>(p.n - l), p.k - l);
             return make_int("b-classical", p, lhs, rhs);
         }});

    add({.id = "thm-main-B",
         .claim = "[2]_q^k [k]_{q^2}! S_B[n,k] = sum_{l=0..k} q^{k(k-2l)} B_{n,l}(q) qbinom_{q^2}(n-l, k-l)",
         .lhs_route = {"stirling/type-b-recurrence", "qfun/q-factorial"},
         .rhs_route = {"groups/bn-enumeration", "qfun/q-binomial"},
         .grid = nk_grid(7),
         .check = [](const Params& p) {
             LaurentPoly lhs = q_int(2).pow(static_cast<unsigned>(p.k)) *
                               q_factorial_base(static_cast<unsigned>(p.k), 2) *
                               stirling_b(p.n, p.k);
             LaurentPoly rhs;
             auto row = eulerian_b(static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 rhs += qpow(static_cast<long>(p.k) * (p.k - 2 * l)) *
                        row[static_cast<std::size_t>(l)] *
                        q_binomial_base(static_cast<unsigned>(p.n - l), p.k - l, 2);
             return make("thm-main-B", p, lhs, rhs);
         }});

    add({.id = "thm-main-B-trans",
         .claim = "[2]_q^k [k]_{q^2}! S_B[n,k] = sum_{l=0..k} q^{(n-k)(2l-n-k)} B_{n,n-l}(q) qbinom_{q^2}(n-l, k-l)",
         .lhs_route = {"stirling/type-b-recurrence", "qfun/q-factorial"},
         .rhs_route = {"groups/bn-enumeration", "qfun/q-binomial"},
         .grid = nk_grid(7),
         .check = [](const Params& p) {
             LaurentPoly lhs = q_int(2).pow(static_cast<unsigned>(p.k)) *
                               q_factorial_base(static_cast<unsigned>(p.k), 2) *
                               stirling_b(p.n, p.k);
             LaurentPoly rhs;
             auto row = eulerian_b(static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 rhs += qpow(static_cast<long>(p.n - p.k) * (2 * l - p.n - p.k)) *
                        row[static_cast<std::size_t>(p.n - l)] *
                        q_binomial_base(static_cast<unsigned>(p.n - l), p.k - l, 2);
             return make("thm-main-B-trans", p, lhs, rhs);
         }});

    add({.id = "cg-relation",
         .claim = "S_{n,k}(q) = (1+q)^k q^{k^2} S_B[n,k]",
         .lhs_route = {"stirling/chow-gessel-recurrence"},
         .rhs_route = {"stirling/type-b-recurrence", "qfun/q-power"},
         .grid = nk_grid(8),
         .check = [](const Params& p) {
             LaurentPoly lhs = chow_gessel(p.n, p.k);
             LaurentPoly rhs = (LaurentPoly(1) + LaurentPoly::q()).pow(static_cast<unsigned>(p.k)) *
                               qpow(static_cast<long>(p.k) * p.k) * stirling_b(p.n, p.k);
             return make("cg-relation", p, lhs, rhs);
         }});

    add({.id = "b-symmetry",
         .claim = "B_{n,k}(q) = q^{2nk - n^2} B_{n,n-k}(q)",
         .lhs_route = {"groups/bn-enumeration"},
         .rhs_route = {"groups/bn-enumeration"},
         .routes_disjoint = false,
         .grid = nk_grid(7),
         .check = [](const Params& p) {
             auto row = eulerian_b(static_cast<unsigned>(p.n));
             LaurentPoly lhs = row[static_cast<std::size_t>(p.k)];
             LaurentPoly rhs = qpow(2L * p.n * p.k - static_cast<long>(p.n) * p.n) *
                               row[static_cast<std::size_t>(p.n - p.k)];
             return make("b-symmetry", p, lhs, rhs);
         }});

    // -- descent-starred machinery ------------------------------------------

    add({.id = "starred-product",
         .claim = "sum_k B^fmaj_{n,k}(q) z^k = sum_{pi in B_n} q^fmaj(pi) prod_{i<=des} (1 + z q^{1-2i})",
         .lhs_route = {"starred/enumeration"},
         .rhs_route = {"groups/bn-enumeration", "qpoly/bivariate-product"},
         .grid = n_grid(6),
         .check = [](const Params& p) {
             TPoly lhs = row_to_tpoly(bfmaj_row_cached(static_cast<unsigned>(p.n)));
             TPoly rhs;
             for_each_bn(static_cast<unsigned>(p.n), [&](const SignedPerm& pi) {
                 StatsB s = stats_b(pi);
                 TPoly prod(qpow(s.fmaj));
                 for (int i = 1; i <= s.des_b; ++i)
                     prod *= TPoly(1) + TPoly::monomial(qpow(1 - 2L * i), 1);
                 rhs += prod;
             });
             return make("starred-product", p, lhs, rhs, "z");
         }});

    add({.id = "q-binom-theorem",
         .claim = "prod_{i=1..N} (1 - z q^{i-1}) = sum_j qbinom(N,j) (-1)^j z^j q^{j(j-1)/2}",
         .lhs_route = {"qpoly/product"},
         .rhs_route = {"qfun/q-binomial"},
         .grid = n_grid(8),
         .check = [](const Params& p) {
             TPoly lhs(1);
             for (int i = 1; i <= p.n; ++i)
                 lhs *= TPoly(1) - TPoly::monomial(qpow(i - 1), 1);
             TPoly rhs;
             for (int j = 0; j <= p.n; ++j) {
                 LaurentPoly c = q_binomial(static_cast<unsigned>(p.n), j) *
                                 qpow(static_cast<long>(j) * (j - 1) / 2);
                 if (j % 2) c = -c;
                 rhs += TPoly::monomial(c, static_cast<unsigned>(j));
             }
             return make("q-binom-theorem", p, lhs, rhs, "z");
         }});

    add({.id = "q-binom-negative",
         .claim = "1 / prod_{i=1..N} (1 - z q^{i-1}) = sum_j qbinom(N+j-1, j) z^j",
         .lhs_route = {"qpoly/series-inversion"},
         .rhs_route = {"qfun/q-binomial"},
         .grid = [](const GridConfig& g) {
             std::vector<Params> out;
             for (int n = 0; n <= bound(g, 6); ++n)
                 out.push_back(Params{.n = n, .order = g.order});
             return out;
         },
         .check = [](const Params& p) {
             unsigned M = static_cast<unsigned>(p.order);
             TSeries lhs = series_from_rational(TPoly(1), geometric_factors(1, p.n - 1), M);
             TSeries rhs(M);
             for (unsigned j = 0; j < M; ++j) {
                 if (j == 0)
                     rhs.coeff(j) = LaurentPoly(1);
                 else if (p.n > 0)
                     rhs.coeff(j) =
                         q_binomial(static_cast<unsigned>(p.n) + j - 1, static_cast<int>(j));
             }
             return make("q-binom-negative", p, lhs, rhs);
         }});

    add({.id = "bfmaj-euler",
         .claim = "B^fmaj_{n,n-k}(q) = sum_{l=0..k} q^{(n-k)(2l-n-k)} B_{n,n-l}(q) qbinom_{q^2}(n-l, k-l)",
         .lhs_route = {"starred/enumeration"},
         .rhs_route = {"groups/bn-enumeration", "qfun/q-binomial"},
         .grid = nk_grid(6),
         .check = [](const Params& p) {
             LaurentPoly lhs = bfmaj_row_cached(static_cast<unsigned>(p.n))
                                   [static_cast<std::size_t>(p.n - p.k)];
             LaurentPoly rhs;
             auto row = eulerian_b(static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 rhs += qpow(static_cast<long>(p.n - p.k) * (2 * l - p.n - p.k)) *
                        row[static_cast<std::size_t>(p.n - l)] *
                        q_binomial_base(static_cast<unsigned>(p.n - l), p.k - l, 2);
             return make("bfmaj-euler", p, lhs, rhs);
         }});

    add({.id = "bfmaj-rec",
         .claim = "B^fmaj_{n,k}(q) = [2n-2k]_q B^fmaj_{n-1,k}(q) + [2n-2k+1]_q B^fmaj_{n-1,k-1}(q)",
         .lhs_route = {"starred/enumeration"},
         .rhs_route = {"starred/recurrence"},
         .grid = nk_grid(7),
         .check = [](const Params& p) {
             LaurentPoly lhs =
                 bfmaj_row_cached(static_cast<unsigned>(p.n))[static_cast<std::size_t>(p.k)];
             LaurentPoly rhs = bfmaj_rec(p.n, p.k);
             return make("bfmaj-rec", p, lhs, rhs);
         }});

    add({.id = "so-closed-form",
         .claim = "B^fmaj_{n,n-k}(q) = S^o_B[n,k]",
         .lhs_route = {"starred/enumeration"},
         .rhs_route = {"starred/ordered-recurrence"},
         .grid = nk_grid(7),
         .check = [](const Params& p) {
             LaurentPoly lhs = bfmaj_row_cached(static_cast<unsigned>(p.n))
                                   [static_cast<std::size_t>(p.n - p.k)];
             LaurentPoly rhs = ordered_stirling_b(p.n, p.k);
             return make("so-closed-form", p, lhs, rhs);
         }});

    // -- signed partitions ----------------------------------------------------

    add({.id = "pssp-weight",
         .claim = "q^{k^2} [2]_q^k S_B[n,k] = sum over partial standard signed partitions of q^m",
         .lhs_route = {"stirling/type-b-recurrence", "qfun/q-power"},
         .rhs_route = {"partitions/pssp-enumeration"},
         .grid = nk_grid(6),
         .check = [](const Params& p) {
             LaurentPoly lhs = qpow(static_cast<long>(p.k) * p.k) *
                               q_int(2).pow(static_cast<unsigned>(p.k)) * stirling_b(p.n, p.k);
             LaurentPoly rhs =
                 pssp_weight(static_cast<unsigned>(p.n), static_cast<unsigned>(p.k));
             return make("pssp-weight", p, lhs, rhs);
         }});

    add({.id = "d-count",
         .claim = "2^k S_D(n,k) = #D_subset([n],k)",
         .lhs_route = {"partitions/type-b-enumeration"},
         .rhs_route = {"partitions/d-subset-enumeration"},
         .grid = nk_grid(6),
         .check = [](const Params& p) {
             Int lhs = (Int(1) << static_cast<unsigned>(p.k)) * count_type_d(p.n, p.k);
             Int rhs = count_d_subset(p.n, p.k);
             return make_int("d-count", p, lhs, rhs);
         }});

    add({.id = "b-from-a-q",
         .claim = "S_B[n,k] = sum_{j=k..n} C(n,j) [2]_q^{j-k} q^{j-k} S[j,k]_{q^2}",
         .lhs_route = {"stirling/type-b-recurrence"},
         .rhs_route = {"stirling/type-a-recurrence", "qfun/binomial"},
         .grid = nk_grid(20),
         .check = [](const Params& p) {
             LaurentPoly lhs = stirling_b(p.n, p.k);
             LaurentPoly rhs;
             for (int j = p.k; j <= p.n; ++j)
                 rhs += LaurentPoly(binomial(static_cast<unsigned>(p.n), j)) *
                        q_int(2).pow(static_cast<unsigned>(j - p.k)) * qpow(j - p.k) *
                        stirling_a(j, p.k).subst_q_power(2);
             return make("b-from-a-q", p, lhs, rhs);
         }});

    // Up to n = 6 the type D side comes from the defining enumeration; the
    // larger rows exercise the closed form (the identity rearranged), which
    // still catches arithmetic regressions.
    add({.id = "b-from-d-q",
         .claim = "S_B[n,k] = S_D[n,k] + n [2]_q^{n-k-1} q^{n-k-1} S[n-1,k]_{q^2}",
         .lhs_route = {"stirling/type-b-recurrence"},
         .rhs_route = {"partitions/d-subset-enumeration", "stirling/type-a-recurrence"},
         .grid = nk_grid(20),
         .check = [](const Params& p) {
             LaurentPoly lhs = stirling_b(p.n, p.k);
             LaurentPoly rhs = p.n <= 6 ? stirling_d_by_enumeration(p.n, p.k)
                                        : stirling_d(p.n, p.k);
             if (p.k < p.n)
                 rhs += LaurentPoly(p.n) * q_int(2).pow(static_cast<unsigned>(p.n - p.k - 1)) *
                        qpow(p.n - p.k - 1) * stirling_a(p.n - 1, p.k).subst_q_power(2);
             return make("b-from-d-q", p, lhs, rhs);
         }});

    add({.id = "b-from-a",
         .claim = "S_B(n,k) = sum_{j=k..n} 2^{j-k} C(n,j) S(j,k)",
         .lhs_route = {"stirling/count-recurrence-b"},
         .rhs_route = {"stirling/count-recurrence-a", "qfun/binomial"},
         .grid = nk_grid(10),
         .check = [](const Params& p) {
             Int lhs = stirling_count_b(p.n, p.k);
             Int rhs = 0;
             for (int j = p.k; j <= p.n; ++j)
                 rhs += (Int(1) << static_cast<unsigned>(j - p.k)) *
                        binomial(static_cast<unsigned>(p.n), j) * stirling_count_a(j, p.k);
             return make_int("b-from-a", p, lhs, rhs);
         }});

    add({.id = "b-from-d",
         .claim = "S_B(n,k) = S_D(n,k) + n 2^{n-k-1} S(n-1,k)",
         .lhs_route = {"stirling/count-recurrence-b"},
         .rhs_route = {"partitions/type-b-enumeration", "stirling/count-recurrence-a"},
         .grid = nk_grid(6),
         .check = [](const Params& p) {
             Int lhs = stirling_count_b(p.n, p.k);
             Int rhs = count_type_d(p.n, p.k);
             if (p.k < p.n)
                 rhs += Int(p.n) * (Int(1) << static_cast<unsigned>(p.n - p.k - 1)) *
                        stirling_count_a(p.n - 1, p.k);
             return make_int("b-from-d", p, lhs, rhs);
         }});

    add({.id = "btilde",
         .claim = "Btilde_{n,k}(q) = [2]_q^n q^{k(k-1)+n} S[n,k]_{q^2}",
         .lhs_route = {"partitions/ssp-enumeration"},
         .rhs_route = {"stirling/type-a-recurrence", "qfun/q-power"},
         .grid = nk_grid(6),
         .check = [](const Params& p) {
             LaurentPoly lhs =
                 btilde_enum(static_cast<unsigned>(p.n), static_cast<unsigned>(p.k));
             LaurentPoly rhs = q_int(2).pow(static_cast<unsigned>(p.n)) *
                               qpow(static_cast<long>(p.k) * (p.k - 1) + p.n) *
                               stirling_a(p.n, p.k).subst_q_power(2);
             return make("btilde", p, lhs, rhs);
         }});

    add({.id = "btilde-rec",
         .claim = "Btilde_{n,k}(q) = [2]_q q^{2k-1} Btilde_{n-1,k-1}(q) + q [2]_q [k]_{q^2} Btilde_{n-1,k}(q)",
         .lhs_route = {"partitions/ssp-enumeration"},
         .rhs_route = {"partitions/ssp-enumeration"},
         .routes_disjoint = false,
         .grid = nk_grid(6, 1),
         .check = [](const Params& p) {
             unsigned n = static_cast<unsigned>(p.n), k = static_cast<unsigned>(p.k);
             LaurentPoly lhs = btilde_enum(n, k);
             LaurentPoly rhs;
             if (k >= 1)
                 rhs += q_int(2) * qpow(2L * k - 1) * btilde_enum(n - 1, k - 1);
             rhs += LaurentPoly::q() * q_int(2) * q_int(k).subst_q_power(2) *
                    btilde_enum(n - 1, k);
             return make("btilde-rec", p, lhs, rhs);
         }});

    // -- falling-factorial bases ---------------------------------------------

    add({.id = "basis-A",
         .claim = "t^n = sum_k S(n,k) (t)_k at q = 1",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/count-recurrence", "qfun/falling-factorial"},
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += LaurentPoly(stirling_count_a(p.n, k)) *
                        tpoly_at_q1(falling_factorial(FallingKind::a(),
                                                      static_cast<unsigned>(p.n),
                                                      static_cast<unsigned>(k)));
             return make("basis-A", p, t_power(p.n), rhs);
         }});

    add({.id = "basis-B",
         .claim = "t^n = sum_k S_B(n,k) (t)_k^B at q = 1",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/count-recurrence", "qfun/falling-factorial"},
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += LaurentPoly(stirling_count_b(p.n, k)) *
                        tpoly_at_q1(falling_factorial(FallingKind::b(),
                                                      static_cast<unsigned>(p.n),
                                                      static_cast<unsigned>(k)));
             return make("basis-B", p, t_power(p.n), rhs);
         }});

    add({.id = "basis-D",
         .claim = "t^n = sum_k S_D(n,k) (t)_k^D + n((t-1)^{n-1} - (t)_{n-1}^D) at q = 1",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/count-closed-form", "qfun/falling-factorial"},
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += LaurentPoly(stirling_count_d(p.n, k)) *
                        tpoly_at_q1(falling_factorial(FallingKind::d(),
                                                      static_cast<unsigned>(p.n),
                                                      static_cast<unsigned>(k)));
             if (p.n >= 1) {
                 TPoly tm1 = TPoly::t() - TPoly(1);
                 rhs += LaurentPoly(p.n) *
                        (tm1.pow(static_cast<unsigned>(p.n - 1)) -
                         tpoly_at_q1(falling_factorial(FallingKind::d(),
                                                       static_cast<unsigned>(p.n),
                                                       static_cast<unsigned>(p.n - 1))));
             }
             return make("basis-D", p, t_power(p.n), rhs);
         }});

    add({.id = "basis-A-q",
         .claim = "t^n = sum_k S[n,k] (t)_{k,q}",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/type-a-recurrence", "qfun/falling-factorial"},
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += stirling_a(p.n, k) *
                        falling_factorial(FallingKind::a(), static_cast<unsigned>(p.n),
                                          static_cast<unsigned>(k));
             return make("basis-A-q", p, t_power(p.n), rhs);
         }});

    add({.id = "basis-B-q",
         .claim = "t^n = sum_k S_B[n,k] (t)_{k,q}^B",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/type-b-recurrence", "qfun/falling-factorial"},
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += stirling_b(p.n, k) *
                        falling_factorial(FallingKind::b(), static_cast<unsigned>(p.n),
                                          static_cast<unsigned>(k));
             return make("basis-B-q", p, t_power(p.n), rhs);
         }});

    add({.id = "basis-D-q",
         .claim = "t^n = sum_k S_D[n,k] (t)_{k,q}^D + n(t-1)^{n-1} - [n]_q q^{n-1} (t)_{n-1,q}^D",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/type-d-closed-form", "qfun/falling-factorial"},
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += stirling_d(p.n, k) *
                        falling_factorial(FallingKind::d(), static_cast<unsigned>(p.n),
                                          static_cast<unsigned>(k));
             if (p.n >= 1) {
                 TPoly tm1 = TPoly::t() - TPoly(1);
                 rhs += LaurentPoly(p.n) * tm1.pow(static_cast<unsigned>(p.n - 1));
                 rhs -= q_int(static_cast<unsigned>(p.n)) * qpow(p.n - 1) *
                        falling_factorial(FallingKind::d(), static_cast<unsigned>(p.n),
                                          static_cast<unsigned>(p.n - 1));
             }
             return make("basis-D-q", p, t_power(p.n), rhs);
         }});

    add({.id = "basis-bd-bridge",
         .claim = "(t)_{n,q}^B = (t)_{n,q}^D - [n]_q q^{n-1} (t)_{n-1,q}^D",
         .lhs_route = {"qfun/falling-factorial"},
         .rhs_route = {"qfun/falling-factorial"},
         .routes_disjoint = false,
         .grid = n_grid(12),
         .check = [](const Params& p) {
             TPoly lhs = falling_factorial(FallingKind::b(), static_cast<unsigned>(p.n),
                                           static_cast<unsigned>(p.n));
             TPoly rhs = falling_factorial(FallingKind::d(), static_cast<unsigned>(p.n),
                                           static_cast<unsigned>(p.n));
             if (p.n >= 1)
                 rhs -= q_int(static_cast<unsigned>(p.n)) * qpow(p.n - 1) *
                        falling_factorial(FallingKind::d(), static_cast<unsigned>(p.n),
                                          static_cast<unsigned>(p.n - 1));
             return make("basis-bd-bridge", p, lhs, rhs);
         }});

    add({.id = "basis-r-q",
         .claim = "t^n = sum_k S_r[n,k] (t)_{k,q}^r",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/colored-recurrence", "qfun/falling-factorial"},
         .grid = rn_grid(12, /*with_k=*/false, /*series=*/false, /*max_r=*/3),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k)
                 rhs += stirling_r(static_cast<unsigned>(p.r), p.n, k) *
                        falling_factorial(FallingKind::colored(static_cast<unsigned>(p.r)),
                                          static_cast<unsigned>(p.n),
                                          static_cast<unsigned>(k));
             return make("basis-r-q", p, t_power(p.n), rhs);
         }});

    // -- colored generating functions -----------------------------------------

    add({.id = "genfun-r",
         .claim = "sum_k pref_r(n,k) t^k / prod_{i<=k}(1-tq^{ri}) = sum_m [rm+1]_q^n t^m",
         .lhs_route = {"stirling/colored-recurrence", "qpoly/series"},
         .rhs_route = {"qfun/q-integer-powers"},
         .grid = rn_grid(6, /*with_k=*/false, /*series=*/true, /*max_r=*/3),
         .check = [](const Params& p) {
             unsigned M = static_cast<unsigned>(p.order);
             TSeries lhs = stirling_side_series(p.r, p.n, M, [&](int k) {
                 return colored_stirling_prefactor(p.r, p.n, k);
             });
             TSeries rhs = power_sum_series(p.r, p.n, M);
             return make("genfun-r", p, lhs, rhs);
         }});

    add({.id = "carlitz-r",
         .claim = "A_n^r(t,q) / prod_{i=0..n}(1-tq^{ri}) = sum_m [rm+1]_q^n t^m",
         .lhs_route = {"groups/colored-enumeration", "qpoly/series"},
         .rhs_route = {"qfun/q-integer-powers"},
         .grid = rn_grid(6, /*with_k=*/false, /*series=*/true, /*max_r=*/3),
         .check = [](const Params& p) {
             unsigned M = static_cast<unsigned>(p.order);
             TPoly numer =
                 row_to_tpoly(eulerian_r(static_cast<unsigned>(p.r), static_cast<unsigned>(p.n)));
             TSeries lhs = series_from_rational(numer, geometric_factors(p.r, p.n), M);
             TSeries rhs = power_sum_series(p.r, p.n, M);
             return make("carlitz-r", p, lhs, rhs);
         }});

    add({.id = "frobenius-r",
         .claim = "A_n^r(t,q) / prod(1-tq^{ri}) = sum_k pref_r(n,k) t^k / prod_{i<=k}(1-tq^{ri})",
         .lhs_route = {"groups/colored-enumeration", "qpoly/series"},
         .rhs_route = {"stirling/colored-recurrence", "qfun/q-factorial"},
         .grid = rn_grid(6, /*with_k=*/false, /*series=*/true, /*max_r=*/3),
         .check = [](const Params& p) {
             unsigned M = static_cast<unsigned>(p.order);
             TPoly numer =
                 row_to_tpoly(eulerian_r(static_cast<unsigned>(p.r), static_cast<unsigned>(p.n)));
             TSeries lhs = series_from_rational(numer, geometric_factors(p.r, p.n), M);
             TSeries rhs = stirling_side_series(p.r, p.n, M, [&](int k) {
                 return colored_stirling_prefactor(p.r, p.n, k);
             });
             return make("frobenius-r", p, lhs, rhs);
         }});

    add({.id = "thm-main-r",
         .claim = "pref_r(n,k) = sum_{l=0..k} q^{rk(k-l)} A_{n,l}^r(q) qbinom_{q^r}(n-l, k-l)",
         .lhs_route = {"stirling/colored-recurrence", "qfun/q-factorial"},
         .rhs_route = {"groups/colored-enumeration", "qfun/q-binomial"},
         .grid = rn_grid(6, /*with_k=*/true, /*series=*/false, /*max_r=*/4, /*r4_n=*/5),
         .check = [](const Params& p) {
             LaurentPoly lhs = colored_stirling_prefactor(p.r, p.n, p.k);
             LaurentPoly rhs;
             auto row = eulerian_r(static_cast<unsigned>(p.r), static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 rhs += qpow(static_cast<long>(p.r) * p.k * (p.k - l)) *
                        row[static_cast<std::size_t>(l)] *
                        q_binomial_base(static_cast<unsigned>(p.n - l), p.k - l,
                                        static_cast<unsigned>(p.r));
             return make("thm-main-r", p, lhs, rhs);
         }});

    add({.id = "q-extension",
         .claim = "1/prod_{i=0..n}(1-tq^{ri}) = sum_{k=l..n} (tq^{rk})^{k-l} qbinom_{q^r}(n-l,k-l) / prod_{i<=k}(1-tq^{ri})",
         .lhs_route = {"qpoly/series-inversion"},
         .rhs_route = {"qfun/q-binomial", "qpoly/series"},
         .routes_disjoint = false,
         .grid = [](const GridConfig& g) {
             std::vector<Params> out;
             for (int r : g.r_values) {
                 if (r > 3) continue;
                 for (int n = 0; n <= bound(g, 6); ++n)
                     for (int l = 0; l <= n; ++l)
                         out.push_back(Params{.n = n, .ell = l, .r = r, .order = g.order});
             }
             return out;
         },
         .check = [](const Params& p) {
             unsigned M = static_cast<unsigned>(p.order);
             TSeries lhs = series_from_rational(TPoly(1), geometric_factors(p.r, p.n), M);
             TSeries rhs(M);
             for (int k = p.ell; k <= p.n; ++k) {
                 TPoly numer = TPoly::monomial(
                     qpow(static_cast<long>(p.r) * k * (k - p.ell)) *
                         q_binomial_base(static_cast<unsigned>(p.n - p.ell), k - p.ell,
                                         static_cast<unsigned>(p.r)),
                     static_cast<unsigned>(k - p.ell));
                 rhs += series_from_rational(numer, geometric_factors(p.r, k), M);
             }
             return make("q-extension", p, lhs, rhs);
         }});

    add({.id = "chu-vandermonde",
         .claim = "qbinom(n+m, m) = sum_k qbinom(n-l, k) qbinom(m+l, m-k) q^{k(k+l)}",
         .lhs_route = {"qfun/q-binomial"},
         .rhs_route = {"qfun/q-binomial"},
         .routes_disjoint = false,
         .grid = [](const GridConfig& g) {
             std::vector<Params> out;
             for (int n = 0; n <= bound(g, 8); ++n)
                 for (int m = 0; m <= bound(g, 8); ++m)
                     for (int l = 0; l <= n; ++l)
                         out.push_back(Params{.n = n, .ell = l, .m = m});
             return out;
         },
         .check = [](const Params& p) {
             LaurentPoly lhs = q_binomial(static_cast<unsigned>(p.n + p.m), p.m);
             LaurentPoly rhs;
             for (int k = 0; k <= p.n - p.ell; ++k)
                 rhs += q_binomial(static_cast<unsigned>(p.n - p.ell), k) *
                        q_binomial(static_cast<unsigned>(p.m + p.ell), p.m - k) *
                        qpow(static_cast<long>(k) * (k + p.ell));
             return make("chu-vandermonde", p, lhs, rhs);
         }});

    add({.id = "frobenius-A",
         .claim = "t A_n(t,q) / prod_{i=0..n}(1-tq^i) = sum_k q^C(k,2) [k]_q! S[n,k] t^k / prod_{i<=k}(1-tq^i)",
         .lhs_route = {"groups/sn-enumeration", "qpoly/series"},
         .rhs_route = {"stirling/type-a-recurrence", "qfun/q-factorial"},
         // n = 0 is excluded: with the leading t the left side has no
         // constant term while the right side starts at 1.
         .grid = [](const GridConfig& g) {
             std::vector<Params> out;
             for (int n = 1; n <= bound(g, 6); ++n)
                 out.push_back(Params{.n = n, .order = g.order});
             return out;
         },
         .check = [](const Params& p) {
             unsigned M = static_cast<unsigned>(p.order);
             TPoly numer = TPoly::t() * row_to_tpoly(eulerian_a(static_cast<unsigned>(p.n)));
             TSeries lhs = series_from_rational(numer, geometric_factors(1, p.n), M);
             TSeries rhs = stirling_side_series(1, p.n, M, [&](int k) {
                 return qpow(static_cast<long>(k) * (k - 1) / 2) *
                        q_factorial(static_cast<unsigned>(k)) * stirling_a(p.n, k);
             });
             return make("frobenius-A", p, lhs, rhs);
         }});

    // -- specializations -------------------------------------------------------

    add({.id = "specialize-r1",
         .claim = "S_1[n,k] = S[n+1,k+1]",
         .lhs_route = {"stirling/colored-recurrence"},
         .rhs_route = {"stirling/type-a-recurrence"},
         .grid = nk_grid(8),
         .check = [](const Params& p) {
             return make("specialize-r1", p, stirling_r(1, p.n, p.k),
                         stirling_a(p.n + 1, p.k + 1));
         }});

    add({.id = "specialize-r1-eulerian",
         .claim = "A_{n,k}^1(q) = A_{n,k}(q)",
         .lhs_route = {"groups/colored-enumeration"},
         .rhs_route = {"groups/sn-enumeration"},
         .grid = nk_grid(8),
         .check = [](const Params& p) {
             auto colored = eulerian_r(1, static_cast<unsigned>(p.n));
             auto plain = eulerian_a(static_cast<unsigned>(p.n));
             LaurentPoly lhs = colored[static_cast<std::size_t>(p.k)];
             LaurentPoly rhs = static_cast<std::size_t>(p.k) < plain.size()
                                   ? plain[static_cast<std::size_t>(p.k)]
                                   : LaurentPoly();
             return make("specialize-r1-eulerian", p, lhs, rhs);
         }});

    add({.id = "specialize-r1-stats",
         .claim = "(des_1, fmaj_1) of an uncolored permutation equals (des, maj)",
         .lhs_route = {"groups/colored-statistics"},
         .rhs_route = {"groups/type-a-statistics"},
         .routes_disjoint = false,
         .grid = n_grid(8),
         .check = [](const Params& p) {
             long long violations = 0;
             std::string witness;
             for_each_sn(static_cast<unsigned>(p.n), [&](const std::vector<int>& perm) {
                 ColoredPerm c{1, perm, std::vector<int>(perm.size(), 0)};
                 StatsR sr = stats_r(c);
                 StatsA sa = stats_a(perm);
                 if (sr.des_r != sa.des || sr.fmaj_r != sa.maj) {
                     ++violations;
                     if (witness.empty()) witness = "perm " + perm_to_string(perm);
                 }
             });
             return make_property("specialize-r1-stats", p, violations, witness);
         }});

    add({.id = "specialize-r2",
         .claim = "S_2[n,k] = S_B[n,k]",
         .lhs_route = {"stirling/colored-recurrence"},
         .rhs_route = {"stirling/type-b-recurrence"},
         .routes_disjoint = false,
         .grid = nk_grid(8),
         .check = [](const Params& p) {
             return make("specialize-r2", p, stirling_r(2, p.n, p.k), stirling_b(p.n, p.k));
         }});

    add({.id = "specialize-r2-eulerian",
         .claim = "A_{n,k}^2(q) = B_{n,k}(q)",
         .lhs_route = {"groups/colored-enumeration"},
         .rhs_route = {"groups/bn-enumeration"},
         .grid = nk_grid(8),
         .check = [](const Params& p) {
             // The n = 8 wreath product has 2^8 8! elements, just above the
             // default colored cap; raise it for this entry only.
             EnumCaps caps;
             caps.colored_max_size = 11'000'000;
             auto colored = eulerian_r(2, static_cast<unsigned>(p.n), caps);
             auto type_b = eulerian_b(static_cast<unsigned>(p.n));
             return make("specialize-r2-eulerian", p,
                         colored[static_cast<std::size_t>(p.k)],
                         type_b[static_cast<std::size_t>(p.k)]);
         }});

    add({.id = "specialize-r2-stats",
         .claim = "(des_2, fmaj_2) matches (des_B, fmaj) under value/color <-> signed letter",
         .lhs_route = {"groups/colored-statistics"},
         .rhs_route = {"groups/type-b-statistics"},
         .routes_disjoint = false,
         .grid = n_grid(8),
         .check = [](const Params& p) {
             long long violations = 0;
             std::string witness;
             for_each_bn(static_cast<unsigned>(p.n), [&](const SignedPerm& pi) {
                 ColoredPerm c{2, {}, {}};
                 for (int v : pi.window) {
                     c.base.push_back(std::abs(v));
                     c.colors.push_back(v < 0 ? 1 : 0);
                 }
                 StatsR sr = stats_r(c);
                 StatsB sb = stats_b(pi);
                 if (sr.des_r != sb.des_b || sr.fmaj_r != sb.fmaj) {
                     ++violations;
                     if (witness.empty()) witness = "perm " + pi.to_string();
                 }
             });
             return make_property("specialize-r2-stats", p, violations, witness);
         }});

    // -- sign-type and insertion lemmas ----------------------------------------

    add({.id = "index-sums",
         .claim = "sum over mixed-sign descents + neg = sum over mixed-sign ascents + (n if pi_n < 0)",
         .lhs_route = {"groups/sign-type-profile"},
         .rhs_route = {"groups/sign-type-profile"},
         .routes_disjoint = false,
         .grid = n_grid(6, 1),
         .check = [](const Params& p) {
             long long violations = 0;
             std::string witness;
             for_each_bn(static_cast<unsigned>(p.n), [&](const SignedPerm& pi) {
                 SignTypeProfile prof = sign_type_profile(pi);
                 long lhs = stats_b(pi).neg;
                 for (int i : prof.desc_pm) lhs += i;
                 long rhs = pi.window.back() < 0 ? p.n : 0;
                 for (int i : prof.asc_mp) rhs += i;
                 if (lhs != rhs) {
                     ++violations;
                     if (witness.empty()) witness = "perm " + pi.to_string();
                 }
             });
             return make_property("index-sums", p, violations, witness);
         }});

    add({.id = "des-complement",
         .claim = "des_B(psi(pi)) = n - des_B(pi) and psi is an involution",
         .lhs_route = {"groups/psi"},
         .rhs_route = {"groups/type-b-statistics"},
         .routes_disjoint = false,
         .grid = n_grid(7),
         .check = [](const Params& p) {
             long long violations = 0;
             std::string witness;
             for_each_bn(static_cast<unsigned>(p.n), [&](const SignedPerm& pi) {
                 SignedPerm image = psi(pi);
                 bool ok = stats_b(image).des_b == p.n - stats_b(pi).des_b &&
                           psi(image) == pi;
                 if (!ok) {
                     ++violations;
                     if (witness.empty()) witness = "perm " + pi.to_string();
                 }
             });
             return make_property("des-complement", p, violations, witness);
         }});

    add({.id = "fmaj-deltas",
         .claim = "the five insertion-map fmaj shifts hold; images are injective, disjoint, exhaustive",
         .lhs_route = {"starred/insertion-maps"},
         .rhs_route = {"starred/enumeration"},
         .routes_disjoint = false,
         .grid = nk_grid(6, 1),
         .check = [](const Params& p) {
             const int n = p.n, k = p.k;
             long long violations = 0;
             std::string witness;
             std::set<StarredPerm> images;
             auto record = [&](const StarredPerm& img, int got, int expected,
                               const char* label) {
                 if (got != expected) {
                     ++violations;
                     if (witness.empty())
                         witness = std::string(label) + " shift mismatch at " +
                                   img.to_string();
                 }
                 if (!images.insert(img).second) {
                     ++violations;
                     if (witness.empty())
                         witness = std::string("duplicate image ") + img.to_string();
                 }
             };
             if (k <= n - 1) {
                 for_each_starred(static_cast<unsigned>(n - 1), static_cast<unsigned>(k),
                                  [&](const StarredPerm& src) {
                     int f = fmaj_starred(src);
                     for (int i = 0; i <= n - k - 1; ++i) {
                         StarredPerm a = insert_bar(+1, i, src);
                         record(a, fmaj_starred(a) - f, 2 * i, "bar+");
                         StarredPerm b = insert_bar(-1, i, src);
                         record(b, fmaj_starred(b) - f,
                                i == 0 ? 2 * n - 2 * k - 1 : 2 * i - 1, "bar-");
                     }
                 });
             }
             if (k >= 1) {
                 for_each_starred(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1),
                                  [&](const StarredPerm& src) {
                     int f = fmaj_starred(src);
                     for (int i = 1; i <= n - k; ++i) {
                         StarredPerm a = insert_star(+1, i, src);
                         record(a, fmaj_starred(a) - f, 2 * i - 1, "star+");
                     }
                     for (int i = 0; i <= n - k; ++i) {
                         StarredPerm b = insert_star(-1, i, src);
                         record(b, fmaj_starred(b) - f,
                                i == 0 ? 2 * n - 2 * k : 2 * i - 2, "star-");
                     }
                 });
             }
             for_each_starred(static_cast<unsigned>(n), static_cast<unsigned>(k),
                              [&](const StarredPerm& target) {
                 if (!images.erase(target)) {
                     ++violations;
                     if (witness.empty())
                         witness = "uncovered target " + target.to_string();
                 }
             });
             if (!images.empty()) {
                 violations += static_cast<long long>(images.size());
                 if (witness.empty())
                     witness = "image outside target set " + images.begin()->to_string();
             }
             return make_property("fmaj-deltas", p, violations, witness);
         }});

    // -- negative controls -------------------------------------------------------

    add({.id = "thm-main-B-corrupted",
         .claim = "negative control: the main type B identity with one exponent shifted",
         .lhs_route = {"stirling/type-b-recurrence", "qfun/q-factorial"},
         .rhs_route = {"groups/bn-enumeration", "qfun/q-binomial"},
         .negative_control = true,
         .grid = nk_grid(2),
         .check = [](const Params& p) {
             LaurentPoly lhs = q_int(2).pow(static_cast<unsigned>(p.k)) *
                               q_factorial_base(static_cast<unsigned>(p.k), 2) *
                               stirling_b(p.n, p.k);
             LaurentPoly rhs;
             auto row = eulerian_b(static_cast<unsigned>(p.n));
             for (int l = 0; l <= p.k; ++l)
                 rhs += qpow(static_cast<long>(p.k) * (p.k - 2 * l) + 1) *
                        row[static_cast<std::size_t>(l)] *
                        q_binomial_base(static_cast<unsigned>(p.n - l), p.k - l, 2);
             return make("thm-main-B-corrupted", p, lhs, rhs);
         }});

    add({.id = "basis-B-q-corrupted",
         .claim = "negative control: the type B falling-factorial basis with roots [2i]_q",
         .lhs_route = {"qpoly/monomial"},
         .rhs_route = {"stirling/type-b-recurrence", "qfun/q-integer"},
         .negative_control = true,
         .grid = n_grid(3, 1),
         .check = [](const Params& p) {
             TPoly rhs;
             for (int k = 0; k <= p.n; ++k) {
                 TPoly ff(1);
                 for (int i = 1; i <= k; ++i)
                     ff *= TPoly::t() - TPoly(q_int(static_cast<unsigned>(2 * i)));
                 rhs += stirling_b(p.n, k) * ff;
             }
             return make("basis-B-q-corrupted", p, t_power(p.n), rhs);
         }});

    return reg;
}

} // namespace

const std::vector<IdentityEntry>& registry() {
    static const std::vector<IdentityEntry> reg = build_registry();
    return reg;
}

const IdentityEntry& find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw UnknownIdentity("unknown identity: " + id);
}

IdentityReport verify(const std::string& id, const Params& params) {
    return find_entry(id).check(params);
}

std::vector<IdentityReport> verify_all(const GridConfig& config,
                                       bool include_negative_controls) {
    std::vector<IdentityReport> reports;
    for (const auto& entry : registry()) {
        if (entry.negative_control && !include_negative_controls) continue;
        for (const Params& p : entry.grid(config)) reports.push_back(entry.check(p));
    }
    return reports;
}

} // namespace qcomb
