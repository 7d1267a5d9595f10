// Command-line front end: polynomial tables, identity verification, and
// per-element statistic dumps. Exit codes: 0 success, 1 verification
// failure, 2 usage error / unknown name.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qcomb/groups.hpp"
#include "qcomb/identities.hpp"
#include "qcomb/qfun.hpp"
#include "qcomb/starred.hpp"
#include "qcomb/stirling.hpp"

namespace {

using qcomb::LaurentPoly;

enum class Format { text, csv, json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw CLI::ValidationError("--format", "expected text, csv or json");
}

struct TableRow {
    int n;
    int k;
    std::string poly;
};

void print_table(const std::vector<TableRow>& rows, Format format) {
    switch (format) {
        case Format::csv:
            std::cout << "n,k,poly\n";
            for (const auto& r : rows)
                std::cout << r.n << ',' << r.k << ',' << r.poly << '\n';
            break;
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows)
                arr.push_back({{"n", r.n}, {"k", r.k}, {"poly", r.poly}});
            std::cout << arr.dump() << '\n';
            break;
        }
        case Format::text:
            for (const auto& r : rows)
                std::cout << "n=" << r.n << " k=" << r.k << ": " << r.poly << '\n';
            break;
    }
}

int run_table(const std::string& family, int row_n, int r, Format format) {
    const bool needs_r = family == "stirling-r" || family == "eulerian-r";
    if (needs_r && r < 1) {
        std::cerr << "table: --r is required for " << family << '\n';
        return 2;
    }

    std::function<std::vector<TableRow>(int)> row_for;
    if (family == "stirling-a" || family == "stirling-b" || family == "stirling-d" ||
        family == "chow-gessel" || family == "stirling-r") {
        row_for = [&](int n) {
            std::vector<TableRow> out;
            for (int k = 0; k <= n; ++k) {
                LaurentPoly v = family == "stirling-a"   ? qcomb::stirling_a(n, k)
                                : family == "stirling-b" ? qcomb::stirling_b(n, k)
                                : family == "stirling-d" ? qcomb::stirling_d(n, k)
                                : family == "chow-gessel"
                                    ? qcomb::chow_gessel(n, k)
                                    : qcomb::stirling_r(static_cast<unsigned>(r), n, k);
                out.push_back({n, k, v.to_string()});
            }
            return out;
        };
    } else if (family == "eulerian-a" || family == "eulerian-b" || family == "eulerian-r" ||
               family == "bfmaj") {
        row_for = [&](int n) {
            std::vector<LaurentPoly> row =
                family == "eulerian-a"   ? qcomb::eulerian_a(static_cast<unsigned>(n))
                : family == "eulerian-b" ? qcomb::eulerian_b(static_cast<unsigned>(n))
                : family == "eulerian-r"
                    ? qcomb::eulerian_r(static_cast<unsigned>(r), static_cast<unsigned>(n))
                    : qcomb::bfmaj_row(static_cast<unsigned>(n));
            std::vector<TableRow> out;
            for (std::size_t k = 0; k < row.size(); ++k)
                out.push_back({n, static_cast<int>(k), row[k].to_string()});
            return out;
        };
    } else {
        std::cerr << "table: unknown family " << family << '\n';
        return 2;
    }

    print_table(row_for(row_n), format);
    return 0;
}

int run_verify(std::vector<std::string> ids, const qcomb::GridConfig& config,
               bool with_controls, Format format) {
    if (format == Format::csv) {
        std::cerr << "verify: --format csv is not supported; use text or json\n";
        return 2;
    }
    if (ids.empty()) ids.push_back("all");

    std::vector<qcomb::IdentityReport> reports;
    try {
        if (ids.size() == 1 && ids[0] == "all") {
            reports = qcomb::verify_all(config, with_controls);
        } else {
            for (const auto& id : ids) {
                const auto& entry = qcomb::find_entry(id);
                for (const auto& p : entry.grid(config)) reports.push_back(entry.check(p));
            }
        }
    } catch (const qcomb::UnknownIdentity& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return 2;
    }

    bool all_equal = true;
    for (const auto& rep : reports) {
        all_equal = all_equal && rep.equal;
        if (format == Format::json) {
            std::cout << rep.to_json() << '\n';
        } else {
            std::cout << (rep.equal ? "PASS" : "FAIL") << ' ' << rep.id << " ["
                      << rep.params.to_string() << ']';
            if (!rep.equal) std::cout << " witness: " << rep.witness;
            std::cout << '\n';
        }
    }
    if (format == Format::text)
        std::cout << reports.size() << " checks, " << (all_equal ? "all passed" : "FAILURES")
                  << '\n';
    return all_equal ? 0 : 1;
}

struct StatsRecord {
    std::string element;
    std::vector<long> values;
};

void print_stats(const std::vector<std::string>& names, const std::vector<StatsRecord>& records,
                 Format format) {
    switch (format) {
        case Format::csv: {
            std::cout << "element";
            for (const auto& s : names) std::cout << ',' << s;
            std::cout << '\n';
            for (const auto& rec : records) {
                std::cout << rec.element;
                for (long v : rec.values) std::cout << ',' << v;
                std::cout << '\n';
            }
            break;
        }
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& rec : records) {
                nlohmann::json obj{{"element", rec.element}};
                for (std::size_t i = 0; i < names.size(); ++i) obj[names[i]] = rec.values[i];
                arr.push_back(obj);
            }
            std::cout << arr.dump() << '\n';
            break;
        }
        case Format::text:
            for (const auto& rec : records) {
                std::cout << rec.element;
                for (std::size_t i = 0; i < names.size(); ++i)
                    std::cout << ' ' << names[i] << '=' << rec.values[i];
                std::cout << '\n';
            }
            break;
    }
}

int run_stats(const std::string& group, int n, int r, std::vector<std::string> names,
              const qcomb::EnumCaps& caps, Format format) {
    std::vector<StatsRecord> records;
    if (group == "a") {
        if (names.empty()) names = {"des", "maj"};
        for (const auto& s : names)
            if (s != "des" && s != "maj") {
                std::cerr << "stats: statistic " << s << " is not defined for group a\n";
                return 2;
            }
        qcomb::for_each_sn(static_cast<unsigned>(n), [&](const std::vector<int>& perm) {
            qcomb::StatsA st = qcomb::stats_a(perm);
            StatsRecord rec{qcomb::perm_to_string(perm), {}};
            for (const auto& s : names) rec.values.push_back(s == "des" ? st.des : st.maj);
            records.push_back(std::move(rec));
        }, caps);
    } else if (group == "b") {
        if (names.empty()) names = {"des_b", "fmaj"};
        for (const auto& s : names)
            if (s != "des" && s != "des_b" && s != "fmaj" && s != "neg") {
                std::cerr << "stats: statistic " << s << " is not defined for group b\n";
                return 2;
            }
        qcomb::for_each_bn(static_cast<unsigned>(n), [&](const qcomb::SignedPerm& pi) {
            qcomb::StatsB st = qcomb::stats_b(pi);
            StatsRecord rec{pi.to_string(), {}};
            for (const auto& s : names)
                rec.values.push_back(s == "fmaj" ? st.fmaj : s == "neg" ? st.neg : st.des_b);
            records.push_back(std::move(rec));
        }, caps);
    } else if (group == "colored") {
        if (r < 1) {
            std::cerr << "stats: --r is required for group colored\n";
            return 2;
        }
        if (names.empty()) names = {"des_r", "fmaj_r"};
        for (const auto& s : names)
            if (s != "des_r" && s != "fmaj_r") {
                std::cerr << "stats: statistic " << s << " is not defined for group colored\n";
                return 2;
            }
        qcomb::for_each_colored(static_cast<unsigned>(r), static_cast<unsigned>(n),
                                [&](const qcomb::ColoredPerm& pi) {
            qcomb::StatsR st = qcomb::stats_r(pi);
            StatsRecord rec{pi.to_string(), {}};
            for (const auto& s : names)
                rec.values.push_back(s == "des_r" ? st.des_r : st.fmaj_r);
            records.push_back(std::move(rec));
        }, caps);
    } else {
        std::cerr << "stats: unknown group " << group << '\n';
        return 2;
    }
    print_stats(names, records, format);
    return 0;
}

std::vector<std::string> split_commas(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& chunk : raw) {
        std::stringstream ss(chunk);
        std::string piece;
        while (std::getline(ss, piece, ','))
            if (!piece.empty()) out.push_back(piece);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-Stirling / q-Eulerian tables and identity verification"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "Print a polynomial triangle");
    std::string family;
    int table_n = 0, table_r = 0;
    table->add_option("family", family,
                      "stirling-a|stirling-b|chow-gessel|stirling-r|stirling-d|"
                      "eulerian-a|eulerian-b|eulerian-r|bfmaj")
        ->required();
    table->add_option("--n", table_n, "Row index")->required();
    table->add_option("--r", table_r, "Number of colors (stirling-r, eulerian-r)");

    auto* verify = app.add_subcommand("verify", "Check registered identities");
    std::vector<std::string> id_args, id_flags, r_args;
    int max_n = -1, order = 8;
    bool with_controls = false;
    verify->add_option("id", id_args, "Identity ids, or 'all'");
    verify->add_option("--ids", id_flags, "Comma-separated identity ids");
    verify->add_option("--max-n", max_n, "Override the per-entry bound on n");
    verify->add_option("--r", r_args, "Comma-separated list of color counts");
    verify->add_option("--order", order, "Series truncation order")->capture_default_str();
    verify->add_flag("--with-negative-controls", with_controls,
                     "Also run the deliberately failing control entries");

    auto* stats = app.add_subcommand("stats", "Per-element statistic dump");
    std::string group;
    int stats_n = 0, stats_r = 0;
    std::vector<std::string> stat_names;
    unsigned sn_cap = qcomb::kDefaultCaps.sn_max;
    unsigned bn_cap = qcomb::kDefaultCaps.bn_max;
    unsigned long long colored_cap = qcomb::kDefaultCaps.colored_max_size;
    stats->add_option("group", group, "a|b|colored")->required();
    stats->add_option("--n", stats_n, "Group rank")->required();
    stats->add_option("--r", stats_r, "Number of colors (group colored)");
    stats->add_option("--stats", stat_names, "Comma-separated statistics to print");
    stats->add_option("--sn-cap", sn_cap, "Largest allowed n for group a")
        ->capture_default_str();
    stats->add_option("--bn-cap", bn_cap, "Largest allowed n for group b")
        ->capture_default_str();
    stats->add_option("--colored-cap", colored_cap, "Largest allowed colored group size")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Format format;
    try {
        format = parse_format(format_name);
    } catch (const CLI::ParseError&) {
        std::cerr << "unknown format: " << format_name << '\n';
        return 2;
    }

    try {
        if (table->parsed()) return run_table(family, table_n, table_r, format);
        if (verify->parsed()) {
            qcomb::GridConfig config;
            if (max_n >= 0) config.max_n = max_n;
            std::vector<std::string> rs = split_commas(r_args);
            if (!rs.empty()) {
                config.r_values.clear();
                for (const auto& s : rs) config.r_values.push_back(std::stoi(s));
            }
            config.order = order;
            std::vector<std::string> ids = split_commas(id_flags);
            for (auto& id : split_commas(id_args)) ids.push_back(std::move(id));
            return run_verify(std::move(ids), config, with_controls, format);
        }
        if (stats->parsed()) {
            qcomb::EnumCaps caps{sn_cap, bn_cap, colored_cap};
            return run_stats(group, stats_n, stats_r, split_commas(stat_names), caps, format);
        }
    } catch (const qcomb::InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qcomb::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
