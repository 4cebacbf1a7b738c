// Command line front end: count tables, verification battery, bound and
// ratio reports, and codebook export. Exit codes: 0 success, 1 a checked
// property failed, 2 usage or configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include "subsetsums/bounds.hpp"
#include "subsetsums/codebook.hpp"
#include "subsetsums/counting.hpp"
#include "subsetsums/group.hpp"
#include "subsetsums/group_enum.hpp"
#include "subsetsums/table_io.hpp"
#include "subsetsums/verify.hpp"

namespace {

using namespace subsetsums;
using ordered_json = nlohmann::ordered_json;

struct Options {
    std::vector<std::string> groups;
    int h = -1;
    int h_min = -1;
    int h_max = -1;
    std::string method = "dp";
    std::string format = "csv";
    std::string out;
    std::string a_spec = "sum";
    std::uint64_t order = 0;
    std::uint64_t max_order = 0;
    std::uint64_t seed = 12345;
    std::uint64_t enum_limit = CountLimits{}.enumeration_limit;
    std::uint64_t dp_limit = CountLimits{}.dp_limit;
    bool allow_out_of_range = false;
};

CountLimits count_limits(const Options& o) {
    return {o.enum_limit, o.dp_limit};
}

// Output goes to --out when given (relative paths resolve against
// SUBSETSUMS_OUT_DIR), otherwise to stdout.
struct Output {
    std::ofstream file;
    bool to_file = false;
    std::ostream& stream() { return to_file ? static_cast<std::ostream&>(file) : std::cout; }
};

Output open_output(const std::string& out) {
    Output o;
    if (out.empty()) return o;
    namespace fs = std::filesystem;
    fs::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("SUBSETSUMS_OUT_DIR")) p = fs::path(dir) / p;
    }
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    o.file.open(p);
    if (!o.file) throw std::invalid_argument("cannot open output file " + p.string());
    o.to_file = true;
    return o;
}

// --h alone or --h-min/--h-max together; returns the inclusive range.
std::pair<int, int> h_range(const Options& o) {
    if (o.h >= 0) {
        if (o.h_min >= 0 || o.h_max >= 0) {
            throw std::invalid_argument("--h conflicts with --h-min/--h-max");
        }
        return {o.h, o.h};
    }
    if (o.h_min < 0 || o.h_max < 0) {
        throw std::invalid_argument("give --h, or both --h-min and --h-max");
    }
    if (o.h_min > o.h_max) throw std::invalid_argument("--h-min exceeds --h-max");
    return {o.h_min, o.h_max};
}

bool has_h_request(const Options& o) {
    return o.h >= 0 || o.h_min >= 0 || o.h_max >= 0;
}

GroupSpec single_group(const Options& o) {
    if (o.groups.size() != 1) throw std::invalid_argument("this subcommand takes exactly one --group");
    return GroupSpec::parse(o.groups.front());
}

// Groups from repeated --group plus the --order / --max-order sweeps,
// sorted by (order, orders vector) with duplicates removed.
std::vector<GroupSpec> collect_groups(const Options& o) {
    std::vector<GroupSpec> groups;
    for (const auto& s : o.groups) groups.push_back(GroupSpec::parse(s));
    if (o.order > 0) {
        for (auto& g : abelian_groups_of_order(o.order)) groups.push_back(std::move(g));
    }
    if (o.max_order > 0) {
        for (std::uint64_t n = 1; n <= o.max_order; ++n) {
            for (auto& g : abelian_groups_of_order(n)) groups.push_back(std::move(g));
        }
    }
    if (groups.empty()) throw std::invalid_argument("no groups selected; use --group, --order or --max-order");
    std::sort(groups.begin(), groups.end(), [](const GroupSpec& a, const GroupSpec& b) {
        return std::tuple(a.order(), a.orders()) < std::tuple(b.order(), b.orders());
    });
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    return groups;
}

int run_count(const Options& o) {
    const GroupSpec g = single_group(o);
    const auto [lo, hi] = h_range(o);
    const std::uint64_t n = g.order();
    if (static_cast<std::uint64_t>(hi) > n) {
        throw std::invalid_argument("h = " + std::to_string(hi) + " exceeds group order " + std::to_string(n));
    }
    const CountLimits limits = count_limits(o);

    CountRows rows;
    auto rows_from_table = [&](const CountTable& table) {
        CountRows out;
        for (int h = lo; h <= hi; ++h) out.emplace_back(h, table.row(h));
        return out;
    };

    if (o.method == "brute") {
        for (int h = lo; h <= hi; ++h) rows.emplace_back(h, count_brute_force(g, h, limits));
    } else if (o.method == "dp") {
        rows = rows_from_table(count_dp(g, hi, limits));
    } else if (o.method == "recurrence") {
        rows = rows_from_table(count_via_recurrence(g, hi));
    } else {  // all three, cross-checked
        const CountTable dp = count_dp(g, hi, limits);
        const CountTable rec = count_via_recurrence(g, hi);
        for (int h = lo; h <= hi; ++h) {
            const auto brute = count_brute_force(g, h, limits);
            for (std::uint64_t a = 0; a < n; ++a) {
                const BigNat& d = dp.at(h, a);
                if (!(brute[a] == d) || !(rec.at(h, a) == d)) {
                    std::cerr << "method disagreement at h=" << h << " a=" << a
                              << ": brute " << brute[a] << ", dp " << d
                              << ", recurrence " << rec.at(h, a) << '\n';
                    return 1;
                }
            }
        }
        rows = rows_from_table(dp);
    }

    Output out = open_output(o.out);
    if (o.format == "json") write_count_rows_json(out.stream(), g, rows);
    else write_count_rows_csv(out.stream(), g, rows);
    return 0;
}

int run_verify(const Options& o) {
    std::vector<GroupSpec> groups;
    for (const auto& s : o.groups) groups.push_back(GroupSpec::parse(s));
    if (groups.empty()) throw std::invalid_argument("no groups selected; use --group");
    VerifyLimits limits;
    limits.counting = count_limits(o);
    limits.seed = o.seed;

    ordered_json reports = ordered_json::array();
    bool all_ok = true;
    for (const auto& g : groups) {
        const VerifyReport report = verify_group(g, limits);
        all_ok = all_ok && report.all_passed();
        reports.push_back(report.json());
    }
    Output out = open_output(o.out);
    out.stream() << reports.dump(2) << '\n';
    if (!all_ok) {
        std::cerr << "verification failed; see report\n";
        return 1;
    }
    return 0;
}

int run_bounds(const Options& o) {
    const CountLimits limits = count_limits(o);
    std::vector<BoundRow> rows;
    bool all_hold = true;
    for (const auto& g : collect_groups(o)) {
        const std::uint64_t n = g.order();
        int lo, hi;
        if (has_h_request(o)) {
            std::tie(lo, hi) = h_range(o);
            if (lo < 1 || static_cast<std::uint64_t>(hi) > n) {
                throw std::invalid_argument("requested h range [" + std::to_string(lo) + ", " +
                                            std::to_string(hi) + "] outside [1, n] for n = " + std::to_string(n));
            }
            if (!o.allow_out_of_range &&
                (lo < 2 || static_cast<std::uint64_t>(hi) > n / 2 + 1)) {
                throw std::invalid_argument("h range leaves the proven window [2, n/2+1]; "
                                            "pass --allow-out-of-range to quote the bound anyway");
            }
        } else {
            lo = 2;
            hi = static_cast<int>(std::min<std::uint64_t>(n / 2 + 1, n));
        }
        if (lo > hi) continue;
        const CountTable table = count_dp(g, hi, limits);
        for (int h = lo; h <= hi; ++h) {
            BoundRow row;
            row.group = g.str();
            row.report = check_deviation_bound(g, table, h, !o.allow_out_of_range);
            all_hold = all_hold && row.report.comparison.holds;
            rows.push_back(std::move(row));
        }
    }
    Output out = open_output(o.out);
    if (o.format == "json") write_bound_rows_json(out.stream(), rows);
    else write_bound_rows_csv(out.stream(), rows);
    if (!all_hold) {
        std::cerr << "deviation bound violated; see report\n";
        return 1;
    }
    return 0;
}

int run_ratio_table(const Options& o) {
    const CountLimits limits = count_limits(o);
    std::vector<RatioRow> rows;
    bool all_hold = true;
    for (const auto& g : collect_groups(o)) {
        const std::uint64_t n = g.order();
        int lo, hi;
        if (has_h_request(o)) {
            std::tie(lo, hi) = h_range(o);
            if (lo < 4 || static_cast<std::uint64_t>(hi) > n) {
                throw std::invalid_argument("requested h range [" + std::to_string(lo) + ", " +
                                            std::to_string(hi) + "] outside [4, n] for n = " + std::to_string(n));
            }
            if (!o.allow_out_of_range && static_cast<std::uint64_t>(hi) > n / 2 + 1) {
                throw std::invalid_argument("h range leaves the proven window [4, n/2+1]; "
                                            "pass --allow-out-of-range to quote the bound anyway");
            }
        } else {
            lo = 4;
            hi = static_cast<int>(std::min<std::uint64_t>(n / 2 + 1, n));
        }
        if (lo > hi) continue;
        const CountTable table = count_dp(g, hi, limits);
        for (int h = lo; h <= hi; ++h) {
            RatioRow row;
            row.group = g.str();
            row.report = check_ratio_bound(g, table, h, !o.allow_out_of_range);
            all_hold = all_hold && row.report.holds;
            rows.push_back(std::move(row));
        }
    }
    Output out = open_output(o.out);
    if (o.format == "json") write_ratio_rows_json(out.stream(), rows);
    else write_ratio_rows_csv(out.stream(), rows);
    if (!all_hold) {
        std::cerr << "ratio bound violated; see report\n";
        return 1;
    }
    return 0;
}

int run_export_code(const Options& o) {
    const GroupSpec g = single_group(o);
    const auto [lo, hi] = h_range(o);
    if (lo != hi) throw std::invalid_argument("export-code takes a single --h");
    if (static_cast<std::uint64_t>(hi) > g.order()) {
        throw std::invalid_argument("h exceeds group order");
    }
    Element a = g.total_sum();
    if (o.a_spec != "sum") {
        const bool digits = !o.a_spec.empty() &&
                            std::all_of(o.a_spec.begin(), o.a_spec.end(),
                                        [](unsigned char c) { return std::isdigit(c); });
        if (!digits) throw std::invalid_argument("--a must be an element index or 'sum'");
        a = g.element(std::stoull(o.a_spec));
    }
    const Codebook book = build_codebook(g, lo, a, count_limits(o));
    DistanceCheckConfig config;
    config.seed = o.seed;
    const DistanceCheck distance = min_pairwise_hamming(book, config);
    Output out = open_output(o.out);
    if (o.format == "json") write_codebook_json(out.stream(), book, distance);
    else write_codebook_text(out.stream(), book, distance);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subset-sum counting and verification over finite abelian groups"};
    app.require_subcommand(1);
    // --h is an option name, so help lives on --help alone (no -h short form)
    app.set_help_flag("--help", "print this help message and exit");
    Options o;

    auto add_subcommand = [&](const char* name, const char* desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print this help message and exit");
        return cmd;
    };

    auto add_group = [&](CLI::App* cmd) {
        return cmd->add_option("--group", o.groups,
                               "group as comma-separated cyclic orders, e.g. 4,3 ('' = trivial)");
    };
    auto add_h_flags = [&](CLI::App* cmd) {
        cmd->add_option("--h", o.h, "single subset size");
        cmd->add_option("--h-min", o.h_min, "smallest subset size");
        cmd->add_option("--h-max", o.h_max, "largest subset size");
    };
    auto add_limit_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
        cmd->add_option("--enum-limit", o.enum_limit, "max subsets to enumerate")->capture_default_str();
        cmd->add_option("--dp-limit", o.dp_limit, "max n^2*hmax for the layered DP")->capture_default_str();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out,
                        "output file; relative paths resolve against SUBSETSUMS_OUT_DIR; stdout if absent");
    };

    auto* count = add_subcommand("count", "exact counts f_a(h) for a range of h");
    add_group(count)->required();
    add_h_flags(count);
    count->add_option("--method", o.method, "counting method")
        ->check(CLI::IsMember({"brute", "dp", "recurrence", "all"}))->capture_default_str();
    add_format(count);
    add_out(count);
    add_limit_flags(count);

    auto* verify = add_subcommand("verify", "run the verification battery, JSON report");
    add_group(verify)->required();
    add_out(verify);
    add_limit_flags(verify);

    auto* bounds = add_subcommand("bounds", "deviation bound report over groups");
    add_group(bounds);
    bounds->add_option("--order", o.order, "all abelian groups of this order");
    bounds->add_option("--max-order", o.max_order, "all abelian groups up to this order");
    add_h_flags(bounds);
    bounds->add_flag("--allow-out-of-range", o.allow_out_of_range,
                     "permit h outside the proven window [2, n/2+1]");
    add_format(bounds);
    add_out(bounds);
    add_limit_flags(bounds);

    auto* ratio = add_subcommand("ratio-table", "min/max ratio against the 1 - X certificate");
    add_group(ratio);
    ratio->add_option("--order", o.order, "all abelian groups of this order");
    ratio->add_option("--max-order", o.max_order, "all abelian groups up to this order");
    add_h_flags(ratio);
    ratio->add_flag("--allow-out-of-range", o.allow_out_of_range,
                    "permit h outside the proven window [4, n/2+1]");
    add_format(ratio);
    add_out(ratio);
    add_limit_flags(ratio);

    auto* export_code = add_subcommand("export-code", "distance-4 constant-weight code from one fiber");
    add_group(export_code)->required();
    add_h_flags(export_code);
    export_code->add_option("--a", o.a_spec, "target element index, or 'sum' for the total sum")
        ->capture_default_str();
    add_format(export_code);
    add_out(export_code);
    add_limit_flags(export_code);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) return run_count(o);
        if (verify->parsed()) return run_verify(o);
        if (bounds->parsed()) return run_bounds(o);
        if (ratio->parsed()) return run_ratio_table(o);
        if (export_code->parsed()) return run_export_code(o);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 2;
}
