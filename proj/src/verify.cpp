#include "subsetsums/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "subsetsums/bounds.hpp"
#include "subsetsums/codebook.hpp"
#include "subsetsums/table_io.hpp"

namespace subsetsums {

namespace {

using ordered_json = nlohmann::ordered_json;

CheckResult pass(std::string name, ordered_json inputs) {
    return {std::move(name), std::move(inputs), Verdict::pass, ""};
}

CheckResult fail(std::string name, ordered_json inputs, std::string witness) {
    return {std::move(name), std::move(inputs), Verdict::fail, std::move(witness)};
}

CheckResult skip(std::string name, ordered_json inputs, std::string reason) {
    return {std::move(name), std::move(inputs), Verdict::skip, std::move(reason)};
}

ordered_json base_inputs(const GroupSpec& g) {
    ordered_json j;
    j["group"] = g.str();
    j["n"] = g.order();
    return j;
}

// Largest hmax the layered DP can afford under the configured cost cap.
int affordable_hmax(const GroupSpec& g, const CountLimits& limits) {
    const std::uint64_t n = g.order();
    if (n * n > limits.dp_limit) return 0;
    const std::uint64_t h = limits.dp_limit / (n * n);
    return static_cast<int>(std::min<std::uint64_t>(n, h));
}

CheckResult check_group_axioms(const GroupSpec& g, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    const bool exhaustive = n <= limits.exhaustive_order_limit;
    auto inputs = base_inputs(g);
    inputs["mode"] = exhaustive ? "exhaustive" : "sampled";

    std::mt19937_64 rng(limits.seed);
    const std::uint64_t trials = exhaustive ? n * n * n : 512;
    if (!exhaustive) inputs["trials"] = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::uint64_t ai, bi, ci;
        if (exhaustive) {
            ai = t % n;
            bi = (t / n) % n;
            ci = t / (n * n);
        } else {
            ai = rng() % n;
            bi = rng() % n;
            ci = rng() % n;
        }
        const Element a = g.element(ai), b = g.element(bi), c = g.element(ci);
        if (!(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)))) {
            return fail("group_axioms", inputs, "associativity broken at indices (" +
                        std::to_string(ai) + "," + std::to_string(bi) + "," + std::to_string(ci) + ")");
        }
        if (!(g.add(a, b) == g.add(b, a))) {
            return fail("group_axioms", inputs, "commutativity broken at indices (" +
                        std::to_string(ai) + "," + std::to_string(bi) + ")");
        }
        if (!(g.add(a, g.identity()) == a)) {
            return fail("group_axioms", inputs, "identity broken at index " + std::to_string(ai));
        }
        if (!(g.add(a, g.neg(a)) == g.identity())) {
            return fail("group_axioms", inputs, "inverse broken at index " + std::to_string(ai));
        }
        if (!(g.sub(a, b) == g.add(a, g.neg(b)))) {
            return fail("group_axioms", inputs, "subtraction broken at indices (" +
                        std::to_string(ai) + "," + std::to_string(bi) + ")");
        }
    }
    return pass("group_axioms", inputs);
}

CheckResult check_index_bijection(const GroupSpec& g) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    const auto elems = g.all_elements();
    if (elems.size() != n) return fail("index_bijection", inputs, "all_elements size mismatch");
    for (std::uint64_t i = 0; i < n; ++i) {
        if (g.index(elems[i]) != i) {
            return fail("index_bijection", inputs, "index(element(" + std::to_string(i) + ")) != " + std::to_string(i));
        }
        if (!(g.element(i) == elems[i])) {
            return fail("index_bijection", inputs, "element(" + std::to_string(i) + ") disagrees with all_elements");
        }
    }
    return pass("index_bijection", inputs);
}

CheckResult check_total_sum(const GroupSpec& g) {
    auto inputs = base_inputs(g);
    Element folded = g.identity();
    for (const auto& e : g.all_elements()) folded = g.add(folded, e);
    if (!(folded == g.total_sum())) {
        return fail("total_sum", inputs, "closed form disagrees with element fold");
    }
    return pass("total_sum", inputs);
}

CheckResult check_sum_identity(const GroupSpec& g, const CountTable& table) {
    auto inputs = base_inputs(g);
    inputs["hmax"] = table.hmax();
    for (int h = 0; h <= table.hmax(); ++h) {
        const BigNat expect = BigNat::binomial(g.order(), static_cast<std::uint64_t>(h));
        if (!(table.row_sum(h) == expect)) {
            return fail("sum_identity", inputs,
                        "row " + std::to_string(h) + " sums to " + table.row_sum(h).str() +
                        ", expected C(n,h) = " + expect.str());
        }
    }
    return pass("sum_identity", inputs);
}

CheckResult check_duality(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    inputs["limit"] = limits.exhaustive_order_limit;
    if (n > limits.exhaustive_order_limit) {
        return skip("duality", inputs, "n exceeds exhaustive order limit");
    }
    if (table.hmax() < static_cast<int>(n)) {
        return skip("duality", inputs, "table does not reach row n");
    }
    const Element s = g.total_sum();
    for (int h = 0; h <= static_cast<int>(n); ++h) {
        for (std::uint64_t a = 0; a < n; ++a) {
            const Element mirror = g.sub(s, g.element(a));
            if (!(table.at(h, a) == table.at(static_cast<int>(n) - h, g.index(mirror)))) {
                return fail("duality", inputs,
                            "f_a(h) != f_{S-a}(n-h) at h=" + std::to_string(h) + " a=" + std::to_string(a));
            }
        }
    }
    return pass("duality", inputs);
}

CheckResult check_translation(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    const bool exhaustive = n <= limits.exhaustive_order_limit;
    inputs["mode"] = exhaustive ? "exhaustive" : "sampled";
    std::mt19937_64 rng(limits.seed + 1);
    std::vector<std::uint64_t> shifts;
    if (exhaustive) {
        for (std::uint64_t t = 0; t < n; ++t) shifts.push_back(t);
    } else {
        for (int t = 0; t < 8; ++t) shifts.push_back(rng() % n);
        inputs["trials"] = shifts.size();
    }
    for (const auto ti : shifts) {
        const Element t = g.element(ti);
        for (int h = 0; h <= table.hmax(); ++h) {
            const Element ht = g.scalar_mul(h, t);
            for (std::uint64_t a = 0; a < n; ++a) {
                const Element shifted = g.add(g.element(a), ht);
                if (!(table.at(h, a) == table.at(h, g.index(shifted)))) {
                    return fail("translation_invariance", inputs,
                                "f_a(h) != f_{a+ht}(h) at h=" + std::to_string(h) +
                                " a=" + std::to_string(a) + " t=" + std::to_string(ti));
                }
            }
        }
    }
    return pass("translation_invariance", inputs);
}

CheckResult check_brute_force(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    inputs["limit"] = limits.exhaustive_order_limit;
    if (n > limits.exhaustive_order_limit) {
        return skip("brute_force_agreement", inputs, "n exceeds exhaustive order limit");
    }
    for (int h = 0; h <= table.hmax(); ++h) {
        const auto brute = count_brute_force(g, h, limits.counting);
        for (std::uint64_t a = 0; a < n; ++a) {
            if (!(brute[a] == table.at(h, a))) {
                return fail("brute_force_agreement", inputs,
                            "mismatch at h=" + std::to_string(h) + " a=" + std::to_string(a) +
                            ": brute " + brute[a].str() + " vs dp " + table.at(h, a).str());
            }
        }
    }
    return pass("brute_force_agreement", inputs);
}

CheckResult check_recurrence_table(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    inputs["limit"] = limits.exhaustive_order_limit;
    if (n > limits.exhaustive_order_limit) {
        return skip("recurrence_agreement", inputs, "n exceeds exhaustive order limit");
    }
    if (table.hmax() < static_cast<int>(n)) {
        return skip("recurrence_agreement", inputs, "table does not reach row n");
    }
    const CountTable rec = count_via_recurrence(g, static_cast<int>(n));
    for (int h = 0; h <= static_cast<int>(n); ++h) {
        for (std::uint64_t a = 0; a < n; ++a) {
            if (!(rec.at(h, a) == table.at(h, a))) {
                return fail("recurrence_agreement", inputs,
                            "mismatch at h=" + std::to_string(h) + " a=" + std::to_string(a) +
                            ": recurrence " + rec.at(h, a).str() + " vs dp " + table.at(h, a).str());
            }
        }
    }
    return pass("recurrence_agreement", inputs);
}

CheckResult check_eq3(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    inputs["limit"] = limits.eq3_order_limit;
    if (n > limits.eq3_order_limit) {
        return skip("eq3_agreement", inputs, "n exceeds eq3 order limit");
    }
    if (n < 3 || table.hmax() < 2) {
        return skip("eq3_agreement", inputs, "needs n >= 3 and table rows to 2");
    }
    const int top = std::min(table.hmax(), static_cast<int>(n) - 1);
    for (int h = 2; h <= top; ++h) {
        for (std::uint64_t a = 0; a < n; ++a) {
            const BigNat direct = f_via_eq3(g, h, g.element(a), limits.counting);
            if (!(direct == table.at(h, a))) {
                return fail("eq3_agreement", inputs,
                            "mismatch at h=" + std::to_string(h) + " a=" + std::to_string(a) +
                            ": eq3 " + direct.str() + " vs dp " + table.at(h, a).str());
            }
        }
    }
    return pass("eq3_agreement", inputs);
}

CheckResult check_g_recurrence(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    inputs["limit"] = limits.g_recurrence_order_limit;
    if (n > limits.g_recurrence_order_limit) {
        return skip("g_recurrence", inputs, "n exceeds g recurrence order limit");
    }
    if (n < 4 || table.hmax() < 3) {
        return skip("g_recurrence", inputs, "needs n >= 4 and table rows to 3");
    }
    const int top = std::min(table.hmax(), static_cast<int>(n) - 1);
    for (int h = 3; h <= top; ++h) {
        for (int i = 1; i <= h - 2; ++i) {
            for (std::uint64_t a = 0; a < n; ++a) {
                for (std::uint64_t x = 0; x < n; ++x) {
                    if (!g_recurrence_holds(g, h, i, g.element(a), g.element(x), table, limits.counting)) {
                        return fail("g_recurrence", inputs,
                                    "g(h,i) + g(h,i+1) != f at h=" + std::to_string(h) +
                                    " i=" + std::to_string(i) + " a=" + std::to_string(a) +
                                    " x=" + std::to_string(x));
                    }
                }
            }
        }
    }
    return pass("g_recurrence", inputs);
}

CheckResult check_h2_structure(const GroupSpec& g, const CountTable& table) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    if (n < 3 || table.hmax() < 2) {
        return skip("h2_structure", inputs, "needs n >= 3 and table rows to 2");
    }
    // s(a) = #{x : 2x = a}; each x lands in exactly one fiber, and
    // 2 f_a(2) + s(a) = n for every a.
    std::vector<std::uint64_t> s(n, 0);
    for (std::uint64_t x = 0; x < n; ++x) {
        ++s[g.index(g.scalar_mul(2, g.element(x)))];
    }
    std::uint64_t total = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
        total += s[a];
        if (s[a] > n) return fail("h2_structure", inputs, "fiber size exceeds n at a=" + std::to_string(a));
        const BigNat lhs = table.at(2, a) * BigNat(2) + BigNat(s[a]);
        if (!(lhs == BigNat(n))) {
            return fail("h2_structure", inputs,
                        "2 f_a(2) + #{2x=a} != n at a=" + std::to_string(a) + " (got " + lhs.str() + ")");
        }
    }
    if (total != n) return fail("h2_structure", inputs, "doubling fibers do not partition the group");
    return pass("h2_structure", inputs);
}

CheckResult check_deviation(const GroupSpec& g, const CountTable& table) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    const int top = std::min(table.hmax(), static_cast<int>(n / 2 + 1));
    inputs["h_range"] = {2, top};
    if (top < 2) return skip("deviation_bound", inputs, "no h in [2, n/2+1] within table");
    for (int h = 2; h <= top; ++h) {
        const auto report = check_deviation_bound(g, table, h);
        if (!report.comparison.holds) {
            return fail("deviation_bound", inputs,
                        "bound fails at h=" + std::to_string(h) + ": deviation " + report.deviation.str());
        }
    }
    return pass("deviation_bound", inputs);
}

CheckResult check_base_cases(const GroupSpec& g, const CountTable& table) {
    auto inputs = base_inputs(g);
    if (g.order() < 4 || table.hmax() < 3) {
        return skip("base_case_bounds", inputs, "needs n >= 4 and table rows to 3");
    }
    const auto [two, three] = base_case_bounds(g, table);
    if (!two) return fail("base_case_bounds", inputs, "h=2 deviation exceeds n/2");
    if (!three) return fail("base_case_bounds", inputs, "h=3 deviation exceeds n/3");
    return pass("base_case_bounds", inputs);
}

CheckResult check_ratio(const GroupSpec& g, const CountTable& table) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    const int top = std::min(table.hmax(), static_cast<int>(n / 2 + 1));
    inputs["h_range"] = {4, top};
    if (top < 4) return skip("ratio_bound", inputs, "no h in [4, n/2+1] within table");
    if (n > 200) return skip("ratio_bound", inputs, "n exceeds exact certificate limit 200");
    for (int h = 4; h <= top; ++h) {
        const auto report = check_ratio_bound(g, table, h);
        if (!report.holds) {
            return fail("ratio_bound", inputs,
                        "min/max >= 1 - X fails at h=" + std::to_string(h) +
                        " (ratio " + format_double(report.ratio) + ")");
        }
    }
    return pass("ratio_bound", inputs);
}

CheckResult check_code_distance(const GroupSpec& g, const CountTable& table, const VerifyLimits& limits) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    inputs["limit"] = limits.code_order_limit;
    if (n > limits.code_order_limit) {
        return skip("code_distance", inputs, "n exceeds code order limit");
    }
    if (table.hmax() < static_cast<int>(n)) {
        return skip("code_distance", inputs, "table does not reach row n");
    }
    for (int h = 2; h <= static_cast<int>(n); ++h) {
        for (std::uint64_t a = 0; a < n; ++a) {
            const Element target = g.element(a);
            const Codebook book = build_codebook(g, h, target, limits.counting);
            if (!(BigNat(static_cast<std::uint64_t>(book.words.size())) == table.at(h, a))) {
                return fail("code_distance", inputs,
                            "codebook size != f_a(h) at h=" + std::to_string(h) + " a=" + std::to_string(a));
            }
            for (std::size_t w = 0; w < book.words.size(); ++w) {
                if (book.words[w].popcount() != static_cast<std::uint64_t>(h)) {
                    return fail("code_distance", inputs, "word weight != h at h=" + std::to_string(h) +
                                " a=" + std::to_string(a));
                }
                Element sum = g.identity();
                for (const auto p : book.words[w].indices()) sum = g.add(sum, g.element(p));
                if (!(sum == target)) {
                    return fail("code_distance", inputs, "word sum != a at h=" + std::to_string(h) +
                                " a=" + std::to_string(a));
                }
                if (w > 0 && !(book.words[w - 1] < book.words[w])) {
                    return fail("code_distance", inputs, "words not strictly sorted at h=" + std::to_string(h) +
                                " a=" + std::to_string(a));
                }
            }
            if (book.words.size() >= 2) {
                const auto check = min_pairwise_hamming(book);
                if (!check.exhaustive) {
                    return fail("code_distance", inputs, "distance check unexpectedly sampled");
                }
                if (!check.min_distance.has_value() || *check.min_distance < 4) {
                    return fail("code_distance", inputs,
                                "minimum distance below 4 at h=" + std::to_string(h) + " a=" + std::to_string(a));
                }
                if (*check.min_distance % 2 != 0) {
                    return fail("code_distance", inputs, "odd Hamming distance between equal-weight words");
                }
            }
        }
    }
    return pass("code_distance", inputs);
}

CheckResult check_code_size(const GroupSpec& g, const CountTable& table) {
    const std::uint64_t n = g.order();
    auto inputs = base_inputs(g);
    const int h_star = static_cast<int>(n / 2 + 1);
    inputs["h_star"] = h_star;
    if (n < 2) return skip("code_size_sandwich", inputs, "needs n >= 2");
    if (table.hmax() < h_star) return skip("code_size_sandwich", inputs, "table does not reach row n/2+1");
    const auto report = check_code_size_bounds(g, table);
    if (!report.floor_holds) {
        return fail("code_size_sandwich", inputs, "pigeonhole floor fails: max " + report.max_count.str() +
                    " below ceil(C(n,h*)/n) = " + report.pigeonhole_floor.str());
    }
    if (!report.upper_holds) {
        return fail("code_size_sandwich", inputs, "upper bound fails: n*max exceeds 2*C(n,n/2)");
    }
    return pass("code_size_sandwich", inputs);
}

CheckResult check_serialization(const GroupSpec& g, const CountTable& table) {
    auto inputs = base_inputs(g);
    inputs["hmax"] = table.hmax();
    std::ostringstream csv1, csv2, json1;
    write_count_table_csv(csv1, table);
    write_count_table_csv(csv2, table);
    if (csv1.str() != csv2.str()) return fail("serialization_roundtrip", inputs, "CSV output not deterministic");
    std::istringstream csv_in(csv1.str());
    const CountTable from_csv = read_count_table_csv(csv_in);
    if (!(from_csv == table)) return fail("serialization_roundtrip", inputs, "CSV round-trip changed the table");
    write_count_table_json(json1, table);
    std::istringstream json_in(json1.str());
    const CountTable from_json = read_count_table_json(json_in);
    if (!(from_json == table)) return fail("serialization_roundtrip", inputs, "JSON round-trip changed the table");
    return pass("serialization_roundtrip", inputs);
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.verdict == Verdict::fail; });
}

nlohmann::ordered_json VerifyReport::json() const {
    ordered_json j;
    j["group"] = group;
    j["n"] = n;
    j["all_passed"] = all_passed();
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["inputs"] = c.inputs;
        switch (c.verdict) {
            case Verdict::pass: cj["verdict"] = "pass"; break;
            case Verdict::fail: cj["verdict"] = "fail"; break;
            case Verdict::skip: cj["verdict"] = "skip"; break;
        }
        cj["detail"] = c.detail;
        j["checks"].push_back(std::move(cj));
    }
    return j;
}

VerifyReport verify_group(const GroupSpec& g, const VerifyLimits& limits) {
    VerifyReport report;
    report.group = g.str();
    report.n = g.order();

    report.checks.push_back(check_group_axioms(g, limits));
    report.checks.push_back(check_index_bijection(g));
    report.checks.push_back(check_total_sum(g));

    const int hmax = affordable_hmax(g, limits.counting);
    const CountTable table = count_dp(g, hmax, limits.counting);

    report.checks.push_back(check_sum_identity(g, table));
    report.checks.push_back(check_duality(g, table, limits));
    report.checks.push_back(check_translation(g, table, limits));
    report.checks.push_back(check_brute_force(g, table, limits));
    report.checks.push_back(check_recurrence_table(g, table, limits));
    report.checks.push_back(check_eq3(g, table, limits));
    report.checks.push_back(check_g_recurrence(g, table, limits));
    report.checks.push_back(check_h2_structure(g, table));
    report.checks.push_back(check_deviation(g, table));
    report.checks.push_back(check_base_cases(g, table));
    report.checks.push_back(check_ratio(g, table));
    report.checks.push_back(check_code_distance(g, table, limits));
    report.checks.push_back(check_code_size(g, table));
    report.checks.push_back(check_serialization(g, table));

    return report;
}

}  // namespace subsetsums
