#include "subsetsums/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subsetsums {

namespace {

void require_h_in_range(const GroupSpec& g, int h) {
    if (h < 0) throw std::invalid_argument("subset size h must be nonnegative, got " + std::to_string(h));
    if (static_cast<std::uint64_t>(h) > g.order()) {
        throw std::invalid_argument("subset size h = " + std::to_string(h) +
                                    " exceeds group order n = " + std::to_string(g.order()));
    }
}

// One DP layer per subset size: layer[h][a] counts h-element subsets of
// the elements folded in so far with sum index a.
std::vector<std::vector<BigNat>> dp_layers(const GroupSpec& g, int hmax,
                                           const CountLimits& limits,
                                           const Element* skip) {
    const std::uint64_t n = g.order();
    const std::uint64_t uh = static_cast<std::uint64_t>(hmax);
    const std::uint64_t cost = n * n * (uh == 0 ? 1 : uh);
    if (cost > limits.dp_limit) {
        throw std::invalid_argument("dp cost n^2*hmax = " + std::to_string(cost) +
                                    " exceeds limit " + std::to_string(limits.dp_limit));
    }
    std::vector<std::vector<BigNat>> layer(uh + 1, std::vector<BigNat>(n));
    layer[0][g.index(g.identity())] = BigNat(1);
    const std::uint64_t skip_idx = skip ? g.index(*skip) : n;
    std::uint64_t folded = 0;
    for (std::uint64_t xi = 0; xi < n; ++xi) {
        if (xi == skip_idx) continue;
        ++folded;
        const auto shift = g.translation_table(g.element(xi));
        const std::uint64_t top = std::min<std::uint64_t>(uh, folded);
        for (std::uint64_t h = top; h >= 1; --h) {
            auto& dst = layer[h];
            const auto& src = layer[h - 1];
            for (std::uint64_t a = 0; a < n; ++a) {
                dst[shift[a]] += src[a];
            }
        }
    }
    return layer;
}

}  // namespace

CountTable::CountTable(GroupSpec group, int hmax)
    : group_(std::move(group)), hmax_(hmax) {
    if (hmax < 0) throw std::invalid_argument("hmax must be nonnegative, got " + std::to_string(hmax));
    rows_.assign(static_cast<std::size_t>(hmax) + 1,
                 std::vector<BigNat>(group_.order()));
}

const BigNat& CountTable::at(int h, std::uint64_t a_index) const {
    return row(h).at(a_index);
}

BigNat& CountTable::at(int h, std::uint64_t a_index) {
    return row(h).at(a_index);
}

const std::vector<BigNat>& CountTable::row(int h) const {
    if (h < 0 || h > hmax_) throw std::out_of_range("row " + std::to_string(h) + " outside [0, " + std::to_string(hmax_) + "]");
    return rows_[static_cast<std::size_t>(h)];
}

std::vector<BigNat>& CountTable::row(int h) {
    if (h < 0 || h > hmax_) throw std::out_of_range("row " + std::to_string(h) + " outside [0, " + std::to_string(hmax_) + "]");
    return rows_[static_cast<std::size_t>(h)];
}

BigNat CountTable::row_sum(int h) const {
    BigNat total;
    for (const auto& v : row(h)) total += v;
    return total;
}

std::pair<BigNat, BigNat> CountTable::row_min_max(int h) const {
    const auto& r = row(h);
    BigNat lo = r.front();
    BigNat hi = r.front();
    for (const auto& v : r) {
        if (v < lo) lo = v;
        if (hi < v) hi = v;
    }
    return {lo, hi};
}

std::vector<BigNat> count_brute_force(const GroupSpec& g, int h, const CountLimits& limits) {
    if (h < 0) throw std::invalid_argument("subset size h must be nonnegative, got " + std::to_string(h));
    const std::uint64_t n = g.order();
    std::vector<BigNat> counts(n);
    if (static_cast<std::uint64_t>(h) > n) return counts;  // no subsets at all
    const BigNat total = BigNat::binomial(n, static_cast<std::uint64_t>(h));
    if (BigNat(limits.enumeration_limit) < total) {
        throw std::invalid_argument("C(" + std::to_string(n) + "," + std::to_string(h) + ") = " +
                                    total.str() + " subsets exceed enumeration limit " +
                                    std::to_string(limits.enumeration_limit));
    }
    for_each_subset_sum(g, h, [&](std::span<const std::uint64_t>, const Element& sum) {
        counts[g.index(sum)] += BigNat(1);
    });
    return counts;
}

CountTable count_dp(const GroupSpec& g, int hmax, const CountLimits& limits) {
    require_h_in_range(g, hmax);
    auto layer = dp_layers(g, hmax, limits, nullptr);
    CountTable table(g, hmax);
    for (int h = 0; h <= hmax; ++h) table.row(h) = std::move(layer[static_cast<std::size_t>(h)]);
    return table;
}

int g_terminal(const GroupSpec& g, int h, const Element& a, const Element& x) {
    require_h_in_range(g, h);
    return g.scalar_mul(h, x) == a ? 1 : 0;
}

BigNat g_value(const GroupSpec& g, int h, int i, const Element& a, const Element& x,
               const CountLimits& limits) {
    require_h_in_range(g, h);
    if (i < 1 || i > h - 1) {
        throw std::invalid_argument("g index i = " + std::to_string(i) +
                                    " outside [1, h-1] for h = " + std::to_string(h));
    }
    const int m = h - i;  // subsets counted have m elements, one of them x
    const Element target = g.sub(a, g.scalar_mul(i + 1, x));
    if (m == 1) return BigNat(g.scalar_mul(i + 1, x) == a ? 1 : 0);
    // remaining m-1 elements come from G \ {x} and must sum to a - (i+1)x
    auto layer = dp_layers(g, m - 1, limits, &x);
    return layer[static_cast<std::size_t>(m - 1)][g.index(target)];
}

BigNat f_via_eq3(const GroupSpec& g, int h, const Element& a, const CountLimits& limits) {
    const std::uint64_t n = g.order();
    if (h < 2 || static_cast<std::uint64_t>(h) > n - 1) {
        throw std::invalid_argument("f_via_eq3 requires 2 <= h <= n-1, got h = " + std::to_string(h));
    }
    BigNat total = BigNat::binomial(n, static_cast<std::uint64_t>(h - 1));
    BigNat sum_g;
    for (std::uint64_t xi = 0; xi < n; ++xi) {
        sum_g += g_value(g, h, 1, a, g.element(xi), limits);
    }
    return (total - sum_g).div_exact(BigNat(static_cast<std::uint64_t>(h)));
}

BigNat f_via_lemma(const GroupSpec& g, int h, const Element& a, const CountTable& lower) {
    const std::uint64_t n = g.order();
    if (h < 2 || static_cast<std::uint64_t>(h) > n - 1) {
        throw std::invalid_argument("f_via_lemma requires 2 <= h <= n-1, got h = " + std::to_string(h));
    }
    if (lower.hmax() < h - 2) {
        throw std::invalid_argument("lower table must reach row h-2 = " + std::to_string(h - 2));
    }
    BigNat pos = BigNat::binomial(n, static_cast<std::uint64_t>(h - 1));
    BigNat neg;
    for (int i = 2; i <= h - 1; ++i) {
        BigNat term;
        for (std::uint64_t xi = 0; xi < n; ++xi) {
            const Element shift = g.sub(a, g.scalar_mul(i, g.element(xi)));
            term += lower.at(h - i, g.index(shift));
        }
        if (i % 2 == 0) neg += term; else pos += term;
    }
    BigNat terminal;
    for (std::uint64_t xi = 0; xi < n; ++xi) {
        terminal += BigNat(static_cast<std::uint64_t>(g_terminal(g, h, a, g.element(xi))));
    }
    if (h % 2 == 1) pos += terminal; else neg += terminal;
    if (pos < neg) throw std::domain_error("alternating sum went negative; counts are inconsistent");
    return (pos - neg).div_exact(BigNat(static_cast<std::uint64_t>(h)));
}

bool g_recurrence_holds(const GroupSpec& g, int h, int i, const Element& a, const Element& x,
                        const CountTable& lower, const CountLimits& limits) {
    if (i < 1 || i > h - 2) {
        throw std::invalid_argument("g recurrence index i must lie in [1, h-2]");
    }
    const BigNat gi = g_value(g, h, i, a, x, limits);
    const BigNat gi1 = g_value(g, h, i + 1, a, x, limits);
    const Element target = g.sub(a, g.scalar_mul(i + 1, x));
    const BigNat f = lower.at(h - (i + 1), g.index(target));
    return gi + gi1 == f;  // compares without subtraction
}

CountTable count_via_recurrence(const GroupSpec& g, int hmax) {
    require_h_in_range(g, hmax);
    const std::uint64_t n = g.order();
    CountTable table(g, hmax);
    table.at(0, g.index(g.identity())) = BigNat(1);
    if (hmax >= 1 && n >= 1) {
        for (auto& v : table.row(1)) v = BigNat(1);
    }
    const int top = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(hmax), n - 1));
    for (int h = 2; h <= top; ++h) {
        for (std::uint64_t ai = 0; ai < n; ++ai) {
            table.at(h, ai) = f_via_lemma(g, h, g.element(ai), table);
        }
    }
    if (static_cast<std::uint64_t>(hmax) == n && n >= 2) {
        // the single n-element subset is G itself
        table.at(static_cast<int>(n), g.index(g.total_sum())) = BigNat(1);
    }
    return table;
}

}  // namespace subsetsums
