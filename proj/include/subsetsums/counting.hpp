#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "subsetsums/bignat.hpp"
#include "subsetsums/group.hpp"

namespace subsetsums {

// Resource caps for the counting methods. Brute-force enumeration refuses
// jobs with more than enumeration_limit subsets; the layered DP refuses
// jobs needing more than dp_limit big-integer additions (n^2 * hmax).
struct CountLimits {
    std::uint64_t enumeration_limit = 2'000'000;
    std::uint64_t dp_limit = 1'000'000'000;
};

// Exact subset-sum counts f_a(h) = #{h-element subsets of G with sum a}
// for all a in canonical index order and all 0 <= h <= hmax.
class CountTable {
public:
    CountTable(GroupSpec group, int hmax);

    const GroupSpec& group() const { return group_; }
    int hmax() const { return hmax_; }

    const BigNat& at(int h, std::uint64_t a_index) const;
    BigNat& at(int h, std::uint64_t a_index);
    const std::vector<BigNat>& row(int h) const;
    std::vector<BigNat>& row(int h);

    BigNat row_sum(int h) const;
    std::pair<BigNat, BigNat> row_min_max(int h) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    GroupSpec group_;
    int hmax_;
    std::vector<std::vector<BigNat>> rows_;
};

// Visits every h-element subset of the canonical index range [0, n) in
// lexicographic order, passing the chosen indices and their element sum.
template <class F>
void for_each_subset_sum(const GroupSpec& g, int h, F&& fn) {
    const std::uint64_t n = g.order();
    if (h < 0 || static_cast<std::uint64_t>(h) > n) return;
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(h));
    std::vector<Element> prefix(static_cast<std::size_t>(h) + 1, g.identity());
    const auto elems = g.all_elements();
    const auto uh = static_cast<std::uint64_t>(h);

    // depth-first walk; prefix[d] holds the sum of the chosen idx[0..d)
    auto walk = [&](auto&& self, std::uint64_t depth, std::uint64_t first) -> void {
        if (depth == uh) {
            fn(std::span<const std::uint64_t>(idx), prefix[depth]);
            return;
        }
        for (std::uint64_t v = first; v + (uh - depth) <= n; ++v) {
            idx[depth] = v;
            prefix[depth + 1] = g.add(prefix[depth], elems[v]);
            self(self, depth + 1, v + 1);
        }
    };
    walk(walk, 0, 0);
}

// f_a(h) for every a by direct enumeration of all C(n,h) subsets; the
// definitional oracle. Throws if C(n,h) exceeds the enumeration limit.
std::vector<BigNat> count_brute_force(const GroupSpec& g, int h, const CountLimits& limits = {});

// f_a(h) for all h <= hmax by coefficient extraction from the truncated
// product of (1 + t*[x]) over x in G: elements are folded in one at a
// time, updating layers hmax down to 1 via counts[h][a+x] += counts[h-1][a].
// This is the production method, O(n^2 hmax) big-integer additions.
CountTable count_dp(const GroupSpec& g, int hmax, const CountLimits& limits = {});

// Terminal g value: 1 if h*x = a, else 0.
int g_terminal(const GroupSpec& g, int h, const Element& a, const Element& x);

// Number of (h-i)-element subsets of G that contain x and sum to a - i*x,
// for 1 <= i <= h-1. Computed as a DP over G \ {x} for the remaining
// (h-i-1)-element subsets summing to a - (i+1)*x.
BigNat g_value(const GroupSpec& g, int h, int i, const Element& a, const Element& x,
               const CountLimits& limits = {});

// f_a(h) = (C(n,h-1) - sum_x g_value(h,1,a,x)) / h for 2 <= h <= n-1.
// The division must be exact; a nonzero remainder throws.
BigNat f_via_eq3(const GroupSpec& g, int h, const Element& a, const CountLimits& limits = {});

// f_a(h) from the alternating recurrence
//   f_a(h) = (1/h) ( C(n,h-1) - sum_{i=2}^{h-1} (-1)^i sum_x f_{a-ix}(h-i)
//                    + (-1)^{h-1} sum_x [h*x = a] )
// reading the lower-order f values from `lower` (rows 1..h-2 required).
// Positive and negative contributions accumulate separately and the final
// subtraction and division are checked, so any exactness violation throws.
BigNat f_via_lemma(const GroupSpec& g, int h, const Element& a, const CountTable& lower);

// Checks g(h,i) = f_{a-(i+1)x}(h-(i+1)) - g(h,i+1) exactly, 1 <= i <= h-2,
// with both g values computed independently and f read from `lower`.
bool g_recurrence_holds(const GroupSpec& g, int h, int i, const Element& a, const Element& x,
                        const CountTable& lower, const CountLimits& limits = {});

// Builds the whole table from the alternating recurrence alone: rows 0 and
// 1 are the definitional base (identity indicator; all ones), rows
// 2..min(hmax, n-1) come from f_via_lemma, and row n (when hmax = n) is
// the total-sum indicator. Never consults count_dp.
CountTable count_via_recurrence(const GroupSpec& g, int hmax);

}  // namespace subsetsums
