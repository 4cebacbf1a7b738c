#include "subsetsums/group_enum.hpp"

#include <stdexcept>

namespace subsetsums {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

void partitions_rec(std::uint32_t k, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t p = std::min(k, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(k - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> partitions_desc(std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

std::vector<GroupSpec> abelian_groups_of_order(std::uint64_t n, std::uint64_t max_order) {
    if (n == 0 || n > max_order) {
        throw std::invalid_argument("abelian_groups_of_order: order out of range");
    }
    if (n == 1) return {GroupSpec({}, max_order)};

    const auto fac = factorize(n);
    std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;  // prime -> partition -> factors
    for (const auto& [p, e] : fac) {
        std::vector<std::vector<std::uint32_t>> choices;
        for (const auto& lambda : partitions_desc(e)) {
            std::vector<std::uint32_t> factors;
            for (std::uint32_t part : lambda) {
                std::uint64_t q = 1;
                for (std::uint32_t j = 0; j < part; ++j) q *= p;
                factors.push_back(static_cast<std::uint32_t>(q));
            }
            choices.push_back(std::move(factors));
        }
        per_prime.push_back(std::move(choices));
    }

    std::vector<GroupSpec> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    for (;;) {
        std::vector<std::uint32_t> orders;
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const auto& f = per_prime[i][pick[i]];
            orders.insert(orders.end(), f.begin(), f.end());
        }
        out.emplace_back(std::move(orders), max_order);
        // advance odometer, last prime fastest
        std::size_t i = per_prime.size();
        while (i-- > 0) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

}  // namespace subsetsums
