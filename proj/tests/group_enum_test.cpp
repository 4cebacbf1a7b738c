#include <doctest.h>

#include <cstdint>
#include <vector>

#include "subsetsums/group_enum.hpp"

using subsetsums::abelian_groups_of_order;
using subsetsums::factorize;
using subsetsums::partitions_desc;

using U32V = std::vector<std::uint32_t>;

namespace {

std::vector<U32V> orders_of(std::uint64_t n) {
    std::vector<U32V> out;
    for (const auto& g : abelian_groups_of_order(n)) out.push_back(g.orders());
    return out;
}

}  // namespace

TEST_CASE("factorization in ascending prime order") {
    using PF = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
    CHECK(factorize(1) == PF{});
    CHECK(factorize(360) == PF{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == PF{{97, 1}});
    CHECK(factorize(1024) == PF{{2, 10}});
}

TEST_CASE("partitions in reverse lexicographic order") {
    CHECK(partitions_desc(1) == std::vector<U32V>{{1}});
    CHECK(partitions_desc(4) == std::vector<U32V>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_desc(5).size() == 7);
    CHECK(partitions_desc(7).size() == 15);
}

TEST_CASE("abelian groups of small orders") {
    CHECK(orders_of(1) == std::vector<U32V>{{}});
    CHECK(orders_of(7) == std::vector<U32V>{{7}});
    CHECK(orders_of(8) == std::vector<U32V>{{8}, {4, 2}, {2, 2, 2}});
    CHECK(orders_of(12) == std::vector<U32V>{{4, 3}, {2, 2, 3}});
    CHECK(orders_of(36) == std::vector<U32V>{{4, 9}, {4, 3, 3}, {2, 2, 9}, {2, 2, 3, 3}});
    CHECK(orders_of(16).size() == 5);
    CHECK(orders_of(64).size() == 11);  // partitions of 6
}

TEST_CASE("group count up to order 16") {
    std::size_t total = 0;
    for (std::uint64_t n = 1; n <= 16; ++n) total += abelian_groups_of_order(n).size();
    CHECK(total == 25);
}

TEST_CASE("every enumerated group has the right order") {
    for (const std::uint64_t n : {24u, 30u, 48u, 100u}) {
        for (const auto& g : abelian_groups_of_order(n)) {
            CHECK(g.order() == n);
        }
    }
}
