#include <doctest.h>

#include <stdexcept>

#include "subsetsums/group.hpp"

using subsetsums::Element;
using subsetsums::GroupSpec;

TEST_CASE("parse accepts order lists and the trivial group") {
    CHECK(GroupSpec::parse("4,3").orders() == std::vector<std::uint32_t>{4, 3});
    CHECK(GroupSpec::parse(" 2 , 2 , 2 ").orders() == std::vector<std::uint32_t>{2, 2, 2});
    CHECK(GroupSpec::parse("7").order() == 7);
    CHECK(GroupSpec::parse("").rank() == 0);
    CHECK(GroupSpec::parse("").order() == 1);
    CHECK(GroupSpec::parse("4,3").str() == "4,3");
}

TEST_CASE("parse rejects malformed specs") {
    CHECK_THROWS_AS(GroupSpec::parse("4,,3"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("4,"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse(",4"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("4x3"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("-2"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("1,4"), std::invalid_argument);  // orders must be >= 2
    CHECK_THROWS_AS(GroupSpec::parse("0"), std::invalid_argument);
}

TEST_CASE("order cap applies to the product") {
    CHECK_THROWS_AS(GroupSpec({1009, 1009}), std::invalid_argument);  // 1018081 > 1e6
    CHECK_NOTHROW(GroupSpec({1009, 991}));  // 999919 <= 1e6
    CHECK_NOTHROW(GroupSpec({1009, 1009}, 2'000'000));
    // the cap guards each partial product, not just the final one
    CHECK_THROWS_AS(GroupSpec({2000, 2000, 2}, 4'000'000), std::invalid_argument);
}

TEST_CASE("canonical index: last factor varies fastest") {
    const GroupSpec g = GroupSpec::parse("4,3");
    CHECK(g.order() == 12);
    CHECK(g.element(0).residues == std::vector<std::uint32_t>{0, 0});
    CHECK(g.element(1).residues == std::vector<std::uint32_t>{0, 1});
    CHECK(g.element(3).residues == std::vector<std::uint32_t>{1, 0});
    CHECK(g.element(5).residues == std::vector<std::uint32_t>{1, 2});
    CHECK(g.element(11).residues == std::vector<std::uint32_t>{3, 2});
    CHECK_THROWS_AS(g.element(12), std::out_of_range);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        CHECK(g.index(g.element(i)) == i);
    }
    CHECK(g.all_elements().size() == 12);
}

TEST_CASE("arithmetic in Z_4 x Z_3") {
    const GroupSpec g = GroupSpec::parse("4,3");
    const Element a{{3, 2}};
    const Element b{{2, 2}};
    CHECK(g.add(a, b).residues == std::vector<std::uint32_t>{1, 1});
    CHECK(g.sub(a, b).residues == std::vector<std::uint32_t>{1, 0});
    CHECK(g.neg(a).residues == std::vector<std::uint32_t>{1, 1});
    CHECK(g.scalar_mul(5, a).residues == std::vector<std::uint32_t>{3, 1});
    CHECK(g.scalar_mul(0, a).residues == std::vector<std::uint32_t>{0, 0});
    CHECK(g.scalar_mul(-1, a) == g.neg(a));
    CHECK(g.scalar_mul(-7, a) == g.scalar_mul(5, a));  // -7 = 5 mod 12
    CHECK(g.identity().residues == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("member validation") {
    const GroupSpec g = GroupSpec::parse("4,3");
    CHECK_THROWS_AS(g.index(Element{{4, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(g.index(Element{{0}}), std::invalid_argument);
    CHECK_THROWS_AS(g.add(Element{{0, 3}}, g.identity()), std::invalid_argument);
}

TEST_CASE("total sum closed form") {
    // sum over Z_d of every residue, repeated n/d times per coordinate
    CHECK(GroupSpec::parse("8").total_sum().residues == std::vector<std::uint32_t>{4});
    CHECK(GroupSpec::parse("4").total_sum().residues == std::vector<std::uint32_t>{2});
    CHECK(GroupSpec::parse("5").total_sum().residues == std::vector<std::uint32_t>{0});
    CHECK(GroupSpec::parse("6").total_sum().residues == std::vector<std::uint32_t>{3});
    CHECK(GroupSpec::parse("2,2").total_sum().residues == std::vector<std::uint32_t>{0, 0});
    CHECK(GroupSpec::parse("4,3").total_sum().residues == std::vector<std::uint32_t>{2, 0});
    for (const char* spec : {"2", "3", "4", "6", "9", "2,4", "3,3", "2,2,2"}) {
        const GroupSpec g = GroupSpec::parse(spec);
        Element fold = g.identity();
        for (const auto& e : g.all_elements()) fold = g.add(fold, e);
        CHECK(fold == g.total_sum());
    }
}

TEST_CASE("translation table is the add-x permutation") {
    const GroupSpec g = GroupSpec::parse("4,3");
    const Element x = g.element(7);
    const auto table = g.translation_table(x);
    REQUIRE(table.size() == g.order());
    std::vector<bool> seen(g.order(), false);
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        CHECK(table[i] == g.index(g.add(g.element(i), x)));
        seen[table[i]] = true;
    }
    for (const bool b : seen) CHECK(b);
}
