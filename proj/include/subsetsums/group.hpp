#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subsetsums {

// One group element as a mixed-radix residue vector, residues[i] < d_i.
struct Element {
    std::vector<std::uint32_t> residues;

    friend bool operator==(const Element&, const Element&) = default;
};

// A finite abelian group presented as Z_{d1} x ... x Z_{dk} with every
// d_i >= 2; the empty product is the trivial group of order 1.
//
// Canonical element order is mixed-radix with the LAST factor varying
// fastest: index(r1,...,rk) = ((r1*d2 + r2)*d3 + ...) + rk. All tables,
// codeword coordinates and serialized outputs use this order.
class GroupSpec {
public:
    static constexpr std::uint64_t kDefaultMaxOrder = 1'000'000;

    explicit GroupSpec(std::vector<std::uint32_t> orders,
                       std::uint64_t max_order = kDefaultMaxOrder);

    // Parses "d1,d2,...,dk", e.g. "4", "2,2,2", "6,10". The empty string
    // denotes the trivial group.
    static GroupSpec parse(const std::string& text,
                           std::uint64_t max_order = kDefaultMaxOrder);

    const std::vector<std::uint32_t>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::uint64_t order() const { return n_; }
    std::string str() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

    Element identity() const;
    Element element(std::uint64_t index) const;
    std::uint64_t index(const Element& e) const;
    std::vector<Element> all_elements() const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scalar_mul(std::int64_t k, const Element& a) const;

    // Sum of all n elements of the group.
    Element total_sum() const;

    // index |-> index of (element + x), for the DP inner loops.
    std::vector<std::uint64_t> translation_table(const Element& x) const;

private:
    void require_member(const Element& e) const;

    std::vector<std::uint32_t> orders_;
    std::uint64_t n_;
};

}  // namespace subsetsums
