#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsetsums/bignat.hpp"
#include "subsetsums/counting.hpp"
#include "subsetsums/group.hpp"

namespace subsetsums {

// Fixed-length binary word, bit 0 leftmost. Packing is MSB-first inside
// 64-bit limbs so that limb-order comparison equals lexicographic
// comparison of the printed bitstring.
class Word {
public:
    explicit Word(std::uint64_t length);

    std::uint64_t length() const { return length_; }
    void set(std::uint64_t pos);
    bool test(std::uint64_t pos) const;
    std::uint64_t popcount() const;
    std::vector<std::uint64_t> indices() const;
    std::string str() const;

    // Number of positions where the words differ; lengths must match.
    std::uint64_t hamming(const Word& other) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::uint64_t length_;
    std::vector<std::uint64_t> limbs_;
};

// All h-element subsets of the group with sum a, as characteristic vectors
// over the canonical element order, sorted lexicographically.
struct Codebook {
    GroupSpec group;
    int h = 0;
    Element a;
    std::vector<Word> words;
};

// Enumerates the C(n,h) subsets once and keeps those summing to a; the
// same enumeration limit as brute-force counting applies.
Codebook build_codebook(const GroupSpec& g, int h, const Element& a, const CountLimits& limits = {});

// Minimum pairwise Hamming distance of a codebook. Exhaustive when the
// number of pairs fits under pair_threshold, otherwise a deterministic
// seeded sample of sample_pairs pairs (an upper bound on the true minimum).
struct DistanceCheckConfig {
    std::uint64_t pair_threshold = 1'000'000;
    std::uint64_t sample_pairs = 100'000;
    std::uint64_t seed = 12345;
};

struct DistanceCheck {
    std::optional<std::uint64_t> min_distance;  // empty when fewer than two words
    bool exhaustive = true;
    std::uint64_t pairs_checked = 0;
};

DistanceCheck min_pairwise_hamming(const Codebook& book, const DistanceCheckConfig& config = {});

// Size bounds for the largest fiber at h* = floor(n/2) + 1:
//   ceil(C(n,h*)/n) <= max_a f_a(h*) <= (2/n) C(n, floor(n/2)),
// checked exactly as n*max >= C(n,h*) and n*max <= 2*C(n,floor(n/2)).
struct CodeSizeReport {
    std::uint64_t n = 0;
    int h_star = 0;
    BigNat max_count;
    BigNat binom_hstar;       // C(n, h*)
    BigNat binom_half;        // C(n, floor(n/2))
    BigNat pigeonhole_floor;  // ceil(C(n,h*)/n)
    bool floor_holds = false;
    bool upper_holds = false;
    double upper_float = 0.0;  // (2/n) C(n, floor(n/2))
};

CodeSizeReport check_code_size_bounds(const GroupSpec& g, const std::vector<BigNat>& row_hstar);
CodeSizeReport check_code_size_bounds(const GroupSpec& g, const CountTable& table);

}  // namespace subsetsums
