#include "subsetsums/codebook.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace subsetsums {

Word::Word(std::uint64_t length)
    : length_(length), limbs_((length + 63) / 64, 0) {}

void Word::set(std::uint64_t pos) {
    if (pos >= length_) throw std::out_of_range("bit position " + std::to_string(pos) + " beyond word length");
    limbs_[pos / 64] |= std::uint64_t{1} << (63 - pos % 64);
}

bool Word::test(std::uint64_t pos) const {
    if (pos >= length_) throw std::out_of_range("bit position " + std::to_string(pos) + " beyond word length");
    return (limbs_[pos / 64] >> (63 - pos % 64)) & 1;
}

std::uint64_t Word::popcount() const {
    std::uint64_t total = 0;
    for (const auto limb : limbs_) total += static_cast<std::uint64_t>(std::popcount(limb));
    return total;
}

std::vector<std::uint64_t> Word::indices() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 0; p < length_; ++p) {
        if (test(p)) out.push_back(p);
    }
    return out;
}

std::string Word::str() const {
    std::string s(length_, '0');
    for (std::uint64_t p = 0; p < length_; ++p) {
        if (test(p)) s[p] = '1';
    }
    return s;
}

std::uint64_t Word::hamming(const Word& other) const {
    if (length_ != other.length_) throw std::invalid_argument("hamming distance needs equal lengths");
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        total += static_cast<std::uint64_t>(std::popcount(limbs_[i] ^ other.limbs_[i]));
    }
    return total;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        if (auto c = a.limbs_[i] <=> b.limbs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Codebook build_codebook(const GroupSpec& g, int h, const Element& a, const CountLimits& limits) {
    if (h < 0) throw std::invalid_argument("subset size h must be nonnegative");
    const std::uint64_t n = g.order();
    Codebook book{g, h, a, {}};
    if (static_cast<std::uint64_t>(h) > n) return book;
    const BigNat total = BigNat::binomial(n, static_cast<std::uint64_t>(h));
    if (BigNat(limits.enumeration_limit) < total) {
        throw std::invalid_argument("C(" + std::to_string(n) + "," + std::to_string(h) + ") = " +
                                    total.str() + " subsets exceed enumeration limit " +
                                    std::to_string(limits.enumeration_limit));
    }
    for_each_subset_sum(g, h, [&](std::span<const std::uint64_t> idx, const Element& sum) {
        if (sum == a) {
            Word w(n);
            for (const auto p : idx) w.set(p);
            book.words.push_back(std::move(w));
        }
    });
    std::sort(book.words.begin(), book.words.end());
    return book;
}

DistanceCheck min_pairwise_hamming(const Codebook& book, const DistanceCheckConfig& config) {
    DistanceCheck check;
    const std::uint64_t w = book.words.size();
    if (w < 2) return check;
    const std::uint64_t pairs = w * (w - 1) / 2;
    if (pairs <= config.pair_threshold) {
        std::uint64_t best = book.words.front().length() + 1;
        for (std::uint64_t i = 0; i < w; ++i) {
            for (std::uint64_t j = i + 1; j < w; ++j) {
                best = std::min(best, book.words[i].hamming(book.words[j]));
                ++check.pairs_checked;
            }
        }
        check.min_distance = best;
        return check;
    }
    // sampled upper bound; raw engine output modulo w keeps the draw
    // identical across standard libraries
    check.exhaustive = false;
    std::mt19937_64 rng(config.seed);
    std::uint64_t best = book.words.front().length() + 1;
    for (std::uint64_t s = 0; s < config.sample_pairs; ++s) {
        std::uint64_t i = rng() % w;
        std::uint64_t j = rng() % w;
        if (i == j) continue;
        best = std::min(best, book.words[i].hamming(book.words[j]));
        ++check.pairs_checked;
    }
    check.min_distance = best;
    return check;
}

CodeSizeReport check_code_size_bounds(const GroupSpec& g, const std::vector<BigNat>& row_hstar) {
    const std::uint64_t n = g.order();
    if (row_hstar.size() != n) throw std::invalid_argument("row size does not match group order");

    CodeSizeReport report;
    report.n = n;
    report.h_star = static_cast<int>(n / 2 + 1);
    report.max_count = row_hstar.front();
    for (const auto& v : row_hstar) {
        if (report.max_count < v) report.max_count = v;
    }
    report.binom_hstar = BigNat::binomial(n, n / 2 + 1);
    report.binom_half = BigNat::binomial(n, n / 2);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), report.binom_hstar.raw().get_mpz_t(), mpz_class(static_cast<unsigned long>(n)).get_mpz_t());
    report.pigeonhole_floor = BigNat::from_raw(q);
    const BigNat scaled = BigNat(n) * report.max_count;
    report.floor_holds = report.binom_hstar <= scaled;
    report.upper_holds = scaled <= BigNat(2) * report.binom_half;
    report.upper_float = 2.0 * std::exp(report.binom_half.log_natural() - std::log(static_cast<double>(n)));
    return report;
}

CodeSizeReport check_code_size_bounds(const GroupSpec& g, const CountTable& table) {
    return check_code_size_bounds(g, table.row(static_cast<int>(g.order() / 2 + 1)));
}

}  // namespace subsetsums
