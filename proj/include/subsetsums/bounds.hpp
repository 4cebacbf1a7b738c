#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subsetsums/bignat.hpp"
#include "subsetsums/counting.hpp"
#include "subsetsums/group.hpp"

namespace subsetsums {

// Outcome of an exact integer comparison lhs <= rhs, where both sides are
// the fourth powers that clear the square roots and the 2^{3h/4} factor
// out of the analytic bound. No floating point is involved in `holds`.
struct FourthPowerComparison {
    BigNat lhs;
    BigNat rhs;
    bool holds = false;
};

enum class Parity { even, odd };

// Deviation bound for one table row: max_a f_a(h) - min_a f_a(h) is at
// most 2^{3h/4} n^e / P with
//   even h:  P = h(h-2)...2,      e = h/2,
//   odd h:   P = (h+1)(h-1)...2,  e = (h+1)/2.
// The exact check compares (deviation * P)^4 against 2^{3h} n^{4e}.
struct BoundReport {
    std::uint64_t n = 0;
    int h = 0;
    Parity parity = Parity::even;
    BigNat deviation;
    FourthPowerComparison comparison;
    double bound_float = 0.0;  // 2^{3h/4} n^e / P as a double, via logs
};

// Falling product over even steps: h(h-2)...2 for even h >= 2.
BigNat even_product(int h);
// (h+1)(h-1)...2 for odd h >= 1.
BigNat odd_product(int h);

// Deviation report for row h of the table. Requires 2 <= h <= n/2 + 1
// unless enforce_range is false (the caller takes responsibility for
// quoting a bound outside its proven range).
BoundReport check_deviation_bound(const GroupSpec& g, const std::vector<BigNat>& row, int h,
                                  bool enforce_range = true);
BoundReport check_deviation_bound(const GroupSpec& g, const CountTable& table, int h,
                                  bool enforce_range = true);

// Small-h sanity: for n >= 4, row 2 deviates by at most n/2 and row 3 by
// at most n/3 (checked as 2*D <= n and 3*D <= n).
std::pair<bool, bool> base_case_bounds(const GroupSpec& g, const CountTable& table);

// ln X(h) where
//   X(h) = 2^{3h/4} n^{h/2+1} (n-h)! sqrt(h!) / n!
// evaluated in log space so it stays finite for n far beyond factorial
// range: 0.75 h ln2 + (h/2+1) ln n + lgamma(n-h+1) + lgamma(h+1)/2 - lgamma(n+1).
// Defined for any 0 <= h <= n as the formal extension of the even-h
// certificate; the proven bound statement uses even h, with x_log_odd as
// the odd-h analogue.
double x_log(std::uint64_t n, int h);
// Odd-h analogue: X(h) = 2^{3h/4} n^{(h+3)/2} (n-h)! sqrt((h+1)!) / ((h+1) n!).
double x_log_odd(std::uint64_t n, int h);
// Parity dispatcher for the two above.
double certificate_log(std::uint64_t n, int h);

// X(h)^4 as an exact reduced fraction num/den; rational because the
// fourth power clears both the square root and the 2^{3/4}. Even h:
//   num = 2^{3h} n^{2h+4} ((n-h)!)^4 (h!)^2,  den = (n!)^4.
// Odd h:
//   num = 2^{3h} n^{2h+6} ((n-h)!)^4 ((h+1)!)^2,  den = (h+1)^4 (n!)^4.
// Refuses n beyond `limit` to keep the factorials bounded.
struct ExactXFourth {
    BigNat num;
    BigNat den;
    // ln X = ln(num/den) / 4.
    double log_quarter() const;
};
ExactXFourth x_exact_fourth(std::uint64_t n, int h, std::uint64_t limit = 200);

// One-step certificate quotient X(h+1)/X(h) = 2^{3/4} sqrt(n(h+1)) / (n-h).
double x_ratio(std::uint64_t n, int h);

// lim_n ln X(n/2+1) / n = 1/4 - (3/8) ln 2.
double asymptotic_exponent();

// Ratio bound for row h: min_a f_a(h) / max_a f_a(h) >= 1 - X(h), checked
// exactly as deviation^4 * den <= num * max^4 with X^4 = num/den.
struct RatioBoundReport {
    std::uint64_t n = 0;
    int h = 0;
    Parity parity = Parity::even;
    BigNat min_count;
    BigNat max_count;
    double ratio = 0.0;        // min/max rounded once, exact rational inside
    double one_minus_x = 0.0;  // 1 - X(h) as a double
    FourthPowerComparison comparison;
    bool holds = false;
};

// Requires 4 <= h <= n/2 + 1 unless enforce_range is false.
RatioBoundReport check_ratio_bound(const GroupSpec& g, const std::vector<BigNat>& row, int h,
                                   bool enforce_range = true, std::uint64_t exact_limit = 200);
RatioBoundReport check_ratio_bound(const GroupSpec& g, const CountTable& table, int h,
                                   bool enforce_range = true, std::uint64_t exact_limit = 200);

// min/max as a correctly rounded double (exact rational arithmetic inside);
// 0 when max is zero.
double exact_ratio(const BigNat& minimum, const BigNat& maximum);

}  // namespace subsetsums
