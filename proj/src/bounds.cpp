#include "subsetsums/bounds.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace subsetsums {

namespace {

void require_even(int h) {
    if (h < 2 || h % 2 != 0) throw std::invalid_argument("expected even h >= 2, got " + std::to_string(h));
}

void require_odd(int h) {
    if (h < 1 || h % 2 != 1) throw std::invalid_argument("expected odd h >= 1, got " + std::to_string(h));
}

void require_row_size(const GroupSpec& g, const std::vector<BigNat>& row) {
    if (row.size() != g.order()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) +
                                    " entries, group has order " + std::to_string(g.order()));
    }
}

void require_h_window(std::uint64_t n, int h, int low, bool enforce) {
    if (!enforce) {
        if (h < 0 || static_cast<std::uint64_t>(h) > n) {
            throw std::invalid_argument("h = " + std::to_string(h) + " outside [0, n]");
        }
        return;
    }
    const std::uint64_t cap = n / 2 + 1;
    if (h < low || static_cast<std::uint64_t>(h) > cap) {
        throw std::invalid_argument("h = " + std::to_string(h) + " outside proven window [" +
                                    std::to_string(low) + ", n/2+1 = " + std::to_string(cap) + "]");
    }
}

std::pair<BigNat, BigNat> row_min_max(const std::vector<BigNat>& row) {
    BigNat lo = row.front();
    BigNat hi = row.front();
    for (const auto& v : row) {
        if (v < lo) lo = v;
        if (hi < v) hi = v;
    }
    return {lo, hi};
}

// exponent e and product P of the bound 2^{3h/4} n^e / P for either parity
struct BoundShape {
    Parity parity;
    std::uint64_t e;
    BigNat product;
};

BoundShape bound_shape(int h) {
    if (h % 2 == 0) {
        return {Parity::even, static_cast<std::uint64_t>(h / 2), even_product(h)};
    }
    return {Parity::odd, static_cast<std::uint64_t>((h + 1) / 2), odd_product(h)};
}

}  // namespace

BigNat even_product(int h) {
    require_even(h);
    BigNat p(1);
    for (int k = h; k >= 2; k -= 2) p *= BigNat(static_cast<std::uint64_t>(k));
    return p;
}

BigNat odd_product(int h) {
    require_odd(h);
    BigNat p(1);
    for (int k = h + 1; k >= 2; k -= 2) p *= BigNat(static_cast<std::uint64_t>(k));
    return p;
}

BoundReport check_deviation_bound(const GroupSpec& g, const std::vector<BigNat>& row, int h,
                                  bool enforce_range) {
    require_row_size(g, row);
    const std::uint64_t n = g.order();
    require_h_window(n, h, 2, enforce_range);
    const auto shape = bound_shape(h);
    auto [lo, hi] = row_min_max(row);

    BoundReport report;
    report.n = n;
    report.h = h;
    report.parity = shape.parity;
    report.deviation = hi - lo;
    report.comparison.lhs = (report.deviation * shape.product).fourth();
    report.comparison.rhs = BigNat::pow2(3 * static_cast<std::uint64_t>(h)) *
                            BigNat::pow(BigNat(n), 4 * shape.e);
    report.comparison.holds = report.comparison.lhs <= report.comparison.rhs;
    report.bound_float = std::exp(0.75 * h * std::log(2.0) +
                                  static_cast<double>(shape.e) * std::log(static_cast<double>(n)) -
                                  shape.product.log_natural());
    return report;
}

BoundReport check_deviation_bound(const GroupSpec& g, const CountTable& table, int h,
                                  bool enforce_range) {
    require_h_window(g.order(), h, 2, enforce_range);  // before row(h) can throw out_of_range
    return check_deviation_bound(g, table.row(h), h, enforce_range);
}

std::pair<bool, bool> base_case_bounds(const GroupSpec& g, const CountTable& table) {
    const std::uint64_t n = g.order();
    if (n < 4) throw std::invalid_argument("base case bounds need n >= 4, got n = " + std::to_string(n));
    if (table.hmax() < 3) throw std::invalid_argument("base case bounds need table rows 2 and 3");
    auto [lo2, hi2] = table.row_min_max(2);
    auto [lo3, hi3] = table.row_min_max(3);
    const BigNat nn(n);
    const bool two = (hi2 - lo2) * BigNat(2) <= nn;
    const bool three = (hi3 - lo3) * BigNat(3) <= nn;
    return {two, three};
}

double x_log(std::uint64_t n, int h) {
    if (h < 0 || static_cast<std::uint64_t>(h) > n) throw std::invalid_argument("x_log needs 0 <= h <= n");
    const double dn = static_cast<double>(n);
    const double dh = static_cast<double>(h);
    return 0.75 * dh * std::log(2.0) + (dh / 2.0 + 1.0) * std::log(dn) +
           std::lgamma(dn - dh + 1.0) + 0.5 * std::lgamma(dh + 1.0) - std::lgamma(dn + 1.0);
}

double x_log_odd(std::uint64_t n, int h) {
    require_odd(h);
    if (static_cast<std::uint64_t>(h) > n) throw std::invalid_argument("x_log_odd needs h <= n");
    const double dn = static_cast<double>(n);
    const double dh = static_cast<double>(h);
    return 0.75 * dh * std::log(2.0) + (dh + 3.0) / 2.0 * std::log(dn) +
           std::lgamma(dn - dh + 1.0) + 0.5 * std::lgamma(dh + 2.0) -
           std::log(dh + 1.0) - std::lgamma(dn + 1.0);
}

double certificate_log(std::uint64_t n, int h) {
    return h % 2 == 0 ? x_log(n, h) : x_log_odd(n, h);
}

double ExactXFourth::log_quarter() const {
    return (num.log_natural() - den.log_natural()) / 4.0;
}

ExactXFourth x_exact_fourth(std::uint64_t n, int h, std::uint64_t limit) {
    if (n > limit) {
        throw std::invalid_argument("exact X^4 limited to n <= " + std::to_string(limit) +
                                    ", got n = " + std::to_string(n) + "; use certificate_log instead");
    }
    if (h < 0 || static_cast<std::uint64_t>(h) > n) throw std::invalid_argument("x_exact_fourth needs 0 <= h <= n");
    const std::uint64_t uh = static_cast<std::uint64_t>(h);
    BigNat num;
    BigNat den;
    if (h % 2 == 0) {
        num = BigNat::pow2(3 * uh) * BigNat::pow(BigNat(n), 2 * uh + 4) *
              BigNat::pow(BigNat::factorial(n - uh), 4) * BigNat::pow(BigNat::factorial(uh), 2);
        den = BigNat::pow(BigNat::factorial(n), 4);
    } else {
        num = BigNat::pow2(3 * uh) * BigNat::pow(BigNat(n), 2 * uh + 6) *
              BigNat::pow(BigNat::factorial(n - uh), 4) * BigNat::pow(BigNat::factorial(uh + 1), 2);
        den = BigNat::pow(BigNat(uh + 1), 4) * BigNat::pow(BigNat::factorial(n), 4);
    }
    const BigNat d = BigNat::gcd(num, den);
    return {num.div_exact(d), den.div_exact(d)};
}

double x_ratio(std::uint64_t n, int h) {
    if (h < 0 || static_cast<std::uint64_t>(h) >= n) {
        throw std::invalid_argument("x_ratio needs 0 <= h < n so the denominator is positive");
    }
    const double dn = static_cast<double>(n);
    const double dh = static_cast<double>(h);
    return std::pow(2.0, 0.75) * std::sqrt(dn * (dh + 1.0)) / (dn - dh);
}

double asymptotic_exponent() {
    return 0.25 - 0.375 * std::log(2.0);
}

double exact_ratio(const BigNat& minimum, const BigNat& maximum) {
    if (maximum.is_zero()) return 0.0;
    mpq_class q(minimum.raw(), maximum.raw());
    q.canonicalize();
    return q.get_d();
}

RatioBoundReport check_ratio_bound(const GroupSpec& g, const std::vector<BigNat>& row, int h,
                                   bool enforce_range, std::uint64_t exact_limit) {
    require_row_size(g, row);
    const std::uint64_t n = g.order();
    require_h_window(n, h, 4, enforce_range);
    const auto xf = x_exact_fourth(n, h, exact_limit);
    auto [lo, hi] = row_min_max(row);

    RatioBoundReport report;
    report.n = n;
    report.h = h;
    report.parity = h % 2 == 0 ? Parity::even : Parity::odd;
    report.min_count = lo;
    report.max_count = hi;
    report.ratio = exact_ratio(lo, hi);
    report.one_minus_x = 1.0 - std::exp(xf.log_quarter());
    const BigNat deviation = hi - lo;
    report.comparison.lhs = deviation.fourth() * xf.den;
    report.comparison.rhs = xf.num * hi.fourth();
    report.comparison.holds = report.comparison.lhs <= report.comparison.rhs;
    report.holds = report.comparison.holds;
    return report;
}

RatioBoundReport check_ratio_bound(const GroupSpec& g, const CountTable& table, int h,
                                   bool enforce_range, std::uint64_t exact_limit) {
    require_h_window(g.order(), h, 4, enforce_range);  // before row(h) can throw out_of_range
    return check_ratio_bound(g, table.row(h), h, enforce_range, exact_limit);
}

}  // namespace subsetsums
