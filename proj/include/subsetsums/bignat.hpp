#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace subsetsums {

// Arbitrary-precision nonnegative integer. Every operation is exact:
// subtraction below zero throws std::underflow_error and division with a
// nonzero remainder throws std::domain_error, so exactness violations
// surface as hard errors instead of wrapped or rounded values.
class BigNat {
public:
    BigNat() : v_(0) {}
    // Any integral value; negative input throws std::underflow_error.
    template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
    BigNat(T v) {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw std::underflow_error("BigNat: negative value");
        }
        static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "needs 64-bit unsigned long");
        v_ = static_cast<unsigned long>(v);
    }
    // Decimal digits only; rejects signs, whitespace and empty input.
    explicit BigNat(const std::string& decimal);

    BigNat& operator+=(const BigNat& o);
    BigNat& operator-=(const BigNat& o);  // throws std::underflow_error if o > *this
    BigNat& operator*=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }

    // Quotient of an exact division; throws std::domain_error if d is zero
    // or does not divide *this.
    BigNat div_exact(const BigNat& d) const;

    friend bool operator==(const BigNat& a, const BigNat& b) { return mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t()) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return c <=> 0;
    }

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }

    static BigNat binomial(std::uint64_t n, std::uint64_t k);
    static BigNat factorial(std::uint64_t n);
    static BigNat pow2(std::uint64_t e);
    static BigNat pow(const BigNat& base, std::uint64_t e);
    static BigNat gcd(const BigNat& a, const BigNat& b);
    BigNat fourth() const { return pow(*this, 4); }

    std::string str() const;
    // Value as uint64; throws std::overflow_error if it does not fit.
    std::uint64_t to_u64() const;
    double to_double() const { return v_.get_d(); }
    // Natural log, finite for values far beyond double range; -inf for zero.
    double log_natural() const;

    const mpz_class& raw() const { return v_; }
    static BigNat from_raw(mpz_class z);

    friend std::ostream& operator<<(std::ostream& os, const BigNat& v);

private:
    mpz_class v_;
};

}  // namespace subsetsums
