#include "subsetsums/bignat.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace subsetsums {

BigNat::BigNat(const std::string& decimal) {
    if (decimal.empty()) throw std::invalid_argument("BigNat: empty string");
    for (char c : decimal) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigNat: invalid decimal digit in \"" + decimal + "\"");
    }
    if (mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
        throw std::invalid_argument("BigNat: cannot parse \"" + decimal + "\"");
    }
}

BigNat& BigNat::operator+=(const BigNat& o) {
    v_ += o.v_;
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (mpz_cmp(v_.get_mpz_t(), o.v_.get_mpz_t()) < 0) {
        throw std::underflow_error("BigNat: subtraction below zero");
    }
    v_ -= o.v_;
    return *this;
}

BigNat& BigNat::operator*=(const BigNat& o) {
    v_ *= o.v_;
    return *this;
}

BigNat BigNat::div_exact(const BigNat& d) const {
    if (d.is_zero()) throw std::domain_error("BigNat: division by zero");
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    if (mpz_sgn(r.get_mpz_t()) != 0) {
        throw std::domain_error("BigNat: inexact division of " + str() + " by " + d.str());
    }
    return from_raw(std::move(q));
}

BigNat BigNat::binomial(std::uint64_t n, std::uint64_t k) {
    BigNat r;
    if (k > n) return r;  // zero
    mpz_bin_uiui(r.v_.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigNat BigNat::factorial(std::uint64_t n) {
    BigNat r;
    mpz_fac_ui(r.v_.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigNat BigNat::pow2(std::uint64_t e) {
    BigNat r;
    mpz_ui_pow_ui(r.v_.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

BigNat BigNat::pow(const BigNat& base, std::uint64_t e) {
    BigNat r;
    mpz_pow_ui(r.v_.get_mpz_t(), base.v_.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

BigNat BigNat::gcd(const BigNat& a, const BigNat& b) {
    BigNat r;
    mpz_gcd(r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return r;
}

std::string BigNat::str() const { return v_.get_str(10); }

std::uint64_t BigNat::to_u64() const {
    if (!mpz_fits_ulong_p(v_.get_mpz_t())) {
        throw std::overflow_error("BigNat: value " + str() + " does not fit in 64 bits");
    }
    return mpz_get_ui(v_.get_mpz_t());
}

double BigNat::log_natural() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v_.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

BigNat BigNat::from_raw(mpz_class z) {
    if (mpz_sgn(z.get_mpz_t()) < 0) throw std::underflow_error("BigNat: negative value");
    BigNat r;
    r.v_ = std::move(z);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.str(); }

}  // namespace subsetsums
