#pragma once

// Exact integer and rational arithmetic plus the combinatorial helpers
// (factorials, binomials) every count in this library is built from.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace enumcount {

class ZeroDenominatorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ExactInteger {
public:
    ExactInteger() = default;
    ExactInteger(long value) : value_(value) {}
    explicit ExactInteger(const mpz_class& value) : value_(value) {}
    explicit ExactInteger(mpz_class&& value) : value_(std::move(value)) {}

    /// Parses an optionally signed decimal string. Throws std::invalid_argument
    /// on anything else (no whitespace, no exponents, no separators).
    static ExactInteger from_decimal(std::string_view text);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;

    std::string to_string() const { return value_.get_str(10); }
    const mpz_class& raw() const { return value_; }

    ExactInteger& operator+=(const ExactInteger& rhs) { value_ += rhs.value_; return *this; }
    ExactInteger& operator-=(const ExactInteger& rhs) { value_ -= rhs.value_; return *this; }
    ExactInteger& operator*=(const ExactInteger& rhs) { value_ *= rhs.value_; return *this; }

    friend ExactInteger operator+(ExactInteger lhs, const ExactInteger& rhs) { return lhs += rhs; }
    friend ExactInteger operator-(ExactInteger lhs, const ExactInteger& rhs) { return lhs -= rhs; }
    friend ExactInteger operator*(ExactInteger lhs, const ExactInteger& rhs) { return lhs *= rhs; }
    friend ExactInteger operator-(const ExactInteger& x) { return ExactInteger(mpz_class(-x.value_)); }

    /// Exact quotient; throws std::domain_error if rhs does not divide *this.
    ExactInteger divided_exactly_by(const ExactInteger& rhs) const;
    ExactInteger abs() const { return ExactInteger(mpz_class(::abs(value_))); }
    ExactInteger pow(unsigned long exponent) const;

    friend bool operator==(const ExactInteger& a, const ExactInteger& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactInteger& a, const ExactInteger& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactInteger& x) { return os << x.to_string(); }

private:
    mpz_class value_;
};

ExactInteger gcd(const ExactInteger& a, const ExactInteger& b);

/// A fraction kept in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}
    ExactRational(const ExactInteger& value) : value_(value.raw()) {}

    ExactInteger numerator() const { return ExactInteger(value_.get_num()); }
    ExactInteger denominator() const { return ExactInteger(value_.get_den()); }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// The value as an integer; throws std::domain_error when !is_integer().
    ExactInteger to_integer() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    /// Inverse of to_string().
    static ExactRational from_string(std::string_view text);

    ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    friend ExactRational operator-(const ExactRational& x) { return ExactRational(mpq_class(-x.value_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.to_string(); }

    friend ExactRational rational(const ExactInteger& num, const ExactInteger& den);

private:
    explicit ExactRational(mpq_class&& value) : value_(std::move(value)) {}
    mpq_class value_;
};

/// num/den reduced to lowest terms. Throws ZeroDenominatorError if den == 0.
ExactRational rational(const ExactInteger& num, const ExactInteger& den);

/// n! for n >= 0. Throws std::invalid_argument for negative n.
ExactInteger factorial(long n);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
///
/// Rows n <= binomial_cache_cutoff() come from a shared Pascal triangle that
/// grows on demand; larger n use the multiplicative formula.
ExactInteger binomial(long n, long k);

long binomial_cache_cutoff();
/// Changes the cutoff; rows already built stay cached.
void set_binomial_cache_cutoff(long cutoff);
/// Number of Pascal rows materialized so far.
std::size_t binomial_cache_rows();

}  // namespace enumcount
