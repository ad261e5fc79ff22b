#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadproof {

using BigInt = boost::multiprecision::cpp_int;

struct DivideByZero : std::domain_error {
    DivideByZero() : std::domain_error("division by zero") {}
};

/// Arbitrary-precision rational number, always kept in canonical form:
/// denominator > 0 and gcd(|num|, den) = 1. This is the only scalar used
/// by the square constructions; floating point never enters.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    int sign() const;
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational abs() const;

    // Multiplication by a rational constant; mirrors QuadExt::scaled so the
    // geometry templates can scale either scalar kind uniformly.
    Rational scaled(const Rational& r) const { return *this * r; }
    static Rational zero_like(const Rational&) { return Rational(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const;

    /// Accepts an optionally signed integer "n" or fraction "p/q".
    /// Returns nullopt on malformed text or a zero denominator.
    static std::optional<Rational> parse(std::string_view text);

private:
    void normalize();

    BigInt num_;
    BigInt den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// x^n by repeated squaring, n >= 0.
Rational pow(const Rational& x, unsigned n);

/// The nonnegative rational square root of x, if one exists (x must be a
/// perfect square of a rational). Throws std::domain_error for x < 0.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Floor of the integer square root, n >= 0.
BigInt isqrt(const BigInt& n);

/// Parses a plain decimal literal ("1.5", "-0.25", "2") into the exact
/// rational it denotes. Used for render options, never for figure input.
std::optional<Rational> parse_decimal(std::string_view text);

}  // namespace quadproof
