#pragma once

#include "quadproof/rational.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace quadproof {

struct RadicandMismatch : std::domain_error {
    RadicandMismatch() : std::domain_error("mixed radicands in Q(sqrt(d)) arithmetic") {}
};

/// Element p + q*sqrt(d) of the quadratic extension Q(sqrt(d)), d >= 0.
///
/// The radicand is fixed per figure (d = a^2 + b^2 for the tilted-square
/// family) and two operands must share it. When d happens to be a perfect
/// rational square the representation is not unique, so equality and sign
/// never compare (p, q) pairs structurally: they go through sign(), which
/// decides by exact case analysis on p, q and p^2 vs q^2*d.
class QuadExt {
public:
    QuadExt() : p_(0), q_(0), d_(0) {}
    QuadExt(Rational p, Rational q, Rational d);

    static QuadExt from_rational(Rational p, Rational d) {
        return QuadExt(std::move(p), Rational(0), std::move(d));
    }
    /// sqrt(d) itself, as 0 + 1*sqrt(d).
    static QuadExt sqrt_of(Rational d) {
        return QuadExt(Rational(0), Rational(1), std::move(d));
    }
    static QuadExt zero_like(const QuadExt& x) {
        return QuadExt(Rational(0), Rational(0), x.d_);
    }

    const Rational& rat_part() const { return p_; }
    const Rational& surd_part() const { return q_; }
    const Rational& radicand() const { return d_; }

    /// Exact sign of the real number p + q*sqrt(d). No floating point.
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    QuadExt conjugate() const { return QuadExt(p_, -q_, d_); }

    /// p^2 - q^2*d, the field norm (rational).
    Rational norm() const { return p_ * p_ - q_ * q_ * d_; }

    /// Canonical representative: when d is a perfect rational square the
    /// surd part is folded into the rational part. Identity otherwise.
    /// Serialization goes through this so reports are representation-stable.
    QuadExt normalized() const;

    QuadExt scaled(const Rational& r) const { return QuadExt(p_ * r, q_ * r, d_); }

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return (a - b).sign() == 0;
    }
    friend bool operator<(const QuadExt& a, const QuadExt& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator>(const QuadExt& a, const QuadExt& b) { return b < a; }
    friend bool operator<=(const QuadExt& a, const QuadExt& b) { return !(b < a); }
    friend bool operator>=(const QuadExt& a, const QuadExt& b) { return !(a < b); }

    /// "p + q*sqrt(d)" (debugging / messages).
    std::string str() const;

private:
    static void require_same_radicand(const QuadExt& a, const QuadExt& b);

    Rational p_;
    Rational q_;
    Rational d_;  // >= 0
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace quadproof
