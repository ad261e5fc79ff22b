#include "quadproof/quadext.hpp"

#include <ostream>
#include <utility>

namespace quadproof {

QuadExt::QuadExt(Rational p, Rational q, Rational d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_.sign() < 0) {
        throw std::domain_error("negative radicand");
    }
}

void QuadExt::require_same_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.d_ != b.d_) {
        throw RadicandMismatch();
    }
}

int QuadExt::sign() const {
    if (d_.is_zero() || q_.is_zero()) {
        return p_.sign();
    }
    if (p_.is_zero()) {
        return q_.sign();  // sqrt(d) > 0 here
    }
    int sp = p_.sign();
    int sq = q_.sign();
    if (sp == sq) {
        return sp;
    }
    // Opposite signs: |p| vs |q|*sqrt(d), squared.
    int cmp = (p_ * p_ - q_ * q_ * d_).sign();
    if (cmp == 0) return 0;       // only possible when d is a perfect square
    return cmp > 0 ? sp : sq;
}

QuadExt QuadExt::normalized() const {
    if (q_.is_zero()) {
        return *this;
    }
    if (auto root = exact_sqrt(d_)) {
        return QuadExt(p_ + q_ * *root, Rational(0), d_);
    }
    return *this;
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    QuadExt::require_same_radicand(a, b);
    return QuadExt(a.p_ + b.p_, a.q_ + b.q_, a.d_);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    QuadExt::require_same_radicand(a, b);
    return QuadExt(a.p_ - b.p_, a.q_ - b.q_, a.d_);
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    QuadExt::require_same_radicand(a, b);
    return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * a.d_,
                   a.p_ * b.q_ + a.q_ * b.p_,
                   a.d_);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    QuadExt::require_same_radicand(a, b);
    Rational n = b.norm();
    if (!n.is_zero()) {
        // 1/(p + q*sqrt(d)) = (p - q*sqrt(d)) / (p^2 - q^2*d)
        return (a * b.conjugate()).scaled(Rational(1) / n);
    }
    // Zero norm with d a perfect square: either b itself is zero, or its
    // conjugate is (e.g. 5 + 1*sqrt(25)), in which case b is the rational
    // number p + q*e and ordinary rational division applies.
    if (b.sign() == 0) {
        throw DivideByZero();
    }
    auto root = exact_sqrt(b.d_);
    Rational value = b.p_ + b.q_ * *root;
    return a.scaled(Rational(1) / value);
}

std::string QuadExt::str() const {
    return p_.str() + " + " + q_.str() + "*sqrt(" + d_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
    return os << x.str();
}

}  // namespace quadproof
