#include "quadproof/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace quadproof {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw DivideByZero();
    }
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

int Rational::sign() const {
    return num_.sign();
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_ < 0) {
        r.num_ = -r.num_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw DivideByZero();
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross multiplication; both denominators are positive.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
        if (t.empty()) return std::nullopt;
        std::size_t i = 0;
        if (t[0] == '+' || t[0] == '-') i = 1;
        if (i == t.size()) return std::nullopt;
        for (std::size_t j = i; j < t.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(t[j]))) return std::nullopt;
        }
        return BigInt(std::string(t));
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(std::move(*n));
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(std::move(*n), std::move(*d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational pow(const Rational& x, unsigned n) {
    Rational result(1);
    Rational base = x;
    while (n > 0) {
        if (n & 1u) {
            result *= base;
        }
        base *= base;
        n >>= 1u;
    }
    return result;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) {
        throw std::domain_error("isqrt of negative integer");
    }
    return mp::sqrt(n);
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) {
        throw std::domain_error("exact_sqrt of negative rational");
    }
    // In canonical form num/den is a rational square iff both parts are
    // integer squares.
    BigInt rn = isqrt(x.numerator());
    if (rn * rn != x.numerator()) return std::nullopt;
    BigInt rd = isqrt(x.denominator());
    if (rd * rd != x.denominator()) return std::nullopt;
    return Rational(std::move(rn), std::move(rd));
}

std::optional<Rational> parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string digits;
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    std::size_t dot = std::string_view::npos;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (dot != std::string_view::npos) return std::nullopt;
            dot = digits.size();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else {
            return std::nullopt;
        }
    }
    if (digits.empty()) return std::nullopt;
    std::size_t frac_digits = dot == std::string_view::npos ? 0 : digits.size() - dot;
    BigInt num(digits);
    if (negative) num = -num;
    BigInt den = 1;
    for (std::size_t k = 0; k < frac_digits; ++k) den *= 10;
    return Rational(std::move(num), std::move(den));
}

}  // namespace quadproof
