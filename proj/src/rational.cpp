#include "cliquebound/rational.hpp"

namespace cliquebound {

std::string to_string(BigInt v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

namespace checked {

BigInt mul(BigInt a, BigInt b) {
    BigInt r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow("exact multiplication exceeds 128 bits");
    return r;
}

BigInt add(BigInt a, BigInt b) {
    BigInt r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow("exact addition exceeds 128 bits");
    return r;
}

}  // namespace checked

namespace {

BigInt gcd128(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(num), den_(den) {
    if (den_ == 0) throw parameter_error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd128(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(checked::add(checked::mul(num_, o.den_), checked::mul(o.num_, den_)),
                    checked::mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
    return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(checked::mul(num_, o.num_), checked::mul(den_, o.den_));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = checked::mul(num_, o.den_);
    BigInt rhs = checked::mul(o.num_, den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return cliquebound::to_string(num_);
    return cliquebound::to_string(num_) + "/" + cliquebound::to_string(den_);
}

}  // namespace cliquebound
