#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "cliquebound/errors.hpp"

namespace cliquebound {

// All bound arithmetic is exact; 128 bits cover every grid this artifact
// evaluates (largest values ~ C(100,50)).
using BigInt = __int128;

std::string to_string(BigInt v);

// Exact rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(long long value) : num_(value), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}
    Rational(BigInt num, BigInt den);

    BigInt numerator() const { return num_; }
    BigInt denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    BigInt floor() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    // "46" or "28/3".
    std::string to_string() const;

private:
    BigInt num_, den_;
};

namespace checked {
// Throw arithmetic_overflow instead of wrapping.
BigInt mul(BigInt a, BigInt b);
BigInt add(BigInt a, BigInt b);
}  // namespace checked

}  // namespace cliquebound
