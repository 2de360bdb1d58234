#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace cohiggs {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number. Always normalized: gcd(|num|, den) = 1, den > 0.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(Int v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rat(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isInteger() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rat& o) const;

    Rat inverse() const;
    Rat abs() const { return num_ < 0 ? -*this : *this; }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;
    /// Parses "p", "p/q", optionally signed. Throws Error on malformed input.
    static Rat parse(const std::string& s);

    /// Square root if this is a square of a rational, otherwise nothing.
    /// The returned root is non-negative.
    std::optional<Rat> sqrt() const;

private:
    Int num_;
    Int den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace cohiggs
