#pragma once

#include <map>
#include <optional>
#include <string>

#include "cohiggs/lattice.hpp"

namespace cohiggs {

/// Exact multivariate Laurent polynomial over Q: a finite sum of terms
/// coeff * chi^e with e an integer exponent vector of fixed rank.
class LaurentPoly {
public:
    LaurentPoly() : rank_(0) {}
    explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

    static LaurentPoly zero(std::size_t rank) { return LaurentPoly(rank); }
    static LaurentPoly constant(std::size_t rank, const Rat& c);
    static LaurentPoly monomial(const LatticeVec& exponent, const Rat& coeff);

    std::size_t rank() const { return rank_; }
    const std::map<LatticeVec, Rat, LvLess>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    void addTerm(const LatticeVec& exponent, const Rat& coeff);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    /// Substitutes a point with all coordinates nonzero.
    Rat evalAt(const std::vector<Rat>& t) const;

    /// d with *this == d * d, up to the sign of d; nothing if no such d.
    std::optional<LaurentPoly> sqrt() const;
    /// Exact quotient *this / divisor; nothing if not divisible.
    std::optional<LaurentPoly> divideExact(const LaurentPoly& divisor) const;

    /// Human-readable form, e.g. "2*x^2*y^-1 - 1/3". Variables are named
    /// x, y, z, t3, t4, ... by coordinate.
    std::string str() const;

private:
    std::size_t rank_;
    std::map<LatticeVec, Rat, LvLess> terms_;
};

/// d with p == -(d*d), determined up to sign; nothing if no such d exists.
std::optional<LaurentPoly> isMinusPerfectSquare(const LaurentPoly& p);

}  // namespace cohiggs
