#include "cohiggs/rational.hpp"

#include <optional>
#include <ostream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace mp = boost::multiprecision;

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = mp::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    *this = Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    *this = Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    *this = Rat(num_ * o.num_, den_ * o.den_);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw Error("division by zero rational");
    *this = Rat(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    Int lhs = num_ * o.den_;
    Int rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat Rat::inverse() const {
    if (num_ == 0) throw Error("inverse of zero rational");
    return Rat(den_, num_);
}

std::string Rat::str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s), Int(1));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error("malformed rational literal: " + s);
    }
}

std::optional<Rat> Rat::sqrt() const {
    if (num_ < 0) return std::nullopt;
    Int rn = mp::sqrt(num_);
    Int rd = mp::sqrt(den_);
    if (rn * rn != num_ || rd * rd != den_) return std::nullopt;
    return Rat(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace cohiggs
