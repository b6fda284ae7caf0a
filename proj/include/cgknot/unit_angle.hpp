#ifndef CGKNOT_UNIT_ANGLE_HPP
#define CGKNOT_UNIT_ANGLE_HPP

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "cgknot/intutil.hpp"

namespace cgknot {

/** Exact point e^{2*pi*i*c/m} on the unit circle, stored as the reduced fraction c/m in [0,1). */
class UnitAngle {
public:
    UnitAngle() : num_(0), den_(1) {}

    UnitAngle(long num, long den)
    {
        if (den <= 0)
            throw std::domain_error("UnitAngle: denominator must be positive");
        num = mod_floor(num % den, den);
        long g = std::gcd(num, den);
        if (g == 0)
            g = 1;
        num_ = num / g;
        den_ = den / g;
    }

    long num() const { return num_; }
    long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    // Angle addition: multiplication of the circle points.
    UnitAngle mul(const UnitAngle& other) const
    {
        long d = checked_mul(den_, other.den_);
        long n = checked_mul(num_, other.den_) + checked_mul(other.num_, den_);
        return UnitAngle(n, d);
    }

    UnitAngle pow(long k) const
    {
        long n = mod_floor(static_cast<long>((static_cast<__int128>(num_) * k) % den_), den_);
        return UnitAngle(n, den_);
    }

    UnitAngle conj() const { return UnitAngle(den_ - num_, den_); }

    // Bisector of the arc from *this counterclockwise to `next` (wraps past 1 when next <= *this).
    UnitAngle arc_midpoint(const UnitAngle& next) const
    {
        long bnum = next.num_;
        long bden = next.den_;
        __int128 n = static_cast<__int128>(num_) * bden + static_cast<__int128>(bnum) * den_;
        if (!(*this < next))
            n += static_cast<__int128>(den_) * bden; // wrap: use next + 1 as the endpoint
        long d2 = checked_mul(2, checked_mul(den_, bden));
        return UnitAngle(static_cast<long>(n), d2);
    }

    bool operator==(const UnitAngle& other) const
    {
        return num_ == other.num_ && den_ == other.den_;
    }

    std::strong_ordering operator<=>(const UnitAngle& other) const
    {
        __int128 l = static_cast<__int128>(num_) * other.den_;
        __int128 r = static_cast<__int128>(other.num_) * den_;
        if (l < r)
            return std::strong_ordering::less;
        if (l > r)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend std::ostream& operator<<(std::ostream& os, const UnitAngle& a) { return os << a.str(); }

private:
    long num_;
    long den_;
};

} // namespace cgknot

#endif
