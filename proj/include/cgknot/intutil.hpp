#ifndef CGKNOT_INTUTIL_HPP
#define CGKNOT_INTUTIL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cgknot {

inline long checked_mul(long a, long b)
{
    long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in angle/order arithmetic");
    return r;
}

inline long checked_lcm(long a, long b)
{
    if (a == 0 || b == 0)
        throw std::domain_error("lcm of zero");
    long g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

inline bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline long euler_phi(long n)
{
    if (n < 1)
        throw std::domain_error("euler_phi of non-positive integer");
    long result = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0)
                n /= d;
            result -= result / d;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

inline std::vector<long> divisors(long n)
{
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it)
        small.push_back(*it);
    return small;
}

// Euclidean remainder in [0, m).
inline long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace cgknot

#endif
