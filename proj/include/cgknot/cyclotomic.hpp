#ifndef CGKNOT_CYCLOTOMIC_HPP
#define CGKNOT_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cgknot/unit_angle.hpp"

namespace cgknot {

/**
 * Element of Q(zeta_m) in the power basis zeta^0 .. zeta^{phi(m)-1} modulo the
 * m-th cyclotomic polynomial. The conductor is kept lazily: arithmetic embeds
 * operands into Q(zeta_lcm) and equality is decided after a common embedding.
 */
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1, mpq_class(0)) {}
    Cyclotomic(long n) : m_(1), c_(1, mpq_class(n)) {}
    Cyclotomic(const mpq_class& q) : m_(1), c_(1, q) {}

    // zeta_m^k.
    static Cyclotomic zeta(long m, long k = 1);

    long conductor() const { return m_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<mpq_class> as_rational() const;
    bool is_real() const;

    Cyclotomic embed_to(long big_m) const;
    // Inverse of embed_to: coordinates in Q(zeta_small_m) if the element lies there.
    std::optional<Cyclotomic> try_project(long small_m) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic inverse() const;
    // Galois map zeta_m -> zeta_m^k, gcd(k, m) = 1.
    Cyclotomic galois(long k) const;
    Cyclotomic conj() const { return galois(m_ - 1 == 0 ? 1 : m_ - 1); }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

private:
    Cyclotomic(long m, std::vector<mpq_class> c) : m_(m), c_(std::move(c)) {}

    long m_;
    std::vector<mpq_class> c_;
};

// zeta_m^c for the angle c/m.
Cyclotomic eval_angle(const UnitAngle& a);

// Coefficients of the m-th cyclotomic polynomial, degree phi(m), monic, ascending order.
const std::vector<mpz_class>& cyclotomic_poly(long m);

// Sign of a real cyclotomic number: exact zero test, then interval refinement.
int exact_sign(const Cyclotomic& a);

} // namespace cgknot

#endif
