#ifndef CGKNOT_LAURENT_HPP
#define CGKNOT_LAURENT_HPP

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "cgknot/cyclotomic.hpp"
#include "cgknot/unit_angle.hpp"

namespace cgknot {

/** Laurent polynomial over cyclotomic coefficients; zero coefficients are never stored. */
class CycLaurent {
public:
    CycLaurent() = default;
    CycLaurent(const Cyclotomic& c) { set(0, c); }
    CycLaurent(long n) : CycLaurent(Cyclotomic(n)) {}

    static CycLaurent monomial(const Cyclotomic& c, long exp);
    static CycLaurent t(long exp = 1) { return monomial(Cyclotomic(1), exp); }
    // t^{pow} - 1, a recurring building block.
    static CycLaurent power_minus_one(long pow);

    const std::map<long, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    long lo_exp() const;
    long hi_exp() const;
    Cyclotomic coeff(long exp) const;
    long term_count() const { return static_cast<long>(terms_.size()); }

    CycLaurent operator+(const CycLaurent& o) const;
    CycLaurent operator-(const CycLaurent& o) const;
    CycLaurent operator*(const CycLaurent& o) const;
    CycLaurent operator-() const;
    CycLaurent& operator+=(const CycLaurent& o) { return *this = *this + o; }
    CycLaurent& operator-=(const CycLaurent& o) { return *this = *this - o; }
    CycLaurent& operator*=(const CycLaurent& o) { return *this = *this * o; }
    CycLaurent pow(long n) const;

    bool operator==(const CycLaurent& o) const;
    bool operator!=(const CycLaurent& o) const { return !(*this == o); }

    // Coefficient conjugation plus t -> t^{-1}.
    CycLaurent involution() const;
    // Substitution t -> zeta * t^k with zeta the point of `omega`; k may be negative but not zero.
    CycLaurent substitute_scaled_power(const UnitAngle& omega, long k) const;
    Cyclotomic eval_at(const UnitAngle& omega) const;

    // Exact polynomial quotient, or nothing if the division leaves a remainder.
    std::optional<CycLaurent> try_divide(const CycLaurent& divisor) const;

    // Copy shifted so the lowest exponent is zero.
    CycLaurent shifted_to_zero() const;

    bool has_rational_coeffs() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CycLaurent& f) { return os << f.str(); }

private:
    void set(long exp, const Cyclotomic& c);

    std::map<long, Cyclotomic> terms_;
};

CycLaurent involution_J(const CycLaurent& f);
bool is_symmetric(const CycLaurent& f);
// J(f) = c * t^k * f for a monomial unit: the symmetry that survives the +- quotient.
bool is_symmetric_up_to_unit(const CycLaurent& f);
Cyclotomic eval_at(const CycLaurent& f, const UnitAngle& omega);

// f = unit_scalar * t^shift * g, with the scalar returned; nothing if no such unit exists.
struct UnitRatio {
    Cyclotomic scalar;
    long shift = 0;
};
std::optional<UnitRatio> equal_up_to_unit(const CycLaurent& f, const CycLaurent& g);

/** Multiset of unit-root roots plus the root-free cofactor of a Laurent polynomial. */
struct RootSplit {
    std::map<UnitAngle, long> mult;
    CycLaurent cofactor;
};

RootSplit root_split(const CycLaurent& f, const std::set<long>& candidate_orders);
std::map<UnitAngle, long> unit_root_roots(const CycLaurent& f, const std::set<long>& candidate_orders);

/**
 * Class of a symmetric Laurent polynomial modulo +-norms: the set of distinct
 * root angles that survive after removing squared factors. Always of even size.
 */
class CanonicalDisc {
public:
    CanonicalDisc() = default;
    explicit CanonicalDisc(std::set<UnitAngle> roots);

    const std::set<UnitAngle>& roots() const { return roots_; }
    bool is_trivial() const { return roots_.empty(); }
    bool contains(const UnitAngle& w) const { return roots_.count(w) > 0; }

    // Group law of the 2-torsion quotient: symmetric difference of root sets.
    CanonicalDisc operator^(const CanonicalDisc& o) const;
    CanonicalDisc& operator^=(const CanonicalDisc& o) { return *this = *this ^ o; }

    bool operator==(const CanonicalDisc& o) const { return roots_ == o.roots_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CanonicalDisc& d) { return os << d.str(); }

private:
    std::set<UnitAngle> roots_;
};

CanonicalDisc norm_reduce(const CycLaurent& f, const std::set<long>& candidate_orders);
CanonicalDisc norm_reduce_quotient(const CycLaurent& num, const CycLaurent& den,
                                   const std::set<long>& candidate_orders);

// Symmetric representative with the given root multiset: a * t^{-n} * prod (t - w_i)^{m_i}.
CycLaurent symmetric_from_angles(const std::map<UnitAngle, long>& roots);

// Determinant of a square matrix by fraction-free elimination.
CycLaurent laurent_det(std::vector<std::vector<CycLaurent>> m);

} // namespace cgknot

#endif
