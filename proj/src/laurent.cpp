#include "cgknot/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cgknot/intutil.hpp"

namespace cgknot {

namespace {

/* All reduced angles whose denominator divides some candidate order, sorted. */
std::set<UnitAngle> candidate_angles(const std::set<long>& orders)
{
    std::set<long> dens;
    for (long o : orders) {
        if (o <= 0)
            throw std::domain_error("candidate orders must be positive");
        for (long d : divisors(o))
            dens.insert(d);
    }
    std::set<UnitAngle> out;
    for (long d : dens)
        for (long c = 0; c < d; ++c)
            if (std::gcd(c, d) == 1 || d == 1)
                out.insert(UnitAngle(c, d));
    return out;
}

CycLaurent phi_poly(long d)
{
    const std::vector<mpz_class>& coeffs = cyclotomic_poly(d);
    CycLaurent f;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0)
            f += CycLaurent::monomial(Cyclotomic(mpq_class(coeffs[i])), static_cast<long>(i));
    }
    return f;
}

} // namespace

void CycLaurent::set(long exp, const Cyclotomic& c)
{
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

CycLaurent CycLaurent::monomial(const Cyclotomic& c, long exp)
{
    CycLaurent f;
    f.set(exp, c);
    return f;
}

CycLaurent CycLaurent::power_minus_one(long pow)
{
    if (pow == 0)
        throw std::domain_error("power_minus_one: exponent must be nonzero");
    return t(pow) - CycLaurent(1);
}

long CycLaurent::lo_exp() const
{
    if (terms_.empty())
        throw std::domain_error("lo_exp of zero polynomial");
    return terms_.begin()->first;
}

long CycLaurent::hi_exp() const
{
    if (terms_.empty())
        throw std::domain_error("hi_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Cyclotomic CycLaurent::coeff(long exp) const
{
    auto it = terms_.find(exp);
    return it == terms_.end() ? Cyclotomic() : it->second;
}

CycLaurent CycLaurent::operator+(const CycLaurent& o) const
{
    CycLaurent r = *this;
    for (const auto& [e, c] : o.terms_)
        r.set(e, r.coeff(e) + c);
    return r;
}

CycLaurent CycLaurent::operator-(const CycLaurent& o) const
{
    CycLaurent r = *this;
    for (const auto& [e, c] : o.terms_)
        r.set(e, r.coeff(e) - c);
    return r;
}

CycLaurent CycLaurent::operator-() const
{
    CycLaurent r;
    for (const auto& [e, c] : terms_)
        r.terms_[e] = -c;
    return r;
}

CycLaurent CycLaurent::operator*(const CycLaurent& o) const
{
    CycLaurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

CycLaurent CycLaurent::pow(long n) const
{
    if (n < 0)
        throw std::domain_error("CycLaurent::pow: negative exponent");
    CycLaurent acc(1);
    CycLaurent base = *this;
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base = (n >>= 1) > 0 ? base * base : base;
    }
    return acc;
}

bool CycLaurent::operator==(const CycLaurent& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (it->first != e || !(it->second == c))
            return false;
        ++it;
    }
    return true;
}

CycLaurent CycLaurent::involution() const
{
    CycLaurent r;
    for (const auto& [e, c] : terms_)
        r.terms_[-e] = c.conj();
    return r;
}

CycLaurent CycLaurent::substitute_scaled_power(const UnitAngle& omega, long k) const
{
    if (k == 0)
        throw std::domain_error("substitute_scaled_power: k must be nonzero");
    CycLaurent r;
    for (const auto& [e, c] : terms_) {
        Cyclotomic scaled = c * eval_angle(omega.pow(e));
        long ne = checked_mul(e, k);
        r.set(ne, r.coeff(ne) + scaled);
    }
    return r;
}

Cyclotomic CycLaurent::eval_at(const UnitAngle& omega) const
{
    Cyclotomic acc;
    for (const auto& [e, c] : terms_)
        acc += c * eval_angle(omega.pow(e));
    return acc;
}

std::optional<CycLaurent> CycLaurent::try_divide(const CycLaurent& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("try_divide: division by zero");
    if (is_zero())
        return CycLaurent();
    long shift = lo_exp() - divisor.lo_exp();
    CycLaurent rem = shifted_to_zero();
    CycLaurent den = divisor.shifted_to_zero();
    long ddeg = den.hi_exp();
    Cyclotomic lead_inv = den.coeff(ddeg).inverse();
    CycLaurent quot;
    while (!rem.is_zero() && rem.hi_exp() >= ddeg) {
        long e = rem.hi_exp() - ddeg;
        Cyclotomic q = rem.coeff(rem.hi_exp()) * lead_inv;
        quot.set(e, q);
        rem -= den * monomial(q, e);
        if (!rem.is_zero() && rem.hi_exp() >= ddeg + e)
            throw std::logic_error("try_divide: degree did not drop");
    }
    if (!rem.is_zero())
        return std::nullopt;
    CycLaurent out;
    for (const auto& [e, c] : quot.terms_)
        out.terms_[e + shift] = c;
    return out;
}

CycLaurent CycLaurent::shifted_to_zero() const
{
    if (is_zero())
        return *this;
    long lo = lo_exp();
    CycLaurent r;
    for (const auto& [e, c] : terms_)
        r.terms_[e - lo] = c;
    return r;
}

bool CycLaurent::has_rational_coeffs() const
{
    for (const auto& [e, c] : terms_)
        if (!c.is_rational())
            return false;
    return true;
}

std::string CycLaurent::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long e = it->first;
        const Cyclotomic& c = it->second;
        std::string cs;
        bool negated = false;
        if (auto r = c.as_rational()) {
            mpq_class v = *r;
            if (v < 0) {
                negated = true;
                v = -v;
            }
            cs = v.get_str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (negated)
                os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        if (e == 0) {
            os << cs;
        } else {
            if (cs != "1")
                os << cs << "*";
            os << "t";
            if (e != 1)
                os << "^" << e;
        }
    }
    return os.str();
}

CycLaurent involution_J(const CycLaurent& f) { return f.involution(); }

bool is_symmetric(const CycLaurent& f) { return f == f.involution(); }

bool is_symmetric_up_to_unit(const CycLaurent& f)
{
    if (f.is_zero())
        return true;
    return equal_up_to_unit(f, f.involution()).has_value();
}

Cyclotomic eval_at(const CycLaurent& f, const UnitAngle& omega) { return f.eval_at(omega); }

std::optional<UnitRatio> equal_up_to_unit(const CycLaurent& f, const CycLaurent& g)
{
    if (f.is_zero() || g.is_zero()) {
        if (f.is_zero() && g.is_zero())
            return UnitRatio{Cyclotomic(1), 0};
        return std::nullopt;
    }
    if (f.term_count() != g.term_count())
        return std::nullopt;
    long shift = f.lo_exp() - g.lo_exp();
    if (f.hi_exp() - g.hi_exp() != shift)
        return std::nullopt;
    Cyclotomic scalar = f.coeff(f.lo_exp()) * g.coeff(g.lo_exp()).inverse();
    CycLaurent scaled;
    for (const auto& [e, c] : g.terms())
        scaled += CycLaurent::monomial(c * scalar, e + shift);
    if (!(scaled == f))
        return std::nullopt;
    return UnitRatio{scalar, shift};
}

RootSplit root_split(const CycLaurent& f, const std::set<long>& candidate_orders)
{
    if (f.is_zero())
        throw std::domain_error("root_split: zero polynomial");
    RootSplit out;
    out.cofactor = f;
    if (out.cofactor.has_rational_coeffs()) {
        /* Rational coefficients: peel whole cyclotomic polynomials, which is far cheaper
           and keeps every intermediate rational. */
        std::set<long> dens;
        for (long o : candidate_orders)
            for (long d : divisors(o))
                dens.insert(d);
        for (long d : dens) {
            CycLaurent phi = phi_poly(d);
            long m = 0;
            while (true) {
                auto q = out.cofactor.try_divide(phi);
                if (!q)
                    break;
                out.cofactor = *q;
                ++m;
            }
            if (m > 0)
                for (long c = 0; c < d; ++c)
                    if (std::gcd(c, d) == 1 || d == 1)
                        out.mult[UnitAngle(c, d)] = m;
        }
        return out;
    }
    for (const UnitAngle& w : candidate_angles(candidate_orders)) {
        CycLaurent lin = CycLaurent::t() - CycLaurent(eval_angle(w));
        long m = 0;
        while (out.cofactor.eval_at(w).is_zero()) {
            auto q = out.cofactor.try_divide(lin);
            if (!q)
                throw std::logic_error("root_split: vanishing point did not divide");
            out.cofactor = *q;
            ++m;
        }
        if (m > 0)
            out.mult[w] = m;
    }
    return out;
}

std::map<UnitAngle, long> unit_root_roots(const CycLaurent& f, const std::set<long>& candidate_orders)
{
    return root_split(f, candidate_orders).mult;
}

CanonicalDisc::CanonicalDisc(std::set<UnitAngle> roots) : roots_(std::move(roots))
{
    if (roots_.size() % 2 != 0)
        throw std::logic_error("CanonicalDisc: root set has odd cardinality");
}

CanonicalDisc CanonicalDisc::operator^(const CanonicalDisc& o) const
{
    std::set<UnitAngle> out;
    std::set_symmetric_difference(roots_.begin(), roots_.end(), o.roots_.begin(), o.roots_.end(),
                                  std::inserter(out, out.begin()));
    return CanonicalDisc(std::move(out));
}

std::string CanonicalDisc::str() const
{
    if (roots_.empty())
        return "{}";
    std::string s = "{";
    bool first = true;
    for (const UnitAngle& w : roots_) {
        if (!first)
            s += ", ";
        s += w.str();
        first = false;
    }
    return s + "}";
}

CanonicalDisc norm_reduce(const CycLaurent& f, const std::set<long>& candidate_orders)
{
    if (f.is_zero())
        throw std::domain_error("norm_reduce: zero polynomial");
    if (!is_symmetric_up_to_unit(f))
        throw std::domain_error("norm_reduce: input is not symmetric up to a unit");
    RootSplit split = root_split(f, candidate_orders);
    if (!split.cofactor.is_monomial())
        throw std::domain_error("norm_reduce: candidate orders do not account for all roots");
    std::set<UnitAngle> odd;
    for (const auto& [w, m] : split.mult)
        if (m % 2 != 0)
            odd.insert(w);
    return CanonicalDisc(std::move(odd));
}

CanonicalDisc norm_reduce_quotient(const CycLaurent& num, const CycLaurent& den,
                                   const std::set<long>& candidate_orders)
{
    if (num.is_zero() || den.is_zero())
        throw std::domain_error("norm_reduce_quotient: zero numerator or denominator");
    /* Cross symmetry J(num)*den = unit * num*J(den) is the fraction analogue of symmetry. */
    if (!equal_up_to_unit(involution_J(num) * den, num * involution_J(den)))
        throw std::domain_error("norm_reduce_quotient: fraction is not symmetric up to a unit");
    RootSplit ns = root_split(num, candidate_orders);
    RootSplit ds = root_split(den, candidate_orders);
    if (!ns.cofactor.is_monomial() || !ds.cofactor.is_monomial())
        throw std::domain_error("norm_reduce_quotient: candidate orders do not account for all roots");
    std::map<UnitAngle, long> diff = ns.mult;
    for (const auto& [w, m] : ds.mult)
        diff[w] -= m;
    std::set<UnitAngle> odd;
    for (const auto& [w, m] : diff)
        if (m % 2 != 0)
            odd.insert(w);
    return CanonicalDisc(std::move(odd));
}

CycLaurent laurent_det(std::vector<std::vector<CycLaurent>> m)
{
    long n = static_cast<long>(m.size());
    if (n == 0)
        throw std::domain_error("laurent_det: empty matrix");
    for (const auto& row : m)
        if (static_cast<long>(row.size()) != n)
            throw std::domain_error("laurent_det: matrix is not square");
    /* Bareiss: every division is exact by the Sylvester identity. */
    int sign = 1;
    CycLaurent prev(1);
    for (long k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            long r = -1;
            for (long i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    r = i;
                    break;
                }
            if (r < 0)
                return CycLaurent();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                CycLaurent num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = num.try_divide(prev);
                if (!q)
                    throw std::logic_error("laurent_det: inexact division");
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    CycLaurent d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

CycLaurent symmetric_from_angles(const std::map<UnitAngle, long>& roots)
{
    long total = 0;
    UnitAngle half; // half the root angle sum, tracked exactly: the scalar depends on it mod 1
    CycLaurent f(1);
    for (const auto& [w, m] : roots) {
        if (m <= 0)
            throw std::domain_error("symmetric_from_angles: multiplicities must be positive");
        total += m;
        half = half.mul(UnitAngle(w.num(), checked_mul(2, w.den())).pow(m));
        f *= (CycLaurent::t() - CycLaurent(eval_angle(w))).pow(m);
    }
    if (total % 2 != 0)
        throw std::domain_error("symmetric_from_angles: total multiplicity must be even");
    /* a = exp(-i * (sum of root angles) / 2) makes a*t^{-n}*f fixed by the involution and
       equal to (-4)^n * prod sin((theta - theta_j)/2) on the circle. */
    Cyclotomic a = eval_angle(half.conj());
    return CycLaurent::monomial(a, -total / 2) * f;
}

} // namespace cgknot
