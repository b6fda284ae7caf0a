#include "cgknot/fox.hpp"

#include <sstream>
#include <stdexcept>

#include "cgknot/intutil.hpp"

namespace cgknot {

void FreeWord::push(Gen g, long e)
{
    if (e == 0)
        return;
    if (!syl_.empty() && syl_.back().g == g) {
        syl_.back().e += e;
        if (syl_.back().e == 0)
            syl_.pop_back();
        return;
    }
    syl_.push_back({g, e});
}

FreeWord FreeWord::alpha(long e)
{
    FreeWord w;
    w.push(Gen::Alpha, e);
    return w;
}

FreeWord FreeWord::beta(long e)
{
    FreeWord w;
    w.push(Gen::Beta, e);
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const
{
    FreeWord r = *this;
    for (const auto& s : o.syl_)
        r.push(s.g, s.e);
    return r;
}

FreeWord FreeWord::inverse() const
{
    FreeWord r;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
        r.push(it->g, -it->e);
    return r;
}

FreeWord FreeWord::pow(long k) const
{
    FreeWord base = k < 0 ? inverse() : *this;
    long n = k < 0 ? -k : k;
    FreeWord r;
    for (long i = 0; i < n; ++i)
        r = r * base;
    return r;
}

std::string FreeWord::str() const
{
    if (syl_.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first)
            os << "*";
        first = false;
        os << (s.g == Gen::Alpha ? "a" : "b");
        if (s.e != 1)
            os << "^" << s.e;
    }
    return os.str();
}

void WordSum::add(const FreeWord& w, long c)
{
    if (c == 0)
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

WordSum WordSum::operator+(const WordSum& o) const
{
    WordSum r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add(w, c);
    return r;
}

WordSum WordSum::operator-(const WordSum& o) const
{
    WordSum r = *this;
    for (const auto& [w, c] : o.terms_)
        r.add(w, -c);
    return r;
}

WordSum WordSum::operator*(const WordSum& o) const
{
    WordSum r;
    for (const auto& [u, cu] : terms_)
        for (const auto& [v, cv] : o.terms_)
            r.add(u * v, checked_mul(cu, cv));
    return r;
}

WordSum WordSum::operator-() const
{
    WordSum r;
    for (const auto& [w, c] : terms_)
        r.add(w, -c);
    return r;
}

std::string WordSum::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        long v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0)
                v = -v;
        }
        first = false;
        if (v != 1 || w.is_identity())
            os << v;
        if (!w.is_identity()) {
            if (v != 1)
                os << "*";
            os << w.str();
        }
    }
    return os.str();
}

WordSum fox_derivative(const FreeWord& w, Gen g)
{
    WordSum r;
    FreeWord prefix;
    for (const auto& s : w.syllables()) {
        if (s.g == g) {
            if (s.e > 0) {
                // d(g^e)/dg = 1 + g + ... + g^{e-1}
                for (long j = 0; j < s.e; ++j)
                    r.add(prefix * (g == Gen::Alpha ? FreeWord::alpha(j) : FreeWord::beta(j)), 1);
            } else {
                // d(g^e)/dg = -(g^-1 + ... + g^e)
                for (long j = 1; j <= -s.e; ++j)
                    r.add(prefix * (g == Gen::Alpha ? FreeWord::alpha(-j) : FreeWord::beta(-j)), -1);
            }
        }
        prefix = prefix * (s.g == Gen::Alpha ? FreeWord::alpha(s.e) : FreeWord::beta(s.e));
    }
    return r;
}

Mat2 Mat2::identity()
{
    Mat2 m;
    m.a = CycLaurent(1);
    m.d = CycLaurent(1);
    return m;
}

Mat2 Mat2::operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }

Mat2 Mat2::operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

Mat2 Mat2::operator*(const Mat2& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool Mat2::operator==(const Mat2& o) const
{
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

namespace {

// Inverse of a matrix whose determinant is a unit monomial c*t^k.
Mat2 unit_inverse(const Mat2& m)
{
    CycLaurent det = m.det();
    if (!det.is_monomial())
        throw std::domain_error("Rep2: image determinant must be a unit monomial");
    long k = det.lo_exp();
    Cyclotomic c = det.coeff(k);
    CycLaurent dinv = CycLaurent::monomial(c.inverse(), -k);
    return {dinv * m.d, dinv * -m.b, dinv * -m.c, dinv * m.a};
}

} // namespace

Rep2::Rep2(const Mat2& image_alpha, const Mat2& image_beta)
    : ia_(image_alpha), ib_(image_beta), iainv_(unit_inverse(image_alpha)),
      ibinv_(unit_inverse(image_beta))
{
}

Mat2 Rep2::apply(const FreeWord& w) const
{
    Mat2 r = Mat2::identity();
    for (const auto& s : w.syllables()) {
        const Mat2& base = s.e > 0 ? image(s.g) : image_inv(s.g);
        long n = s.e > 0 ? s.e : -s.e;
        for (long i = 0; i < n; ++i)
            r = r * base;
    }
    return r;
}

Mat2 Rep2::apply(const WordSum& s) const
{
    Mat2 r;
    for (const auto& [w, c] : s.terms()) {
        Mat2 m = apply(w);
        CycLaurent cc(c);
        r = r + Mat2{cc * m.a, cc * m.b, cc * m.c, cc * m.d};
    }
    return r;
}

Rep2 dihedral_rep_T2p(long p, long d, bool allow_composite)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("dihedral_rep_T2p: p must be an odd prime");
    if (!is_prime(p) && !allow_composite)
        throw std::invalid_argument("dihedral_rep_T2p: composite p needs the experimental flag");
    d = mod_floor(d, p);
    long n = (p - 1) / 2;

    Mat2 ia;
    ia.b = CycLaurent::t(n);
    ia.c = CycLaurent::t(n + 1);

    Mat2 ib;
    ib.a = CycLaurent::monomial(Cyclotomic::zeta(p, d), -1);
    ib.d = CycLaurent::monomial(Cyclotomic::zeta(p, mod_floor(-d, p)), -1);

    Rep2 rep(ia, ib);
    Mat2 rel = rep.apply(FreeWord::alpha(2) * FreeWord::beta(p));
    if (!(rel == Mat2::identity()))
        throw std::logic_error("dihedral_rep_T2p: group relation fails");
    return rep;
}

} // namespace cgknot
