#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace cgknot {

// Generators of the two-generator knot group presentation <alpha, beta | alpha^2 beta^p>.
enum class Gen { Alpha, Beta };

struct Syllable {
    Gen g;
    long e; // nonzero
    auto operator<=>(const Syllable&) const = default;
};

// Freely reduced word: adjacent syllables carry distinct generators, no zero exponents.
class FreeWord {
public:
    FreeWord() = default; // identity
    static FreeWord alpha(long e = 1);
    static FreeWord beta(long e = 1);

    const std::vector<Syllable>& syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }

    FreeWord operator*(const FreeWord& o) const;
    FreeWord inverse() const;
    FreeWord pow(long k) const;

    auto operator<=>(const FreeWord&) const = default;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const FreeWord& w) { return os << w.str(); }

private:
    std::vector<Syllable> syl_;
    void push(Gen g, long e);
};

// Formal Z-linear combination of free words (an integral group-ring element).
class WordSum {
public:
    WordSum() = default;
    WordSum(const FreeWord& w) { add(w, 1); }
    WordSum(long n) { add(FreeWord(), n); }

    const std::map<FreeWord, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const FreeWord& w, long c);

    WordSum operator+(const WordSum& o) const;
    WordSum operator-(const WordSum& o) const;
    WordSum operator*(const WordSum& o) const;
    WordSum operator-() const;
    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const WordSum& s) { return os << s.str(); }

private:
    std::map<FreeWord, long> terms_;
};

// Free differential calculus: d(g)/dg = 1, d(g^-1)/dg = -g^-1, d(uv)/dg = du/dg + u dv/dg.
WordSum fox_derivative(const FreeWord& w, Gen g);

// 2x2 matrix over the cyclotomic Laurent ring, rows [[a, b], [c, d]].
struct Mat2 {
    CycLaurent a, b, c, d;

    static Mat2 identity();
    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    CycLaurent det() const { return a * d - b * c; }
    bool operator==(const Mat2& o) const;
};

// Two-generator representation by matrices whose determinants are unit monomials,
// so inverse images stay inside the Laurent ring.
class Rep2 {
public:
    Rep2(const Mat2& image_alpha, const Mat2& image_beta);

    const Mat2& image(Gen g) const { return g == Gen::Alpha ? ia_ : ib_; }
    Mat2 apply(const FreeWord& w) const;
    Mat2 apply(const WordSum& s) const;

private:
    Mat2 ia_, ib_, iainv_, ibinv_;
    const Mat2& image_inv(Gen g) const { return g == Gen::Alpha ? iainv_ : ibinv_; }
};

// rho(alpha) = t^n [[0,1],[t,0]] with n = (p-1)/2 and rho(beta) = t^-1 diag(z^d, z^-d),
// z = zeta_p; the group relation rho(alpha)^2 rho(beta)^p = 1 is checked.  p must be an
// odd prime unless allow_composite permits any odd p >= 3.
Rep2 dihedral_rep_T2p(long p, long d, bool allow_composite = false);

} // namespace cgknot
