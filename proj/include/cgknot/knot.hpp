#ifndef CGKNOT_KNOT_HPP
#define CGKNOT_KNOT_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgknot/laurent.hpp"
#include "cgknot/witt.hpp"

namespace cgknot {

struct CableStage {
    long p;
    long q;
    auto operator<=>(const CableStage&) const = default;
};

/**
 * Iterated torus cable, stages applied innermost-first to the unknot; empty = unknot.
 * Indices are always positive: the concordance inverse lives in expression coefficients.
 */
class CableWord {
public:
    CableWord() = default;
    explicit CableWord(std::vector<CableStage> stages);
    static CableWord torus(long p, long q) { return CableWord({{p, q}}); }

    const std::vector<CableStage>& stages() const { return stages_; }
    bool is_unknot() const { return stages_.empty(); }
    bool all_positive() const { return true; } // enforced at construction
    bool two_stranded() const;                 // every stage has p = 2
    CableWord cabled(long p, long q) const;    // append an outer stage

    auto operator<=>(const CableWord&) const = default;

    std::string str() const; // "T(2,3;2,13)", "U" for the unknot
    friend std::ostream& operator<<(std::ostream& os, const CableWord& w) { return os << w.str(); }

private:
    std::vector<CableStage> stages_;
};

/** Formal integer combination of cable words under connected sum. */
class KnotExpr {
public:
    KnotExpr() = default;
    static KnotExpr knot(const CableWord& w, long n = 1);

    const std::map<CableWord, long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long coeff(const CableWord& w) const;
    void add_term(const CableWord& w, long n);

    KnotExpr operator+(const KnotExpr& o) const;
    KnotExpr operator-(const KnotExpr& o) const;
    KnotExpr operator-() const;
    KnotExpr scaled(long n) const;
    bool operator==(const KnotExpr& o) const { return terms_ == o.terms_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const KnotExpr& e) { return os << e.str(); }

private:
    std::map<CableWord, long> terms_;
};

struct BlanchfieldKey {
    long p;
    long q;
    long k; // substitution exponent: the generator contributes at t^k
    auto operator<=>(const BlanchfieldKey&) const = default;
};

/** Fully expanded Blanchfield symbol: integer combination of torus generators at powers of t. */
class BlanchfieldSymbol {
public:
    bool is_zero() const { return terms_.empty(); }
    const std::map<BlanchfieldKey, long>& terms() const { return terms_; }
    void add_term(const BlanchfieldKey& key, long n);
    bool operator==(const BlanchfieldSymbol& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<BlanchfieldKey, long> terms_;
};

// Exact expansion of (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)).
CycLaurent torus_alexander(long p, long q);

// Product over all terms with multiplicity |n_i|; inverse terms contribute identically.
CycLaurent alexander(const KnotExpr& e);
// Orders covering every root of alexander(e) and of the expression's jump support.
std::set<long> alexander_orders(const KnotExpr& e);

// True iff every unit-root root of f has even multiplicity.
bool fox_milnor_is_norm(const CycLaurent& f, const std::set<long>& candidate_orders);

bool is_algebraic_knot(const CableWord& w);

// (q-1)x(q-1) banded form, -1 diagonal / +1 superdiagonal; oracle-checked against the
// Alexander determinant identity at every call.
std::vector<std::vector<long>> seifert_matrix_T2q(long q);

/**
 * Witt element of alpha for the word under x -> (zeta * t)^{k_i}: one Levine-Tristram
 * form atom per stage plus a single constant (-1) block. A one-stage word yields the
 * combined (q x q) matrix as a single atom.
 */
WittElement alpha_atom(const CableWord& w, const UnitAngle& translate);
// Same without the (-1) block: the pure Levine-Tristram form of the word.
WittElement lt_form_element(const CableWord& w, const UnitAngle& translate);

// Jump function of the Levine-Tristram signature of the expression.
JumpFunction lt_jump(const KnotExpr& e);
mpq_class lt_signature_at(const KnotExpr& e, const UnitAngle& omega);

BlanchfieldSymbol blanchfield_symbol(const KnotExpr& e);

enum class SliceStatus { ZERO_CERTIFICATE, NONZERO, UNKNOWN };
std::string to_string(SliceStatus s);

SliceStatus is_algebraically_slice(const KnotExpr& e);

long genus_positive(const CableWord& w);

struct TauS {
    long tau;
    long s_half;
};
// tau and s/2 of the expression, both equal to the signed genus sum.
TauS tau_s(const KnotExpr& e);

// Matches W(2,q1) - W(2,q2) - T(2,q1) + T(2,q2) up to global sign: 4-ball genus <= 1.
bool is_genus_one_pattern(const KnotExpr& e);

} // namespace cgknot

#endif
