#ifndef CGKNOT_WITT_HPP
#define CGKNOT_WITT_HPP

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cgknot/laurent.hpp"
#include "cgknot/two_local.hpp"

namespace cgknot {

/** Nonsingular J-Hermitian matrix over the Laurent ring; one generator of the Witt group. */
class HermitianAtom {
public:
    // Checks squareness, entry(j,i) = J(entry(i,j)), and det != 0.
    explicit HermitianAtom(std::vector<std::vector<CycLaurent>> entries,
                           std::set<long> root_order_hints = {});

    /**
     * Rank-one form of a polynomial. An exactly symmetric f is used as the entry directly.
     * Otherwise f is replaced by the canonical symmetric representative of its root multiset,
     * the one equal to (-4)^n prod sin((theta-theta_j)/2) on the circle; this needs the hints
     * to account for every root.
     */
    static HermitianAtom one_dim_from_poly(const CycLaurent& f, std::set<long> root_order_hints = {});
    // Diagonal form; every entry must be exactly symmetric.
    static HermitianAtom diagonal(const std::vector<CycLaurent>& diag,
                                  std::set<long> root_order_hints = {});

    long dim() const { return static_cast<long>(e_.size()); }
    const CycLaurent& entry(long i, long j) const { return e_[i][j]; }
    const CycLaurent& det() const { return det_; }
    // Orders whose roots of unity cover the det roots; used as default candidate orders.
    const std::set<long>& root_order_hints() const { return hints_; }

    std::vector<std::vector<Cyclotomic>> eval(const UnitAngle& w) const;

private:
    HermitianAtom() = default;

    std::vector<std::vector<CycLaurent>> e_;
    CycLaurent det_;
    std::set<long> hints_;
};

/** Atom known only through its discriminant class; supports parity queries only. */
struct DiscOnlyAtom {
    CanonicalDisc disc;
};

struct WittSummand {
    TwoLocal coeff;
    std::variant<HermitianAtom, DiscOnlyAtom> atom;
    std::string tag; // provenance label for reports
};

/** Formal sum of coefficient-weighted atoms in the 2-localized Witt group. */
class WittElement {
public:
    WittElement() = default;

    void add(const TwoLocal& coeff, HermitianAtom atom, std::string tag = "");
    void add(const TwoLocal& coeff, DiscOnlyAtom atom, std::string tag = "");

    const std::vector<WittSummand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }
    bool has_disc_only() const;
    // Union of the atoms' root order hints.
    std::set<long> order_hints() const;

    WittElement operator+(const WittElement& o) const;
    WittElement operator-() const;
    WittElement scaled(const TwoLocal& c) const;

private:
    std::vector<WittSummand> summands_;
};

/** Finitely supported map angle -> half signature jump; zero values are never stored. */
class JumpFunction {
public:
    JumpFunction() = default;

    const std::map<UnitAngle, TwoLocal>& support() const { return v_; }
    TwoLocal at(const UnitAngle& w) const;
    bool is_zero() const { return v_.empty(); }

    void add_at(const UnitAngle& w, const TwoLocal& val);
    JumpFunction operator+(const JumpFunction& o) const;
    JumpFunction scaled(const TwoLocal& c) const;
    bool operator==(const JumpFunction& o) const { return v_ == o.v_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const JumpFunction& j) { return os << j.str(); }

private:
    std::map<UnitAngle, TwoLocal> v_;
};

struct SignatureResult {
    long sig = 0;
    long rank = 0;
};

// Signature of a Hermitian matrix of cyclotomic numbers by symmetric elimination.
SignatureResult hermitian_signature(std::vector<std::vector<Cyclotomic>> a);

// Signature of the evaluated form; at det roots, the average of the two one-sided values.
long signature_at(const HermitianAtom& a, const UnitAngle& w);
mpq_class signature_at(const WittElement& w, const UnitAngle& omega);

CanonicalDisc disc_pm(const WittElement& w, const std::set<long>& candidate_orders = {});
// Membership of omega in disc_pm(w): 0 or 1.
int delta_omega(const WittElement& w, const UnitAngle& omega,
                const std::set<long>& candidate_orders = {});

JumpFunction atom_jump_function(const HermitianAtom& a, const std::set<long>& candidate_orders = {});
// Rejects DiscOnlyAtoms: their jumps are defined only mod 2.
JumpFunction jump_function(const WittElement& w, const std::set<long>& candidate_orders = {});

struct PsiResult {
    // Jump values at a/p for a = 1..(p-1)/2; absent when a DiscOnlyAtom is present.
    std::optional<std::vector<TwoLocal>> values;
    std::vector<int> parity;
};

PsiResult psi(const WittElement& w, long p);

} // namespace cgknot

#endif
