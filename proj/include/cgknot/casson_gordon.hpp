#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fox.hpp"
#include "knot.hpp"
#include "witt.hpp"

namespace cgknot {

// Character chi_a of order dividing p on the 2-fold branched cover of T(2,p);
// a is folded into {0,...,(p-1)/2} since chi_a and chi_{-a} carry the same data.
struct Character {
    long prime;
    long a;
    Character(long p, long a_raw, bool allow_composite = false);
    bool trivial() const { return a == 0; }
};

// Twisted Alexander polynomial of T(2,p), split as unit * poly * (t-1)^t1_exp with
// poly coprime to (t-1) and shifted to lowest exponent 0.  e is the exponent in the
// discriminant formula (1-t)^e * Delta: 0 for the d = 0 representation, else 1.
struct TwistedAlex {
    CycLaurent poly;
    long t1_exp = 0;
    long e = 0;
};

// Both Fox-calculus quotients are computed and asserted equal up to a unit monomial.
TwistedAlex twisted_alex_T2p(long p, long d, bool allow_composite = false);

enum class DiscMode { ClosedForm, Fox };

// Canonical root set of disc of the Casson-Gordon class of (T(2,p), chi).  In Fox
// mode the parameter is the representation parameter d; in closed-form mode it is
// the folded product exponent.  Nontrivial parameter k: all nontrivial p-th root
// angles except +-k/p.  Trivial parameter: all p-1 nontrivial p-th root angles.
CanonicalDisc cg_disc(long p, long a_or_d, DiscMode mode, bool allow_composite = false);

// Entry (a,b), a,b in 1..(p-1)/2: parity of the jump of the class of
// tau(T(2,p),chi_a) - tau(T(2,p),theta) at angle b/p under representation
// parameter d.  Asserted to be a permutation matrix with odd determinant over F_2.
std::vector<std::vector<int>> parity_matrix(long p, long d);

struct DeficiencyResult {
    bool certified = false; // no Alexander root angle of w coincides with any a/p
    long p = 0;
    CableWord word;
    bool fast_path = false;     // coprime-order argument sufficed, no enumeration
    bool cross_checked = false; // two-stranded direct jump evaluation performed
    std::vector<UnitAngle> collisions;
    std::string detail;
};

DeficiencyResult deficiency_certificate(const CableWord& w, long p);

struct IndependenceResult {
    bool certified = false;
    long p = 0;
    CableWord word;
    bool disjoint = false;      // the p translated support sets are pairwise disjoint
    bool jumps_nonzero = false; // every jump on the untranslated support is nonzero
    long support_size = 0;
    std::vector<UnitAngle> support;
    std::string detail;
};

IndependenceResult independence_certificate(const CableWord& w, long p);

// One block K_(2,q_odd) + T(2,q_even) - K_(2,q_even) - T(2,q_odd), multiplicity n.
struct FamilyMember {
    CableWord base;
    long q_odd = 0;
    long q_even = 0;
    long n = 1;
};

using FamilySpec = std::vector<FamilyMember>;

KnotExpr family_expression(const FamilySpec& fam);

// -2*n1*alpha(t) + sum_i [alpha(z^{a_i} t) + alpha(z^{-a_i} t)] plus the net
// tau(T(2,q1),chi) disc classes, z = zeta_{q1}, for the leading member (n1 > 0).
// The tau terms enter as DiscOnlyAtoms; matching multisets cancel atom-level.
WittElement tau_symbolic(const FamilySpec& fam, const std::vector<long>& a,
                         const std::vector<long>& b);

enum class ObstructionMode { Structural, Exhaustive };
std::string to_string(ObstructionMode m);

struct HypothesisReport {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CaseWitness {
    std::vector<long> a, b;
    std::string kind; // "disc-parity" or "alpha-jump"
    // disc-parity: the count vector halves to odd content after dividing by 2^val2;
    // component[d-1] is a column with odd reduced parity under every parameter d.
    long val2 = 0;
    std::vector<long> component;
    // alpha-jump: the computed jump at the recorded untranslated support angle.
    UnitAngle angle;
    mpq_class jump = 0;
};

struct ObstructionCertificate {
    std::string verdict; // "NOT_SLICE" or "INCONCLUSIVE"
    ObstructionMode mode_requested = ObstructionMode::Structural;
    ObstructionMode mode_run = ObstructionMode::Structural;
    bool budget_exceeded = false;
    long chosen = -1; // index of the family member driving the obstruction
    std::vector<HypothesisReport> hypotheses;
    std::optional<DeficiencyResult> deficiency;
    std::optional<IndependenceResult> independence;
    long enumerated = 0; // exhaustive character cases, excluding the all-zero one
    std::vector<CaseWitness> cases;
};

ObstructionCertificate slice_obstruction(const FamilySpec& fam, ObstructionMode mode,
                                         long budget = 1000000, int jobs = 1);

} // namespace cgknot
