// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cgknot/casson_gordon.hpp"
#include "cgknot/intutil.hpp"
#include "cgknot/knot.hpp"

#include "property_suites.hpp"

using namespace cgknot;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const std::string& desc, bool pass, const std::string& detail)
{
    if (pass) {
        std::cout << "criterion " << id << " PASS: " << desc;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    } else {
        ++failures;
        std::cout << "criterion " << id << " FAIL: " << desc;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
    }
    std::cout.flush();
}

void run_criterion(int id, const std::string& desc,
                   const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, desc, pass, detail);
}

const std::vector<long> kPrimes5to37 = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

KnotExpr main_combination()
{
    CableWord base = CableWord::torus(2, 3);
    return KnotExpr::knot(base.cabled(2, 13)) + KnotExpr::knot(CableWord::torus(2, 15)) -
           KnotExpr::knot(base.cabled(2, 15)) - KnotExpr::knot(CableWord::torus(2, 13));
}

bool criterion1(std::string& detail)
{
    auto t0 = std::chrono::steady_clock::now();
    FamilySpec fam = {FamilyMember{CableWord::torus(2, 3), 13, 15, 1}};
    int jobs = static_cast<int>(std::min(4u, std::max(1u, std::thread::hardware_concurrency())));
    ObstructionCertificate c =
        slice_obstruction(fam, ObstructionMode::Exhaustive, 1000000, jobs);
    double dt = seconds_since(t0);

    bool ok = c.verdict == "NOT_SLICE" && c.mode_run == ObstructionMode::Exhaustive &&
              c.enumerated == 48 && static_cast<long>(c.cases.size()) == 48;
    for (const auto& w : c.cases) {
        if (w.kind == "disc-parity")
            ok = ok && !w.component.empty();
        else if (w.kind == "alpha-jump")
            ok = ok && w.jump != 0;
        else
            ok = false;
    }
    ok = ok && dt < 60.0;

    std::ostringstream os;
    os << "verdict=" << c.verdict << ", cases=" << c.cases.size() << ", " << std::fixed;
    os.precision(1);
    os << dt << "s";
    detail = os.str();
    return ok;
}

bool criterion2(std::string& detail)
{
    KnotExpr J = main_combination();
    SliceStatus st = is_algebraically_slice(J);
    bool fm = fox_milnor_is_norm(alexander(J), alexander_orders(J));
    detail = std::string("status=") + to_string(st) + ", fox_milnor=" + (fm ? "true" : "false");
    return st == SliceStatus::ZERO_CERTIFICATE && fm;
}

bool criterion3(std::string& detail)
{
    long pairs = 0;
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        for (long d = 1; d <= (p - 1) / 2; ++d) {
            if (cg_disc(p, d, DiscMode::Fox) != cg_disc(p, d, DiscMode::ClosedForm)) {
                detail = "mismatch at p=" + std::to_string(p) + ", d=" + std::to_string(d);
                return false;
            }
            ++pairs;
        }
    }
    detail = std::to_string(pairs) + " (p,d) pairs";
    return true;
}

bool criterion4(std::string& detail)
{
    long checked = 0;
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        long m = (p - 1) / 2;
        for (long d = 1; d <= p - 1; ++d) {
            auto mat = parity_matrix(p, d);
            if (static_cast<long>(mat.size()) != m) return false;
            // permutation structure: 0/1 entries, one 1 per row and per column;
            // a permutation matrix has determinant +-1, which is odd
            std::vector<long> colsum(static_cast<size_t>(m), 0);
            for (long i = 0; i < m; ++i) {
                long rowsum = 0;
                for (long j = 0; j < m; ++j) {
                    long v = mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (v != 0 && v != 1) return false;
                    rowsum += v;
                    colsum[static_cast<size_t>(j)] += v;
                }
                if (rowsum != 1) {
                    detail = "row sum != 1 at p=" + std::to_string(p) +
                             ", d=" + std::to_string(d);
                    return false;
                }
            }
            for (long j = 0; j < m; ++j)
                if (colsum[static_cast<size_t>(j)] != 1) {
                    detail = "col sum != 1 at p=" + std::to_string(p) +
                             ", d=" + std::to_string(d);
                    return false;
                }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " matrices";
    return true;
}

bool criterion5(std::string& detail)
{
    TwoLocal j26 = lt_jump(KnotExpr::knot(CableWord::torus(2, 13))).at(UnitAngle(1, 26));
    TwoLocal j12 =
        lt_jump(KnotExpr::knot(CableWord::torus(2, 3).cabled(2, 13))).at(UnitAngle(1, 12));
    detail = "jump(T(2,13))(1/26)=" + j26.str() + ", jump(T(2,3;2,13))(1/12)=" + j12.str();
    return j26 == TwoLocal(-1) && j12 == TwoLocal(-1);
}

bool criterion6(std::string& detail)
{
    for (long p : kPrimes5to37) {
        DeficiencyResult def = deficiency_certificate(CableWord::torus(2, 3), p);
        IndependenceResult ind = independence_certificate(CableWord::torus(2, 3), p);
        if (!def.certified || !ind.certified) {
            detail = "T(2,3) certificate failed at p=" + std::to_string(p);
            return false;
        }
    }
    long agreements = 0;
    for (long q = 3; q <= 15; q += 2) {
        for (long p : kPrimes5to37) {
            DeficiencyResult r = deficiency_certificate(CableWord::torus(2, q), p);
            // cross_checked records that the claim was re-verified by evaluating
            // the jump function at every a/p directly
            bool want_fast = q % p != 0;
            if (!r.certified || !r.cross_checked || r.fast_path != want_fast) {
                detail = "T(2," + std::to_string(q) + ") at p=" + std::to_string(p) +
                         ": certified=" + (r.certified ? "1" : "0") +
                         " cross=" + (r.cross_checked ? "1" : "0");
                return false;
            }
            ++agreements;
        }
    }
    detail = "10 primes for T(2,3); " + std::to_string(agreements) + " fast-path agreements";
    return true;
}

bool criterion7(std::string& detail)
{
    CableWord base = CableWord::torus(2, 3);
    long t1 = tau_s(KnotExpr::knot(base.cabled(2, 13))).tau;
    long t2 = tau_s(KnotExpr::knot(CableWord::torus(2, 15))).tau;
    long t3 = tau_s(-KnotExpr::knot(base.cabled(2, 15))).tau;
    long t4 = tau_s(-KnotExpr::knot(CableWord::torus(2, 13))).tau;
    TauS total = tau_s(main_combination());
    std::ostringstream os;
    os << "per-term (" << t1 << ", " << t2 << ", " << t3 << ", " << t4 << "), total "
       << total.tau;
    detail = os.str();
    return t1 == 8 && t2 == 7 && t3 == -9 && t4 == -6 && total.tau == 0 && total.s_half == 0;
}

bool criterion8(std::string& detail)
{
    struct Suite {
        const char* name;
        std::function<long(const prop::CheckFn&)> run;
    };
    const Suite suites[] = {
        {"jump-parity", [](const prop::CheckFn& c) { return prop::suite_jump_parity(c); }},
        {"norm-reduce", [](const prop::CheckFn& c) { return prop::suite_norm_reduce(c); }},
        {"fox-product", [](const prop::CheckFn& c) { return prop::suite_fox_product(c); }},
        {"lt-additivity", [](const prop::CheckFn& c) { return prop::suite_lt_additivity(c); }},
        {"seifert-det", [](const prop::CheckFn& c) { return prop::suite_seifert_det(c); }},
    };
    std::ostringstream os;
    bool ok = true;
    for (const auto& s : suites) {
        long bad = 0;
        long cases = s.run([&](bool b) {
            if (!b) ++bad;
        });
        os << s.name << "=" << cases;
        if (bad) os << "[" << bad << " failed]";
        os << " ";
        ok = ok && bad == 0 && cases >= 1000;
    }
    detail = os.str();
    if (!detail.empty()) detail.pop_back();
    return ok;
}

bool criterion9(std::string& detail)
{
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<long> qs = {13, 17, 19};
    std::vector<CableWord> torus, cable;
    for (long q : qs) {
        torus.push_back(CableWord::torus(2, q));
        cable.push_back(CableWord::torus(2, 3).cabled(2, q));
    }
    const std::vector<UnitAngle> anchors = {UnitAngle(1, 26), UnitAngle(1, 34),
                                            UnitAngle(1, 38), UnitAngle(1, 12)};

    long survivors = 0, nontrivial_refuted = 0;
    long total = 0;
    long coeff[6]; // n1 n2 n3 m1 m2 m3
    for (long idx = 0; idx < 15625; ++idx) {
        long rest = idx;
        for (int i = 0; i < 6; ++i) {
            coeff[i] = rest % 5 - 2;
            rest /= 5;
        }
        ++total;
        KnotExpr e;
        for (int i = 0; i < 3; ++i) {
            e = e + KnotExpr::knot(torus[static_cast<size_t>(i)], coeff[i]);
            e = e + KnotExpr::knot(cable[static_cast<size_t>(i)], coeff[i + 3]);
        }
        JumpFunction j = lt_jump(e);

        bool anchored_zero = true;
        for (const auto& w : anchors) anchored_zero = anchored_zero && j.at(w).is_zero();

        // the two jump evaluations force m_l = -n_l and sum n_i = 0
        bool forced = coeff[3] == -coeff[0] && coeff[4] == -coeff[1] &&
                      coeff[5] == -coeff[2] && coeff[0] + coeff[1] + coeff[2] == 0;
        if (anchored_zero != forced) {
            detail = "anchor filter disagrees with the forced relations at index " +
                     std::to_string(idx);
            return false;
        }
        if (!anchored_zero) continue;
        ++survivors;

        if (!j.is_zero()) {
            detail = "survivor with nonzero jump function at index " + std::to_string(idx);
            return false;
        }

        bool trivial = coeff[0] == 0 && coeff[1] == 0 && coeff[2] == 0;
        if (trivial) {
            // the zero combination is slice; the machinery must not claim otherwise
            FamilySpec zero;
            for (int i = 0; i < 3; ++i)
                zero.push_back(
                    FamilyMember{CableWord::torus(2, 3), qs[static_cast<size_t>(i)], 11, 0});
            ObstructionCertificate c = slice_obstruction(zero, ObstructionMode::Structural);
            if (c.verdict == "NOT_SLICE") {
                detail = "trivial combination flagged NOT_SLICE";
                return false;
            }
            continue;
        }
        FamilySpec fam;
        for (int i = 0; i < 3; ++i)
            if (coeff[i] != 0)
                fam.push_back(FamilyMember{CableWord::torus(2, 3), qs[static_cast<size_t>(i)],
                                           11, -coeff[i]});

        // sum n_i = 0 lets the combination be rewritten over index 11 blocks
        if (family_expression(fam) != e) {
            detail = "family rewrite mismatch at index " + std::to_string(idx);
            return false;
        }
        ObstructionCertificate c = slice_obstruction(fam, ObstructionMode::Structural);
        if (c.verdict != "NOT_SLICE") {
            detail = "obstruction inconclusive at index " + std::to_string(idx);
            return false;
        }
        ++nontrivial_refuted;
    }
    double dt = seconds_since(t0);

    std::ostringstream os;
    os << total << " combinations, " << survivors << " with all anchors zero, "
       << nontrivial_refuted << " nontrivial refuted, " << std::fixed;
    os.precision(1);
    os << dt << "s";
    detail = os.str();
    return survivors == 19 && nontrivial_refuted == 18 && dt < 300.0;
}

} // namespace

int main()
{
    run_criterion(1, "exhaustive obstruction on T(2,3;2,13) + T(2,15) - T(2,3;2,15) - T(2,13)",
                  criterion1);
    run_criterion(2, "the combination is algebraically slice with a norm Alexander polynomial",
                  criterion2);
    run_criterion(3, "Fox-calculus discriminants equal the closed form for p in {3,5,7,11,13}",
                  criterion3);
    run_criterion(4, "parity matrices are permutations (odd determinant) for odd primes p <= 37",
                  criterion4);
    run_criterion(5, "jump anchors: T(2,13) at 1/26 and T(2,3;2,13) at 1/12 both equal -1",
                  criterion5);
    run_criterion(6, "deficiency and independence certificates for T(2,3), primes 5..37",
                  criterion6);
    run_criterion(7, "tau of the main combination vanishes with per-term values 8, 7, -9, -6",
                  criterion7);
    run_criterion(8, "five randomized property suites, >= 1000 cases each, fixed seeds",
                  criterion8);
    run_criterion(9, "brute force over 5^6 coefficient vectors on the q in {13,17,19} basis",
                  criterion9);

    if (failures) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
