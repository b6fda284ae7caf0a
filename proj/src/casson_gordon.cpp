#include "cgknot/casson_gordon.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "cgknot/intutil.hpp"

namespace cgknot {

namespace {

long fold_mod(long x, long p)
{
    long r = mod_floor(x, p);
    return std::min(r, p - r);
}

void check_odd_prime(long p, bool allow_composite, const char* who)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
    if (!is_prime(p) && !allow_composite)
        throw std::invalid_argument(std::string(who) +
                                    ": composite p needs the experimental flag");
}

struct SplitQuotient {
    CycLaurent poly;
    long t1 = 0;
};

// num/den * (t-1)^delta0_exp with all (t-1) content moved into the exponent.
SplitQuotient split_quotient(CycLaurent num, CycLaurent den, long delta0_exp)
{
    if (num.is_zero() || den.is_zero())
        throw std::logic_error("twisted_alex_T2p: degenerate determinant");
    const CycLaurent tm1 = CycLaurent::t() - CycLaurent(1);
    long t1 = delta0_exp;
    for (;;) {
        auto q = num.try_divide(tm1);
        if (!q)
            break;
        num = *q;
        ++t1;
    }
    for (;;) {
        auto q = den.try_divide(tm1);
        if (!q)
            break;
        den = *q;
        --t1;
    }
    auto q = num.try_divide(den);
    if (!q)
        throw std::runtime_error("twisted_alex_T2p: quotient not exact");
    return {q->shifted_to_zero(), t1};
}

} // namespace

Character::Character(long p, long a_raw, bool allow_composite) : prime(p), a(0)
{
    check_odd_prime(p, allow_composite, "Character");
    a = fold_mod(a_raw, p);
}

TwistedAlex twisted_alex_T2p(long p, long d, bool allow_composite)
{
    check_odd_prime(p, allow_composite, "twisted_alex_T2p");
    d = mod_floor(d, p);
    Rep2 rep = dihedral_rep_T2p(p, d, allow_composite);
    FreeWord relator = FreeWord::alpha(2) * FreeWord::beta(p);
    long e = d == 0 ? 0 : 1;

    CycLaurent n1 = rep.apply(fox_derivative(relator, Gen::Alpha)).det();
    CycLaurent d1 = (rep.apply(FreeWord::beta()) - Mat2::identity()).det();
    SplitQuotient q1 = split_quotient(n1, d1, e - 1);

    CycLaurent n2 = rep.apply(fox_derivative(relator, Gen::Beta)).det();
    CycLaurent d2 = (rep.apply(FreeWord::alpha()) - Mat2::identity()).det();
    SplitQuotient q2 = split_quotient(n2, d2, e - 1);

    if (q1.t1 != q2.t1)
        throw std::logic_error("twisted_alex_T2p: quotients disagree in the (t-1) exponent");
    auto unit = equal_up_to_unit(q1.poly, q2.poly);
    if (!unit)
        throw std::logic_error("twisted_alex_T2p: the two Fox quotients disagree");
    if (!(unit->scalar * unit->scalar.conj() == Cyclotomic(1)))
        throw std::logic_error("twisted_alex_T2p: quotient unit is not a root of unity");

    return {q1.poly, q1.t1, e};
}

CanonicalDisc cg_disc(long p, long a_or_d, DiscMode mode, bool allow_composite)
{
    check_odd_prime(p, allow_composite, "cg_disc");
    if (mode == DiscMode::ClosedForm) {
        long k = fold_mod(a_or_d, p);
        std::set<UnitAngle> roots;
        for (long j = 1; j < p; ++j) {
            if (k != 0 && (j == k || j == p - k))
                continue;
            roots.insert(UnitAngle(j, p));
        }
        return CanonicalDisc(std::move(roots));
    }
    // disc = (1-t)^e * Delta with Delta = unit * poly * (t-1)^t1_exp.
    TwistedAlex ta = twisted_alex_T2p(p, a_or_d, allow_composite);
    RootSplit rs = root_split(ta.poly, {1, p});
    if (!rs.cofactor.is_monomial())
        throw std::logic_error("cg_disc: twisted polynomial has roots off the p-th root set");
    std::map<UnitAngle, long> mult = rs.mult;
    mult[UnitAngle(0, 1)] += ta.e + ta.t1_exp;
    std::set<UnitAngle> odd;
    for (const auto& [w, m] : mult)
        if (m % 2 != 0)
            odd.insert(w);
    return CanonicalDisc(std::move(odd));
}

std::vector<std::vector<int>> parity_matrix(long p, long d)
{
    check_odd_prime(p, false, "parity_matrix");
    d = mod_floor(d, p);
    if (d == 0)
        throw std::invalid_argument("parity_matrix: d must be nonzero mod p");
    long m = (p - 1) / 2;
    CanonicalDisc trivial = cg_disc(p, 0, DiscMode::ClosedForm);
    std::vector<std::vector<int>> mat(static_cast<size_t>(m),
                                      std::vector<int>(static_cast<size_t>(m), 0));
    for (long a = 1; a <= m; ++a) {
        CanonicalDisc da = cg_disc(p, a * d, DiscMode::ClosedForm);
        for (long b = 1; b <= m; ++b) {
            UnitAngle w(b, p);
            int bit = (da.contains(w) ? 1 : 0) ^ (trivial.contains(w) ? 1 : 0);
            mat[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] = bit;
        }
    }
    for (long a = 0; a < m; ++a) {
        long rs = 0;
        for (long b = 0; b < m; ++b)
            rs += mat[static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (rs != 1)
            throw std::logic_error("parity_matrix: row is not a unit vector");
    }
    for (long b = 0; b < m; ++b) {
        long cs = 0;
        for (long a = 0; a < m; ++a)
            cs += mat[static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (cs != 1)
            throw std::logic_error("parity_matrix: column is not a unit vector");
    }
    // Determinant over F_2 by elimination; a permutation matrix always yields 1.
    std::vector<std::vector<int>> g = mat;
    for (long col = 0; col < m; ++col) {
        long piv = -1;
        for (long r = col; r < m; ++r)
            if (g[static_cast<size_t>(r)][static_cast<size_t>(col)]) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw std::logic_error("parity_matrix: determinant is even");
        std::swap(g[static_cast<size_t>(col)], g[static_cast<size_t>(piv)]);
        for (long r = col + 1; r < m; ++r)
            if (g[static_cast<size_t>(r)][static_cast<size_t>(col)])
                for (long c2 = col; c2 < m; ++c2)
                    g[static_cast<size_t>(r)][static_cast<size_t>(c2)] ^=
                        g[static_cast<size_t>(col)][static_cast<size_t>(c2)];
    }
    return mat;
}

DeficiencyResult deficiency_certificate(const CableWord& w, long p)
{
    check_odd_prime(p, false, "deficiency_certificate");
    DeficiencyResult res;
    res.p = p;
    res.word = w;

    KnotExpr e = KnotExpr::knot(w);
    std::set<long> orders = alexander_orders(e);
    bool coprime = true;
    for (long o : orders)
        if (std::gcd(o, p) != 1)
            coprime = false;

    if (w.is_unknot()) {
        res.certified = true;
        res.fast_path = true;
        res.detail = "empty Alexander root set";
    } else if (coprime) {
        res.certified = true;
        res.fast_path = true;
        res.detail = "all root orders coprime to p, so no root angle lies over p";
    } else {
        CycLaurent delta = alexander(e);
        std::set<long> cand = orders;
        cand.insert(p);
        RootSplit rs = root_split(delta, cand);
        if (!rs.cofactor.is_monomial())
            throw std::logic_error("deficiency_certificate: roots outside the candidate set");
        for (const auto& [angle, mult] : rs.mult) {
            (void)mult;
            if (angle.den() == p)
                res.collisions.push_back(angle);
        }
        res.certified = res.collisions.empty();
        res.detail = res.certified ? "no Alexander root angle has denominator p"
                                   : "Alexander root angle coincides with a p-th root of unity";
    }

    if (w.two_stranded()) {
        JumpFunction jt = lt_jump(e);
        bool any = false;
        for (long a = 0; a < p; ++a)
            if (!jt.at(UnitAngle(a, p)).is_zero())
                any = true;
        if (any == res.certified)
            throw std::logic_error("deficiency_certificate: direct jump cross-check disagrees");
        res.cross_checked = true;
    }
    return res;
}

IndependenceResult independence_certificate(const CableWord& w, long p)
{
    check_odd_prime(p, false, "independence_certificate");
    IndependenceResult res;
    res.p = p;
    res.word = w;

    KnotExpr e = KnotExpr::knot(w);
    if (w.is_unknot()) {
        res.detail = "empty jump support: every translate vanishes identically";
        return res;
    }
    CycLaurent delta = alexander(e);
    std::set<long> orders = alexander_orders(e);
    RootSplit rs = root_split(delta, orders);
    if (!rs.cofactor.is_monomial())
        throw std::logic_error("independence_certificate: roots outside the candidate set");

    bool simple = true;
    for (const auto& [angle, mult] : rs.mult) {
        res.support.push_back(angle);
        if (mult != 1)
            simple = false;
    }
    res.support_size = static_cast<long>(res.support.size());

    // (i) the p translated copies of the support are pairwise disjoint
    std::set<UnitAngle> all;
    for (long a = 0; a < p; ++a)
        for (const auto& angle : res.support) {
            long den = checked_mul(angle.den(), p);
            long num = checked_mul(angle.num(), p) - checked_mul(a, angle.den());
            all.insert(UnitAngle(num, den));
        }
    res.disjoint = static_cast<long>(all.size()) == checked_mul(p, res.support_size);

    // (ii) every jump on the untranslated support is nonzero
    if (w.two_stranded()) {
        JumpFunction jt = lt_jump(e);
        bool all_nonzero = !res.support.empty();
        for (const auto& angle : res.support)
            if (jt.at(angle).is_zero())
                all_nonzero = false;
        res.jumps_nonzero = all_nonzero;
    } else {
        // all roots simple, and a simple root carries jump +-1
        res.jumps_nonzero = simple && res.support_size > 0;
    }

    res.certified = res.disjoint && res.jumps_nonzero && res.support_size > 0;
    if (res.certified)
        res.detail = w.two_stranded() ? "translates disjoint; support jumps computed directly"
                                      : "translates disjoint; simple roots carry jump +-1";
    else if (!res.disjoint)
        res.detail = "translated support sets collide";
    else
        res.detail = "vanishing or uncertified jump on the support";
    return res;
}

KnotExpr family_expression(const FamilySpec& fam)
{
    KnotExpr e;
    for (const auto& mem : fam) {
        if (mem.q_odd < 1 || mem.q_even < 1)
            throw std::invalid_argument("family: cable indices must be positive");
        KnotExpr block;
        block.add_term(mem.base.cabled(2, mem.q_odd), 1);
        block.add_term(CableWord::torus(2, mem.q_even), 1);
        block.add_term(mem.base.cabled(2, mem.q_even), -1);
        block.add_term(CableWord::torus(2, mem.q_odd), -1);
        e = e + block.scaled(mem.n);
    }
    return e;
}

WittElement tau_symbolic(const FamilySpec& fam, const std::vector<long>& a,
                         const std::vector<long>& b)
{
    if (fam.empty())
        throw std::invalid_argument("tau_symbolic: empty family");
    const FamilyMember& lead = fam.front();
    long q1 = lead.q_odd;
    check_odd_prime(q1, false, "tau_symbolic");
    long n1 = lead.n;
    if (n1 <= 0)
        throw std::invalid_argument("tau_symbolic: leading coefficient must be positive");
    if (static_cast<long>(a.size()) != n1 || static_cast<long>(b.size()) != n1)
        throw std::invalid_argument("tau_symbolic: character data must have length n1");
    long m = (q1 - 1) / 2;
    for (long v : a)
        if (v < 0 || v > m)
            throw std::invalid_argument("tau_symbolic: character datum out of range");
    for (long v : b)
        if (v < 0 || v > m)
            throw std::invalid_argument("tau_symbolic: character datum out of range");

    WittElement el = alpha_atom(lead.base, UnitAngle(0, 1)).scaled(TwoLocal(-2 * n1));
    for (long v : a) {
        el = el + alpha_atom(lead.base, UnitAngle(v, q1));
        el = el + alpha_atom(lead.base, UnitAngle(q1 - v, q1));
    }

    std::map<long, long> net;
    for (long v : a)
        ++net[v];
    for (long v : b)
        --net[v];
    for (const auto& [v, c] : net) {
        if (c == 0)
            continue;
        std::ostringstream tag;
        tag << "tau[T(2," << q1 << "),chi_" << v << "]";
        el.add(TwoLocal(c), DiscOnlyAtom{cg_disc(q1, v, DiscMode::ClosedForm)}, tag.str());
    }
    return el;
}

std::string to_string(ObstructionMode m)
{
    return m == ObstructionMode::Structural ? "structural" : "exhaustive";
}

namespace {

// Digits of idx in base m, most significant first: the a-tuple then the b-tuple.
void decode_case(long idx, long m, long n1, std::vector<long>& a, std::vector<long>& b)
{
    std::vector<long> digits(static_cast<size_t>(2 * n1));
    for (long i = 2 * n1 - 1; i >= 0; --i) {
        digits[static_cast<size_t>(i)] = idx % m;
        idx /= m;
    }
    a.assign(digits.begin(), digits.begin() + n1);
    b.assign(digits.begin() + n1, digits.end());
}

} // namespace

ObstructionCertificate slice_obstruction(const FamilySpec& fam, ObstructionMode mode,
                                         long budget, int jobs)
{
    if (fam.empty())
        throw std::invalid_argument("slice_obstruction: empty family");
    if (jobs < 1)
        jobs = 1;

    ObstructionCertificate cert;
    cert.mode_requested = mode;
    cert.mode_run = ObstructionMode::Structural;
    cert.verdict = "INCONCLUSIVE";

    // global shape hypotheses
    {
        bool ok = true;
        std::ostringstream det;
        for (size_t i = 0; i < fam.size(); ++i) {
            const auto& mem = fam[i];
            if (mem.q_odd < 3 || mem.q_odd % 2 == 0 || mem.q_even < 1 || mem.q_even % 2 == 0) {
                ok = false;
                det << "member " << i << ": indices must be odd with q_odd >= 3; ";
            }
        }
        cert.hypotheses.push_back({"shape", ok, ok ? "all cable indices odd" : det.str()});
    }
    {
        bool ok = true;
        std::ostringstream det;
        for (const auto& mem : fam)
            if (mem.q_odd < 3 || !is_prime(mem.q_odd)) {
                ok = false;
                det << "q_odd=" << mem.q_odd << " is not prime; ";
            }
        cert.hypotheses.push_back(
            {"primality", ok, ok ? "every odd-position index is prime" : det.str()});
    }
    if (!cert.hypotheses[0].pass || !cert.hypotheses[1].pass)
        return cert;

    // candidate member driving the obstruction
    bool any_nonzero = false;
    for (size_t j = 0; j < fam.size() && cert.chosen < 0; ++j) {
        if (fam[j].n == 0)
            continue;
        any_nonzero = true;
        long q1 = fam[j].q_odd;
        bool coprime = true;
        std::ostringstream cdet;
        for (size_t i = 0; i < fam.size(); ++i) {
            if (i != j && std::gcd(fam[i].q_odd, q1) != 1) {
                coprime = false;
                cdet << "gcd(q_odd[" << i << "], " << q1 << ") > 1; ";
            }
            if (std::gcd(fam[i].q_even, q1) != 1) {
                coprime = false;
                cdet << "gcd(q_even[" << i << "], " << q1 << ") > 1; ";
            }
        }
        DeficiencyResult def = deficiency_certificate(fam[j].base, q1);
        IndependenceResult ind = independence_certificate(fam[j].base, q1);
        if (coprime && def.certified && ind.certified) {
            cert.chosen = static_cast<long>(j);
            cert.deficiency = def;
            cert.independence = ind;
            cert.hypotheses.push_back(
                {"coprimality", true, "the chosen prime is coprime to every other index"});
            cert.hypotheses.push_back({"deficiency", true, def.detail});
            cert.hypotheses.push_back({"independence", true, ind.detail});
            break;
        }
        std::ostringstream name, det;
        name << "candidate[" << j << "]";
        if (!coprime)
            det << "coprimality: " << cdet.str();
        if (!def.certified)
            det << "deficiency refuted; ";
        if (!ind.certified)
            det << "independence refuted (" << ind.detail << "); ";
        std::string dets = det.str();
        if (dets.size() >= 2 && dets.compare(dets.size() - 2, 2, "; ") == 0)
            dets.resize(dets.size() - 2);
        cert.hypotheses.push_back({name.str(), false, dets});
    }
    if (!any_nonzero)
        cert.hypotheses.push_back({"nonzero-coefficient", false, "all coefficients vanish"});
    if (cert.chosen < 0)
        return cert;

    const FamilyMember& lead = fam[static_cast<size_t>(cert.chosen)];
    long q1 = lead.q_odd;
    long n1 = lead.n > 0 ? lead.n : -lead.n; // mirror the knot if needed
    long m = (q1 + 1) / 2;
    long mm = (q1 - 1) / 2;

    if (mode == ObstructionMode::Exhaustive) {
        long total = 1;
        bool over = false;
        for (long i = 0; i < 2 * n1; ++i) {
            if (total > budget / m) {
                over = true;
                break;
            }
            total *= m;
        }
        bool computable = lead.base.two_stranded() || lead.base.is_unknot();
        if (over || total > budget) {
            cert.budget_exceeded = true;
        } else if (computable) {
            cert.mode_run = ObstructionMode::Exhaustive;

            // permutation v -> fold(v d) for every parameter d, via parity_matrix
            std::vector<std::vector<long>> perm(static_cast<size_t>(mm + 1));
            for (long d = 1; d <= mm; ++d) {
                auto mat = parity_matrix(q1, d);
                std::vector<long> row_to_col(static_cast<size_t>(mm + 1), 0);
                for (long v = 1; v <= mm; ++v)
                    for (long b = 1; b <= mm; ++b)
                        if (mat[static_cast<size_t>(v - 1)][static_cast<size_t>(b - 1)]) {
                            row_to_col[static_cast<size_t>(v)] = b;
                            break;
                        }
                perm[static_cast<size_t>(d)] = row_to_col;
            }

            FamilySpec famx = {FamilyMember{lead.base, lead.q_odd, lead.q_even, n1}};
            JumpFunction base_jump = lt_jump(KnotExpr::knot(lead.base));
            UnitAngle omega0 = cert.independence->support.front();
            if (base_jump.at(omega0).is_zero())
                throw std::logic_error("slice_obstruction: vanishing base jump at the witness angle");

            long cases_total = total - 1;
            std::vector<CaseWitness> cw(static_cast<size_t>(cases_total));

            auto run_case = [&](long idx) {
                CaseWitness w;
                decode_case(idx + 1, m, n1, w.a, w.b);
                std::vector<long> cnt(static_cast<size_t>(mm + 1), 0);
                for (long v : w.a)
                    ++cnt[static_cast<size_t>(v)];
                for (long v : w.b)
                    --cnt[static_cast<size_t>(v)];
                bool differ = false;
                for (long v = 1; v <= mm; ++v)
                    if (cnt[static_cast<size_t>(v)] != 0)
                        differ = true;
                if (differ) {
                    // character multisets differ: parity content survives for every d
                    w.kind = "disc-parity";
                    long k = -1;
                    for (long v = 1; v <= mm; ++v) {
                        long c = cnt[static_cast<size_t>(v)];
                        if (c == 0)
                            continue;
                        long x = c < 0 ? -c : c;
                        long val = 0;
                        while (x % 2 == 0) {
                            x /= 2;
                            ++val;
                        }
                        if (k < 0 || val < k)
                            k = val;
                    }
                    w.val2 = k;
                    w.component.resize(static_cast<size_t>(mm));
                    for (long d = 1; d <= mm; ++d) {
                        long found = -1;
                        for (long v = 1; v <= mm && found < 0; ++v) {
                            long u = cnt[static_cast<size_t>(v)] / (1L << k);
                            if (u % 2 != 0)
                                found = perm[static_cast<size_t>(d)][static_cast<size_t>(v)];
                        }
                        if (found < 0)
                            throw std::logic_error("slice_obstruction: parity witness failed");
                        w.component[static_cast<size_t>(d - 1)] = found;
                    }
                    if (k == 0) {
                        // cross-check against the stored canonical disc classes at d = 1
                        std::vector<int> par(static_cast<size_t>(mm), 0);
                        for (long v = 0; v <= mm; ++v) {
                            if (cnt[static_cast<size_t>(v)] % 2 == 0)
                                continue;
                            CanonicalDisc disc = cg_disc(q1, v, DiscMode::ClosedForm);
                            for (long b = 1; b <= mm; ++b)
                                par[static_cast<size_t>(b - 1)] ^=
                                    disc.contains(UnitAngle(b, q1)) ? 1 : 0;
                        }
                        if (par[static_cast<size_t>(w.component[0] - 1)] != 1)
                            throw std::logic_error(
                                "slice_obstruction: disc membership cross-check failed");
                    }
                } else {
                    // matching multisets: the alpha part jumps at the untranslated support
                    w.kind = "alpha-jump";
                    long z = 0;
                    for (long v : w.a)
                        if (v == 0)
                            ++z;
                    WittElement el = tau_symbolic(famx, w.a, w.b);
                    if (el.has_disc_only())
                        throw std::logic_error("slice_obstruction: disc atoms failed to cancel");
                    JumpFunction jf = jump_function(el);
                    w.angle = omega0;
                    mpq_class got = jf.at(omega0).value();
                    mpq_class expected =
                        mpq_class(2 * (z - n1)) * base_jump.at(omega0).value();
                    if (got != expected || got == 0)
                        throw std::logic_error("slice_obstruction: jump witness failed");
                    w.jump = got;
                }
                return w;
            };

            if (jobs == 1 || cases_total < 2 * jobs) {
                for (long i = 0; i < cases_total; ++i)
                    cw[static_cast<size_t>(i)] = run_case(i);
            } else {
                std::vector<std::thread> workers;
                std::vector<std::exception_ptr> errs(static_cast<size_t>(jobs));
                long chunk = (cases_total + jobs - 1) / jobs;
                for (int t = 0; t < jobs; ++t) {
                    long lo = t * chunk;
                    long hi = std::min(cases_total, lo + chunk);
                    workers.emplace_back([&, lo, hi, t]() {
                        try {
                            for (long i = lo; i < hi; ++i)
                                cw[static_cast<size_t>(i)] = run_case(i);
                        } catch (...) {
                            errs[static_cast<size_t>(t)] = std::current_exception();
                        }
                    });
                }
                for (auto& th : workers)
                    th.join();
                for (const auto& err : errs)
                    if (err)
                        std::rethrow_exception(err);
            }
            cert.cases = std::move(cw);
            cert.enumerated = cases_total;
        }
    }

    cert.verdict = "NOT_SLICE";
    return cert;
}

} // namespace cgknot
