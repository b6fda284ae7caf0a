#pragma once

// Randomized property suites shared by the doctest runner and the acceptance
// binary. Seeds are fixed so every run exercises the identical case list.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cgknot/fox.hpp"
#include "cgknot/knot.hpp"
#include "cgknot/laurent.hpp"
#include "cgknot/witt.hpp"

namespace cgknot::prop {

using CheckFn = std::function<void(bool)>;

inline const long kDenPool[] = {5, 6, 7, 8, 9, 10, 11, 12, 13, 15, 16, 26};

// Angle multiset with all denominators dividing m, avoiding 0 and 1/2 so the
// one-dimensional forms stay nonsingular at the endpoints of the upper arc.
inline std::map<UnitAngle, long> random_multiset(std::mt19937& rng, long m, int max_angles,
                                                 int max_mult)
{
    std::map<UnitAngle, long> ms;
    int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_angles));
    long total = 0;
    for (int i = 0; i < count; ++i) {
        long c = 1 + static_cast<long>(rng() % static_cast<unsigned>(m - 1));
        if (2 * c == m) continue;
        long mu = 1 + static_cast<long>(rng() % static_cast<unsigned>(max_mult));
        ms[UnitAngle(c, m)] += mu;
        total += mu;
    }
    // the sine-canonical product only exists for even total multiplicity
    if (total % 2 == 1) ms.begin()->second += 1;
    return ms;
}

// Suite 1: the parity of the signature jump at every angle equals membership in
// the discriminant class. Returns the number of random elements exercised.
inline long suite_jump_parity(const CheckFn& check)
{
    std::mt19937 rng(0x5eed0001u); // fixed seed
    const TwoLocal coeffs[] = {TwoLocal(1),    TwoLocal(-1),   TwoLocal(3),
                               TwoLocal(2),    TwoLocal(-2),   TwoLocal(1, 3),
                               TwoLocal(2, 5), TwoLocal(6, 7), TwoLocal(5, 9)};
    long instances = 0;
    for (int iter = 0; instances < 1000 && iter < 3000; ++iter) {
        long m = kDenPool[rng() % 12];
        std::set<long> orders = {m};
        WittElement w;
        std::map<UnitAngle, long> all;
        int atoms = 1 + static_cast<int>(rng() % 2);
        for (int a = 0; a < atoms; ++a) {
            auto ms = random_multiset(rng, m, 3, 3);
            if (ms.empty()) continue;
            TwoLocal c = coeffs[rng() % 9];
            w.add(c, HermitianAtom::one_dim_from_poly(symmetric_from_angles(ms), orders));
            for (const auto& [ang, mu] : ms) all[ang] += c.is_odd() ? mu : 0;
        }
        if (w.empty()) continue;
        ++instances;

        CanonicalDisc d = disc_pm(w, orders);
        JumpFunction j = jump_function(w);
        for (long c = 1; c < m; ++c) {
            UnitAngle ang(c, m);
            check(j.at(ang).is_odd() == d.contains(ang));
            check(d.contains(ang) == (all.count(ang) && all[ang] % 2 == 1));
        }
    }
    return instances;
}

// Suite 2: norm reduction is idempotent and invariant under multiplying by a
// norm g * J(g) and by nonzero scalars.
inline long suite_norm_reduce(const CheckFn& check)
{
    std::mt19937 rng(0x5eed0002u); // fixed seed
    long cases = 0;
    for (int iter = 0; cases < 1000 && iter < 3000; ++iter) {
        long m = kDenPool[rng() % 12];
        std::set<long> orders = {m};
        auto ms = random_multiset(rng, m, 4, 3);
        if (ms.empty()) continue;
        CycLaurent f = symmetric_from_angles(ms);
        CanonicalDisc d = norm_reduce(f, orders);

        std::map<UnitAngle, long> rep;
        for (const auto& ang : d.roots()) rep[ang] = 1;
        CanonicalDisc d2 =
            rep.empty() ? CanonicalDisc() : norm_reduce(symmetric_from_angles(rep), orders);
        check(d2 == d);

        CycLaurent g = CycLaurent::monomial(Cyclotomic::zeta(m, rng() % m),
                                            static_cast<long>(rng() % 3) - 1);
        int factors = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < factors; ++k) {
            long c = static_cast<long>(rng() % static_cast<unsigned>(m));
            g = g * (CycLaurent::t() - CycLaurent(Cyclotomic::zeta(m, c)));
        }
        CycLaurent h = f * g * involution_J(g) * CycLaurent(Cyclotomic(3));
        check(norm_reduce(h, orders) == d);
        ++cases;
    }
    return cases;
}

inline FreeWord random_word(std::mt19937& rng, int max_syllables)
{
    FreeWord w;
    int len = static_cast<int>(rng() % static_cast<unsigned>(max_syllables + 1));
    for (int i = 0; i < len; ++i) {
        long e = static_cast<long>(rng() % 7) - 3;
        if (e == 0) e = 1;
        w = w * (rng() % 2 ? FreeWord::alpha(e) : FreeWord::beta(e));
    }
    return w;
}

// Suite 3: the free-derivative product rule, symbolically and through random
// dihedral representations.
inline long suite_fox_product(const CheckFn& check)
{
    std::mt19937 rng(0x5eed0003u); // fixed seed
    const long ps[] = {3, 5, 7, 9, 11, 13};
    for (int iter = 0; iter < 1000; ++iter) {
        FreeWord u = random_word(rng, 5);
        FreeWord v = random_word(rng, 5);
        for (Gen g : {Gen::Alpha, Gen::Beta}) {
            WordSum lhs = fox_derivative(u * v, g);
            WordSum rhs = fox_derivative(u, g) + WordSum(u) * fox_derivative(v, g);
            check(lhs == rhs);

            long p = ps[rng() % 6];
            Rep2 rep = dihedral_rep_T2p(p, static_cast<long>(rng() % static_cast<unsigned>(p)),
                                        /*allow_composite=*/true);
            check(rep.apply(lhs) == rep.apply(rhs));
        }
    }
    return 1000;
}

// Suite 4: jump functions add over connected sums, with support confined to the
// root angles of the summands' Alexander polynomials.
inline long suite_lt_additivity(const CheckFn& check)
{
    std::mt19937 rng(0x5eed0004u); // fixed seed
    const long qs[] = {3, 5, 7, 9, 11, 13, 15};
    auto random_expr = [&](int max_terms) {
        KnotExpr e;
        int terms = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
        for (int t = 0; t < terms; ++t) {
            CableWord w = CableWord::torus(2, qs[rng() % 7]);
            if (rng() % 3 == 0) w = w.cabled(2, qs[rng() % 7]);
            long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0) e = e + KnotExpr::knot(w, c);
        }
        return e;
    };

    std::map<CableWord, std::set<UnitAngle>> root_cache;
    auto roots_of = [&](const CableWord& w) -> const std::set<UnitAngle>& {
        auto it = root_cache.find(w);
        if (it != root_cache.end()) return it->second;
        KnotExpr e = KnotExpr::knot(w);
        std::set<UnitAngle> roots;
        for (const auto& [ang, mu] : unit_root_roots(alexander(e), alexander_orders(e)))
            roots.insert(ang);
        return root_cache.emplace(w, std::move(roots)).first->second;
    };

    for (int iter = 0; iter < 1000; ++iter) {
        KnotExpr e1 = random_expr(2);
        KnotExpr e2 = random_expr(2);
        JumpFunction j1 = lt_jump(e1);
        JumpFunction j2 = lt_jump(e2);
        JumpFunction j12 = lt_jump(e1 + e2);
        check(j12 == j1 + j2);

        std::set<UnitAngle> allowed;
        for (const KnotExpr* e : {&e1, &e2})
            for (const auto& [w, n] : e->terms()) {
                (void)n;
                const auto& r = roots_of(w);
                allowed.insert(r.begin(), r.end());
            }
        for (const auto& [ang, val] : j12.support()) {
            (void)val;
            check(allowed.count(ang) == 1);
        }
    }
    return 1000;
}

using IntMat = std::vector<std::vector<long>>;

// V <- E^T V E for elementary E, preserving det(xV - V^T) exactly.
inline void congruence_addmul(IntMat& v, size_t i, size_t j, long s)
{
    size_t n = v.size();
    for (size_t k = 0; k < n; ++k) v[k][i] += s * v[k][j];
    for (size_t k = 0; k < n; ++k) v[i][k] += s * v[j][k];
}

inline void congruence_swap(IntMat& v, size_t i, size_t j)
{
    size_t n = v.size();
    for (size_t k = 0; k < n; ++k) std::swap(v[k][i], v[k][j]);
    for (size_t k = 0; k < n; ++k) std::swap(v[i][k], v[j][k]);
}

inline void congruence_negate(IntMat& v, size_t i)
{
    size_t n = v.size();
    for (size_t k = 0; k < n; ++k) v[k][i] = -v[k][i];
    for (size_t k = 0; k < n; ++k) v[i][k] = -v[i][k];
}

// Fraction-free elimination; every division is exact in the Laurent ring.
inline CycLaurent bareiss_det(std::vector<std::vector<CycLaurent>> a)
{
    size_t n = a.size();
    if (n == 0) return CycLaurent(1);
    int sign = 1;
    CycLaurent prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return CycLaurent();
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                CycLaurent num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num.is_zero() ? CycLaurent() : num.try_divide(prev).value();
            }
        prev = a[k][k];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Suite 5: every unimodular congruence of the standard Seifert matrix still
// presents the torus Alexander polynomial via det(xV - V^T), up to +-t^k.
inline long suite_seifert_det(const CheckFn& check)
{
    std::mt19937 rng(0x5eed0005u); // fixed seed
    std::vector<long> qlist;
    for (int rep = 0; rep < 140; ++rep)
        for (long q = 3; q <= 15; q += 2) qlist.push_back(q);
    for (int rep = 0; rep < 8; ++rep)
        for (long q = 17; q <= 31; q += 2) qlist.push_back(q);

    for (long q : qlist) {
        IntMat v = seifert_matrix_T2q(q);
        size_t n = v.size();
        int ops = 2 + static_cast<int>(rng() % 5);
        for (int o = 0; o < ops; ++o) {
            size_t i = rng() % n, j = rng() % n;
            switch (rng() % 3) {
            case 0:
                if (i != j) congruence_addmul(v, i, j, rng() % 2 ? 1 : -1);
                break;
            case 1:
                if (i != j) congruence_swap(v, i, j);
                break;
            default:
                congruence_negate(v, i);
            }
        }

        std::vector<std::vector<CycLaurent>> m(n, std::vector<CycLaurent>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m[i][j] = CycLaurent::monomial(Cyclotomic(v[i][j]), 1) -
                          CycLaurent(Cyclotomic(v[j][i]));
        CycLaurent det = bareiss_det(std::move(m));
        auto u = equal_up_to_unit(det, torus_alexander(2, q));
        check(u.has_value());
        if (u)
            check(u->scalar == Cyclotomic(1) || u->scalar == Cyclotomic(-1));
    }
    return static_cast<long>(qlist.size());
}

} // namespace cgknot::prop
