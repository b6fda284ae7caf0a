#include "cgknot/knot.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cgknot/intutil.hpp"

namespace cgknot {

namespace {

/* Substitution exponents: stage i of an innermost-first list sits at t^{prod of outer p's}. */
std::vector<long> stage_exponents(const CableWord& w)
{
    const auto& st = w.stages();
    std::vector<long> k(st.size(), 1);
    for (long i = static_cast<long>(st.size()) - 2; i >= 0; --i)
        k[i] = checked_mul(k[i + 1], st[i + 1].p);
    return k;
}

/* (1-x)V + (1-x^{-1})V^T for T(2,q), with x = (zeta*t)^k substituted. */
std::vector<std::vector<CycLaurent>> lt_stage_matrix(long q, const UnitAngle& translate, long k)
{
    std::vector<std::vector<long>> V = seifert_matrix_T2q(q);
    UnitAngle zk = translate.pow(k);
    CycLaurent x = CycLaurent::monomial(eval_angle(zk), k);
    CycLaurent xinv = CycLaurent::monomial(eval_angle(zk.conj()), -k);
    CycLaurent a = CycLaurent(1) - x;
    CycLaurent b = CycLaurent(1) - xinv;
    long n = q - 1;
    std::vector<std::vector<CycLaurent>> m(n, std::vector<CycLaurent>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CycLaurent e;
            if (V[i][j] != 0)
                e += a * CycLaurent(V[i][j]);
            if (V[j][i] != 0)
                e += b * CycLaurent(V[j][i]);
            m[i][j] = e;
        }
    return m;
}

std::string stage_tag(const CableStage& s, const UnitAngle& translate, long k)
{
    std::ostringstream os;
    os << "alpha[T(" << s.p << "," << s.q << ")](x=";
    if (!translate.is_zero())
        os << "e(" << translate.str() << ")*";
    os << "t";
    if (k != 1)
        os << "^" << k;
    os << ")";
    return os.str();
}

WittElement alpha_parts(const CableWord& w, const UnitAngle& translate, bool with_minus_one)
{
    WittElement out;
    const auto& st = w.stages();
    std::vector<long> ks = stage_exponents(w);
    bool any = false;
    for (std::size_t i = 0; i < st.size(); ++i) {
        if (st[i].q == 1)
            continue; // trivial stage: no Blanchfield contribution
        if (st[i].p != 2)
            throw std::domain_error("alpha_atom: only 2-stranded cable stages carry exact forms");
        long k = ks[i];
        long order = checked_mul(k, checked_lcm(2 * st[i].q, translate.den()));
        auto m = lt_stage_matrix(st[i].q, translate, k);
        if (with_minus_one && st.size() == 1) {
            /* One-stage word: ship the single (q x q) matrix with the (-1) corner built in. */
            long n = static_cast<long>(m.size());
            for (auto& row : m)
                row.push_back(CycLaurent());
            m.push_back(std::vector<CycLaurent>(n + 1));
            m[n][n] = CycLaurent(-1);
            out.add(TwoLocal(1), HermitianAtom(std::move(m), {order}), stage_tag(st[i], translate, k));
            return out;
        }
        out.add(TwoLocal(1), HermitianAtom(std::move(m), {order}), stage_tag(st[i], translate, k));
        any = true;
    }
    if (any && with_minus_one)
        out.add(TwoLocal(1), HermitianAtom({{CycLaurent(-1)}}), "alpha[(-1) block]");
    return out;
}

} // namespace

CableWord::CableWord(std::vector<CableStage> stages) : stages_(std::move(stages))
{
    for (const auto& s : stages_) {
        if (s.p < 2)
            throw std::domain_error("CableWord: stage requires p >= 2");
        if (s.q < 1)
            throw std::domain_error("CableWord: stage requires q >= 1 (inverses live in coefficients)");
        if (std::gcd(s.p, s.q) != 1)
            throw std::domain_error("CableWord: stage indices must be coprime");
    }
}

bool CableWord::two_stranded() const
{
    for (const auto& s : stages_)
        if (s.p != 2)
            return false;
    return true;
}

CableWord CableWord::cabled(long p, long q) const
{
    std::vector<CableStage> st = stages_;
    st.push_back({p, q});
    return CableWord(std::move(st));
}

std::string CableWord::str() const
{
    if (stages_.empty())
        return "U";
    std::ostringstream os;
    os << "T(";
    for (std::size_t i = 0; i < stages_.size(); ++i) {
        if (i)
            os << ";";
        os << stages_[i].p << "," << stages_[i].q;
    }
    os << ")";
    return os.str();
}

KnotExpr KnotExpr::knot(const CableWord& w, long n)
{
    KnotExpr e;
    e.add_term(w, n);
    return e;
}

long KnotExpr::coeff(const CableWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void KnotExpr::add_term(const CableWord& w, long n)
{
    if (n == 0 || w.is_unknot()) // the unknot is the zero of the monoid
        return;
    long& c = terms_[w];
    c += n;
    if (c == 0)
        terms_.erase(w);
}

KnotExpr KnotExpr::operator+(const KnotExpr& o) const
{
    KnotExpr r = *this;
    for (const auto& [w, n] : o.terms_)
        r.add_term(w, n);
    return r;
}

KnotExpr KnotExpr::operator-(const KnotExpr& o) const { return *this + o.scaled(-1); }

KnotExpr KnotExpr::operator-() const { return scaled(-1); }

KnotExpr KnotExpr::scaled(long n) const
{
    KnotExpr r;
    for (const auto& [w, c] : terms_)
        r.add_term(w, checked_mul(c, n));
    return r;
}

std::string KnotExpr::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, n] : terms_) {
        long a = n < 0 ? -n : n;
        if (first) {
            if (n < 0)
                os << "-";
            first = false;
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        if (a != 1)
            os << a << "*";
        os << w.str();
    }
    return os.str();
}

void BlanchfieldSymbol::add_term(const BlanchfieldKey& key, long n)
{
    if (n == 0)
        return;
    long& c = terms_[key];
    c += n;
    if (c == 0)
        terms_.erase(key);
}

std::string BlanchfieldSymbol::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, n] : terms_) {
        long a = n < 0 ? -n : n;
        if (first) {
            if (n < 0)
                os << "-";
            first = false;
        } else {
            os << (n < 0 ? " - " : " + ");
        }
        if (a != 1)
            os << a << "*";
        os << "Bl[T(" << key.p << "," << key.q << ")](t";
        if (key.k != 1)
            os << "^" << key.k;
        os << ")";
    }
    return os.str();
}

CycLaurent torus_alexander(long p, long q)
{
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::domain_error("torus_alexander: requires coprime p, q >= 2");
    CycLaurent num = CycLaurent::power_minus_one(checked_mul(p, q)) * CycLaurent::power_minus_one(1);
    CycLaurent den = CycLaurent::power_minus_one(p) * CycLaurent::power_minus_one(q);
    auto quo = num.try_divide(den);
    if (!quo)
        throw std::logic_error("torus_alexander: division was not exact");
    return *quo;
}

CycLaurent alexander(const KnotExpr& e)
{
    CycLaurent prod(1);
    for (const auto& [w, n] : e.terms()) {
        long mult = n < 0 ? -n : n;
        std::vector<long> ks = stage_exponents(w);
        CycLaurent word(1);
        const auto& st = w.stages();
        for (std::size_t i = 0; i < st.size(); ++i) {
            if (st[i].q == 1)
                continue;
            CycLaurent base = torus_alexander(st[i].p, st[i].q);
            if (ks[i] != 1)
                base = base.substitute_scaled_power(UnitAngle(), ks[i]);
            word *= base;
        }
        prod *= word.pow(mult);
    }
    return prod;
}

std::set<long> alexander_orders(const KnotExpr& e)
{
    std::set<long> orders{1};
    for (const auto& [w, n] : e.terms()) {
        std::vector<long> ks = stage_exponents(w);
        const auto& st = w.stages();
        for (std::size_t i = 0; i < st.size(); ++i)
            if (st[i].q > 1)
                orders.insert(checked_mul(ks[i], checked_mul(2 * st[i].p, st[i].q)));
    }
    return orders;
}

bool fox_milnor_is_norm(const CycLaurent& f, const std::set<long>& candidate_orders)
{
    if (f.is_zero())
        throw std::domain_error("fox_milnor_is_norm: zero polynomial");
    RootSplit split = root_split(f, candidate_orders);
    if (!split.cofactor.is_monomial())
        throw std::domain_error("fox_milnor_is_norm: roots outside candidate scope");
    for (const auto& [w, m] : split.mult)
        if (m % 2 != 0)
            return false;
    return true;
}

bool is_algebraic_knot(const CableWord& w)
{
    const auto& st = w.stages();
    for (std::size_t i = 0; i + 1 < st.size(); ++i)
        if (st[i + 1].q <= checked_mul(st[i].p, checked_mul(st[i].q, st[i + 1].p)))
            return false;
    return true;
}

std::vector<std::vector<long>> seifert_matrix_T2q(long q)
{
    if (q < 3 || q % 2 == 0)
        throw std::domain_error("seifert_matrix_T2q: q must be odd and at least 3");
    long n = q - 1;
    std::vector<std::vector<long>> V(n, std::vector<long>(n, 0));
    for (long i = 0; i < n; ++i) {
        V[i][i] = -1;
        if (i + 1 < n)
            V[i][i + 1] = 1;
    }
    /* Oracle: det(xV - V^T) must be the torus Alexander polynomial up to +-t^j. */
    std::vector<std::vector<CycLaurent>> m(n, std::vector<CycLaurent>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CycLaurent e;
            if (V[i][j] != 0)
                e += CycLaurent::t(1) * CycLaurent(V[i][j]);
            if (V[j][i] != 0)
                e -= CycLaurent(V[j][i]);
            m[i][j] = e;
        }
    auto u = equal_up_to_unit(laurent_det(std::move(m)), torus_alexander(2, q));
    bool unit_ok = false;
    if (u)
        if (auto r = u->scalar.as_rational())
            unit_ok = (*r == 1 || *r == -1);
    if (!unit_ok)
        throw std::logic_error("seifert_matrix_T2q: determinant oracle failed");
    return V;
}

WittElement alpha_atom(const CableWord& w, const UnitAngle& translate)
{
    return alpha_parts(w, translate, true);
}

WittElement lt_form_element(const CableWord& w, const UnitAngle& translate)
{
    return alpha_parts(w, translate, false);
}

// Per-word cache: expressions reuse the same few words many times over.
static JumpFunction lt_word_jump(const CableWord& w)
{
    static std::map<CableWord, JumpFunction> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(w);
        if (it != cache.end())
            return it->second;
    }
    JumpFunction j = jump_function(lt_form_element(w, UnitAngle()));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(w, std::move(j)).first->second;
}

JumpFunction lt_jump(const KnotExpr& e)
{
    JumpFunction total;
    for (const auto& [w, n] : e.terms()) {
        if (!w.two_stranded())
            throw std::domain_error("lt_jump: exact jumps require 2-stranded cable stages");
        total = total + lt_word_jump(w).scaled(TwoLocal(n));
    }
    return total;
}

mpq_class lt_signature_at(const KnotExpr& e, const UnitAngle& omega)
{
    mpq_class acc = 0;
    for (const auto& [w, n] : e.terms()) {
        if (!w.two_stranded())
            throw std::domain_error("lt_signature_at: exact signatures require 2-stranded stages");
        acc += signature_at(lt_form_element(w, UnitAngle()).scaled(TwoLocal(n)), omega);
    }
    return acc;
}

BlanchfieldSymbol blanchfield_symbol(const KnotExpr& e)
{
    BlanchfieldSymbol sym;
    for (const auto& [w, n] : e.terms()) {
        std::vector<long> ks = stage_exponents(w);
        const auto& st = w.stages();
        for (std::size_t i = 0; i < st.size(); ++i)
            if (st[i].q > 1)
                sym.add_term({st[i].p, st[i].q, ks[i]}, n);
    }
    return sym;
}

std::string to_string(SliceStatus s)
{
    switch (s) {
    case SliceStatus::ZERO_CERTIFICATE:
        return "ZERO_CERTIFICATE";
    case SliceStatus::NONZERO:
        return "NONZERO";
    case SliceStatus::UNKNOWN:
        return "UNKNOWN";
    }
    return "UNKNOWN";
}

SliceStatus is_algebraically_slice(const KnotExpr& e)
{
    bool jumps_available = true;
    for (const auto& [w, n] : e.terms())
        if (!w.two_stranded())
            jumps_available = false;
    if (blanchfield_symbol(e).is_zero()) {
        if (jumps_available && !lt_jump(e).is_zero())
            throw std::logic_error("is_algebraically_slice: zero symbol with nonzero jumps");
        return SliceStatus::ZERO_CERTIFICATE;
    }
    if (jumps_available && !lt_jump(e).is_zero())
        return SliceStatus::NONZERO;
    return SliceStatus::UNKNOWN;
}

long genus_positive(const CableWord& w)
{
    long g = 0;
    for (const auto& s : w.stages())
        g = checked_mul(s.p, g) + (s.p - 1) * (s.q - 1) / 2;
    return g;
}

TauS tau_s(const KnotExpr& e)
{
    long total = 0;
    for (const auto& [w, n] : e.terms())
        total += checked_mul(n, genus_positive(w));
    return {total, total};
}

bool is_genus_one_pattern(const KnotExpr& e)
{
    if (e.terms().size() != 4)
        return false;
    std::vector<std::pair<CableWord, long>> cables, bases;
    for (const auto& [w, n] : e.terms()) {
        if (n != 1 && n != -1)
            return false;
        if (w.stages().size() == 1)
            bases.push_back({w, n});
        else if (w.stages().size() >= 2)
            cables.push_back({w, n});
        else
            return false;
    }
    if (cables.size() != 2 || bases.size() != 2)
        return false;
    const auto& [w1, s1] = cables[0];
    const auto& [w2, s2] = cables[1];
    if (s1 != -s2)
        return false;
    /* Same companion prefix, outer stages (2,q1) vs (2,q2). */
    std::vector<CableStage> pre1 = w1.stages(), pre2 = w2.stages();
    CableStage o1 = pre1.back(), o2 = pre2.back();
    pre1.pop_back();
    pre2.pop_back();
    if (pre1 != pre2 || o1.p != 2 || o2.p != 2 || o1.q == o2.q)
        return false;
    /* The single-stage terms must be T(2,q1) and T(2,q2) with opposite signs. */
    long n1 = 0, n2 = 0;
    for (const auto& [w, n] : bases) {
        if (w.stages()[0] == o1)
            n1 = n;
        else if (w.stages()[0] == o2)
            n2 = n;
        else
            return false;
    }
    return n1 == -s1 && n2 == s1;
}

} // namespace cgknot
