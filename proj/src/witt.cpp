#include "cgknot/witt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cgknot/intutil.hpp"

namespace cgknot {

namespace {

/* Sorted circular support of the det's unit-root zeros; throws unless fully certified. */
std::vector<UnitAngle> certified_support(const HermitianAtom& a, const std::set<long>& orders)
{
    std::set<long> all = a.root_order_hints();
    all.insert(orders.begin(), orders.end());
    if (all.empty())
        all.insert(1);
    RootSplit split = root_split(a.det(), all);
    if (!split.cofactor.is_monomial())
        throw std::domain_error("candidate orders do not account for all determinant roots");
    std::vector<UnitAngle> angles;
    for (const auto& [w, m] : split.mult)
        angles.push_back(w);
    return angles;
}

long full_rank_signature(const HermitianAtom& a, const UnitAngle& w)
{
    SignatureResult r = hermitian_signature(a.eval(w));
    if (r.rank != a.dim())
        throw std::logic_error("signature sample at a singular point");
    return r.sig;
}

} // namespace

HermitianAtom::HermitianAtom(std::vector<std::vector<CycLaurent>> entries,
                             std::set<long> root_order_hints)
    : e_(std::move(entries)), hints_(std::move(root_order_hints))
{
    long n = static_cast<long>(e_.size());
    if (n == 0)
        throw std::domain_error("HermitianAtom: empty matrix");
    for (const auto& row : e_)
        if (static_cast<long>(row.size()) != n)
            throw std::domain_error("HermitianAtom: matrix is not square");
    for (long i = 0; i < n; ++i)
        for (long j = i; j < n; ++j)
            if (!(e_[j][i] == involution_J(e_[i][j])))
                throw std::domain_error("HermitianAtom: matrix is not J-Hermitian");
    det_ = laurent_det(e_);
    if (det_.is_zero())
        throw std::domain_error("HermitianAtom: singular matrix");
}

HermitianAtom HermitianAtom::one_dim_from_poly(const CycLaurent& f, std::set<long> root_order_hints)
{
    if (f.is_zero())
        throw std::domain_error("one_dim_from_poly: zero polynomial");
    if (is_symmetric(f))
        return HermitianAtom({{f}}, std::move(root_order_hints));
    if (!is_symmetric_up_to_unit(f))
        throw std::domain_error("one_dim_from_poly: polynomial is not symmetric up to a unit");
    std::set<long> orders = root_order_hints;
    if (orders.empty())
        orders.insert(1);
    RootSplit split = root_split(f, orders);
    if (!split.cofactor.is_monomial())
        throw std::domain_error("one_dim_from_poly: hints do not account for all roots");
    return HermitianAtom({{symmetric_from_angles(split.mult)}}, std::move(root_order_hints));
}

HermitianAtom HermitianAtom::diagonal(const std::vector<CycLaurent>& diag,
                                      std::set<long> root_order_hints)
{
    long n = static_cast<long>(diag.size());
    std::vector<std::vector<CycLaurent>> m(n, std::vector<CycLaurent>(n));
    for (long i = 0; i < n; ++i)
        m[i][i] = diag[i];
    return HermitianAtom(std::move(m), std::move(root_order_hints));
}

std::vector<std::vector<Cyclotomic>> HermitianAtom::eval(const UnitAngle& w) const
{
    long n = dim();
    std::vector<std::vector<Cyclotomic>> m(n, std::vector<Cyclotomic>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m[i][j] = e_[i][j].eval_at(w);
    return m;
}

void WittElement::add(const TwoLocal& coeff, HermitianAtom atom, std::string tag)
{
    if (!coeff.is_zero())
        summands_.push_back({coeff, std::move(atom), std::move(tag)});
}

void WittElement::add(const TwoLocal& coeff, DiscOnlyAtom atom, std::string tag)
{
    if (!coeff.is_zero())
        summands_.push_back({coeff, std::move(atom), std::move(tag)});
}

bool WittElement::has_disc_only() const
{
    for (const auto& s : summands_)
        if (std::holds_alternative<DiscOnlyAtom>(s.atom))
            return true;
    return false;
}

std::set<long> WittElement::order_hints() const
{
    std::set<long> all;
    for (const auto& s : summands_)
        if (const auto* a = std::get_if<HermitianAtom>(&s.atom))
            all.insert(a->root_order_hints().begin(), a->root_order_hints().end());
    return all;
}

WittElement WittElement::operator+(const WittElement& o) const
{
    WittElement r = *this;
    r.summands_.insert(r.summands_.end(), o.summands_.begin(), o.summands_.end());
    return r;
}

WittElement WittElement::operator-() const { return scaled(TwoLocal(-1)); }

WittElement WittElement::scaled(const TwoLocal& c) const
{
    WittElement r;
    if (c.is_zero())
        return r;
    for (const auto& s : summands_) {
        WittSummand t = s;
        t.coeff = t.coeff * c;
        r.summands_.push_back(std::move(t));
    }
    return r;
}

TwoLocal JumpFunction::at(const UnitAngle& w) const
{
    auto it = v_.find(w);
    return it == v_.end() ? TwoLocal(0) : it->second;
}

void JumpFunction::add_at(const UnitAngle& w, const TwoLocal& val)
{
    TwoLocal s = at(w) + val;
    if (s.is_zero())
        v_.erase(w);
    else
        v_[w] = s;
}

JumpFunction JumpFunction::operator+(const JumpFunction& o) const
{
    JumpFunction r = *this;
    for (const auto& [w, val] : o.v_)
        r.add_at(w, val);
    return r;
}

JumpFunction JumpFunction::scaled(const TwoLocal& c) const
{
    JumpFunction r;
    if (c.is_zero())
        return r;
    for (const auto& [w, val] : v_)
        r.v_[w] = val * c;
    return r;
}

std::string JumpFunction::str() const
{
    if (v_.empty())
        return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [w, val] : v_) {
        if (!first)
            os << ", ";
        os << w.str() << " -> " << val.str();
        first = false;
    }
    os << "}";
    return os.str();
}

SignatureResult hermitian_signature(std::vector<std::vector<Cyclotomic>> a)
{
    long n = static_cast<long>(a.size());
    std::vector<long> act;
    for (long i = 0; i < n; ++i)
        act.push_back(i);
    SignatureResult res;
    auto drop = [&](long idx) { act.erase(std::find(act.begin(), act.end(), idx)); };
    while (!act.empty()) {
        long piv = -1;
        for (long k : act)
            if (!a[k][k].is_zero()) {
                piv = k;
                break;
            }
        if (piv >= 0) {
            res.sig += exact_sign(a[piv][piv]);
            res.rank += 1;
            Cyclotomic pinv = a[piv][piv].inverse();
            drop(piv);
            for (long i : act)
                for (long j : act)
                    a[i][j] -= a[i][piv] * pinv * a[piv][j];
            continue;
        }
        /* Zero diagonal: any nonzero entry spans a hyperbolic pair of signature 0. */
        long hi = -1, hj = -1;
        for (long i : act) {
            for (long j : act)
                if (i != j && !a[i][j].is_zero()) {
                    hi = i;
                    hj = j;
                    break;
                }
            if (hi >= 0)
                break;
        }
        if (hi < 0)
            break; // zero block: radical, contributes nothing
        Cyclotomic cinv = a[hi][hj].inverse();
        Cyclotomic ccinv = a[hj][hi].inverse();
        res.rank += 2;
        drop(hi);
        drop(hj);
        for (long l : act)
            for (long m : act)
                a[l][m] -= a[l][hj] * cinv * a[hi][m] + a[l][hi] * ccinv * a[hj][m];
    }
    return res;
}

long signature_at(const HermitianAtom& a, const UnitAngle& w)
{
    if (!a.det().eval_at(w).is_zero()) {
        SignatureResult r = hermitian_signature(a.eval(w));
        if (r.rank != a.dim())
            throw std::logic_error("signature_at: rank deficit at a nonsingular point");
        return r.sig;
    }
    std::vector<UnitAngle> angles = certified_support(a, {w.den()});
    auto it = std::find(angles.begin(), angles.end(), w);
    if (it == angles.end())
        throw std::logic_error("signature_at: singular point missing from certified support");
    std::size_t idx = static_cast<std::size_t>(it - angles.begin());
    std::size_t r = angles.size();
    const UnitAngle& prev = angles[(idx + r - 1) % r];
    const UnitAngle& next = angles[(idx + 1) % r];
    long before = full_rank_signature(a, prev.arc_midpoint(w));
    long after = full_rank_signature(a, w.arc_midpoint(next));
    if ((before + after) % 2 != 0)
        throw std::logic_error("signature_at: one-sided values of different parity");
    return (before + after) / 2;
}

mpq_class signature_at(const WittElement& w, const UnitAngle& omega)
{
    mpq_class acc = 0;
    for (const auto& s : w.summands()) {
        const auto* a = std::get_if<HermitianAtom>(&s.atom);
        if (!a)
            throw std::domain_error("signature_at: disc-only atom has no signature");
        acc += s.coeff.value() * mpq_class(signature_at(*a, omega));
    }
    return acc;
}

CanonicalDisc disc_pm(const WittElement& w, const std::set<long>& candidate_orders)
{
    CanonicalDisc acc;
    for (const auto& s : w.summands()) {
        if (!s.coeff.is_odd())
            continue; // even multiples are norms
        if (const auto* a = std::get_if<HermitianAtom>(&s.atom)) {
            std::set<long> all = a->root_order_hints();
            all.insert(candidate_orders.begin(), candidate_orders.end());
            if (all.empty())
                all.insert(1);
            acc ^= norm_reduce(a->det(), all);
        } else {
            acc ^= std::get<DiscOnlyAtom>(s.atom).disc;
        }
    }
    return acc;
}

int delta_omega(const WittElement& w, const UnitAngle& omega, const std::set<long>& candidate_orders)
{
    std::set<long> all = candidate_orders;
    all.insert(omega.den());
    return disc_pm(w, all).contains(omega) ? 1 : 0;
}

JumpFunction atom_jump_function(const HermitianAtom& a, const std::set<long>& candidate_orders)
{
    JumpFunction out;
    std::vector<UnitAngle> angles = certified_support(a, candidate_orders);
    std::size_t r = angles.size();
    if (r < 2)
        return out; // signature constant off at most one point: no jumps
    std::vector<long> mid_sig(r);
    for (std::size_t i = 0; i < r; ++i)
        mid_sig[i] = full_rank_signature(a, angles[i].arc_midpoint(angles[(i + 1) % r]));
    for (std::size_t i = 0; i < r; ++i) {
        long before = mid_sig[(i + r - 1) % r];
        long after = mid_sig[i];
        if ((after - before) % 2 != 0)
            throw std::logic_error("atom_jump_function: odd signature difference");
        out.add_at(angles[i], TwoLocal((after - before) / 2));
    }
    return out;
}

JumpFunction jump_function(const WittElement& w, const std::set<long>& candidate_orders)
{
    JumpFunction total;
    for (const auto& s : w.summands()) {
        const auto* a = std::get_if<HermitianAtom>(&s.atom);
        if (!a)
            throw std::domain_error("jump_function: disc-only atom has jumps only mod 2");
        total = total + atom_jump_function(*a, candidate_orders).scaled(s.coeff);
    }
    return total;
}

PsiResult psi(const WittElement& w, long p)
{
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::domain_error("psi: p must be an odd prime");
    PsiResult res;
    WittElement matrix_part;
    long disc_parity_all_zero = 1;
    std::vector<int> disc_parity(static_cast<std::size_t>((p - 1) / 2), 0);
    for (const auto& s : w.summands()) {
        if (const auto* a = std::get_if<HermitianAtom>(&s.atom)) {
            matrix_part.add(s.coeff, *a, s.tag);
        } else {
            disc_parity_all_zero = 0;
            if (s.coeff.is_odd()) {
                const CanonicalDisc& d = std::get<DiscOnlyAtom>(s.atom).disc;
                for (long v = 1; 2 * v <= p - 1; ++v)
                    disc_parity[v - 1] ^= d.contains(UnitAngle(v, p)) ? 1 : 0;
            }
        }
    }
    JumpFunction table = jump_function(matrix_part);
    std::vector<TwoLocal> values;
    res.parity.resize(static_cast<std::size_t>((p - 1) / 2));
    for (long v = 1; 2 * v <= p - 1; ++v) {
        TwoLocal j = table.at(UnitAngle(v, p));
        values.push_back(j);
        res.parity[v - 1] = (j.is_odd() ? 1 : 0) ^ disc_parity[v - 1];
    }
    if (disc_parity_all_zero)
        res.values = std::move(values);
    return res;
}

} // namespace cgknot
