#include "cgknot/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cgknot/intutil.hpp"

namespace cgknot {

namespace {

// Exact division of integer polynomials (ascending coefficients), remainder must vanish.
std::vector<mpz_class> zpoly_divide(const std::vector<mpz_class>& num, const std::vector<mpz_class>& den)
{
    std::vector<mpz_class> rem = num;
    if (den.empty() || den.back() == 0)
        throw std::logic_error("zpoly_divide: bad divisor");
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd)
        throw std::logic_error("zpoly_divide: degree underflow");
    std::vector<mpz_class> quo(dn - dd + 1, mpz_class(0));
    for (long k = dn - dd; k >= 0; --k) {
        mpz_class c = rem[k + dd] / den[dd];
        if (c * den[dd] != rem[k + dd])
            throw std::logic_error("zpoly_divide: inexact leading division");
        quo[k] = c;
        for (long j = 0; j <= dd; ++j)
            rem[k + j] -= c * den[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw std::logic_error("zpoly_divide: nonzero remainder");
    return quo;
}

struct ConductorData {
    long m = 1;
    long phi = 1;
    std::vector<mpz_class> min_poly;            // Phi_m, ascending, monic, size phi+1
    std::vector<std::vector<mpz_class>> powers; // x^k mod Phi_m, k = 0 .. max(m-1, 2*phi-2)
};

std::map<long, std::vector<mpz_class>> g_phi_cache;
std::map<long, std::unique_ptr<ConductorData>> g_cond_cache;
std::mutex g_cache_mutex;

const std::vector<mpz_class>& cyclotomic_poly_locked(long m)
{
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end())
        return it->second;
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    std::vector<mpz_class> poly(m + 1, mpz_class(0));
    poly[0] = -1;
    poly[m] = 1;
    for (long d : divisors(m)) {
        if (d == m)
            continue;
        poly = zpoly_divide(poly, cyclotomic_poly_locked(d));
    }
    return g_phi_cache.emplace(m, std::move(poly)).first->second;
}

const ConductorData& conductor_data(long m)
{
    if (m < 1)
        throw std::domain_error("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cond_cache.find(m);
    if (it != g_cond_cache.end())
        return *it->second;

    auto data = std::make_unique<ConductorData>();
    data->m = m;
    data->min_poly = cyclotomic_poly_locked(m);
    data->phi = static_cast<long>(data->min_poly.size()) - 1;
    long phi = data->phi;
    long count = std::max(m, 2 * phi - 1);
    data->powers.resize(count);
    std::vector<mpz_class> cur(phi, mpz_class(0));
    cur[0] = 1;
    for (long k = 0; k < count; ++k) {
        data->powers[k] = cur;
        // Multiply by x and reduce the overflowing top coefficient by Phi_m.
        mpz_class top = cur[phi - 1];
        for (long i = phi - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < phi; ++i)
                cur[i] -= top * data->min_poly[i];
    }
    const ConductorData& ref = *data;
    g_cond_cache.emplace(m, std::move(data));
    return ref;
}

// Solve M x = rhs exactly over Q; empty result if M is singular.
std::optional<std::vector<mpq_class>> solve_linear(std::vector<std::vector<mpq_class>> M,
                                                   std::vector<mpq_class> rhs)
{
    const size_t n = M.size();
    const size_t cols = n == 0 ? 0 : M[0].size();
    std::vector<long> pivot_col_of_row;
    size_t row = 0;
    std::vector<long> col_to_row(cols, -1);
    for (size_t col = 0; col < cols && row < n; ++col) {
        size_t sel = row;
        while (sel < n && M[sel][col] == 0)
            ++sel;
        if (sel == n)
            continue;
        std::swap(M[sel], M[row]);
        std::swap(rhs[sel], rhs[row]);
        mpq_class inv = 1 / M[row][col];
        for (size_t j = col; j < cols; ++j)
            M[row][j] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || M[i][col] == 0)
                continue;
            mpq_class f = M[i][col];
            for (size_t j = col; j < cols; ++j)
                M[i][j] -= f * M[row][j];
            rhs[i] -= f * rhs[row];
        }
        col_to_row[col] = static_cast<long>(row);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (rhs[i] != 0)
            return std::nullopt; // inconsistent
    std::vector<mpq_class> x(cols, mpq_class(0));
    for (size_t col = 0; col < cols; ++col) {
        if (col_to_row[col] < 0) {
            if (cols == row)
                continue;
            // Underdetermined systems do not arise for the maps used here.
            continue;
        }
        x[col] = rhs[col_to_row[col]];
    }
    return x;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_poly(long m)
{
    return conductor_data(m).min_poly;
}

Cyclotomic Cyclotomic::zeta(long m, long k)
{
    const ConductorData& cd = conductor_data(m);
    k = mod_floor(k % m, m);
    std::vector<mpq_class> c(cd.phi);
    for (long i = 0; i < cd.phi; ++i)
        c[i] = mpq_class(cd.powers[k][i]);
    return Cyclotomic(m, std::move(c));
}

bool Cyclotomic::is_zero() const
{
    for (const auto& q : c_)
        if (q != 0)
            return false;
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

std::optional<mpq_class> Cyclotomic::as_rational() const
{
    if (!is_rational())
        return std::nullopt;
    return c_[0];
}

bool Cyclotomic::is_real() const
{
    return conj() == *this;
}

Cyclotomic Cyclotomic::embed_to(long big_m) const
{
    if (big_m == m_)
        return *this;
    if (big_m % m_ != 0)
        throw std::domain_error("embed_to: target conductor not a multiple");
    const ConductorData& cd = conductor_data(big_m);
    long stride = big_m / m_;
    std::vector<mpq_class> out(cd.phi, mpq_class(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0)
            continue;
        const auto& row = cd.powers[mod_floor(static_cast<long>(j) * stride % big_m, big_m)];
        for (long i = 0; i < cd.phi; ++i)
            if (row[i] != 0)
                out[i] += c_[j] * row[i];
    }
    return Cyclotomic(big_m, std::move(out));
}

std::optional<Cyclotomic> Cyclotomic::try_project(long small_m) const
{
    if (m_ % small_m != 0)
        throw std::domain_error("try_project: target conductor must divide");
    if (small_m == m_)
        return *this;
    const ConductorData& small = conductor_data(small_m);
    // Columns: embeddings of the small power basis; solve for coordinates.
    std::vector<std::vector<mpq_class>> M(c_.size(), std::vector<mpq_class>(small.phi, mpq_class(0)));
    for (long j = 0; j < small.phi; ++j) {
        Cyclotomic basis = Cyclotomic::zeta(small_m, j).embed_to(m_);
        for (size_t i = 0; i < c_.size(); ++i)
            M[i][j] = basis.c_[i];
    }
    auto sol = solve_linear(std::move(M), c_);
    if (!sol)
        return std::nullopt;
    return Cyclotomic(small_m, std::move(*sol));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const
{
    long M = checked_lcm(m_, o.m_);
    Cyclotomic a = embed_to(M), b = o.embed_to(M);
    for (size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const
{
    long M = checked_lcm(m_, o.m_);
    Cyclotomic a = embed_to(M), b = o.embed_to(M);
    for (size_t i = 0; i < a.c_.size(); ++i)
        a.c_[i] -= b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic a = *this;
    for (auto& q : a.c_)
        q = -q;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const
{
    long M = checked_lcm(m_, o.m_);
    Cyclotomic a = embed_to(M), b = o.embed_to(M);
    const ConductorData& cd = conductor_data(M);
    long phi = cd.phi;
    std::vector<mpq_class> conv(2 * phi - 1, mpq_class(0));
    for (long i = 0; i < phi; ++i) {
        if (a.c_[i] == 0)
            continue;
        for (long j = 0; j < phi; ++j) {
            if (b.c_[j] == 0)
                continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<mpq_class> out(phi, mpq_class(0));
    for (long i = 0; i < phi; ++i)
        out[i] = conv[i];
    for (long k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0)
            continue;
        const auto& row = cd.powers[k];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0)
                out[i] += conv[k] * row[i];
    }
    return Cyclotomic(M, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw std::domain_error("Cyclotomic: division by zero");
    if (auto q = as_rational())
        return Cyclotomic(mpq_class(1 / *q)).embed_to(m_);
    const ConductorData& cd = conductor_data(m_);
    long phi = cd.phi;
    // Columns of the multiplication-by-*this matrix: coords of (*this) * x^j.
    std::vector<std::vector<mpq_class>> M(phi, std::vector<mpq_class>(phi));
    std::vector<mpq_class> cur = c_;
    for (long j = 0; j < phi; ++j) {
        for (long i = 0; i < phi; ++i)
            M[i][j] = cur[i];
        if (j + 1 == phi)
            break;
        mpq_class top = cur[phi - 1];
        for (long i = phi - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < phi; ++i)
                cur[i] -= top * cd.min_poly[i];
    }
    std::vector<mpq_class> rhs(phi, mpq_class(0));
    rhs[0] = 1;
    auto sol = solve_linear(std::move(M), std::move(rhs));
    if (!sol)
        throw std::logic_error("Cyclotomic: multiplication matrix singular for nonzero element");
    return Cyclotomic(m_, std::move(*sol));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const
{
    if (o.is_zero())
        throw std::domain_error("Cyclotomic: division by zero");
    if (auto q = o.as_rational())
        return *this * Cyclotomic(mpq_class(1 / *q));
    long M = checked_lcm(m_, o.m_);
    return embed_to(M) * o.embed_to(M).inverse();
}

Cyclotomic Cyclotomic::galois(long k) const
{
    k = mod_floor(k % m_, m_);
    if (std::gcd(k, m_) != 1)
        throw std::domain_error("galois: exponent not coprime to conductor");
    if (m_ == 1 || k == 1)
        return *this;
    const ConductorData& cd = conductor_data(m_);
    std::vector<mpq_class> out(cd.phi, mpq_class(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0)
            continue;
        const auto& row = cd.powers[mod_floor(static_cast<long>((static_cast<__int128>(j) * k) % m_), m_)];
        for (long i = 0; i < cd.phi; ++i)
            if (row[i] != 0)
                out[i] += c_[j] * row[i];
    }
    return Cyclotomic(m_, std::move(out));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const
{
    if (m_ == o.m_)
        return c_ == o.c_;
    long M = checked_lcm(m_, o.m_);
    return embed_to(M).c_ == o.embed_to(M).c_;
}

std::string Cyclotomic::str() const
{
    if (auto q = as_rational()) {
        return q->get_str();
    }
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        mpq_class v = c_[i];
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
        bool unit_coeff = (v == 1) && i > 0;
        if (!unit_coeff)
            os << v.get_str();
        if (i > 0) {
            if (!unit_coeff)
                os << "*";
            os << "z" << m_;
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

Cyclotomic eval_angle(const UnitAngle& a)
{
    return Cyclotomic::zeta(a.den(), a.num());
}

} // namespace cgknot
