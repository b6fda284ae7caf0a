#include "cgknot/cyclotomic.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace cgknot {

namespace {

struct Interval {
    mpfr_t lo, hi;

    explicit Interval(mpfr_prec_t prec)
    {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }

    ~Interval()
    {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
};

} // namespace

int exact_sign(const Cyclotomic& a)
{
    if (!a.is_real())
        throw std::domain_error("exact_sign: input is not real");
    if (a.is_zero())
        return 0;
    if (auto q = a.as_rational())
        return sgn(*q);

    const long m = a.conductor();
    const auto& coeffs = a.coeffs();

    // a = sum c_k cos(2 pi k / m): a is real, so the imaginary parts cancel exactly.
    for (mpfr_prec_t prec = 96; prec <= (1 << 22); prec *= 2) {
        Interval sum(prec), pi(prec), theta(prec), cosv(prec);
        mpfr_t width, t1, t2;
        mpfr_init2(width, prec);
        mpfr_init2(t1, prec);
        mpfr_init2(t2, prec);
        mpfr_const_pi(pi.lo, MPFR_RNDD);
        mpfr_const_pi(pi.hi, MPFR_RNDU);

        for (size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0)
                continue;
            mpq_class factor(2 * static_cast<long>(k), m);
            factor.canonicalize();
            // theta = 2 pi k / m, factor >= 0 so directed rounding carries through.
            mpfr_mul_q(theta.lo, pi.lo, factor.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(theta.hi, pi.hi, factor.get_mpq_t(), MPFR_RNDU);
            mpfr_sub(width, theta.hi, theta.lo, MPFR_RNDU);

            // cos over [theta.lo, theta.hi] is within `width` of either endpoint value.
            mpfr_cos(t1, theta.lo, MPFR_RNDD);
            mpfr_cos(t2, theta.hi, MPFR_RNDD);
            mpfr_min(cosv.lo, t1, t2, MPFR_RNDD);
            mpfr_sub(cosv.lo, cosv.lo, width, MPFR_RNDD);
            mpfr_cos(t1, theta.lo, MPFR_RNDU);
            mpfr_cos(t2, theta.hi, MPFR_RNDU);
            mpfr_max(cosv.hi, t1, t2, MPFR_RNDU);
            mpfr_add(cosv.hi, cosv.hi, width, MPFR_RNDU);

            const mpq_class& c = coeffs[k];
            if (c > 0) {
                mpfr_mul_q(t1, cosv.lo, c.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t2, cosv.hi, c.get_mpq_t(), MPFR_RNDU);
            } else {
                mpfr_mul_q(t1, cosv.hi, c.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t2, cosv.lo, c.get_mpq_t(), MPFR_RNDU);
            }
            mpfr_add(sum.lo, sum.lo, t1, MPFR_RNDD);
            mpfr_add(sum.hi, sum.hi, t2, MPFR_RNDU);
        }

        int result = 0;
        if (mpfr_sgn(sum.lo) > 0)
            result = 1;
        else if (mpfr_sgn(sum.hi) < 0)
            result = -1;
        mpfr_clear(width);
        mpfr_clear(t1);
        mpfr_clear(t2);
        if (result != 0)
            return result;
    }
    throw std::runtime_error("exact_sign: interval refinement failed to separate from zero");
}

} // namespace cgknot
