#ifndef CGKNOT_TWO_LOCAL_HPP
#define CGKNOT_TWO_LOCAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace cgknot {

/** Rational with odd denominator (an element of the integers localized at 2); parity is well defined. */
class TwoLocal {
public:
    TwoLocal() : v_(0) {}
    TwoLocal(long n) : v_(n) {}

    explicit TwoLocal(const mpq_class& q) : v_(q)
    {
        v_.canonicalize();
        if (mpz_even_p(v_.get_den().get_mpz_t()))
            throw std::domain_error("TwoLocal: denominator must be odd");
    }

    TwoLocal(long num, long den) : TwoLocal(mpq_class(num, den)) {}

    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    // Parity of the class in Z/2: the numerator's parity (the odd denominator is a unit).
    bool is_odd() const { return mpz_odd_p(v_.get_num().get_mpz_t()); }

    TwoLocal operator+(const TwoLocal& o) const { return TwoLocal(mpq_class(v_ + o.v_)); }
    TwoLocal operator-(const TwoLocal& o) const { return TwoLocal(mpq_class(v_ - o.v_)); }
    TwoLocal operator*(const TwoLocal& o) const { return TwoLocal(mpq_class(v_ * o.v_)); }
    TwoLocal operator-() const { return TwoLocal(mpq_class(-v_)); }

    bool operator==(const TwoLocal& o) const { return v_ == o.v_; }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const TwoLocal& x) { return os << x.v_; }

private:
    mpq_class v_;
};

} // namespace cgknot

#endif
