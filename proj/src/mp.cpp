#include "mp.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace semiconj {

mpq_class Real::to_exact_q() const {
    if (!is_finite()) throw std::domain_error("Real::to_exact_q on non-finite value");
    if (is_zero()) return mpq_class(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
    mpq_class q(m);
    if (e >= 0) {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= p2;
    } else {
        mpz_class p2;
        mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= p2;
    }
    return q;
}

Real real_cos(const Real& a) { Real r(a.prec()); mpfr_cos(r.get(), a.get(), MPFR_RNDN); return r; }
Real real_sin(const Real& a) { Real r(a.prec()); mpfr_sin(r.get(), a.get(), MPFR_RNDN); return r; }
Real real_exp(const Real& a) { Real r(a.prec()); mpfr_exp(r.get(), a.get(), MPFR_RNDN); return r; }
Real real_log(const Real& a) { Real r(a.prec()); mpfr_log(r.get(), a.get(), MPFR_RNDN); return r; }

Real real_atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real real_pi(Prec prec) { Real r(prec); mpfr_const_pi(r.get(), MPFR_RNDN); return r; }

Real real_max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real real_min(const Real& a, const Real& b) { return a <= b ? a : b; }

Real real_root(const Real& a, unsigned long n) {
    Real r(a.prec());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.get(), a.get(), n, MPFR_RNDN);
#else
    mpfr_root(r.get(), a.get(), n, MPFR_RNDN);
#endif
    return r;
}

Cplx cplx_from_polar(const Real& radius, const Real& angle) {
    return {radius * real_cos(angle), radius * real_sin(angle)};
}

std::ostream& operator<<(std::ostream& os, const Real& r) {
    return os << to_decimal_string(r);
}

std::ostream& operator<<(std::ostream& os, const Cplx& z) {
    return os << "(" << z.re << ", " << z.im << ")";
}

std::ostream& operator<<(std::ostream& os, const Ball& b) {
    return os << b.c << " +/- " << b.r;
}

Ball operator/(const Ball& a, const Ball& b) {
    // |a/b - â/b̂| <= (r_a + |a/b|·r_b) / (|b̂| - r_b); require b to exclude zero
    Real blo = Real::sub_down(b.c.abs(), b.r);
    if (blo.sign() <= 0) {
        // denominator ball touches zero: return an effectively useless enclosure
        Ball out(a.c / b.c, Real(1.0, kRadiusPrec));
        mpfr_set_inf(out.r.get(), 1);
        return out;
    }
    Cplx q = a.c / b.c;
    Ball out(q, Real::div_up(Real::add_up(a.r, Real::mul_up(q.abs_up(), b.r)), blo));
    out.bump_ulp();
    return out;
}

Real dist_upper(const Ball& a, const Ball& b) {
    return Real::add_up((a.c - b.c).abs_up(), Real::add_up(a.r, b.r));
}

Real dist_lower(const Ball& a, const Ball& b) {
    Real d = Real::sub_down((a.c - b.c).abs(), Real::add_up(a.r, b.r));
    return d.sign() > 0 ? d : Real(0.0, kRadiusPrec);
}

std::string to_decimal_string(const Real& r, int digits) {
    if (r.is_nan()) return "nan";
    if (!r.is_finite()) return r.sign() > 0 ? "inf" : "-inf";
    if (r.is_zero()) return "0";
    std::vector<char> buf(static_cast<size_t>(digits) + 16);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, r.get());
    return std::string(buf.data());
}

} // namespace semiconj
