#pragma once

// Thin RAII layer over MPFR reals plus a complex type and midpoint-radius
// balls. Every value carries its own precision in bits; binary operations
// round to the larger operand precision. Radius arithmetic always rounds up,
// so ball enclosures stay valid.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace semiconj {

using Prec = unsigned;          // precision in bits
constexpr Prec kRadiusPrec = 64;

class Real {
public:
    Real() { mpfr_init2(x_, 53); mpfr_set_zero(x_, 1); }
    explicit Real(Prec prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Real(double v, Prec prec) { mpfr_init2(x_, prec); mpfr_set_d(x_, v, MPFR_RNDN); }
    Real(long v, Prec prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }
    Real(const mpq_class& q, Prec prec) {
        mpfr_init2(x_, prec);
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, 53); mpfr_swap(x_, o.x_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~Real() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    Prec prec() const { return static_cast<Prec>(mpfr_get_prec(x_)); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    // exact binary value as a rational (finite values only)
    mpq_class to_exact_q() const;

    static Real from_q_up(const mpq_class& q, Prec prec) {
        Real r(prec);
        mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Real pow2(long e, Prec prec = kRadiusPrec) {
        Real r(prec);
        mpfr_set_ui_2exp(r.x_, 1, e, MPFR_RNDU);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) { return bin(a, b, mpfr_add, MPFR_RNDN); }
    friend Real operator-(const Real& a, const Real& b) { return bin(a, b, mpfr_sub, MPFR_RNDN); }
    friend Real operator*(const Real& a, const Real& b) { return bin(a, b, mpfr_mul, MPFR_RNDN); }
    friend Real operator/(const Real& a, const Real& b) { return bin(a, b, mpfr_div, MPFR_RNDN); }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    // rounded-up variants for radius bookkeeping
    static Real add_up(const Real& a, const Real& b) { return bin(a, b, mpfr_add, MPFR_RNDU); }
    static Real sub_down(const Real& a, const Real& b) { return bin(a, b, mpfr_sub, MPFR_RNDD); }
    static Real mul_up(const Real& a, const Real& b) { return bin(a, b, mpfr_mul, MPFR_RNDU); }
    static Real div_up(const Real& a, const Real& b) { return bin(a, b, mpfr_div, MPFR_RNDU); }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }

    Real abs() const { Real r(prec()); mpfr_abs(r.x_, x_, MPFR_RNDU); return r; }
    Real sqrt_up() const { Real r(prec()); mpfr_sqrt(r.x_, x_, MPFR_RNDU); return r; }
    Real sqrt() const { Real r(prec()); mpfr_sqrt(r.x_, x_, MPFR_RNDN); return r; }

    friend std::ostream& operator<<(std::ostream& os, const Real& r);

private:
    using MpfrBin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(const Real& a, const Real& b, MpfrBin f, mpfr_rnd_t rnd) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.x_, a.x_, b.x_, rnd);
        return r;
    }
    mpfr_t x_;
};

Real real_cos(const Real& a);
Real real_sin(const Real& a);
Real real_exp(const Real& a);
Real real_log(const Real& a);
Real real_atan2(const Real& y, const Real& x);
Real real_pi(Prec prec);
Real real_max(const Real& a, const Real& b);
Real real_min(const Real& a, const Real& b);
// x^(1/n), x >= 0
Real real_root(const Real& a, unsigned long n);

struct Cplx {
    Real re, im;

    Cplx() = default;
    explicit Cplx(Prec prec) : re(prec), im(prec) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(double r, double i, Prec prec) : re(r, prec), im(i, prec) {}

    Prec prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Cplx operator-() const { return {-re, -im}; }
    Cplx conj() const { return {re, -im}; }

    Real abs2() const { return re * re + im * im; }
    Real abs() const { Real r(prec()); mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN); return r; }
    Real abs_up() const { Real r(prec()); mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDU); return r; }
    Real arg() const { return real_atan2(im, re); }

    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const Cplx& z);
};

Cplx cplx_from_polar(const Real& radius, const Real& angle);

// Midpoint-radius complex ball. Centers round to nearest; the radius absorbs
// both operand radii and the rounding slack of the center operations.
struct Ball {
    Cplx c;
    Real r;

    Ball() : c(), r(0.0, kRadiusPrec) {}
    explicit Ball(Cplx center) : c(std::move(center)), r(0.0, kRadiusPrec) { bump_ulp(); }
    Ball(Cplx center, Real radius) : c(std::move(center)), r(std::move(radius)) {}

    static Ball exact(Cplx center) { return Ball(std::move(center), Real(0.0, kRadiusPrec)); }

    Prec prec() const { return c.prec(); }
    // true if the ball certainly excludes 0
    bool nonzero() const { return Real::sub_down(c.abs(), r).sign() > 0; }
    Real abs_upper() const { return Real::add_up(c.abs_up(), r); }
    Real abs_lower() const {
        Real lo = Real::sub_down(c.abs(), r);
        return lo.sign() > 0 ? lo : Real(0.0, kRadiusPrec);
    }

    friend Ball operator+(const Ball& a, const Ball& b) {
        Ball out(a.c + b.c, Real::add_up(a.r, b.r));
        out.bump_ulp();
        return out;
    }
    friend Ball operator-(const Ball& a, const Ball& b) {
        Ball out(a.c - b.c, Real::add_up(a.r, b.r));
        out.bump_ulp();
        return out;
    }
    friend Ball operator*(const Ball& a, const Ball& b) {
        Real ra = Real::add_up(Real::mul_up(a.c.abs_up(), b.r), Real::mul_up(b.c.abs_up(), a.r));
        Ball out(a.c * b.c, Real::add_up(ra, Real::mul_up(a.r, b.r)));
        out.bump_ulp();
        return out;
    }
    friend Ball operator/(const Ball& a, const Ball& b);

    void bump_ulp() {
        // account for rounding of the center arithmetic: few-ulp cushion
        Real ulp = Real::mul_up(c.abs_up(), Real::pow2(3 - static_cast<long>(c.prec())));
        r = Real::add_up(r, ulp);
    }

    friend std::ostream& operator<<(std::ostream& os, const Ball& b);
};

// upper bound for |a - b|
Real dist_upper(const Ball& a, const Ball& b);
// lower bound for |a - b|; zero if the balls may touch
Real dist_lower(const Ball& a, const Ball& b);

std::string to_decimal_string(const Real& r, int digits = 20);

} // namespace semiconj
