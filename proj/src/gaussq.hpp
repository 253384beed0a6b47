#pragma once

// Gaussian rationals Q(i): the exact coefficient field of the library.
// Both parts are GMP rationals kept in canonical reduced form.

#include "mp.hpp"

#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace semiconj {

struct GaussQ {
    mpq_class re, im;

    GaussQ() : re(0), im(0) {}
    GaussQ(long r) : re(r), im(0) {}
    GaussQ(mpq_class r) : re(std::move(r)), im(0) {}
    GaussQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    static GaussQ rational(long num, long den);
    static GaussQ unit_i() { return GaussQ(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussQ conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }
    GaussQ inv() const;

    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inv(); }
    GaussQ operator-() const { return {-re, -im}; }
    GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
    GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
    GaussQ& operator*=(const GaussQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
    // total order for canonical sorting only (lexicographic on re, im)
    friend bool operator<(const GaussQ& a, const GaussQ& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    Cplx to_cplx(Prec prec) const { return {Real(re, prec), Real(im, prec)}; }
    Ball to_ball(Prec prec) const;

    // printed form re-parses under the expression grammar
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussQ& v);
};

// nearest Gaussian rational with bounded denominator, for recognizing exact
// roots from certified approximations; returns false if none is plausible
bool rational_reconstruct(const Real& x, unsigned max_den_bits, mpq_class& out);
bool gauss_reconstruct(const Cplx& z, unsigned max_den_bits, GaussQ& out);

} // namespace semiconj
