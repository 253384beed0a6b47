#include "gaussq.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace semiconj {

GaussQ GaussQ::rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussQ(q);
}

GaussQ GaussQ::inv() const {
    mpq_class n = norm();
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    return {re / n, -im / n};
}

Ball GaussQ::to_ball(Prec prec) const {
    Ball b(to_cplx(prec));
    return b; // bump_ulp in Ball(Cplx) covers the conversion rounding
}

namespace {

std::string q_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// one part with optional sign handling; pure-imaginary "b*i" or "i"
void append_im(std::string& s, const mpq_class& im, bool leading) {
    mpq_class a = abs(im);
    bool neg = im < 0;
    if (leading) {
        if (neg) s += "-";
    } else {
        s += neg ? "-" : "+";
    }
    if (a == 1) s += "i";
    else s += q_str(a) + "*i";
}

} // namespace

std::string GaussQ::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (im == 0) return q_str(re);
    if (re == 0) {
        append_im(s, im, true);
        return s;
    }
    s = q_str(re);
    append_im(s, im, false);
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussQ& v) { return os << v.str(); }

bool rational_reconstruct(const Real& x, unsigned max_den_bits, mpq_class& out) {
    if (!x.is_finite()) return false;
    mpq_class q = x.to_exact_q();
    // continued-fraction expansion of q, stop when denominator exceeds bound
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, max_den_bits);
    while (den != 0) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_class p2 = a * p1 + p0;
        mpz_class q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        num = den;
        den = r;
        if (den == 0) break;
    }
    if (q1 == 0) return false;
    out = mpq_class(p1, q1);
    out.canonicalize();
    // plausibility: candidate must agree with x well beyond the bound scale
    mpq_class diff = q - out;
    if (diff == 0) { return true; }
    mpq_class tol(1);
    mpz_class t;
    Prec pb = x.prec();
    unsigned guard = pb > max_den_bits * 2 + 16 ? pb - 8 : max_den_bits * 2 + 8;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, guard);
    tol /= t;
    return abs(diff) < tol;
}

bool gauss_reconstruct(const Cplx& z, unsigned max_den_bits, GaussQ& out) {
    mpq_class r, i;
    if (!rational_reconstruct(z.re, max_den_bits, r)) return false;
    if (!rational_reconstruct(z.im, max_den_bits, i)) return false;
    out = GaussQ(std::move(r), std::move(i));
    return true;
}

} // namespace semiconj
