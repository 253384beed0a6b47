#pragma once

// Rational functions over Q(i) in canonical form: numerator and denominator
// coprime, denominator monic (so polynomials have denominator 1). Degree is
// max(deg num, deg den), the degree of the induced self-map of the sphere.

#include "poly.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace semiconj {

struct ProjPoint {
    enum class Kind { Exact, Infinity, Approx };
    Kind kind = Kind::Exact;
    GaussQ exact;
    Ball approx;
    Prec prec_bits = 0;

    ProjPoint() = default;
    static ProjPoint from_exact(GaussQ v) {
        ProjPoint p;
        p.kind = Kind::Exact;
        p.exact = std::move(v);
        return p;
    }
    static ProjPoint infinity() {
        ProjPoint p;
        p.kind = Kind::Infinity;
        return p;
    }
    static ProjPoint from_ball(Ball b, Prec prec) {
        ProjPoint p;
        p.kind = Kind::Approx;
        p.approx = std::move(b);
        p.prec_bits = prec;
        return p;
    }

    bool is_exact() const { return kind == Kind::Exact; }
    bool is_infinity() const { return kind == Kind::Infinity; }
    bool is_approx() const { return kind == Kind::Approx; }

    Ball to_ball(Prec prec) const; // throws on infinity

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
};

class RatFun {
public:
    RatFun() : num_(), den_(Poly::constant(GaussQ(1))) {}
    RatFun(Poly num, Poly den); // canonicalizes; throws if den == 0
    static RatFun from_poly(Poly p) { return RatFun(std::move(p), Poly::constant(GaussQ(1))); }
    static RatFun variable() { return from_poly(Poly::variable()); }
    static RatFun constant(GaussQ v) { return from_poly(Poly::constant(std::move(v))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int degree() const { return std::max(std::max(num_.degree(), den_.degree()), 0); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero_fun() const { return num_.is_zero(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const { return RatFun(-num_, den_); }

    RatFun derivative() const;
    // n'·d - n·d' without cancellation: the critical-point polynomial.
    // Finite critical points of the map (poles included) are exactly its
    // roots, with multiplicity = local degree - 1.
    Poly critical_numerator() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFun& f);
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Poly num_, den_;
};

// outer(inner); requires inner nonconstant unless outer is constant
RatFun compose(const RatFun& outer, const RatFun& inner);
RatFun iterate(const RatFun& f, unsigned n);
// exact identity test by cross multiplication
bool rat_equals(const RatFun& f, const RatFun& g);

ProjPoint evaluate(const RatFun& f, const ProjPoint& p);
// value of f at infinity, exactly
ProjPoint value_at_infinity(const RatFun& f);

// vanishing order of f(w) - f(p) at w = p; p must be exact or infinity
int local_degree(const RatFun& f, const ProjPoint& p);

// m^{-1} ∘ f ∘ m for a degree-1 m; throws if deg m != 1
RatFun moebius_conjugate(const RatFun& f, const RatFun& m);
// inverse of a degree-1 rational function
RatFun moebius_inverse(const RatFun& m);
// the unique Moebius map sending (0,1,inf) to (p0,p1,pinf), pairwise distinct
RatFun moebius_to(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& pinf);

// numeric evaluation; exact-point inputs are converted at prec
Ball evaluate_ball(const RatFun& f, const Ball& x);

std::vector<Cplx> poly_coeffs_cplx(const Poly& p, Prec prec, int pad_to_degree = -1);

} // namespace semiconj
