#pragma once

// Dense univariate polynomials over Q(i), constant term first. The zero
// polynomial has an empty coefficient vector and degree -1.

#include "gaussq.hpp"

#include <iosfwd>
#include <utility>
#include <vector>

namespace semiconj {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussQ> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(GaussQ v);
    static Poly variable(); // z
    // c * z^k
    static Poly monomial(GaussQ c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const GaussQ& lc() const;
    GaussQ coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : GaussQ();
    }
    const std::vector<GaussQ>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend Poly operator*(const GaussQ& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;
    Poly derivative() const;
    Poly pow(unsigned n) const;
    // z^deg * p(1/z)
    Poly reversed() const;
    Poly compose(const Poly& inner) const;

    GaussQ eval(const GaussQ& x) const;
    Ball eval(const Ball& x) const;
    Ball eval(const Cplx& x) const { return eval(Ball::exact(x)); }

    // multiplicity of x as a root (0 if not a root)
    int root_multiplicity(const GaussQ& x) const;

    std::string str(const std::string& var = "z") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<GaussQ> c_;
};

// quotient and remainder; divisor must be nonzero
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
// exact division; throws if remainder nonzero
Poly exact_div(const Poly& a, const Poly& b);
// monic gcd (zero if both zero)
Poly poly_gcd(const Poly& a, const Poly& b);

// Yun squarefree decomposition: list of (factor, multiplicity) with
// multiplicities ascending, factors monic squarefree pairwise coprime,
// product of factor^mult = p / lc.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// resultant of two polynomials via the generic-degree Sylvester determinant;
// nominal degrees may exceed the true ones (needed by the bivariate engine)
GaussQ resultant(const Poly& a, int deg_a, const Poly& b, int deg_b);

} // namespace semiconj
