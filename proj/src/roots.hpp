#pragma once

// Certified polynomial root finding: exact squarefree preprocessing over
// Q(i), recognition of Gaussian-rational roots, then simultaneous Aberth
// iteration per squarefree factor. Each numeric root comes with an inclusion
// radius r = deg * |p(x)/p'(x)| (rounded up), which always contains a true
// root; disjointness of the disks then pins one root per disk.

#include "poly.hpp"

#include <optional>
#include <vector>

namespace semiconj {

struct PrecisionError : std::runtime_error {
    double achieved_radius;
    explicit PrecisionError(const std::string& msg, double achieved = 0.0)
        : std::runtime_error(msg), achieved_radius(achieved) {}
};

struct ApproxRoot {
    Cplx value;
    int multiplicity = 1;
    Real error_radius;          // 0 for exactly known roots
    std::optional<GaussQ> exact; // set when the root is a recognized Gaussian rational
};

// all roots of a nonzero polynomial with exact multiplicities; disks of
// distinct roots are pairwise disjoint and of radius <= 2^(-prec/2)
std::vector<ApproxRoot> roots_with_multiplicity(const Poly& p, Prec prec, uint64_t seed = 0);

// roots of a squarefree polynomial given by exact-binary complex
// coefficients (constant first, leading coefficient nonzero);
// radius certification treats the coefficients as exact
std::vector<std::pair<Cplx, Real>> aberth_roots(const std::vector<Cplx>& coeffs, Prec prec,
                                                uint64_t seed = 0);

// divide recognized Gaussian-rational roots out of a squarefree polynomial
std::vector<GaussQ> extract_gauss_roots(Poly& p, Prec prec, uint64_t seed = 0);

// canonical ordering for reported roots: by real part, then imaginary part
void sort_roots_canonical(std::vector<ApproxRoot>& roots);

} // namespace semiconj
