#include "roots.hpp"

#include "rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiconj {

namespace {

// Horner for p and p' at x
void eval_with_derivative(const std::vector<Cplx>& c, const Cplx& x, Cplx& p, Cplx& dp) {
    Prec pr = x.prec();
    p = Cplx(pr);
    dp = Cplx(pr);
    for (size_t k = c.size(); k-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[k];
    }
}

Real cauchy_bound(const std::vector<Cplx>& c) {
    // 1 + max |a_k / a_n|
    Real m(0.0, kRadiusPrec);
    Real lead = c.back().abs();
    for (size_t k = 0; k + 1 < c.size(); ++k) m = real_max(m, Real::div_up(c[k].abs_up(), lead));
    return Real::add_up(Real(1.0, kRadiusPrec), m);
}

// upper bound of |p(x)| from exact-binary coefficients via ball Horner
Real residual_upper(const std::vector<Cplx>& c, const Cplx& x) {
    Ball r;
    Ball bx = Ball::exact(x);
    for (size_t k = c.size(); k-- > 0;) r = r * bx + Ball::exact(c[k]);
    return r.abs_upper();
}

Real derivative_lower(const std::vector<Cplx>& c, const Cplx& x) {
    Ball p, dp;
    Ball bx = Ball::exact(x);
    for (size_t k = c.size(); k-- > 0;) {
        dp = dp * bx + p;
        p = p * bx + Ball::exact(c[k]);
    }
    return dp.abs_lower();
}

} // namespace

std::vector<std::pair<Cplx, Real>> aberth_roots(const std::vector<Cplx>& coeffs, Prec prec,
                                                uint64_t seed) {
    size_t n = coeffs.size();
    if (n < 2) return {};
    size_t deg = n - 1;
    Prec wp = prec + 96;

    std::vector<Cplx> c;
    c.reserve(n);
    for (const auto& a : coeffs) c.emplace_back(Real(a.re.to_exact_q(), wp), Real(a.im.to_exact_q(), wp));

    // deterministic initial points: perturbed roots of unity on the Cauchy circle
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Real radius(cauchy_bound(c).to_double() * 1.01, wp);
    Real two_pi = Real(2.0, wp) * real_pi(wp);
    std::vector<Cplx> x;
    x.reserve(deg);
    for (size_t j = 0; j < deg; ++j) {
        double jitter = 0.25 * (rng.uniform01() - 0.5);
        Real angle = two_pi * Real((static_cast<double>(j) + 0.35 + jitter) / static_cast<double>(deg), wp);
        x.push_back(cplx_from_polar(radius, angle));
    }

    Real stop = Real::mul_up(radius, Real::pow2(-static_cast<long>(prec) - 16));
    const int max_iter = 600;
    for (int it = 0; it < max_iter; ++it) {
        Real worst(0.0, kRadiusPrec);
        for (size_t j = 0; j < deg; ++j) {
            Cplx p(wp), dp(wp);
            eval_with_derivative(c, x[j], p, dp);
            if (p.is_zero()) continue;
            Cplx newton = p / dp;
            Cplx s(wp);
            for (size_t k = 0; k < deg; ++k) {
                if (k == j) continue;
                Cplx d = x[j] - x[k];
                if (d.is_zero()) {
                    // nudge coincident iterates apart deterministically
                    d = Cplx(Real(1e-20 * (static_cast<double>(k) + 1), wp), Real(1e-20, wp));
                }
                s = s + Cplx(Real(1.0, wp), Real(0.0, wp)) / d;
            }
            Cplx denom = Cplx(Real(1.0, wp), Real(0.0, wp)) - newton * s;
            Cplx corr = newton / denom;
            x[j] = x[j] - corr;
            worst = real_max(worst, corr.abs_up());
        }
        if (worst < stop) break;
    }

    std::vector<std::pair<Cplx, Real>> out;
    out.reserve(deg);
    Real degree_factor(static_cast<double>(deg), kRadiusPrec);
    for (size_t j = 0; j < deg; ++j) {
        Real num = residual_upper(c, x[j]);
        Real den = derivative_lower(c, x[j]);
        if (!(den.sign() > 0))
            throw PrecisionError("root certification failed: derivative bound touches zero");
        out.emplace_back(x[j], Real::mul_up(degree_factor, Real::div_up(num, den)));
    }
    return out;
}

std::vector<GaussQ> extract_gauss_roots(Poly& p, Prec prec, uint64_t seed) {
    std::vector<GaussQ> found;
    if (p.degree() <= 0) return found;
    // constant-coefficient heuristic shortcut: try 0 first
    while (p.degree() > 0 && p.coeff(0).is_zero()) {
        found.emplace_back();
        p = exact_div(p, Poly::variable());
    }
    if (p.degree() <= 0) return found;
    std::vector<Cplx> c;
    for (const auto& a : p.coeffs()) c.push_back(a.to_cplx(prec));
    auto approx = aberth_roots(c, prec, seed);
    unsigned den_bits = std::max(16u, prec / 3);
    for (const auto& [val, rad] : approx) {
        GaussQ cand;
        if (!gauss_reconstruct(val, den_bits, cand)) continue;
        if (p.eval(cand).is_zero()) {
            Poly lin({-cand, GaussQ(1)});
            p = exact_div(p, lin);
            found.push_back(std::move(cand));
        }
    }
    return found;
}

std::vector<ApproxRoot> roots_with_multiplicity(const Poly& p, Prec prec, uint64_t seed) {
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<ApproxRoot> out;
    if (p.degree() == 0) return out;

    auto factors = squarefree_decomposition(p);
    for (auto& [factor, mult] : factors) {
        Poly f = factor;
        for (GaussQ& r : extract_gauss_roots(f, prec, seed)) {
            ApproxRoot ar;
            ar.value = r.to_cplx(prec);
            ar.multiplicity = mult;
            ar.error_radius = Real(0.0, kRadiusPrec);
            ar.exact = std::move(r);
            out.push_back(std::move(ar));
        }
        if (f.degree() <= 0) continue;

        Real threshold = Real::pow2(-static_cast<long>(prec) / 2);
        Prec wp = prec;
        for (int attempt = 0;; ++attempt) {
            std::vector<Cplx> c;
            for (const auto& a : f.coeffs()) c.push_back(a.to_cplx(wp + 64));
            auto rs = aberth_roots(c, wp, seed);
            bool ok = true;
            Real worst(0.0, kRadiusPrec);
            for (const auto& [v, r] : rs) worst = real_max(worst, r);
            if (!(worst <= threshold)) ok = false;
            // pairwise disjoint against everything found so far for this factor set
            if (ok) {
                for (size_t a = 0; a < rs.size() && ok; ++a)
                    for (size_t b = a + 1; b < rs.size(); ++b) {
                        Real gap = (rs[a].first - rs[b].first).abs();
                        if (!(Real::add_up(rs[a].second, rs[b].second) < gap)) { ok = false; break; }
                    }
            }
            if (ok) {
                for (auto& [v, r] : rs) {
                    ApproxRoot ar;
                    ar.value = v;
                    ar.multiplicity = mult;
                    ar.error_radius = r;
                    out.push_back(std::move(ar));
                }
                break;
            }
            if (attempt >= 4)
                throw PrecisionError("requested root precision unattainable",
                                     worst.to_double());
            wp += wp; // retry at doubled working precision
        }
    }

    // cross-factor disjointness is automatic (factors are coprime) but verify disks anyway
    for (size_t a = 0; a < out.size(); ++a)
        for (size_t b = a + 1; b < out.size(); ++b) {
            Real gap = (out[a].value - out[b].value).abs();
            if (!(Real::add_up(out[a].error_radius, out[b].error_radius) < gap))
                throw PrecisionError("root disks overlap across factors");
        }

    sort_roots_canonical(out);
    return out;
}

void sort_roots_canonical(std::vector<ApproxRoot>& roots) {
    std::sort(roots.begin(), roots.end(), [](const ApproxRoot& a, const ApproxRoot& b) {
        if (a.value.re < b.value.re) return true;
        if (b.value.re < a.value.re) return false;
        return a.value.im < b.value.im;
    });
}

} // namespace semiconj
