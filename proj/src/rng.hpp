#pragma once

// Deterministic splitmix64 generator. Reports must be byte-identical across
// platforms, so no std:: distributions here.

#include "gaussq.hpp"

#include <cstdint>

namespace semiconj {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // unbiased value in [0, n)
    uint64_t below(uint64_t n) {
        uint64_t limit = n * (UINT64_MAX / n);
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // small random rational with numerator in [-bound, bound], denominator in [1, bound]
    mpq_class rational(long bound) {
        long num = static_cast<long>(below(static_cast<uint64_t>(2 * bound + 1))) - bound;
        long den = 1 + static_cast<long>(below(static_cast<uint64_t>(bound)));
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    GaussQ gauss(long bound, bool allow_imaginary = true) {
        GaussQ g(rational(bound));
        if (allow_imaginary && below(2) == 1) g.im = rational(bound);
        return g;
    }

private:
    uint64_t state_;
};

} // namespace semiconj
