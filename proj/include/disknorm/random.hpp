#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "disknorm/function.hpp"

namespace disknorm {

/// Deterministic random source. mt19937_64 output is fixed by the standard
/// and the mapping to doubles below avoids the implementation-defined
/// std::uniform_real_distribution, so identical seeds give identical draws on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // integer in [0, n)
    int below(int n) {
        const int v = static_cast<int>(uniform01() * n);
        return v >= n ? n - 1 : v;
    }

    // uniform by area over the disk |z| <= radius
    Complex in_disk(double radius) {
        const double r = radius * std::sqrt(uniform01());
        const double th = 2.0 * std::numbers::pi * uniform01();
        return std::polar(r, th);
    }

private:
    std::mt19937_64 engine_;
};

// Generation scheme for random certified Schwarz functions, in draw order:
// zero count k in {0,1,2,3}, then k zeros uniform by area in |a| <= 0.8,
// rotation uniform in [0, 2 pi), origin multiplicity in {0, 1} (forced to 1
// when the caller needs phi(0) = 0).
inline BlaschkeDescriptor random_blaschke(Rng& rng, bool force_origin_zero = false) {
    const int k = rng.below(4);
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        zeros.push_back(rng.in_disk(0.8));
    }
    const double rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const int m = force_origin_zero ? 1 : rng.below(2);
    return BlaschkeDescriptor(std::move(zeros), rotation, m);
}

struct RandomMember {
    FunctionHandle handle;
    BlaschkeDescriptor phi;
    double lambda;
};

// Random Ozaki member: descriptor first, then lambda uniform in [1/2, 1].
inline RandomMember random_f0_member(Rng& rng, int order, bool force_origin_zero) {
    BlaschkeDescriptor phi = random_blaschke(rng, force_origin_zero);
    const double lambda = rng.uniform(0.5, 1.0);
    FunctionHandle handle = ozaki_member(phi, lambda, order);
    return RandomMember{std::move(handle), std::move(phi), lambda};
}

}  // namespace disknorm
