#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "disknorm/derivative.hpp"
#include "disknorm/random.hpp"

using namespace disknorm;

TEST_CASE("pre-Schwarzian values") {
    CHECK(pre_schwarzian(FunctionHandle::identity(), Complex(0.3, 0.5)) == Complex(0.0, 0.0));
    CHECK(std::abs(pre_schwarzian(FunctionHandle::koebe(), Complex(0.0, 0.0)) -
                   Complex(4.0, 0.0)) < 1e-15);
    CHECK(std::abs(pre_schwarzian(extremal_ozaki(1.0), Complex(0.5, 0.0)) - Complex(2.0, 0.0)) <
          1e-15);
}

TEST_CASE("Schwarzian values") {
    CHECK(std::abs(schwarzian(FunctionHandle::half_log(), Complex(0.0, 0.0)) -
                   Complex(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(schwarzian(FunctionHandle::koebe(), Complex(0.5, 0.0)) -
                   Complex(-32.0 / 3.0, 0.0)) < 1e-12);
    CHECK(schwarzian(FunctionHandle::identity(), Complex(0.9, 0.0)) == Complex(0.0, 0.0));
}

TEST_CASE("harmonic pre-Schwarzian") {
    const auto id = FunctionHandle::identity();
    const auto wt = BlaschkeDescriptor::automorphism_factor(0.6);
    const auto F = make_harmonic(id, wt);

    // omega vanishes at its zero, so the correction drops out
    CHECK(std::abs(harmonic_pre_schwarzian(F, Complex(0.6, 0.0))) < 1e-15);

    // direct substitution at the origin
    CHECK(std::abs(harmonic_pre_schwarzian(F, Complex(0.0, 0.0)) - Complex(0.6, 0.0)) < 1e-15);

    const auto flat = make_harmonic(FunctionHandle::koebe(), BlaschkeDescriptor::zero_function());
    const Complex z(0.25, 0.4);
    CHECK(harmonic_pre_schwarzian(flat, z) == pre_schwarzian(FunctionHandle::koebe(), z));
}

TEST_CASE("harmonic Schwarzian") {
    const auto id = FunctionHandle::identity();
    const auto wt = BlaschkeDescriptor::automorphism_factor(0.6);
    const auto F = make_harmonic(id, wt);

    // all conj(omega) factors vanish at z = t
    CHECK(std::abs(harmonic_schwarzian(F, Complex(0.6, 0.0))) < 1e-15);

    // direct substitution at the origin: 0.72 - 0.54
    CHECK(std::abs(harmonic_schwarzian(F, Complex(0.0, 0.0)) - Complex(0.18, 0.0)) < 1e-15);

    const auto flat = make_harmonic(FunctionHandle::koebe(), BlaschkeDescriptor::zero_function());
    CHECK(harmonic_schwarzian(flat, Complex(0.0, 0.0)) ==
          schwarzian(FunctionHandle::koebe(), Complex(0.0, 0.0)));
    CHECK(std::abs(harmonic_schwarzian(flat, Complex(0.0, 0.0)) - Complex(-6.0, 0.0)) < 1e-15);

    // the literal variant multiplies h''/h' by omega instead of omega'; for a
    // curved analytic part the two readings differ by (h''/h')(omega'-omega)
    // times the common factor
    const auto curved = make_harmonic(FunctionHandle::koebe(), wt);
    const Complex z(0.3, 0.0);
    const Complex corrected = harmonic_schwarzian(curved, z);
    const Complex literal =
        harmonic_schwarzian(curved, z, HarmonicSchwarzianVariant::Literal);
    const BlaschkeEval w = wt.eval(z);
    const Complex ph = pre_schwarzian(FunctionHandle::koebe(), z);
    const Complex expected_gap =
        std::conj(w.value) / (1.0 - std::norm(w.value)) * ph * (w.d1 - w.value);
    CHECK(std::abs((corrected - literal) - expected_gap) < 1e-13);
    CHECK(std::abs(corrected - literal) > 1e-3);
}

TEST_CASE("jacobian") {
    const auto id = FunctionHandle::identity();
    CHECK(jacobian(make_harmonic(id, BlaschkeDescriptor::zero_function()), Complex(0.5, 0.2)) ==
          1.0);
    CHECK(std::abs(jacobian(make_harmonic(id, BlaschkeDescriptor::automorphism_factor(0.6)),
                            Complex(0.0, 0.0)) -
                   0.64) < 1e-15);
}

TEST_CASE("Schwarz factor recovery") {
    for (double lambda : {0.5, 0.8, 1.0}) {
        const Complex got = phi_from_f(extremal_ozaki(lambda), lambda, Complex(0.4, 0.0));
        CHECK(std::abs(got - Complex(0.4, 0.0)) < 1e-14);
    }
    CHECK(phi_from_f(FunctionHandle::identity(), 0.7, Complex(0.3, 0.1)) == Complex(0.0, 0.0));

    Rng rng(0xf00du);
    for (int i = 0; i < 6; ++i) {
        const auto m = random_f0_member(rng, 128, false);
        for (int k = 0; k < 20; ++k) {
            const Complex z = rng.in_disk(0.8);
            const Complex via_field = phi_from_f(m.handle, m.lambda, z);
            CHECK(std::abs(via_field - m.phi(z)) < 1e-8);
        }
    }
}

TEST_CASE("disk automorphism transform of the Schwarz factor") {
    CHECK(big_phi(Complex(0.0, 0.0), Complex(0.2, 0.5)) == Complex(0.2, -0.5));
    CHECK(std::abs(big_phi(Complex(0.37, 0.0), Complex(0.37, 0.0))) < 1e-15);
    CHECK(std::abs(big_phi(Complex(-0.5, 0.0), Complex(0.5, 0.0)) - Complex(0.8, 0.0)) < 1e-15);

    Rng rng(808u);
    for (int i = 0; i < 10000; ++i) {
        const Complex phi = rng.in_disk(0.999);
        const Complex z = rng.in_disk(0.999);
        CHECK(std::abs(big_phi(phi, z)) < 1.0);
    }
}

TEST_CASE("two Schwarzian pipelines agree on series data") {
    Rng rng(0xcafeu);
    // series wrappers around a closed form and around generated members
    const auto koebe_series = series_function(FunctionHandle::koebe().series(192));
    for (int k = 0; k < 30; ++k) {
        const Complex z = rng.in_disk(0.5);
        CHECK(std::abs(schwarzian(koebe_series, z) - schwarzian_from_numeric_p(koebe_series, z)) <
              1e-6);
        CHECK(std::abs(schwarzian(koebe_series, z) - schwarzian(FunctionHandle::koebe(), z)) <
              1e-8);
    }
    for (int i = 0; i < 4; ++i) {
        const auto m = random_f0_member(rng, 192, false);
        const auto wrapped = series_function(m.handle.f_series());
        for (int k = 0; k < 15; ++k) {
            const Complex z = rng.in_disk(0.5);
            CHECK(std::abs(schwarzian(wrapped, z) - schwarzian_from_numeric_p(wrapped, z)) < 1e-6);
        }
    }
}

TEST_CASE("phi form of the member Schwarzian matches P' - P^2/2") {
    Rng rng(0xbeefu);
    for (int i = 0; i < 6; ++i) {
        const auto m = random_f0_member(rng, 64, false);
        for (int k = 0; k < 25; ++k) {
            const Complex z = rng.in_disk(0.9);
            const Complex direct = schwarzian(m.handle, z);
            const Complex p = pre_schwarzian(m.handle, z);
            const Complex via_numeric = pre_schwarzian_derivative_numeric(m.handle, z) -
                                        0.5 * p * p;
            CHECK(std::abs(direct - via_numeric) < 1e-8);
            const Complex via_closed = pre_schwarzian_derivative(m.handle, z) - 0.5 * p * p;
            CHECK(std::abs(direct - via_closed) < 1e-12);
        }
    }
}

TEST_CASE("affine and Moebius invariance") {
    Rng rng(2718u);
    const auto koebe = FunctionHandle::koebe();
    const auto affine = mobius_compose(koebe, Complex(2.0, 1.0), Complex(3.0, -0.5), 0.0, 1.0, 192);
    const auto moved = mobius_compose(koebe, 1.0, 0.0, 0.5, 1.0, 192);
    for (int k = 0; k < 100; ++k) {
        const Complex z = rng.in_disk(0.5);
        CHECK(std::abs(pre_schwarzian(affine, z) - pre_schwarzian(koebe, z)) < 1e-8);
        CHECK(std::abs(schwarzian(moved, z) - schwarzian(koebe, z)) < 1e-8);
    }
}

TEST_CASE("degeneracy guards") {
    const auto nearly = make_harmonic(FunctionHandle::identity(),
                                      BlaschkeDescriptor::unimodular());
    CHECK_THROWS_AS(harmonic_pre_schwarzian(nearly, Complex(0.1, 0.0)), DegenerateDilatation);

    // f' = 0 inside the disk for the series handle of z + z^2/... pick f with
    // f'(z0) = 0: f = z + z^2 has f' = 1 + 2z vanishing at -1/2
    const auto s = series_function(PowerSeries(std::vector<Complex>{0.0, 1.0, 1.0}));
    CHECK_THROWS_AS(pre_schwarzian(s, Complex(-0.5, 0.0)), VanishingDerivative);
}
