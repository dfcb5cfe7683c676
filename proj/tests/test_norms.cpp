#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "disknorm/norm.hpp"
#include "disknorm/random.hpp"

using namespace disknorm;

namespace {

DerivativeField constant_field(Complex value) {
    return DerivativeField{FieldKind::PreSchwarzian, 1.0, [value](Complex) { return value; }};
}

}  // namespace

TEST_CASE("weighted sup basics") {
    const NormEstimate flat = weighted_sup(constant_field(Complex(1.0, 0.0)), 1, GridSpec{});
    CHECK(flat.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(flat.argmax) < 1e-9);

    const auto koebe_pre = make_field(FunctionHandle::koebe(), FieldKind::PreSchwarzian);
    const NormEstimate k = weighted_sup(koebe_pre, 1, GridSpec{});
    CHECK(k.value >= 5.99);
    CHECK(k.value <= 6.0001);

    const auto hl_s = make_field(FunctionHandle::half_log(), FieldKind::Schwarzian);
    const NormEstimate s = weighted_sup(hl_s, 2, GridSpec{});
    CHECK(std::abs(s.value - 2.0) < 1e-3);

    CHECK(flat.lower_bound_only);
    CHECK_THROWS_AS(weighted_sup(koebe_pre, 3, GridSpec{}), BadParameter);
}

TEST_CASE("norm dispatch") {
    CHECK(std::abs(norm_of(extremal_ozaki(0.8), NormKind::PreSchwarzian).value - 2.6) < 2e-3);
    CHECK(norm_of(FunctionHandle::identity(), NormKind::Schwarzian).value == 0.0);
    CHECK(std::abs(norm_of(FunctionHandle::half_log(), NormKind::PreSchwarzian).value - 2.0) <
          2e-3);
}

TEST_CASE("becker functional") {
    const BeckerReport id = becker_functional(FunctionHandle::identity());
    CHECK(id.estimate.value == 0.0);
    CHECK(id.criterion_satisfied);

    // f(z) = z + 0.05 z^2, field |z| (1-|z|^2) |0.1/(1+0.1 z)|
    const auto gentle = series_function(PowerSeries(std::vector<Complex>{0.0, 1.0, 0.05}));
    const BeckerReport g = becker_functional(gentle);
    CHECK(g.estimate.value <= 0.05);
    CHECK(g.criterion_satisfied);
    // dense polar oracle on the closed form
    double oracle = 0.0;
    for (int i = 0; i <= 3000; ++i) {
        const double r = kSeriesDomainRadius * i / 3000.0;
        for (int k = 0; k < 64; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / 64.0);
            const double v = std::abs(z) * (1.0 - r * r) * std::abs(Complex(0.1, 0.0) /
                                                                    (1.0 + 0.1 * z));
            oracle = std::max(oracle, v);
        }
    }
    CHECK(g.estimate.value == doctest::Approx(oracle).epsilon(1e-3));

    const BeckerReport hl = becker_functional(FunctionHandle::half_log());
    CHECK(std::abs(hl.estimate.value - 2.0) < 1e-3);
    CHECK_FALSE(hl.criterion_satisfied);  // univalent map, criterion inconclusive
}

TEST_CASE("grid sup is monotone under nested doubling") {
    GridSpec coarse;
    coarse.radii_count = 24;
    coarse.angle_count = 32;
    coarse.refine = false;
    GridSpec fine = coarse;
    fine.radii_count = 48;
    fine.angle_count = 64;

    Rng rng(1234u);
    const auto koebe_pre = make_field(FunctionHandle::koebe(), FieldKind::PreSchwarzian);
    CHECK(weighted_sup(koebe_pre, 1, fine).value >= weighted_sup(koebe_pre, 1, coarse).value);

    for (int i = 0; i < 4; ++i) {
        const auto m = random_f0_member(rng, 96, false);
        const auto field = make_field(m.handle, FieldKind::Schwarzian);
        CHECK(weighted_sup(field, 2, fine).value >= weighted_sup(field, 2, coarse).value);
    }
}

TEST_CASE("estimate dominates every sampled point") {
    GridSpec grid;
    grid.radii_count = 40;
    grid.angle_count = 48;
    const auto field = make_field(extremal_ozaki(0.9), FieldKind::PreSchwarzian);
    const NormEstimate est = weighted_sup(field, 1, grid);
    for (int i = 0; i < grid.radii_count; ++i) {
        const double r =
            grid.r_max * std::sin(0.5 * std::numbers::pi * static_cast<double>(i) /
                                  grid.radii_count);
        for (int k = 0; k < grid.angle_count; ++k) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / grid.angle_count);
            const double v = (1.0 - r) * (1.0 + r) * std::abs(field.eval(z));
            CHECK(v <= est.value + 1e-12);
        }
    }
    // the reported value sits exactly at the reported argmax
    const double r = std::abs(est.argmax);
    CHECK(std::abs((1.0 - r) * (1.0 + r) * std::abs(field.eval(est.argmax)) - est.value) <=
          1e-12);
}

TEST_CASE("norm audit over random members") {
    Rng rng(0xa110u);
    for (int i = 0; i < 25; ++i) {
        const auto m = random_f0_member(rng, 64, true);
        const double bound = 1.0 + 2.0 * m.lambda;
        const NormEstimate est = norm_of(m.handle, NormKind::PreSchwarzian);
        CHECK(est.value <= bound + 1e-6);
    }
}

TEST_CASE("series-backed fields clamp the grid radius") {
    const auto gentle = series_function(PowerSeries(std::vector<Complex>{0.0, 1.0, 0.05}));
    const NormEstimate est = norm_of(gentle, NormKind::PreSchwarzian);
    CHECK(est.grid.r_max == kSeriesDomainRadius);
    CHECK(std::abs(est.argmax) <= kSeriesDomainRadius + 1e-12);
}

TEST_CASE("determinism") {
    GridSpec grid;
    const auto field = make_field(FunctionHandle::koebe(), FieldKind::Schwarzian);
    const NormEstimate a = weighted_sup(field, 2, grid);
    const NormEstimate b = weighted_sup(field, 2, grid);
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);
}

TEST_CASE("grid validation") {
    GridSpec bad;
    bad.radii_count = 1;
    CHECK_THROWS_AS(validate(bad), EmptyGrid);
    bad = GridSpec{};
    bad.angle_count = 3;
    CHECK_THROWS_AS(validate(bad), EmptyGrid);
    bad = GridSpec{};
    bad.r_max = 1.0;
    CHECK_THROWS_AS(validate(bad), EmptyGrid);
}
