#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "disknorm/random.hpp"
#include "disknorm/series.hpp"

using namespace disknorm;

namespace {

PowerSeries make(std::initializer_list<Complex> cs) {
    return PowerSeries(std::vector<Complex>(cs));
}

// independent convolution oracle for product checks
std::vector<Complex> convolve(const PowerSeries& a, const PowerSeries& b, int order) {
    std::vector<Complex> out(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
    for (int i = 0; i <= a.order(); ++i) {
        for (int j = 0; j <= b.order() && i + j <= order; ++j) {
            out[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

double max_coeff_dist(const PowerSeries& a, const PowerSeries& b) {
    double m = 0.0;
    const int n = std::max(a.order(), b.order());
    for (int k = 0; k <= n; ++k) {
        m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    }
    return m;
}

PowerSeries random_series(Rng& rng, int order, double scale) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (auto& v : c) {
        v = scale * rng.in_disk(1.0);
    }
    return PowerSeries(std::move(c));
}

// Divisors must stay zero free on the closed disk or the long-division
// recurrence amplifies rounding error geometrically. A dominant constant
// term with an l1-subordinate tail guarantees that.
PowerSeries random_divisor(Rng& rng, int order) {
    const Complex b0 = std::polar(0.1 + 0.9 * rng.uniform01(), rng.uniform(0.0, 6.28));
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    c[0] = b0;
    double decay = 0.4;
    for (int k = 1; k <= order; ++k) {
        c[static_cast<size_t>(k)] = b0 * decay * rng.in_disk(1.0);
        decay *= 0.6;
    }
    return PowerSeries(std::move(c));
}

}  // namespace

TEST_CASE("linear combination is coefficientwise") {
    const PowerSeries a = make({1.0, 1.0});
    CHECK(max_coeff_dist(linear_combination(a, a, 1.0, -1.0), PowerSeries::zero(1)) == 0.0);

    const PowerSeries z = PowerSeries::monomial(1, 2);
    const PowerSeries z2 = PowerSeries::monomial(2, 2);
    const PowerSeries r = linear_combination(z, z2, 2.0, 3.0);
    CHECK(r.coeff(1) == Complex(2.0, 0.0));
    CHECK(r.coeff(2) == Complex(3.0, 0.0));

    const PowerSeries one = PowerSeries::constant(1.0);
    const PowerSeries s = linear_combination(one, PowerSeries::zero(1), Complex(0.0, 1.0), 0.0);
    CHECK(s.coeff(0) == Complex(0.0, 1.0));
}

TEST_CASE("products truncate the Cauchy convolution") {
    const PowerSeries p = product(make({1.0, 1.0}), make({1.0, -1.0}));
    CHECK(p.coeff(0) == Complex(1.0, 0.0));
    CHECK(p.coeff(1) == Complex(0.0, 0.0));
    // order is the longer input order, so the z^2 term truncates away
    CHECK(p.order() == 1);

    const PowerSeries z = PowerSeries::monomial(1, 2);
    CHECK(product(z, z).coeff(2) == Complex(1.0, 0.0));

    // geometric series times (1 - z) telescopes to 1 through the truncation order
    const int n = 64;
    const PowerSeries geo = PowerSeries(std::vector<Complex>(n + 1, Complex(1.0, 0.0)));
    const PowerSeries lin = truncated(make({1.0, -1.0}), n);
    const PowerSeries g = product(geo, lin);
    const auto oracle = convolve(geo, lin, n);
    for (int k = 0; k <= n; ++k) {
        CHECK(g.coeff(k) == oracle[static_cast<size_t>(k)]);
        CHECK(g.coeff(k) == ((k == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
}

TEST_CASE("quotient inverts the product") {
    const PowerSeries num = make({1.0, 0.0, -1.0});
    const PowerSeries den = make({1.0, -1.0});
    const PowerSeries q = quotient(num, den);
    CHECK(q.coeff(0) == Complex(1.0, 0.0));
    CHECK(q.coeff(1) == Complex(1.0, 0.0));
    CHECK(q.coeff(2) == Complex(0.0, 0.0));

    const PowerSeries inv = quotient(PowerSeries::constant(1.0, 8), truncated(den, 8));
    for (int k = 0; k <= 8; ++k) {
        CHECK(inv.coeff(k) == Complex(1.0, 0.0));
    }

    const PowerSeries a = make({1.0, 1.0});
    CHECK(max_coeff_dist(quotient(a, a), PowerSeries::constant(1.0)) == 0.0);

    CHECK_THROWS_AS(quotient(a, PowerSeries::zero(3)), DivisionByNonUnit);
}

TEST_CASE("derivative and antiderivative are termwise") {
    CHECK(derivative(PowerSeries::monomial(2, 2)).coeff(1) == Complex(2.0, 0.0));
    CHECK(max_coeff_dist(derivative(PowerSeries::constant(5.0)), PowerSeries::zero(1)) == 0.0);

    const PowerSeries koebe_prefix = make({0.0, 1.0, 2.0, 3.0});
    const PowerSeries d = derivative(koebe_prefix);
    CHECK(d.coeff(0) == Complex(1.0, 0.0));
    CHECK(d.coeff(1) == Complex(4.0, 0.0));
    CHECK(d.coeff(2) == Complex(9.0, 0.0));

    CHECK(antiderivative(PowerSeries::constant(1.0)).coeff(1) == Complex(1.0, 0.0));
    CHECK(antiderivative(make({0.0, 2.0})).coeff(2) == Complex(1.0, 0.0));

    const PowerSeries a = make({1.0, 1.0, 1.0});
    CHECK(max_coeff_dist(truncated(derivative(antiderivative(a)), a.order()), a) == 0.0);
}

TEST_CASE("series exponential") {
    const PowerSeries e = exp_series(PowerSeries::monomial(1, 6));
    for (int k = 0; k <= 6; ++k) {
        double fact = 1.0;
        for (int j = 2; j <= k; ++j) {
            fact *= j;
        }
        CHECK(std::abs(e.coeff(k) - Complex(1.0 / fact, 0.0)) < 1e-15);
    }

    CHECK(exp_series(PowerSeries::zero(4)).coeff(0) == Complex(1.0, 0.0));

    // exp(a) exp(-a) telescopes to 1, checked through the convolution oracle
    const PowerSeries a = make({0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0});
    const PowerSeries pa = exp_series(a);
    const PowerSeries na = exp_series(linear_combination(a, a, -2.0, 1.0));
    const auto conv = convolve(pa, na, a.order());
    CHECK(std::abs(conv[0] - Complex(1.0, 0.0)) < 1e-14);
    for (size_t k = 1; k < conv.size(); ++k) {
        CHECK(std::abs(conv[k]) < 1e-13);
    }
}

TEST_CASE("Horner evaluation") {
    const PowerSeries geo = PowerSeries(std::vector<Complex>(65, Complex(1.0, 0.0)));
    // closed form (1 - z^65)/(1 - z) at z = 1/2
    CHECK(std::abs(geo(Complex(0.5, 0.0)) - Complex(2.0, 0.0)) <= 6e-20);

    const PowerSeries a = make({3.0, -1.0, 2.0});
    CHECK(a(Complex(0.0, 0.0)) == a.coeff(0));

    CHECK(PowerSeries::monomial(2, 2)(Complex(0.0, 1.0)) == Complex(-1.0, 0.0));
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), BadParameter);
    CHECK_THROWS_AS(make({Complex(std::nan(""), 0.0)}), NonFiniteValue);
    CHECK(make({1.0}).order() == 1);  // singletons pad to the minimum order
}

// ring and inverse identities at the default working order
TEST_CASE("ring identities on random series at N = 256") {
    Rng rng(20240811u);
    const int order = 256;
    for (int trial = 0; trial < 12; ++trial) {
        const PowerSeries a = random_series(rng, order, 1.0);
        const PowerSeries b = random_divisor(rng, order);

        const PowerSeries back = quotient(product(a, b), b);
        for (int k = 0; k <= order; ++k) {
            const double scale = std::max(1.0, std::abs(a.coeff(k)));
            CHECK(std::abs(back.coeff(k) - a.coeff(k)) / scale < 1e-10);
        }

        const PowerSeries round = truncated(derivative(antiderivative(a)), order);
        for (int k = 0; k <= order; ++k) {
            const double scale = std::max(1e-300, std::abs(a.coeff(k)));
            CHECK(std::abs(round.coeff(k) - a.coeff(k)) / scale <= 1e-14);
        }
    }
}

TEST_CASE("evaluation is linear") {
    Rng rng(7u);
    for (int trial = 0; trial < 40; ++trial) {
        const PowerSeries a = random_series(rng, 40, 1.0);
        const PowerSeries b = random_series(rng, 40, 1.0);
        const Complex alpha = rng.in_disk(2.0);
        const Complex beta = rng.in_disk(2.0);
        const Complex z = rng.in_disk(0.9);
        const Complex lhs = linear_combination(a, b, alpha, beta)(z);
        const Complex rhs = alpha * a(z) + beta * b(z);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("exponential turns sums into products at N = 256") {
    Rng rng(99u);
    const int order = 256;
    for (int trial = 0; trial < 6; ++trial) {
        // draw coefficients, then scale each series to l1 norm at most 1
        PowerSeries a = random_series(rng, order, 1.0);
        PowerSeries b = random_series(rng, order, 1.0);
        auto rescale = [&rng](const PowerSeries& s) {
            double l1 = 0.0;
            for (const Complex& c : s.coeffs()) {
                l1 += std::abs(c);
            }
            const double target = rng.uniform01();
            return linear_combination(s, s, target / l1, 0.0);
        };
        a = rescale(a);
        b = rescale(b);
        const PowerSeries lhs = exp_series(linear_combination(a, b, 1.0, 1.0));
        const PowerSeries rhs = product(exp_series(a), exp_series(b));
        CHECK(max_coeff_dist(lhs, rhs) < 1e-9);
    }
}
