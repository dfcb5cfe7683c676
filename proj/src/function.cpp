#include "disknorm/function.hpp"

#include <cmath>
#include <numbers>

#include "disknorm/quadrature.hpp"

namespace disknorm {

namespace {

constexpr double kPoleFloor = 1e-6;

Complex one_minus_z2(Complex z) {
    // factored to stay accurate near the real boundary
    return (1.0 - z) * (1.0 + z);
}

// principal branch of (1 - z^2)^{-s}; 1 - z^2 omits (-inf, 0] for |z| < 1
Complex inv_power_one_minus_z2(Complex z, double s) {
    return std::exp(-s * std::log(one_minus_z2(z)));
}

void require_ozaki_lambda(double lambda) {
    if (!(lambda >= 0.5 && lambda <= 1.0)) {
        throw BadParameter("lambda must lie in [1/2, 1]");
    }
}

void require_gbeta(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw BadParameter("beta must be positive");
    }
}

}  // namespace

const BlaschkeDescriptor& FunctionHandle::schwarz_function() const {
    if (!phi_) {
        throw BadParameter("handle carries no Schwarz function");
    }
    return *phi_;
}

bool FunctionHandle::series_backed_values() const {
    return kind_ == FunctionKind::OzakiMember || kind_ == FunctionKind::GBetaMember ||
           kind_ == FunctionKind::SeriesBacked;
}

const PowerSeries& FunctionHandle::f_series() const {
    if (!bundle_) {
        throw BadParameter("handle carries no series data");
    }
    return bundle_->f;
}

const PowerSeries& FunctionHandle::f1_series() const {
    if (!bundle_) {
        throw BadParameter("handle carries no series data");
    }
    return bundle_->f1;
}

const PowerSeries& FunctionHandle::f2_series() const {
    if (!bundle_) {
        throw BadParameter("handle carries no series data");
    }
    return bundle_->f2;
}

const PowerSeries& FunctionHandle::p_series() const {
    if (!bundle_ || !bundle_->p) {
        throw BadParameter("handle carries no ratio series");
    }
    return *bundle_->p;
}

const PowerSeries& FunctionHandle::s_series() const {
    if (!bundle_ || !bundle_->s) {
        throw BadParameter("handle carries no Schwarzian series");
    }
    return *bundle_->s;
}

Complex FunctionHandle::value(Complex z) const {
    switch (kind_) {
        case FunctionKind::Identity:
            return z;
        case FunctionKind::Koebe: {
            const Complex u = 1.0 - z;
            return z / (u * u);
        }
        case FunctionKind::HalfLog:
            return 0.5 * std::log((1.0 + z) / (1.0 - z));
        case FunctionKind::ExtremalOzaki: {
            // f(z) = z int_0^1 (1 - t^2 z^2)^{-(1+2 lambda)/2} dt
            const double s = 0.5 * (1.0 + 2.0 * lambda_);
            const Complex z2 = z * z;
            return z * integrate_segment(
                           [&](double t) {
                               return std::exp(-s * std::log(1.0 - t * t * z2));
                           },
                           0.0, 1.0, 1e-12);
        }
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
        case FunctionKind::SeriesBacked:
            return bundle_->f(z);
    }
    return Complex(0.0, 0.0);
}

Complex FunctionHandle::first_derivative(Complex z) const {
    switch (kind_) {
        case FunctionKind::Identity:
            return Complex(1.0, 0.0);
        case FunctionKind::Koebe: {
            const Complex u = 1.0 - z;
            return (1.0 + z) / (u * u * u);
        }
        case FunctionKind::HalfLog:
            return 1.0 / one_minus_z2(z);
        case FunctionKind::ExtremalOzaki:
            return inv_power_one_minus_z2(z, 0.5 * (1.0 + 2.0 * lambda_));
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
        case FunctionKind::SeriesBacked:
            return bundle_->f1(z);
    }
    return Complex(0.0, 0.0);
}

Complex FunctionHandle::second_derivative(Complex z) const {
    switch (kind_) {
        case FunctionKind::Identity:
            return Complex(0.0, 0.0);
        case FunctionKind::Koebe: {
            const Complex u = 1.0 - z;
            return (4.0 + 2.0 * z) / (u * u * u * u);
        }
        case FunctionKind::HalfLog: {
            const Complex u = one_minus_z2(z);
            return 2.0 * z / (u * u);
        }
        case FunctionKind::ExtremalOzaki: {
            // f'' = P f' with P = (1+2 lambda) z / (1 - z^2)
            const double c = 1.0 + 2.0 * lambda_;
            return c * z / one_minus_z2(z) *
                   inv_power_one_minus_z2(z, 0.5 * c);
        }
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
        case FunctionKind::SeriesBacked:
            return bundle_->f2(z);
    }
    return Complex(0.0, 0.0);
}

PowerSeries FunctionHandle::series(int order) const {
    if (order < 1) {
        throw BadParameter("series order must be >= 1");
    }
    switch (kind_) {
        case FunctionKind::Identity:
            return PowerSeries::monomial(1, order);
        case FunctionKind::Koebe: {
            // z/(1-z)^2 = sum n z^n
            std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
            for (int n = 1; n <= order; ++n) {
                c[static_cast<size_t>(n)] = Complex(static_cast<double>(n), 0.0);
            }
            return PowerSeries(std::move(c));
        }
        case FunctionKind::HalfLog: {
            std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
            for (int n = 1; n <= order; n += 2) {
                c[static_cast<size_t>(n)] = Complex(1.0 / static_cast<double>(n), 0.0);
            }
            return PowerSeries(std::move(c));
        }
        case FunctionKind::ExtremalOzaki: {
            // (1-w)^{-s} = sum_k (s)_k / k! w^k with w = z^2, then integrate
            const double s = 0.5 * (1.0 + 2.0 * lambda_);
            std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
            double binom = 1.0;
            for (int k = 0; 2 * k <= order; ++k) {
                c[static_cast<size_t>(2 * k)] = Complex(binom, 0.0);
                binom *= (s + k) / static_cast<double>(k + 1);
            }
            return truncated(antiderivative(PowerSeries(std::move(c))), order);
        }
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
            if (order <= bundle_->f.order()) {
                return truncated(bundle_->f, order);
            }
            if (kind_ == FunctionKind::OzakiMember) {
                return ozaki_member(*phi_, lambda_, order).f_series();
            }
            return gbeta_member(*phi_, beta_, order).f_series();
        case FunctionKind::SeriesBacked:
            if (order > bundle_->f.order()) {
                throw BadParameter("series-backed handle cannot extend its order");
            }
            return truncated(bundle_->f, order);
    }
    throw BadParameter("unreachable function kind");
}

FunctionHandle FunctionHandle::identity() {
    return FunctionHandle(FunctionKind::Identity);
}

FunctionHandle FunctionHandle::koebe() {
    return FunctionHandle(FunctionKind::Koebe);
}

FunctionHandle FunctionHandle::half_log() {
    return FunctionHandle(FunctionKind::HalfLog);
}

FunctionHandle extremal_ozaki(double lambda) {
    require_ozaki_lambda(lambda);
    FunctionHandle h(FunctionKind::ExtremalOzaki);
    h.lambda_ = lambda;
    h.field_coefficient_ = Complex(1.0 + 2.0 * lambda, 0.0);
    return h;
}

// Shared reconstruction pipeline for both generated classes:
// P = coeff * phi / (1 - z phi), f' = exp(int P), f = int f'.
FunctionHandle FunctionHandle::build_generated(FunctionKind kind, const BlaschkeDescriptor& phi,
                                               double param, Complex coeff, int order) {
    if (order < 2) {
        throw BadParameter("member reconstruction needs order >= 2");
    }
    FunctionHandle h(kind);
    if (kind == FunctionKind::OzakiMember) {
        h.lambda_ = param;
    } else {
        h.beta_ = param;
    }
    h.field_coefficient_ = coeff;
    h.phi_ = phi;

    const PowerSeries phi_s = phi.series(order);
    const PowerSeries denom = linear_combination(
        PowerSeries::constant(Complex(1.0, 0.0), order), shift_up(phi_s),
        Complex(1.0, 0.0), Complex(-1.0, 0.0));
    const PowerSeries p = quotient(
        linear_combination(phi_s, PowerSeries::zero(order), coeff, Complex(0.0, 0.0)), denom);
    const PowerSeries f1 = exp_series(truncated(antiderivative(p), order));
    const PowerSeries f = truncated(antiderivative(f1), order);

    auto bundle = std::make_shared<FunctionHandle::SeriesBundle>(
        FunctionHandle::SeriesBundle{f, f1, derivative(f1), std::nullopt, std::nullopt});
    h.bundle_ = std::move(bundle);
    return h;
}

FunctionHandle ozaki_member(const BlaschkeDescriptor& phi, double lambda, int order) {
    require_ozaki_lambda(lambda);
    return FunctionHandle::build_generated(FunctionKind::OzakiMember, phi, lambda,
                                           Complex(1.0 + 2.0 * lambda, 0.0), order);
}

FunctionHandle gbeta_member(const BlaschkeDescriptor& phi, double beta, int order) {
    require_gbeta(beta);
    return FunctionHandle::build_generated(FunctionKind::GBetaMember, phi, beta,
                                           Complex(-beta, 0.0), order);
}

FunctionHandle series_function(PowerSeries f) {
    FunctionHandle h(FunctionKind::SeriesBacked);
    // zero-pad short inputs to the default working order; the function is
    // unchanged and the derived ratio series picks up its full tail
    PowerSeries fp = truncated(f, std::max(f.order(), kDefaultSeriesOrder));
    PowerSeries f1 = derivative(fp);
    PowerSeries f2 = derivative(f1);
    PowerSeries p = quotient(f2, f1);
    PowerSeries s = linear_combination(derivative(p), product(p, p), Complex(1.0, 0.0),
                                       Complex(-0.5, 0.0));
    h.bundle_ = std::make_shared<FunctionHandle::SeriesBundle>(FunctionHandle::SeriesBundle{
        std::move(fp), std::move(f1), std::move(f2), std::move(p), std::move(s)});
    return h;
}

FunctionHandle named_function(const std::string& name) {
    if (name == "identity") {
        return FunctionHandle::identity();
    }
    if (name == "koebe") {
        return FunctionHandle::koebe();
    }
    if (name == "half_log") {
        return FunctionHandle::half_log();
    }
    throw BadParameter("unknown named function: " + name);
}

FunctionHandle mobius_compose(const FunctionHandle& f, Complex a, Complex b, Complex c,
                              Complex d, int order) {
    if (std::abs(a * d - b * c) == 0.0) {
        throw DegenerateMobius("Moebius transform with ad - bc = 0");
    }
    const PowerSeries fs = f.series(order);
    const PowerSeries num = linear_combination(fs, PowerSeries::constant(b, order), a,
                                               Complex(1.0, 0.0));
    const PowerSeries den = linear_combination(fs, PowerSeries::constant(d, order), c,
                                               Complex(1.0, 0.0));

    // audit grid: origin plus 24 radii to the series domain radius x 48 angles
    const int radii = 24;
    const int angles = 48;
    if (std::abs(den(Complex(0.0, 0.0))) < kPoleFloor) {
        throw PoleInDomain("Moebius denominator vanishes at the origin");
    }
    for (int i = 1; i <= radii; ++i) {
        const double r = kSeriesDomainRadius * static_cast<double>(i) / radii;
        for (int k = 0; k < angles; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / angles;
            if (std::abs(den(std::polar(r, th))) < kPoleFloor) {
                throw PoleInDomain("Moebius denominator vanishes on the audit grid");
            }
        }
    }
    return series_function(quotient(num, den));
}

HarmonicHandle make_harmonic(FunctionHandle h, BlaschkeDescriptor omega) {
    return HarmonicHandle{std::move(h), std::move(omega)};
}

}  // namespace disknorm
