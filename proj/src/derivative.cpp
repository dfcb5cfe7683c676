#include "disknorm/derivative.hpp"

#include <cmath>

namespace disknorm {

namespace {

Complex one_minus_z2(Complex z) {
    return (1.0 - z) * (1.0 + z);
}

// Closed field for Schwarz-generated members: P = A phi / (1 - z phi).
Complex member_pre_schwarzian(const FunctionHandle& f, Complex z) {
    const BlaschkeEval phi = f.schwarz_function().eval(z);
    return f.field_coefficient() * phi.value / (1.0 - z * phi.value);
}

// P' = A (phi' + phi^2) / (1 - z phi)^2 by the quotient rule.
Complex member_pre_schwarzian_derivative(const FunctionHandle& f, Complex z) {
    const BlaschkeEval phi = f.schwarz_function().eval(z);
    const Complex den = 1.0 - z * phi.value;
    return f.field_coefficient() * (phi.d1 + phi.value * phi.value) / (den * den);
}

// S = A (phi' + (1 - A/2) phi^2) / (1 - z phi)^2, the transported form of
// P' - P^2/2 for these generators.
Complex member_schwarzian(const FunctionHandle& f, Complex z) {
    const BlaschkeEval phi = f.schwarz_function().eval(z);
    const Complex den = 1.0 - z * phi.value;
    const Complex a = f.field_coefficient();
    return a * (phi.d1 + (1.0 - 0.5 * a) * phi.value * phi.value) / (den * den);
}

Complex series_pre_schwarzian(const FunctionHandle& f, Complex z) {
    const Complex d1 = f.f1_series()(z);
    if (std::abs(d1) < kDegeneracyFloor) {
        throw VanishingDerivative("|f'(z)| below the degeneracy floor");
    }
    return f.f2_series()(z) / d1;
}

}  // namespace

Complex pre_schwarzian(const FunctionHandle& f, Complex z) {
    switch (f.kind()) {
        case FunctionKind::Identity:
            return Complex(0.0, 0.0);
        case FunctionKind::Koebe:
            return (4.0 + 2.0 * z) / one_minus_z2(z);
        case FunctionKind::HalfLog:
            return 2.0 * z / one_minus_z2(z);
        case FunctionKind::ExtremalOzaki:
            return (1.0 + 2.0 * f.lambda()) * z / one_minus_z2(z);
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
            return member_pre_schwarzian(f, z);
        case FunctionKind::SeriesBacked:
            return series_pre_schwarzian(f, z);
    }
    return Complex(0.0, 0.0);
}

Complex pre_schwarzian_derivative(const FunctionHandle& f, Complex z) {
    const Complex u = one_minus_z2(z);
    switch (f.kind()) {
        case FunctionKind::Identity:
            return Complex(0.0, 0.0);
        case FunctionKind::Koebe:
            // d/dz (4+2z)/(1-z^2) = (2 + 8z + 2z^2)/(1-z^2)^2
            return (2.0 + 8.0 * z + 2.0 * z * z) / (u * u);
        case FunctionKind::HalfLog:
            return 2.0 * (1.0 + z * z) / (u * u);
        case FunctionKind::ExtremalOzaki:
            return (1.0 + 2.0 * f.lambda()) * (1.0 + z * z) / (u * u);
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
            return member_pre_schwarzian_derivative(f, z);
        case FunctionKind::SeriesBacked: {
            // avoid a stored series for P'; differentiate the ratio directly:
            // P' = f'''/f' - (f''/f')^2 needs f''', so use the ratio series
            const Complex d1 = f.f1_series()(z);
            if (std::abs(d1) < kDegeneracyFloor) {
                throw VanishingDerivative("|f'(z)| below the degeneracy floor");
            }
            return derivative(f.p_series())(z);
        }
    }
    return Complex(0.0, 0.0);
}

Complex pre_schwarzian_derivative_numeric(const FunctionHandle& f, Complex z) {
    const double h = 1e-4 * (1.0 - std::abs(z));
    if (!(h > 0.0)) {
        throw BadParameter("numeric differentiation needs |z| < 1");
    }
    auto central = [&](double step) {
        return (pre_schwarzian(f, z + Complex(step, 0.0)) -
                pre_schwarzian(f, z - Complex(step, 0.0))) /
               (2.0 * step);
    };
    const Complex d_h = central(h);
    const Complex d_h2 = central(0.5 * h);
    return (4.0 * d_h2 - d_h) / 3.0;
}

Complex schwarzian(const FunctionHandle& f, Complex z) {
    const Complex u = one_minus_z2(z);
    switch (f.kind()) {
        case FunctionKind::Identity:
            return Complex(0.0, 0.0);
        case FunctionKind::Koebe:
            return -6.0 / (u * u);
        case FunctionKind::HalfLog:
            return 2.0 / (u * u);
        case FunctionKind::ExtremalOzaki: {
            const double c = 1.0 + 2.0 * f.lambda();
            return c * (1.0 + 0.5 * (1.0 - 2.0 * f.lambda()) * z * z) / (u * u);
        }
        case FunctionKind::OzakiMember:
        case FunctionKind::GBetaMember:
            return member_schwarzian(f, z);
        case FunctionKind::SeriesBacked: {
            const Complex d1 = f.f1_series()(z);
            if (std::abs(d1) < kDegeneracyFloor) {
                throw VanishingDerivative("|f'(z)| below the degeneracy floor");
            }
            return f.s_series()(z);
        }
    }
    return Complex(0.0, 0.0);
}

Complex schwarzian_from_numeric_p(const FunctionHandle& f, Complex z) {
    const Complex p = pre_schwarzian(f, z);
    return pre_schwarzian_derivative_numeric(f, z) - 0.5 * p * p;
}

Complex harmonic_pre_schwarzian(const HarmonicHandle& F, Complex z) {
    const BlaschkeEval w = F.dilatation.eval(z);
    const double unit = F.dilatation.one_minus_abs_sq(z);
    if (unit < kDegeneracyFloor) {
        throw DegenerateDilatation("1 - |omega(z)|^2 below the degeneracy floor");
    }
    const Complex correction = w.d1 * std::conj(w.value) / unit;
    return pre_schwarzian(F.analytic_part, z) - correction;
}

Complex harmonic_schwarzian(const HarmonicHandle& F, Complex z,
                            HarmonicSchwarzianVariant variant) {
    const BlaschkeEval w = F.dilatation.eval(z);
    const double unit = F.dilatation.one_minus_abs_sq(z);
    if (unit < kDegeneracyFloor) {
        throw DegenerateDilatation("1 - |omega(z)|^2 below the degeneracy floor");
    }
    const Complex sh = schwarzian(F.analytic_part, z);
    if (F.dilatation.is_zero()) {
        return sh;
    }
    const Complex ph = pre_schwarzian(F.analytic_part, z);
    const Complex x =
        (variant == HarmonicSchwarzianVariant::Corrected) ? w.d1 : w.value;
    const Complex mid = std::conj(w.value) / unit * (ph * x - w.d2);
    const Complex tail = w.d1 * std::conj(w.value) / unit;
    return sh + mid - 1.5 * tail * tail;
}

double jacobian(const HarmonicHandle& F, Complex z) {
    const Complex h1 = F.analytic_part.first_derivative(z);
    return std::norm(h1) * F.dilatation.one_minus_abs_sq(z);
}

Complex phi_from_f(const FunctionHandle& f, double lambda, Complex z) {
    const Complex p = pre_schwarzian(f, z);
    const Complex den = (1.0 + 2.0 * lambda) + z * p;
    if (std::abs(den) < kDegeneracyFloor) {
        throw DegenerateDenominator("phi recovery denominator below the degeneracy floor");
    }
    return p / den;
}

Complex big_phi(Complex phi_value, Complex z) {
    const Complex den = 1.0 - z * phi_value;
    if (std::abs(den) < kDegeneracyFloor) {
        throw DegenerateDenominator("1 - z phi below the degeneracy floor");
    }
    return (std::conj(z) - phi_value) / den;
}

DerivativeField make_field(const FunctionHandle& f, FieldKind kind) {
    const double domain = f.field_domain_radius();
    switch (kind) {
        case FieldKind::PreSchwarzian:
            return {kind, domain, [f](Complex z) { return pre_schwarzian(f, z); }};
        case FieldKind::Schwarzian:
            return {kind, domain, [f](Complex z) { return schwarzian(f, z); }};
        case FieldKind::BeckerIntegrand:
            return {kind, domain, [f](Complex z) { return z * pre_schwarzian(f, z); }};
        case FieldKind::HarmonicPre:
            throw BadParameter("harmonic field needs a harmonic handle");
    }
    throw BadParameter("unreachable field kind");
}

DerivativeField make_harmonic_pre_field(const HarmonicHandle& F) {
    return {FieldKind::HarmonicPre, F.analytic_part.field_domain_radius(),
            [F](Complex z) { return harmonic_pre_schwarzian(F, z); }};
}

}  // namespace disknorm
