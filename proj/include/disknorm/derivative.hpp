#pragma once

#include <functional>

#include "disknorm/function.hpp"

namespace disknorm {

// Degeneracy floor for vanishing derivatives and denominators: double
// precision noise with headroom.
inline constexpr double kDegeneracyFloor = 1e-12;

// f''(z)/f'(z); closed-form path when the handle has one, series path
// otherwise. Throws VanishingDerivative when |f'(z)| < 1e-12 on the series
// path (closed forms never vanish inside their domain).
Complex pre_schwarzian(const FunctionHandle& f, Complex z);

// d/dz of the pre-Schwarzian, matching the evaluation path of the handle.
Complex pre_schwarzian_derivative(const FunctionHandle& f, Complex z);

// Numeric fallback for the same derivative: central differences with one
// Richardson extrapolation step, h = 1e-4 (1 - |z|).
Complex pre_schwarzian_derivative_numeric(const FunctionHandle& f, Complex z);

// S = P' - P^2/2. Schwarz-generated handles use the transported field
// coeff (phi' + (1 - coeff/2) phi^2) / (1 - z phi)^2.
Complex schwarzian(const FunctionHandle& f, Complex z);

// Cross-check pipeline: the numeric P' above combined with the evaluated P.
Complex schwarzian_from_numeric_p(const FunctionHandle& f, Complex z);

// (log J)_z = h''/h' - omega' conj(omega) / (1 - |omega|^2).
// Throws DegenerateDilatation when 1 - |omega(z)|^2 < 1e-12.
Complex harmonic_pre_schwarzian(const HarmonicHandle& F, Complex z);

enum class HarmonicSchwarzianVariant {
    // factor (h''/h') omega' - omega'' inside the correction term
    Corrected,
    // factor (h''/h') omega - omega'' as literally printed in some sources
    Literal,
};

// S_h + conj(omega)/(1-|omega|^2) ((h''/h') X - omega'')
//     - (3/2) (omega' conj(omega)/(1-|omega|^2))^2,
// with X = omega' (Corrected) or X = omega (Literal). Reduces exactly to the
// analytic Schwarzian when omega is the zero function.
Complex harmonic_schwarzian(const HarmonicHandle& F, Complex z,
                            HarmonicSchwarzianVariant variant = HarmonicSchwarzianVariant::Corrected);

// |h'(z)|^2 (1 - |omega(z)|^2)
double jacobian(const HarmonicHandle& F, Complex z);

// Recover the Schwarz factor from the field:
// phi = (f''/f') / ((1+2 lambda) + z f''/f').
Complex phi_from_f(const FunctionHandle& f, double lambda, Complex z);

// (conj(z) - phi) / (1 - z phi); strictly inside the disk whenever both
// |phi| < 1 and |z| < 1.
Complex big_phi(Complex phi_value, Complex z);

enum class FieldKind {
    PreSchwarzian,
    Schwarzian,
    HarmonicPre,
    BeckerIntegrand,  // z * P_f(z)
};

/// Pointwise derivative field packaged for the norm engine.
struct DerivativeField {
    FieldKind kind;
    double domain_radius;  // 1 for closed-form paths, kSeriesDomainRadius otherwise
    std::function<Complex(Complex)> eval;
};

DerivativeField make_field(const FunctionHandle& f, FieldKind kind);
DerivativeField make_harmonic_pre_field(const HarmonicHandle& F);

}  // namespace disknorm
