#pragma once

#include <optional>

#include "disknorm/norm.hpp"
#include "disknorm/quadrature.hpp"

namespace disknorm {

struct OzakiParams {
    double lambda = 0.5;
};
void validate(const OzakiParams& p);  // lambda in [1/2, 1]

struct GBetaParams {
    double beta = 1.0;
};
void validate(const GBetaParams& p);  // beta > 0

struct GammaParam {
    double gamma = 0.0;  // |phi(0)|, in [0, 1)
};
void validate(const GammaParam& p);

/// Membership evidence for the Ozaki class at one point: both residuals are
/// nonnegative exactly when the two characterizing inequalities hold there.
struct F0Residuals {
    double res_ii = 0.0;   // real-part characterization
    double res_iii = 0.0;  // disk characterization of the weighted field
};

F0Residuals f0_residuals(const FunctionHandle& f, const OzakiParams& params, Complex z);

// (1 + beta/2) - Re(1 + z f''/f'); positive where the defining inequality of
// G(beta) holds.
double g_residual(const FunctionHandle& f, const GBetaParams& params, Complex z);

// Schwarz-Pick dilatation estimate, residual form:
// (gamma+|z|)^2 / ((1-gamma^2)(1-|z|^2)) - |phi(z)|^2 / (1-|phi(z)|^2),
// with gamma = |phi(0)| supplied by the caller.
double lemma_a_residual(const BlaschkeDescriptor& phi, Complex z, const GammaParam& gamma);

/// Sharp constants attached to the class parameters.
struct SharpConstants {
    double lambda = 0.5;
    double pre_schwarzian_bound = 0.0;           // 1 + 2 lambda
    double schwarzian_printed_constant = 0.0;      // (1+2 lambda)(3-2 lambda)/2
    std::optional<double> schwarzian_gamma_bound;  // with gamma weight
    std::optional<double> harmonic_pre_bound;      // 2 beta + 1

    // pointwise ceiling (1+2 lambda)(1 + ((1-2 lambda)/2)|z|^2)
    double schwarzian_pointwise(double abs_z) const {
        const double c = 1.0 + 2.0 * lambda;
        return c * (1.0 + 0.5 * (1.0 - 2.0 * lambda) * abs_z * abs_z);
    }
};

SharpConstants sharp_constants(const OzakiParams& params,
                                   std::optional<GammaParam> gamma = std::nullopt,
                                   std::optional<GBetaParams> beta = std::nullopt);

struct EnvelopeRow {
    double r = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

// (1+r^2)^{-(1+2 lambda)/2} <= |f'| <= (1-r^2)^{-(1+2 lambda)/2}
EnvelopeRow distortion_envelope(const OzakiParams& params, double r);

// Radial integrals of the distortion envelope, by adaptive quadrature.
EnvelopeRow growth_envelope(const OzakiParams& params, double r, double tol = 1e-10);

/// Three readings of the sharpness quantity M_t for the harmonic family with
/// dilatation omega_t and the extremal analytic part of G(beta): an
/// independent 1-D maximization, the closed form as printed, and the full
/// disk supremum of the harmonic pre-Schwarzian weight. The printed closed
/// form disagrees with direct maximization; all three are reported and none
/// is declared authoritative.
struct MtAudit {
    double t = 0.0;
    double r0 = 0.0;             // stationary radius of the 1-D profile
    bool r0_in_range = false;    // r0 in [0, 1); when false the scan is endpoint aware
    double m_direct = 0.0;       // max over r in [0,1) of |beta(1+r) - (r-t)/(1-tr)|
    double m_printed = 0.0;        // (1 + 2 beta - 2 beta sqrt((1-t^2)/beta)) / t
    bool m_printed_defined = false;  // false at t = 0
    double disk_sup = 0.0;       // harmonic pre-Schwarzian norm estimate
};

MtAudit mt_audit(const GBetaParams& params, double t, const GridSpec& grid = {},
                 int order = kDefaultSeriesOrder);

}  // namespace disknorm
