#include "disknorm/bounds.hpp"

#include <cmath>
#include <limits>

namespace disknorm {

namespace {

double profile_abs(double beta, double t, double r) {
    return std::abs(beta * (1.0 + r) - (r - t) / (1.0 - t * r));
}

// Golden-section maximization on [a, b] for a unimodal-enough profile; the
// dense scan that brackets the call keeps multimodality out of reach.
template <typename F>
double golden_max(const F& g, double a, double b, double tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = g(x1);
    double f2 = g(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = g(x1);
        }
    }
    return g(0.5 * (a + b));
}

}  // namespace

void validate(const OzakiParams& p) {
    if (!(p.lambda >= 0.5 && p.lambda <= 1.0)) {
        throw BadParameter("lambda must lie in [1/2, 1]");
    }
}

void validate(const GBetaParams& p) {
    if (!(p.beta > 0.0) || !std::isfinite(p.beta)) {
        throw BadParameter("beta must be positive");
    }
}

void validate(const GammaParam& p) {
    if (!(p.gamma >= 0.0 && p.gamma < 1.0)) {
        throw BadParameter("gamma must lie in [0, 1)");
    }
}

F0Residuals f0_residuals(const FunctionHandle& f, const OzakiParams& params, Complex z) {
    validate(params);
    const double c = 1.0 + 2.0 * params.lambda;
    const Complex p = pre_schwarzian(f, z);
    const double w = (1.0 - std::abs(z)) * (1.0 + std::abs(z));

    F0Residuals out;
    out.res_iii = c - std::abs(w * p - c * std::conj(z));
    out.res_ii = (1.0 + (z * p).real()) - 0.5 * (1.0 - 2.0 * params.lambda) -
                 0.5 * (w / c) * std::norm(p);
    return out;
}

double g_residual(const FunctionHandle& f, const GBetaParams& params, Complex z) {
    validate(params);
    const Complex p = pre_schwarzian(f, z);
    return (1.0 + 0.5 * params.beta) - (1.0 + (z * p).real());
}

double lemma_a_residual(const BlaschkeDescriptor& phi, Complex z, const GammaParam& gamma) {
    validate(gamma);
    const double unit = phi.one_minus_abs_sq(z);  // 1 - |phi(z)|^2, stable
    if (unit < kDegeneracyFloor) {
        throw DegenerateDilatation("|phi(z)| too close to 1 for the dilatation estimate");
    }
    const double r = std::abs(z);
    const double g = gamma.gamma;
    const double lhs = (1.0 - unit) / unit;
    const double rhs = (g + r) * (g + r) / ((1.0 - g * g) * (1.0 - r * r));
    return rhs - lhs;
}

SharpConstants sharp_constants(const OzakiParams& params, std::optional<GammaParam> gamma,
                                   std::optional<GBetaParams> beta) {
    validate(params);
    SharpConstants out;
    out.lambda = params.lambda;
    const double c = 1.0 + 2.0 * params.lambda;
    out.pre_schwarzian_bound = c;
    out.schwarzian_printed_constant = 0.5 * c * (3.0 - 2.0 * params.lambda);
    if (gamma) {
        validate(*gamma);
        const double g = gamma->gamma;
        out.schwarzian_gamma_bound =
            c * (1.0 + 0.5 * (1.0 - 2.0 * params.lambda) * (1.0 + g) / (1.0 - g));
    }
    if (beta) {
        validate(*beta);
        out.harmonic_pre_bound = 2.0 * beta->beta + 1.0;
    }
    return out;
}

EnvelopeRow distortion_envelope(const OzakiParams& params, double r) {
    validate(params);
    if (!(r >= 0.0 && r < 1.0)) {
        throw BadParameter("envelope radius must lie in [0, 1)");
    }
    const double s = 0.5 * (1.0 + 2.0 * params.lambda);
    return {r, std::pow(1.0 + r * r, -s), std::pow(1.0 - r * r, -s)};
}

EnvelopeRow growth_envelope(const OzakiParams& params, double r, double tol) {
    validate(params);
    if (!(r >= 0.0 && r < 1.0)) {
        throw BadParameter("envelope radius must lie in [0, 1)");
    }
    const double s = 0.5 * (1.0 + 2.0 * params.lambda);
    const double lower =
        radial_integrate([s](double x) { return std::pow(1.0 + x * x, -s); }, r, tol);
    const double upper =
        radial_integrate([s](double x) { return std::pow(1.0 - x * x, -s); }, r, tol);
    return {r, lower, upper};
}

MtAudit mt_audit(const GBetaParams& params, double t, const GridSpec& grid, int order) {
    validate(params);
    if (!(t >= 0.0 && t < 1.0)) {
        throw BadParameter("t must lie in [0, 1)");
    }
    const double beta = params.beta;

    MtAudit audit;
    audit.t = t;

    if (t > 0.0) {
        audit.r0 = (1.0 - std::sqrt((1.0 - t * t) / beta)) / t;
        audit.r0_in_range = audit.r0 >= 0.0 && audit.r0 < 1.0;
        audit.m_printed = (1.0 + 2.0 * beta - 2.0 * beta * std::sqrt((1.0 - t * t) / beta)) / t;
        audit.m_printed_defined = true;
    } else {
        audit.r0 = std::numeric_limits<double>::quiet_NaN();
        audit.r0_in_range = false;
        audit.m_printed = std::numeric_limits<double>::quiet_NaN();
        audit.m_printed_defined = false;
    }

    // Endpoint-aware dense scan of |beta(1+r) - (r-t)/(1-tr)| plus a local
    // golden-section polish around the best sample.
    const double r_hi = 1.0 - 1e-9;
    const int scan = 4096;
    double best = -1.0;
    double best_r = 0.0;
    for (int i = 0; i <= scan; ++i) {
        const double r = r_hi * static_cast<double>(i) / scan;
        const double v = profile_abs(beta, t, r);
        if (v > best) {
            best = v;
            best_r = r;
        }
    }
    const double step = r_hi / scan;
    const double lo = std::max(0.0, best_r - step);
    const double hi = std::min(r_hi, best_r + step);
    audit.m_direct = std::max(best, golden_max([&](double r) { return profile_abs(beta, t, r); },
                                               lo, hi, 1e-12));

    // Disk supremum of the harmonic pre-Schwarzian for the sharpness family:
    // analytic part with f''/f' = -beta/(1-z) and dilatation omega_t.
    const FunctionHandle h = gbeta_member(BlaschkeDescriptor::unimodular(), beta, order);
    const HarmonicHandle F = make_harmonic(h, BlaschkeDescriptor::automorphism_factor(t));
    audit.disk_sup = norm_of(F, grid).value;
    return audit;
}

}  // namespace disknorm
