#pragma once

#include <memory>
#include <optional>
#include <string>

#include "disknorm/blaschke.hpp"
#include "disknorm/series.hpp"

namespace disknorm {

enum class FunctionKind {
    Identity,      // f(z) = z
    Koebe,         // f(z) = z / (1-z)^2
    HalfLog,       // f(z) = (1/2) log((1+z)/(1-z))
    ExtremalOzaki, // f'(z) = (1-z^2)^{-(1+2 lambda)/2}
    OzakiMember,   // generated from a Schwarz function, f''/f' = (1+2l) phi / (1 - z phi)
    GBetaMember,   // generated from a Schwarz function, f''/f' = -beta phi / (1 - z phi)
    SeriesBacked,  // truncated Taylor data only
};

/// Evaluable analytic function on the unit disk.
///
/// Handles are immutable values; series data is shared and never mutated, so
/// evaluation is safe from any number of threads. Closed-form kinds evaluate
/// everywhere in the disk; member and series-backed kinds evaluate f and its
/// derivatives through a truncated series, documented valid for
/// |z| <= kSeriesDomainRadius. Member kinds still carry closed-form
/// pre-Schwarzian and Schwarzian fields valid on the whole disk.
class FunctionHandle {
public:
    FunctionKind kind() const { return kind_; }
    double lambda() const { return lambda_; }
    double beta() const { return beta_; }
    const BlaschkeDescriptor& schwarz_function() const;

    // True when the pre-Schwarzian / Schwarzian fields have closed forms.
    bool closed_form_fields() const { return kind_ != FunctionKind::SeriesBacked; }
    // True when f itself is evaluated through a truncated series.
    bool series_backed_values() const;

    // Valid radius for the derivative fields (1 for closed forms).
    double field_domain_radius() const {
        return closed_form_fields() ? 1.0 : kSeriesDomainRadius;
    }
    // Valid radius for values of f, f', f''.
    double value_domain_radius() const {
        return series_backed_values() ? kSeriesDomainRadius : 1.0;
    }

    Complex value(Complex z) const;
    Complex first_derivative(Complex z) const;
    Complex second_derivative(Complex z) const;

    // f''(z)/f'(z) and its z-derivative over the closed-form path; series
    // kinds evaluate their precomputed ratio series. The generator coefficient
    // is (1+2 lambda) for Ozaki members and -beta for G members.
    Complex field_coefficient() const { return field_coefficient_; }

    // Stored series data (members and series-backed handles).
    bool has_series() const { return bundle_ != nullptr; }
    const PowerSeries& f_series() const;
    const PowerSeries& f1_series() const;
    const PowerSeries& f2_series() const;
    const PowerSeries& p_series() const;  // f''/f' (series-backed only)
    const PowerSeries& s_series() const;  // p' - p^2/2 (series-backed only)

    // Taylor series of f through `order`; closed-form kinds construct it,
    // member kinds rebuild from their Schwarz function when a longer order is
    // requested, series-backed handles can only truncate.
    PowerSeries series(int order) const;

    // Factories.
    static FunctionHandle identity();
    static FunctionHandle koebe();
    static FunctionHandle half_log();

    friend FunctionHandle extremal_ozaki(double lambda);
    friend FunctionHandle ozaki_member(const BlaschkeDescriptor& phi, double lambda, int order);
    friend FunctionHandle gbeta_member(const BlaschkeDescriptor& phi, double beta, int order);
    friend FunctionHandle series_function(PowerSeries f);

private:
    struct SeriesBundle {
        PowerSeries f;
        PowerSeries f1;
        PowerSeries f2;
        std::optional<PowerSeries> p;
        std::optional<PowerSeries> s;
    };

    FunctionHandle(FunctionKind kind) : kind_(kind) {}

    static FunctionHandle build_generated(FunctionKind kind, const BlaschkeDescriptor& phi,
                                          double param, Complex coeff, int order);

    FunctionKind kind_ = FunctionKind::Identity;
    double lambda_ = 0.0;
    double beta_ = 0.0;
    Complex field_coefficient_ = Complex(0.0, 0.0);
    std::optional<BlaschkeDescriptor> phi_;
    std::shared_ptr<const SeriesBundle> bundle_;
};

// Extremal member f_lambda with f'(z) = (1-z^2)^{-(1+2 lambda)/2} (principal
// branch), evaluated by radial quadrature for f itself.
FunctionHandle extremal_ozaki(double lambda);

// Ozaki close-to-convex member driven by a Schwarz function: the field
// f''/f' = (1+2 lambda) phi / (1 - z phi) is closed form, and f is
// reconstructed as a series via f' = exp(int f''/f'), f = int f'.
FunctionHandle ozaki_member(const BlaschkeDescriptor& phi, double lambda,
                            int order = kDefaultSeriesOrder);

// G(beta) member via the subordination of the class definition:
// f''/f' = -beta phi / (1 - z phi).
FunctionHandle gbeta_member(const BlaschkeDescriptor& phi, double beta,
                            int order = kDefaultSeriesOrder);

// Wrap raw truncated Taylor data (no renormalization). The ratio and
// Schwarzian series are precomputed here.
FunctionHandle series_function(PowerSeries f);

// Named closed forms by CLI-facing name: "identity", "koebe", "half_log".
FunctionHandle named_function(const std::string& name);

// T(f) for T(w) = (aw+b)/(cw+d), as a series-backed handle (not
// renormalized). Throws DegenerateMobius when ad - bc = 0 and PoleInDomain
// when |c f + d| < 1e-6 anywhere on the audit grid (24 radii to
// kSeriesDomainRadius x 48 angles, plus the origin).
FunctionHandle mobius_compose(const FunctionHandle& f, Complex a, Complex b, Complex c,
                              Complex d, int order = kDefaultSeriesOrder);

/// Harmonic mapping f = h + conj(g) with dilatation omega = g'/h'.
struct HarmonicHandle {
    FunctionHandle analytic_part;
    BlaschkeDescriptor dilatation;
};

HarmonicHandle make_harmonic(FunctionHandle h, BlaschkeDescriptor omega);

}  // namespace disknorm
