#pragma once

#include "disknorm/derivative.hpp"

namespace disknorm {

/// Polar sampling plan for weighted suprema. Radii are Chebyshev spaced so
/// points cluster toward r_max, where these fields peak; angles are uniform.
struct GridSpec {
    int radii_count = 96;
    int angle_count = 128;
    double r_max = 0.9995;
    bool refine = true;
    double refine_tol = 1e-6;
};

void validate(const GridSpec& grid);  // throws EmptyGrid

/// A finite-sample supremum: always a certified lower bound of the true sup.
struct NormEstimate {
    double value = 0.0;
    Complex argmax = Complex(0.0, 0.0);
    GridSpec grid;            // as actually used (r_max may have been clamped)
    bool refined = false;
    bool lower_bound_only = true;
};

// Max over the polar grid of (1 - |z|^2)^p |field(z)|, followed (when
// grid.refine) by a pattern search in (r, theta) from the best grid point
// until the step drops below refine_tol. The search may pass the grid's
// r_max but never the field's domain radius. Series-backed fields clamp
// r_max to kSeriesDomainRadius. Deterministic for a fixed GridSpec.
NormEstimate weighted_sup(const DerivativeField& field, int weight_power, const GridSpec& grid);

enum class NormKind {
    PreSchwarzian,  // weight power 1
    Schwarzian,     // weight power 2
};

NormEstimate norm_of(const FunctionHandle& f, NormKind kind, const GridSpec& grid = {});

// Harmonic pre-Schwarzian norm (weight power 1).
NormEstimate norm_of(const HarmonicHandle& F, const GridSpec& grid = {});

/// Becker functional sup |z P_f(z)| (1 - |z|^2) with the univalence verdict.
/// The criterion is sufficient only: a value above 1 is inconclusive, never a
/// disproof of univalence.
struct BeckerReport {
    NormEstimate estimate;
    bool criterion_satisfied = false;  // value <= 1
};

BeckerReport becker_functional(const FunctionHandle& f, const GridSpec& grid = {});

}  // namespace disknorm
