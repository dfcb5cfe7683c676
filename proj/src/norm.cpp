#include "disknorm/norm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace disknorm {

namespace {

// Hard ceiling for refinement steps toward the boundary of closed-form
// domains; keeps weights and dilatations clear of the singular circle.
constexpr double kBoundaryGap = 1e-9;

double weight_at(double r, int p) {
    const double w = (1.0 - r) * (1.0 + r);
    return (p == 2) ? w * w : w;
}

double weighted_value(const DerivativeField& field, double r, double theta, int p) {
    const Complex z = std::polar(r, theta);
    return weight_at(r, p) * std::abs(field.eval(z));
}

}  // namespace

void validate(const GridSpec& grid) {
    if (grid.radii_count < 2 || grid.angle_count < 4 || !(grid.r_max > 0.0) ||
        !(grid.r_max < 1.0)) {
        throw EmptyGrid("grid needs >= 2 radii, >= 4 angles and r_max in (0, 1)");
    }
    if (!(grid.refine_tol > 0.0)) {
        throw EmptyGrid("refinement tolerance must be positive");
    }
}

NormEstimate weighted_sup(const DerivativeField& field, int weight_power, const GridSpec& grid) {
    validate(grid);
    if (weight_power != 1 && weight_power != 2) {
        throw BadParameter("weight power must be 1 or 2");
    }

    GridSpec used = grid;
    used.r_max = std::min(grid.r_max, field.domain_radius);
    const int nr = used.radii_count;
    const int na = used.angle_count;

    double best = -1.0;
    double best_r = 0.0;
    double best_th = 0.0;
    for (int i = 0; i < nr; ++i) {
        // sin spacing clusters radii toward r_max; the i/nr fraction keeps
        // grids nested when counts double, so finite-sample sups are monotone
        const double r =
            used.r_max * std::sin(0.5 * std::numbers::pi * static_cast<double>(i) / nr);
        for (int k = 0; k < na; ++k) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / na;
            const double v = weighted_value(field, r, th, weight_power);
            if (v > best) {
                best = v;
                best_r = r;
                best_th = th;
            }
            if (r == 0.0) {
                break;  // all angles coincide at the origin
            }
        }
    }

    NormEstimate est;
    est.grid = used;
    est.refined = false;

    if (used.refine) {
        const double cap = std::min(field.domain_radius, 1.0 - kBoundaryGap);
        double dr = used.r_max / (nr - 1);
        double dth = 2.0 * std::numbers::pi / na;
        double r = best_r;
        double th = best_th;
        double val = best;
        int guard = 0;
        while ((dr > used.refine_tol || dth > used.refine_tol) && guard++ < 100000) {
            double cand_r = r;
            double cand_th = th;
            double cand_val = val;
            const double rs[2] = {std::min(cap, r + dr), std::max(0.0, r - dr)};
            for (double rn : rs) {
                const double v = weighted_value(field, rn, th, weight_power);
                if (v > cand_val) {
                    cand_val = v;
                    cand_r = rn;
                    cand_th = th;
                }
            }
            const double ths[2] = {th + dth, th - dth};
            for (double tn : ths) {
                const double v = weighted_value(field, r, tn, weight_power);
                if (v > cand_val) {
                    cand_val = v;
                    cand_r = r;
                    cand_th = tn;
                }
            }
            if (cand_val > val) {
                r = cand_r;
                th = cand_th;
                val = cand_val;
            } else {
                dr *= 0.5;
                dth *= 0.5;
            }
        }
        best = val;
        best_r = r;
        best_th = th;
        est.refined = true;
    }

    est.value = best;
    est.argmax = std::polar(best_r, best_th);
    return est;
}

NormEstimate norm_of(const FunctionHandle& f, NormKind kind, const GridSpec& grid) {
    if (kind == NormKind::PreSchwarzian) {
        return weighted_sup(make_field(f, FieldKind::PreSchwarzian), 1, grid);
    }
    return weighted_sup(make_field(f, FieldKind::Schwarzian), 2, grid);
}

NormEstimate norm_of(const HarmonicHandle& F, const GridSpec& grid) {
    return weighted_sup(make_harmonic_pre_field(F), 1, grid);
}

BeckerReport becker_functional(const FunctionHandle& f, const GridSpec& grid) {
    BeckerReport report;
    report.estimate = weighted_sup(make_field(f, FieldKind::BeckerIntegrand), 1, grid);
    report.criterion_satisfied = report.estimate.value <= 1.0;
    return report;
}

}  // namespace disknorm
