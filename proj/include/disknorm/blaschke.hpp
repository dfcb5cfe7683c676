#pragma once

#include <vector>

#include "disknorm/series.hpp"

namespace disknorm {

struct BlaschkeEval {
    Complex value;
    Complex d1;
    Complex d2;
};

/// Finite Blaschke product
///
///     phi(z) = e^{i rot} z^m prod_k (z - a_k) / (1 - conj(a_k) z),
///
/// plus the zero function as an explicit special case. Every zero lies
/// strictly inside the disk, so |phi| <= 1 on the closed disk by construction
/// and the poles stay outside it. These are the certified self-maps used to
/// drive the class generators and harmonic dilatations.
class BlaschkeDescriptor {
public:
    BlaschkeDescriptor(std::vector<Complex> zeros, double rotation, int origin_multiplicity);

    static BlaschkeDescriptor zero_function();
    // phi(z) = e^{i rotation} z
    static BlaschkeDescriptor variable(double rotation = 0.0);
    // phi == e^{i rotation} (empty product, unimodular constant)
    static BlaschkeDescriptor unimodular(double rotation = 0.0);
    // single factor e^{i rotation} (z - a) / (1 - conj(a) z)
    static BlaschkeDescriptor automorphism_factor(Complex a, double rotation = 0.0);

    bool is_zero() const { return is_zero_; }
    const std::vector<Complex>& zeros() const { return zeros_; }
    double rotation() const { return rotation_; }
    int origin_multiplicity() const { return origin_multiplicity_; }

    // Value together with first and second derivatives, by the product rule.
    BlaschkeEval eval(Complex z) const;
    Complex operator()(Complex z) const { return eval(z).value; }

    // 1 - |phi(z)|^2 without cancellation: each factor contributes its exact
    // complement (1-|a|^2)(1-|z|^2)/|1 - conj(a) z|^2 and the complements
    // telescope through the product. Stays accurate where |phi| -> 1.
    double one_minus_abs_sq(Complex z) const;

    Complex value_at_origin() const { return eval(Complex(0.0, 0.0)).value; }
    bool vanishes_at_origin() const;

    // Taylor coefficients through `order`, by polynomial expansion and one
    // series division.
    PowerSeries series(int order) const;

private:
    BlaschkeDescriptor() = default;

    std::vector<Complex> zeros_;
    double rotation_ = 0.0;
    int origin_multiplicity_ = 0;
    bool is_zero_ = false;
};

}  // namespace disknorm
