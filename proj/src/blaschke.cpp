#include "disknorm/blaschke.hpp"

#include <cmath>

namespace disknorm {

BlaschkeDescriptor::BlaschkeDescriptor(std::vector<Complex> zeros, double rotation,
                                       int origin_multiplicity)
    : zeros_(std::move(zeros)), rotation_(rotation), origin_multiplicity_(origin_multiplicity) {
    if (!std::isfinite(rotation_)) {
        throw NonFiniteValue("Blaschke rotation is not finite");
    }
    if (origin_multiplicity_ < 0) {
        throw BadParameter("Blaschke origin multiplicity must be >= 0");
    }
    for (const Complex& a : zeros_) {
        if (!is_finite(a)) {
            throw NonFiniteValue("Blaschke zero is not finite");
        }
        if (std::abs(a) >= 1.0) {
            throw BadParameter("Blaschke zeros must lie strictly inside the unit disk");
        }
    }
}

BlaschkeDescriptor BlaschkeDescriptor::zero_function() {
    BlaschkeDescriptor d;
    d.is_zero_ = true;
    return d;
}

BlaschkeDescriptor BlaschkeDescriptor::variable(double rotation) {
    return BlaschkeDescriptor({}, rotation, 1);
}

BlaschkeDescriptor BlaschkeDescriptor::unimodular(double rotation) {
    return BlaschkeDescriptor({}, rotation, 0);
}

BlaschkeDescriptor BlaschkeDescriptor::automorphism_factor(Complex a, double rotation) {
    return BlaschkeDescriptor({a}, rotation, 0);
}

bool BlaschkeDescriptor::vanishes_at_origin() const {
    if (is_zero_) {
        return true;
    }
    if (origin_multiplicity_ > 0) {
        return true;
    }
    for (const Complex& a : zeros_) {
        if (a == Complex(0.0, 0.0)) {
            return true;
        }
    }
    return false;
}

BlaschkeEval BlaschkeDescriptor::eval(Complex z) const {
    if (is_zero_) {
        return {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)};
    }

    // Running product of factor values with first and second derivatives:
    // (fg)'' = f''g + 2f'g' + fg''.
    Complex v = std::polar(1.0, rotation_);
    Complex d1(0.0, 0.0);
    Complex d2(0.0, 0.0);

    auto absorb = [&](Complex fv, Complex fd1, Complex fd2) {
        const Complex nd2 = d2 * fv + 2.0 * d1 * fd1 + v * fd2;
        const Complex nd1 = d1 * fv + v * fd1;
        d2 = nd2;
        d1 = nd1;
        v = v * fv;
    };

    if (origin_multiplicity_ > 0) {
        const int m = origin_multiplicity_;
        Complex zm1 = (m >= 2) ? std::pow(z, m - 1) : Complex(1.0, 0.0);
        Complex zm2 = (m >= 2) ? ((m >= 3) ? std::pow(z, m - 2) : Complex(1.0, 0.0))
                               : Complex(0.0, 0.0);
        absorb(zm1 * z, static_cast<double>(m) * zm1,
               static_cast<double>(m) * static_cast<double>(m - 1) * zm2);
    }

    for (const Complex& a : zeros_) {
        const Complex ca = std::conj(a);
        const Complex den = 1.0 - ca * z;
        const Complex fv = (z - a) / den;
        const double unit = 1.0 - std::norm(a);
        const Complex fd1 = unit / (den * den);
        const Complex fd2 = 2.0 * ca * unit / (den * den * den);
        absorb(fv, fd1, fd2);
    }

    return {v, d1, d2};
}

double BlaschkeDescriptor::one_minus_abs_sq(Complex z) const {
    if (is_zero_) {
        return 1.0;
    }
    // 1 - p1 p2 ... pn = sum_i (prod_{j<i} pj) (1 - pi), all terms nonnegative
    const double zc = (1.0 - std::abs(z)) * (1.0 + std::abs(z));  // 1 - |z|^2
    double one_minus = 0.0;
    double prod = 1.0;

    if (origin_multiplicity_ > 0) {
        const double z2 = std::norm(z);
        double geom = 0.0;
        double pw = 1.0;
        for (int j = 0; j < origin_multiplicity_; ++j) {
            geom += pw;
            pw *= z2;
        }
        one_minus = zc * geom;  // 1 - |z|^{2m}
        prod = pw;
    }

    for (const Complex& a : zeros_) {
        const double ac = (1.0 - std::abs(a)) * (1.0 + std::abs(a));
        const double den = std::norm(1.0 - std::conj(a) * z);
        const double factor_complement = ac * zc / den;
        one_minus += prod * factor_complement;
        prod *= std::norm((z - a)) / den;
    }
    return one_minus;
}

PowerSeries BlaschkeDescriptor::series(int order) const {
    if (order < 1) {
        throw BadParameter("series order must be >= 1");
    }
    if (is_zero_) {
        return PowerSeries::zero(order);
    }

    // numerator e^{i rot} z^m prod (z - a_k), denominator prod (1 - conj(a_k) z)
    PowerSeries num = PowerSeries::constant(std::polar(1.0, rotation_), order);
    for (int j = 0; j < origin_multiplicity_ && j < order; ++j) {
        num = shift_up(num);
    }
    PowerSeries den = PowerSeries::constant(Complex(1.0, 0.0), order);
    for (const Complex& a : zeros_) {
        num = linear_combination(shift_up(num), num, Complex(1.0, 0.0), -a);
        den = linear_combination(shift_up(den), den, -std::conj(a), Complex(1.0, 0.0));
    }
    return quotient(num, den);
}

}  // namespace disknorm
