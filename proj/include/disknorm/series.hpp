#pragma once

#include <complex>
#include <vector>

#include "disknorm/errors.hpp"

namespace disknorm {

using Complex = std::complex<double>;

inline bool is_finite(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Truncated Taylor series sum_{k=0}^{N} c_k z^k, degree-0 coefficient first.
///
/// Every stored coefficient is finite and N >= 1. Values are immutable after
/// construction; all operations below are pure functions, so concurrent use
/// needs no synchronization. Evaluation of a truncated series is documented
/// valid for |z| <= kSeriesDomainRadius; nothing is enforced at call sites.
class PowerSeries {
public:
    // A single coefficient is padded to order 1; an empty list is rejected.
    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries zero(int order);
    static PowerSeries constant(Complex c, int order = 1);
    static PowerSeries monomial(int degree, int order = -1);  // z^degree

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Coefficient of z^k; zero beyond the stored order.
    Complex coeff(int k) const {
        return (k >= 0 && k <= order()) ? coeffs_[static_cast<size_t>(k)] : Complex(0.0, 0.0);
    }

    // Horner evaluation of the truncated polynomial.
    Complex operator()(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

// Series-backed evaluations are documented valid up to this radius; closer to
// the boundary the truncation tail is uncontrolled.
inline constexpr double kSeriesDomainRadius = 0.95;

// Default truncation order for reconstructed functions.
inline constexpr int kDefaultSeriesOrder = 256;

// Coefficientwise alpha*a + beta*b. Shorter input is zero padded; the result
// carries the longer order.
PowerSeries linear_combination(const PowerSeries& a, const PowerSeries& b,
                               Complex alpha, Complex beta);

// Cauchy product truncated to the longer input order.
PowerSeries product(const PowerSeries& a, const PowerSeries& b);

// Series q with product(q, b) = a through the common order.
// Throws DivisionByNonUnit when the constant term of b is exactly zero.
PowerSeries quotient(const PowerSeries& a, const PowerSeries& b);

// Termwise derivative (order drops by one, never below 1).
PowerSeries derivative(const PowerSeries& a);

// Termwise antiderivative with zero constant term (order grows by one).
PowerSeries antiderivative(const PowerSeries& a);

// exp of a series through the input order, via e' = a' e; a nonzero constant
// term contributes the scalar factor exp(a_0).
PowerSeries exp_series(const PowerSeries& a);

// Multiplication by z at fixed order (top coefficient truncates away).
PowerSeries shift_up(const PowerSeries& a);

// Copy truncated or zero padded to the requested order.
PowerSeries truncated(const PowerSeries& a, int order);

}  // namespace disknorm
