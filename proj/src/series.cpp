#include "disknorm/series.hpp"

#include <algorithm>

namespace disknorm {

namespace {

void check_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs) {
        if (!is_finite(c)) {
            throw NonFiniteValue("power series coefficient is not finite");
        }
    }
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw BadParameter("power series needs at least one coefficient");
    }
    if (coeffs_.size() == 1) {
        coeffs_.push_back(Complex(0.0, 0.0));
    }
    check_finite(coeffs_);
}

PowerSeries PowerSeries::zero(int order) {
    if (order < 1) {
        throw BadParameter("series order must be >= 1");
    }
    return PowerSeries(std::vector<Complex>(static_cast<size_t>(order) + 1, Complex(0.0, 0.0)));
}

PowerSeries PowerSeries::constant(Complex c, int order) {
    PowerSeries r = zero(order);
    r.coeffs_[0] = c;
    check_finite(r.coeffs_);
    return r;
}

PowerSeries PowerSeries::monomial(int degree, int order) {
    if (degree < 0) {
        throw BadParameter("monomial degree must be >= 0");
    }
    if (order < 0) {
        order = std::max(degree, 1);
    }
    if (order < degree) {
        throw BadParameter("monomial degree exceeds requested order");
    }
    PowerSeries r = zero(order);
    r.coeffs_[static_cast<size_t>(degree)] = Complex(1.0, 0.0);
    return r;
}

Complex PowerSeries::operator()(Complex z) const {
    Complex acc(0.0, 0.0);
    for (size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * z + coeffs_[k];
    }
    return acc;
}

PowerSeries linear_combination(const PowerSeries& a, const PowerSeries& b,
                               Complex alpha, Complex beta) {
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<size_t>(k)] = alpha * a.coeff(k) + beta * b.coeff(k);
    }
    return PowerSeries(std::move(c));
}

PowerSeries product(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= n; ++k) {
        Complex acc(0.0, 0.0);
        const int lo = std::max(0, k - b.order());
        const int hi = std::min(k, a.order());
        for (int i = lo; i <= hi; ++i) {
            acc += a.coeff(i) * b.coeff(k - i);
        }
        c[static_cast<size_t>(k)] = acc;
    }
    return PowerSeries(std::move(c));
}

PowerSeries quotient(const PowerSeries& a, const PowerSeries& b) {
    const Complex b0 = b.coeff(0);
    if (b0 == Complex(0.0, 0.0)) {
        throw DivisionByNonUnit("series division by a series with zero constant term");
    }
    const int n = std::max(a.order(), b.order());
    std::vector<Complex> q(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = a.coeff(k);
        for (int j = 1; j <= std::min(k, b.order()); ++j) {
            acc -= b.coeff(j) * q[static_cast<size_t>(k - j)];
        }
        q[static_cast<size_t>(k)] = acc / b0;
    }
    return PowerSeries(std::move(q));
}

PowerSeries derivative(const PowerSeries& a) {
    const int n = std::max(a.order() - 1, 1);
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0, 0.0));
    for (int k = 1; k <= a.order(); ++k) {
        c[static_cast<size_t>(k - 1)] = static_cast<double>(k) * a.coeff(k);
    }
    return PowerSeries(std::move(c));
}

PowerSeries antiderivative(const PowerSeries& a) {
    const int n = a.order() + 1;
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= a.order(); ++k) {
        c[static_cast<size_t>(k + 1)] = a.coeff(k) / static_cast<double>(k + 1);
    }
    return PowerSeries(std::move(c));
}

PowerSeries exp_series(const PowerSeries& a) {
    const int n = a.order();
    std::vector<Complex> e(static_cast<size_t>(n) + 1, Complex(0.0, 0.0));
    e[0] = std::exp(a.coeff(0));
    for (int k = 1; k <= n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * a.coeff(j) * e[static_cast<size_t>(k - j)];
        }
        e[static_cast<size_t>(k)] = acc / static_cast<double>(k);
    }
    return PowerSeries(std::move(e));
}

PowerSeries shift_up(const PowerSeries& a) {
    std::vector<Complex> c(static_cast<size_t>(a.order()) + 1, Complex(0.0, 0.0));
    for (int k = 1; k <= a.order(); ++k) {
        c[static_cast<size_t>(k)] = a.coeff(k - 1);
    }
    return PowerSeries(std::move(c));
}

PowerSeries truncated(const PowerSeries& a, int order) {
    if (order < 1) {
        throw BadParameter("series order must be >= 1");
    }
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= std::min(order, a.order()); ++k) {
        c[static_cast<size_t>(k)] = a.coeff(k);
    }
    return PowerSeries(std::move(c));
}

}  // namespace disknorm
