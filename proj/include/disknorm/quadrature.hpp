#pragma once

#include <cmath>
#include <complex>

#include "disknorm/errors.hpp"

namespace disknorm {

namespace detail {

template <typename T>
double magnitude(T v) {
    return std::abs(v);
}

// Classic adaptive Simpson with the 1/15 error estimate. The interval budget
// caps runaway subdivision at 2^16 panels.
template <typename F, typename T>
T adaptive_simpson(const F& g, double a, double b, T fa, T fm, T fb, double tol, double whole_a,
                   double whole_b, T s_whole, int* budget, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = g(lm);
    const T frm = g(rm);
    const T s_left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T s_right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T s2 = s_left + s_right;
    if (depth > 0 && magnitude(s2 - s_whole) <= 15.0 * tol) {
        return s2 + (s2 - s_whole) / 15.0;
    }
    if (--(*budget) <= 0 || depth > 48) {
        throw QuadratureFailure("adaptive quadrature exhausted its subdivision budget");
    }
    (void)whole_a;
    (void)whole_b;
    return adaptive_simpson(g, a, m, fa, flm, fm, 0.5 * tol, a, m, s_left, budget, depth + 1) +
           adaptive_simpson(g, m, b, fm, frm, fb, 0.5 * tol, m, b, s_right, budget, depth + 1);
}

template <typename F>
auto run_simpson(const F& g, double a, double b, double tol) {
    using T = decltype(g(a));
    if (!(tol > 0.0)) {
        throw BadParameter("quadrature tolerance must be positive");
    }
    if (a == b) {
        return T{};
    }
    int budget = 1 << 16;
    const T fa = g(a);
    const T fb = g(b);
    const T fm = g(0.5 * (a + b));
    const T s = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(g, a, b, fa, fm, fb, tol, a, b, s, &budget, 0);
}

}  // namespace detail

// Integral of a real continuous integrand over [0, r] with absolute error
// near tol. Throws QuadratureFailure when the budget runs out.
template <typename F>
double radial_integrate(const F& g, double r, double tol) {
    if (!(r >= 0.0)) {
        throw BadParameter("radial integration needs r >= 0");
    }
    return detail::run_simpson(g, 0.0, r, tol);
}

// Same scheme for complex-valued integrands over [a, b].
template <typename F>
auto integrate_segment(const F& g, double a, double b, double tol) {
    return detail::run_simpson(g, a, b, tol);
}

}  // namespace disknorm
