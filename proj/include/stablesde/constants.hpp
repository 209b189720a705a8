#pragma once

#include <cmath>

namespace stablesde {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Surface measure of the unit sphere S^{d-1}: 2, 2*pi, 4*pi for d = 1,2,3.
inline double sphere_surface(int d) {
    return 2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d);
}

/// Normalization constant c(d,alpha) of the fractional Laplacian, pinned to
/// the Fourier-symbol convention: with s = alpha/2,
///
///   (-Delta)^s f(x) = -c(d,alpha) * int df(x;z) |z|^{-d-alpha} dz,
///   Fourier symbol |xi|^{2s}.
///
/// Closed form: c(d,alpha) = 2^{alpha-1} alpha Gamma((d+alpha)/2)
///                           / ( pi^{d/2} Gamma(1 - alpha/2) ).
/// This one function is the single source of the convention; everything that
/// relates kernels to processes (sampler scale, oracle cross-checks) uses it.
inline double stable_norm_const(int d, double alpha) {
    return std::pow(2.0, alpha - 1.0) * alpha * std::tgamma(0.5 * (d + alpha)) /
           (std::pow(kPi, 0.5 * d) * std::tgamma(1.0 - 0.5 * alpha));
}

/// (-Delta)^s applied to (1-|x|^2)_+^s is this constant on the unit ball:
/// 4^s Gamma(1+s) Gamma(d/2+s) / Gamma(d/2).  Used as a quadrature oracle.
inline double getoor_constant(int d, double s) {
    return std::pow(4.0, s) * std::tgamma(1.0 + s) * std::tgamma(0.5 * d + s) /
           std::tgamma(0.5 * d);
}

/// Unit-time scale of the Levy process whose jump measure is |z|^{-d-alpha}dz
/// (a k == 1 kernel model *without* the c(d,alpha) factor): the process equals
/// L_{t/c(d,alpha)} with L the symbol-|xi|^alpha stable process, so increments
/// over dt are (dt/c(d,alpha))^{1/alpha} times a unit stable variate.
inline double unit_kernel_time_factor(int d, double alpha) {
    return 1.0 / stable_norm_const(d, alpha);
}

}  // namespace stablesde
