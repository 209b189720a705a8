#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "stablesde/vec.hpp"

namespace stablesde {

/// A test function f for the operator: value everywhere, optional analytic
/// gradient (central finite differences otherwise, step eps^{1/3}(1+|x|)),
/// optional sup bound on the Hessian for the singular-core error estimate.
struct SmoothProbe {
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;  // optional
    std::optional<double> hessian_bound;

    double operator()(const Vec& x) const { return value(x); }

    Vec grad(const Vec& x) const {
        if (gradient) return gradient(x);
        static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
        double h = h0 * (1.0 + norm(x));
        Vec g(x.dim());
        for (int i = 0; i < x.dim(); ++i) {
            Vec xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            g[i] = (value(xp) - value(xm)) / (2.0 * h);
        }
        return g;
    }

    static SmoothProbe constant(double c, int /*dim*/ = 1) {
        SmoothProbe p;
        p.value = [c](const Vec&) { return c; };
        p.gradient = [](const Vec& x) { return Vec::zero(x.dim()); };
        p.hessian_bound = 0.0;
        return p;
    }
};

}  // namespace stablesde
