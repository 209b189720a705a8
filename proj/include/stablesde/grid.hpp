#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "stablesde/vec.hpp"

namespace stablesde {

/// Uniform-grid function on an interval (a,b) with an exterior extension.
/// n interior nodes, spacing h = (b-a)/(n+1), node i at a + (i+1)h; the
/// exterior callable supplies values outside [a,b] (default 0).
struct GridFunction1D {
    double a = -1.0;
    double b = 1.0;
    std::vector<double> values;                     // interior nodal values
    std::function<double(double)> exterior;         // g on (a,b)^c

    GridFunction1D() = default;
    GridFunction1D(double a_, double b_, std::vector<double> vals,
                   std::function<double(double)> g = nullptr)
        : a(a_), b(b_), values(std::move(vals)), exterior(std::move(g)) {
        if (!(b > a)) throw std::invalid_argument("grid requires a < b");
    }

    int n() const { return static_cast<int>(values.size()); }
    double h() const { return (b - a) / (n() + 1); }
    double node(int i) const { return a + (i + 1) * h(); }

    double exterior_value(double x) const { return exterior ? exterior(x) : 0.0; }

    /// Value at node i, or the exterior/boundary value for ghost indices.
    double at(int i) const {
        if (i >= 0 && i < n()) return values[static_cast<std::size_t>(i)];
        return exterior_value(i < 0 ? a : b);
    }

    /// Piecewise-linear evaluation anywhere (exterior callable outside).
    double operator()(double x) const {
        if (x <= a || x >= b) return exterior_value(x);
        double t = (x - a) / h() - 1.0;
        int i = static_cast<int>(std::floor(t));
        double frac = t - i;
        double lo = (i < 0) ? exterior_value(a) : at(i);
        double hi = (i + 1 >= n()) ? exterior_value(b) : at(i + 1);
        return (1.0 - frac) * lo + frac * hi;
    }
};

}  // namespace stablesde
