#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stablesde/constants.hpp"
#include "stablesde/vec.hpp"

namespace stablesde {

/// Gauss-Kronrod 7/15 on [a,b]; err receives the usual |G7-K15| based estimate.
template <class F>
double quad_gk15(const F& f, double a, double b, double& err) {
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529}};
    const double x0 = 0.5 * (a + b);
    const double m = b - x0;
    double y0 = f(x0);
    double g7 = nw[0][1] * y0;
    double k15 = nw[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        double dx = m * nw[i][0];
        double yi = f(x0 + dx) + f(x0 - dx);
        g7 += nw[i][1] * yi;
        k15 += nw[i][2] * yi;
    }
    g7 *= m;
    k15 *= m;
    double diff = std::fabs(g7 - k15);
    err = 200.0 * diff * std::sqrt(200.0 * diff);
    return k15;
}

/// Adaptive GK15 by interval bisection. Splits the worst panels first via a
/// simple stack; throws nothing, returns best effort with achieved_err set.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double rel_tol, double abs_tol,
                          double* achieved_err = nullptr, int max_panels = 4000) {
    struct Panel {
        double a, b, val, err;
    };
    std::vector<Panel> done;
    std::vector<Panel> todo;
    double e0;
    double v0 = quad_gk15(f, a, b, e0);
    todo.push_back({a, b, v0, e0});
    int used = 1;
    while (!todo.empty()) {
        Panel p = todo.back();
        todo.pop_back();
        double sum_guess = p.val;
        for (const auto& q : done) sum_guess += q.val;
        for (const auto& q : todo) sum_guess += q.val;
        if (p.err < abs_tol || p.err < rel_tol * std::fabs(sum_guess) ||
            used >= max_panels || p.b - p.a < 1e-14 * (std::fabs(p.a) + std::fabs(p.b) + 1.0)) {
            done.push_back(p);
            continue;
        }
        double mid = 0.5 * (p.a + p.b);
        double e1, e2;
        double v1 = quad_gk15(f, p.a, mid, e1);
        double v2 = quad_gk15(f, mid, p.b, e2);
        todo.push_back({p.a, mid, v1, e1});
        todo.push_back({mid, p.b, v2, e2});
        ++used;
    }
    double total = 0.0, toterr = 0.0;
    for (const auto& q : done) {
        total += q.val;
        toterr += q.err;
    }
    if (achieved_err) *achieved_err = toterr;
    return total;
}

/// Adaptive integration with interior breakpoints (kinks, bump edges).
template <class F>
double integrate_adaptive_split(const F& f, std::vector<double> pts, double rel_tol,
                                double abs_tol, double* achieved_err = nullptr) {
    double total = 0.0, toterr = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!(pts[i + 1] > pts[i])) continue;
        double e;
        total += integrate_adaptive(f, pts[i], pts[i + 1], rel_tol, abs_tol, &e);
        toterr += e;
    }
    if (achieved_err) *achieved_err = toterr;
    return total;
}

/// Log-spaced panel edges on [a,b], `per_decade` panels per factor of 10.
inline std::vector<double> log_panel_edges(double a, double b, int per_decade) {
    int n = std::max(4, static_cast<int>(std::ceil(std::log10(b / a) * per_decade)));
    std::vector<double> e(static_cast<std::size_t>(n) + 1);
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / n);
    e.front() = a;
    e.back() = b;
    return e;
}

/// Nodes/weights of an angular rule on S^{d-1}, d <= 3. d=1: the two signs.
/// d=2: uniform midpoint rule on the circle (spectrally accurate for smooth
/// integrands). d=3: Gauss-Legendre in cos(theta) x uniform in phi.
struct AngularRule {
    std::vector<Vec> dirs;
    std::vector<double> weights;  // sum to sphere_surface(d)
};

namespace detail {
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    // Newton iteration on Legendre polynomials
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::fabs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[static_cast<std::size_t>(i)] = t;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}
}  // namespace detail

inline AngularRule angular_rule(int d, int order) {
    AngularRule r;
    if (d == 1) {
        r.dirs = {Vec{1.0}, Vec{-1.0}};
        r.weights = {1.0, 1.0};
    } else if (d == 2) {
        int n = std::max(8, order);
        for (int i = 0; i < n; ++i) {
            double th = 2.0 * kPi * (i + 0.5) / n;
            r.dirs.push_back(Vec{std::cos(th), std::sin(th)});
            r.weights.push_back(2.0 * kPi / n);
        }
    } else if (d == 3) {
        int nt = std::max(6, order / 2), np = std::max(8, order);
        std::vector<double> ct, wt;
        detail::gauss_legendre(nt, ct, wt);
        for (int i = 0; i < nt; ++i) {
            double st = std::sqrt(std::max(0.0, 1.0 - ct[static_cast<std::size_t>(i)] *
                                                       ct[static_cast<std::size_t>(i)]));
            for (int j = 0; j < np; ++j) {
                double ph = 2.0 * kPi * (j + 0.5) / np;
                r.dirs.push_back(
                    Vec{st * std::cos(ph), st * std::sin(ph), ct[static_cast<std::size_t>(i)]});
                r.weights.push_back(wt[static_cast<std::size_t>(i)] * 2.0 * kPi / np);
            }
        }
    } else {
        throw std::invalid_argument("angular rules support d <= 3");
    }
    return r;
}

/// Configuration of the singular-integral evaluation in apply_generator.
/// Core |z| <= delta uses second-order Taylor compensation; the mid range
/// (delta,1] uses the gradient-compensated difference; (1,R_max] the plain
/// difference with a power-law closure beyond R_max.
struct QuadratureScheme {
    double delta = 1e-3;          // singular-core radius
    double r_max = 1e4;           // numeric tail truncation
    int nodes_per_decade = 24;    // radial GK panels per decade (adaptive inside)
    int angular_order = 32;       // angular rule order for d >= 2
    double tolerance = 1e-6;      // relative Cauchy tolerance for refinement
    bool check_convergence = false;  // re-run refined and compare

    void validate() const {
        if (!(0.0 < delta && delta < 1.0 && 1.0 < r_max))
            throw std::invalid_argument("quadrature scheme requires 0 < delta < 1 < r_max");
        if (nodes_per_decade < 4) throw std::invalid_argument("nodes_per_decade >= 4");
    }
};

/// Two-sample Kolmogorov-Smirnov test helper: returns the KS statistic and
/// fills p with the asymptotic p-value.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b, double* p = nullptr) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::size_t i = 0, j = 0;
    double dmax = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        double fa = static_cast<double>(i) / a.size();
        double fb = static_cast<double>(j) / b.size();
        dmax = std::max(dmax, std::fabs(fa - fb));
    }
    if (p) {
        double n_eff = std::sqrt(static_cast<double>(a.size()) * b.size() /
                                 static_cast<double>(a.size() + b.size()));
        double lam = (n_eff + 0.12 + 0.11 / n_eff) * dmax;
        double s = 0.0;
        for (int k = 1; k <= 100; ++k)
            s += 2.0 * ((k % 2) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lam * lam);
        *p = std::min(1.0, std::max(0.0, s));
    }
    return dmax;
}

}  // namespace stablesde
