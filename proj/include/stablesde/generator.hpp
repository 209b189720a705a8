#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "stablesde/constants.hpp"
#include "stablesde/errors.hpp"
#include "stablesde/kernel.hpp"
#include "stablesde/probe.hpp"
#include "stablesde/quadrature.hpp"

namespace stablesde {

struct GeneratorValue {
    double value;
    double error;  // quadrature error estimate incl. core/tail closure allowances
};

namespace detail {

/// Radial integral of g(r) over [a,b] on fixed log panels with GK15 per panel.
/// Panels are deterministic for a fixed scheme, which keeps the whole operator
/// evaluation linear in f (up to the tail closure, see below).
template <class G>
double radial_fixed_panels(const G& g, double a, double b, int per_decade, double& err_acc,
                           const std::vector<double>& breakpoints) {
    if (!(b > a)) return 0.0;
    std::vector<double> edges = log_panel_edges(a, b, per_decade);
    if (!breakpoints.empty()) {
        for (double s : breakpoints)
            if (s > a && s < b) edges.push_back(s);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double e;
        total += quad_gk15(g, edges[i], edges[i + 1], e);
        err_acc += e;
    }
    return total;
}

struct TailClosure {
    double value = 0.0;
    bool divergent = false;
};

/// Power-law closure of the tail integral beyond r_max along one direction:
/// fits g(r) ~ c r^{-1-p} from two probes and integrates the fit to infinity.
/// Skipped (exactly zero) when the integrand is already negligible, so the
/// operator stays linear in f for bounded probes.
template <class G>
TailClosure tail_closure(const G& g, double r_max, double scale_floor) {
    TailClosure tc;
    double g1 = g(r_max);
    if (std::fabs(g1) < scale_floor) return tc;
    double r0 = r_max / 4.0;
    double g0 = g(r0);
    if (std::fabs(g0) < scale_floor || g0 * g1 <= 0.0) return tc;
    double p = -(1.0 + std::log(std::fabs(g1 / g0)) / std::log(r_max / r0));
    if (p < 0.05) {
        tc.divergent = true;
        return tc;
    }
    tc.value = g1 * r_max / p;
    return tc;
}

}  // namespace detail

/// Deterministic quadrature evaluation of
///   I f(x) = b(x).grad f(x) + int df(x;z) k(x,z) |z|^{-d-alpha} dz.
///
/// Splits |z| into three ranges. Core (0, delta]: the compensated difference
/// is replaced by its second-order Taylor model q(u) r^2 / 2 with q(u) the
/// numeric second directional difference; the model is integrated against the
/// actual kernel on log panels down to delta*1e-8 and closed analytically
/// below. Mid (delta, 1]: gradient-compensated difference. Tail (1, r_max]:
/// plain difference, with a power-law closure beyond r_max for growing f
/// (throws DivergentTail if the fitted decay cannot be integrated).
///
/// `breakpoints` are radii |z| where the integrand is known to be non-smooth
/// (kinks of f); they are inserted into the panel edges.
inline GeneratorValue apply_generator(const KernelModel& model, const SmoothProbe& f, const Vec& x,
                                      const QuadratureScheme& q,
                                      const std::vector<double>& breakpoints = {}) {
    q.validate();
    model.require_valid_alpha();
    const int d = model.dim;
    const double alpha = model.alpha;
    const AngularRule ang = angular_rule(d, q.angular_order);

    const double fx = f(x);
    const Vec gx = f.grad(x);
    const double fscale = std::max({1.0, std::fabs(fx), norm(gx)});

    double err = 0.0;
    double nonlocal = 0.0;

    // second directional differences for the core model
    const double h = std::min(q.delta, 1.2e-4 * (1.0 + norm(x)));
    const double delta0 = q.delta * 1e-8;

    bool tail_diverged = false;
    for (std::size_t a = 0; a < ang.dirs.size(); ++a) {
        const Vec& u = ang.dirs[a];
        const double w = ang.weights[a];

        const double qu = (f(x + h * u) - 2.0 * fx + f(x - h * u)) / (h * h);

        // core: (1/2) q(u) int_0^delta r^{1-alpha} k(x, r u) dr
        auto core_g = [&](double r) { return model.k(x, r * u) * std::pow(r, 1.0 - alpha); };
        double core_int = detail::radial_fixed_panels(core_g, delta0, q.delta,
                                                      q.nodes_per_decade, err, {});
        double stub_k = model.k(x, delta0 * u);
        double stub = stub_k * std::pow(delta0, 2.0 - alpha) / (2.0 - alpha);
        nonlocal += w * 0.5 * qu * (core_int + stub);
        err += std::fabs(w * 0.5 * qu * stub) * 0.5;  // k-variation allowance below delta0

        // mid: gradient-compensated difference on (delta, 1]
        const double gu = dot(gx, u);
        auto mid_g = [&](double r) {
            return (f(x + r * u) - fx - r * gu) * model.k(x, r * u) * std::pow(r, -1.0 - alpha);
        };
        nonlocal += w * detail::radial_fixed_panels(mid_g, q.delta, 1.0, q.nodes_per_decade, err,
                                                    breakpoints);

        // tail: plain difference on (1, r_max] + closure
        auto tail_g = [&](double r) {
            return (f(x + r * u) - fx) * model.k(x, r * u) * std::pow(r, -1.0 - alpha);
        };
        nonlocal += w * detail::radial_fixed_panels(tail_g, 1.0, q.r_max, q.nodes_per_decade, err,
                                                    breakpoints);
        auto tc = detail::tail_closure(tail_g, q.r_max, 1e-14 * fscale);
        if (tc.divergent) tail_diverged = true;
        nonlocal += w * tc.value;
        err += std::fabs(w * tc.value) * 0.5;
    }
    if (tail_diverged)
        throw DivergentTail("integrand does not decay beyond r_max; f grows too fast");

    double value = dot(model.b(x), gx) + nonlocal;

    if (q.check_convergence) {
        QuadratureScheme fine = q;
        fine.check_convergence = false;
        fine.delta = 0.5 * q.delta;
        fine.nodes_per_decade = 2 * q.nodes_per_decade;
        GeneratorValue refined = apply_generator(model, f, x, fine, breakpoints);
        if (std::fabs(refined.value - value) > q.tolerance * std::max(1.0, std::fabs(value)))
            throw QuadratureNotConverged("generator value changed beyond tolerance on refinement");
        return {refined.value, std::fabs(refined.value - value) + err};
    }
    return {value, err};
}

/// (-Delta)^s f(x) in the Fourier-symbol convention (see constants.hpp):
/// -c(d,2s) * int df(x;z)|z|^{-d-2s} dz with s = alpha/2 in (1/2, 1).
inline GeneratorValue frac_laplacian(const SmoothProbe& f, const Vec& x, double s,
                                     const QuadratureScheme& q,
                                     const std::vector<double>& breakpoints = {}) {
    if (!(s > 0.5 && s < 1.0)) throw std::invalid_argument("s must lie in (1/2,1)");
    KernelModel unit;
    unit.dim = x.dim();
    unit.alpha = 2.0 * s;
    unit.numerator = [](const Vec&, const Vec&) { return 1.0; };
    unit.class_tag = KernelClass::SymmetricNumerator;
    unit.unit_numerator = true;
    GeneratorValue g = apply_generator(unit, f, x, q, breakpoints);
    double c = stable_norm_const(x.dim(), 2.0 * s);
    return {-c * g.value, c * g.error};
}

/// Kelvin transform x -> |x|^{alpha-d} f(x/|x|^2); evaluation at the origin
/// is undefined.
inline SmoothProbe kelvin_transform(const SmoothProbe& f, double alpha, int dim) {
    SmoothProbe g;
    auto fv = f.value;
    g.value = [fv, alpha, dim](const Vec& x) {
        double r2 = norm2(x);
        if (!(r2 > 0.0)) throw EvaluationAtOrigin("kelvin transform evaluated at the origin");
        Vec xs = (1.0 / r2) * x;
        return std::pow(std::sqrt(r2), alpha - dim) * fv(xs);
    };
    return g;
}

// ---------------------------------------------------------------------------
// Barrier integrals of the supersolution construction:
//   A(q) = int_R ([(1-z)^+]^q - 1) |z|^{-1-2s} dz = B(q) - 1/(2s),
//   B(q) = int_0^inf (z^q - 1)|1-z|^{-1-2s} dz
//        = int_0^1 (z^q - 1)(1 - z^{2s-1-q})(1-z)^{-1-2s} dz,
// the second form being integrable for q in (s - 1/2, s].
// ---------------------------------------------------------------------------

namespace detail {
// test-only fault injection hooks (see tests); never set in production paths
struct TestHooks {
    bool flip_barrier_sign = false;
};
inline TestHooks& test_hooks() {
    static TestHooks h;
    return h;
}
}  // namespace detail

struct BarrierIntegrals {
    double a_value;
    double b_value;
};

inline BarrierIntegrals barrier_integrals(double s, double q_exponent) {
    if (!(s > 0.5 && s < 1.0)) throw std::invalid_argument("s in (1/2,1)");
    if (!(q_exponent > s - 0.5 && q_exponent <= s))
        throw std::invalid_argument("q in (s-1/2, s]");
    const double c = 2.0 * s - 1.0 - q_exponent;  // in [s-1, s-1/2+...), below 1
    auto h = [&](double z) {
        double sign = detail::test_hooks().flip_barrier_sign ? -1.0 : 1.0;
        return (std::pow(z, q_exponent) - 1.0) * (1.0 - sign * std::pow(z, c)) *
               std::pow(1.0 - z, -1.0 - 2.0 * s);
    };
    // substitutions z = v^2 near 0 and z = 1 - w^2 near 1 remove the endpoint
    // singularities; the middle piece is smooth
    auto near0 = [&](double v) { return 2.0 * v * h(v * v); };
    auto near1 = [&](double w) { return 2.0 * w * h(1.0 - w * w); };
    double e1, e2, e3;
    double b = integrate_adaptive(near0, 0.0, 0.5, 1e-12, 1e-13, &e1) +
               integrate_adaptive(h, 0.25, 0.75, 1e-12, 1e-13, &e2) +
               integrate_adaptive(near1, 0.0, 0.5, 1e-12, 1e-13, &e3);

    // epsilon-excision Cauchy check of the singular endpoint handling
    auto excised = [&](double eps) {
        double e;
        return integrate_adaptive(h, eps, 1.0 - eps, 1e-12, 1e-14, &e, 8000);
    };
    double c1 = excised(1e-5), c2 = excised(1e-6);
    if (!(std::fabs(b - c2) < std::max(10.0 * std::fabs(c2 - c1), 1e-7)))
        throw SingularityNotResolved("excised integrals do not approach the substituted value");

    return {b - 1.0 / (2.0 * s), b};
}

}  // namespace stablesde
