#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stablesde/constants.hpp"
#include "stablesde/domain.hpp"
#include "stablesde/errors.hpp"
#include "stablesde/quadrature.hpp"
#include "stablesde/rng.hpp"
#include "stablesde/vec.hpp"

namespace stablesde {

enum class KernelClass { SymmetricNumerator, WeaklyHoelder, GeneralMeasurable, VariableOrder };

/// Dominating envelope for jump thinning: pi(x,z) <= amplitude(x) * |z|^{-d-alpha_env}
/// for all |z| >= eps_floor. Each registry kernel documents its own envelope.
struct JumpEnvelope {
    double alpha_env;
    double eps_floor;  // smallest cutoff the amplitude is valid for
    std::function<double(const Vec&)> amplitude;
};

/// Data of the operator
///   I f(x) = b(x).grad f(x) + int df(x;z) k(x,z) / |z|^{d+alpha} dz,
/// with df(x;z) = f(x+z) - f(x) - 1_{|z|<=1} grad f(x).z.  The kernel is
/// exactly k(x,z)/|z|^{d+alpha}; no hidden normalization (see constants.hpp
/// for how k == 1 relates to the symbol-|xi|^alpha stable process).
struct KernelModel {
    int dim = 1;
    double alpha = 1.5;  // in (1,2), strictly
    std::function<Vec(const Vec&)> drift;
    std::function<double(const Vec&, const Vec&)> numerator;  // k(x,z) > 0
    KernelClass class_tag = KernelClass::GeneralMeasurable;
    std::optional<double> lambda_bound;   // two-sided bound on k and |b| <= lambda
    std::optional<JumpEnvelope> envelope;
    std::string name = "custom";

    bool has_drift = false;
    bool unit_numerator = false;  // k == 1: path engine may use exact stable increments

    double k(const Vec& x, const Vec& z) const { return numerator(x, z); }
    Vec b(const Vec& x) const { return has_drift ? drift(x) : Vec::zero(dim); }

    void require_valid_alpha() const {
        if (!(alpha > 1.0 && alpha < 2.0))
            throw std::invalid_argument("alpha must lie strictly in (1,2)");
    }
};

// ---------------------------------------------------------------------------
// The smooth cutoff used by the variable-order kernel.
//
// phi is radial, C^2, monotone, with phi = 1 on [0,1/2] and phi = 0 on
// [1,inf).  The bridge on [1/2,1] is the polynomial
//     phi(r) = 1 - S(u^8),  u = (r - 1/2)/(1/2),  S(w) = 6w^5 - 15w^4 + 10w^3.
// S and u^8 are C^2-compatible at both ends (all first and second derivatives
// vanish at u = 0 and u = 1).  The u^8 composition keeps phi close to 1 over
// most of the bridge, which widens the heavy-tailed band of the kernel below.
// ---------------------------------------------------------------------------
inline double bump_phi(double r) {
    r = std::fabs(r);
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    double u = (r - 0.5) / 0.5;
    double w = u * u * u * u;
    w *= w;  // u^8
    double s = w * w * w * (10.0 + w * (-15.0 + 6.0 * w));
    return 1.0 - s;
}

inline double bump_phi(const Vec& x) { return bump_phi(norm(x)); }

/// Variable-order kernel of the form
///   pi(x,z) = |z|^{-d-alpha} + |z|^{-d-beta' - gamma(x,z)},
///   gamma(x,z) = phi(2(x+z)/(1+|x|)) (1 - phi(4x)) (alpha' - beta'),
/// with 1 < alpha' < beta' < alpha < 2.  The numerator in KernelModel form is
/// k(x,z) = 1 + |z|^{alpha - beta' - gamma(x,z)}.
struct VariableOrderKernel {
    double alpha_prime;
    double beta_prime;
    double alpha;

    VariableOrderKernel(double ap, double bp, double a)
        : alpha_prime(ap), beta_prime(bp), alpha(a) {
        if (!(1.0 < ap && ap < bp && bp < a && a < 2.0))
            throw std::invalid_argument("variable-order kernel needs 1 < a' < b' < a < 2");
    }

    double gamma(const Vec& x, const Vec& z) const {
        Vec y = x + z;
        double scale = 2.0 / (1.0 + norm(x));
        return bump_phi(scale * norm(y)) * (1.0 - bump_phi(4.0 * norm(x))) *
               (alpha_prime - beta_prime);
    }

    double pi(const Vec& x, const Vec& z) const {
        double az = norm(z);
        return std::pow(az, -(x.dim() + alpha)) +
               std::pow(az, -(x.dim() + beta_prime + gamma(x, z)));
    }

    /// k(x,z) such that pi = k/|z|^{d+alpha}.
    double numerator(const Vec& x, const Vec& z) const {
        double az = norm(z);
        return 1.0 + std::pow(az, alpha - beta_prime - gamma(x, z));
    }

    /// Envelope amplitude M(eps) with exponent alpha': on |z| >= eps,
    /// pi(x,z) <= M |z|^{-d-alpha'} with
    /// M = max(2, eps^{-(alpha-alpha')} + eps^{-(beta'-alpha')}).
    double envelope_amplitude(double eps) const {
        if (eps >= 1.0) return 2.0;
        return std::max(2.0, std::pow(eps, alpha_prime - alpha) +
                                 std::pow(eps, alpha_prime - beta_prime));
    }
};

// ---------------------------------------------------------------------------
// Named-kernel registry.  Keys are addressable from config files; parameters
// are positional doubles.  Registered kernels:
//   const [c]                      k == c (default 1), symmetric
//   hoelder_bump [amp] [theta]     k = 1 + amp*sin-bump(x)*(|z|^theta ^ 1), symmetric in z
//   varorder [a'] [b'] [a]         the variable-order example kernel
// ---------------------------------------------------------------------------
struct KernelFactory {
    using Maker = std::function<KernelModel(int dim, double alpha, const std::vector<double>&)>;

    static KernelModel make(const std::string& key, int dim, double alpha,
                            const std::vector<double>& params = {}) {
        const auto& reg = registry();
        auto it = reg.find(key);
        if (it == reg.end()) throw std::invalid_argument("unknown kernel key: " + key);
        KernelModel m = it->second(dim, alpha, params);
        m.name = key;
        m.require_valid_alpha();
        return m;
    }

    static bool known(const std::string& key) { return registry().count(key) > 0; }

    static std::vector<std::string> keys() {
        std::vector<std::string> ks;
        for (const auto& kv : registry()) ks.push_back(kv.first);
        return ks;
    }

  private:
    static const std::map<std::string, Maker>& registry() {
        static const std::map<std::string, Maker> reg = [] {
            std::map<std::string, Maker> r;
            r["const"] = [](int dim, double alpha, const std::vector<double>& p) {
                double c = p.empty() ? 1.0 : p[0];
                if (!(c > 0.0)) throw std::invalid_argument("const kernel needs c > 0");
                KernelModel m;
                m.dim = dim;
                m.alpha = alpha;
                m.numerator = [c](const Vec&, const Vec&) { return c; };
                m.class_tag = KernelClass::SymmetricNumerator;
                m.lambda_bound = std::max(c, 1.0 / c);
                m.unit_numerator = (c == 1.0);
                m.envelope = JumpEnvelope{alpha, 0.0, [c](const Vec&) { return c; }};
                return m;
            };
            r["hoelder_bump"] = [](int dim, double alpha, const std::vector<double>& p) {
                double amp = p.empty() ? 0.2 : p[0];
                double theta = p.size() > 1 ? p[1] : 0.5;
                if (!(amp > -1.0 && amp < 1.0))
                    throw std::invalid_argument("hoelder_bump needs |amp| < 1");
                KernelModel m;
                m.dim = dim;
                m.alpha = alpha;
                m.numerator = [amp, theta](const Vec& x, const Vec& z) {
                    double s = std::sin(x[0]);
                    double mod = std::min(std::pow(norm(z), theta), 1.0);
                    return 1.0 + amp * s * mod;
                };
                m.class_tag = KernelClass::WeaklyHoelder;
                m.lambda_bound = 1.0 / (1.0 - std::fabs(amp));
                m.envelope =
                    JumpEnvelope{alpha, 0.0, [amp](const Vec&) { return 1.0 + std::fabs(amp); }};
                return m;
            };
            r["varorder"] = [](int dim, double alpha, const std::vector<double>& p) {
                double ap = p.size() > 0 ? p[0] : 1.2;
                double bp = p.size() > 1 ? p[1] : 1.5;
                double a = p.size() > 2 ? p[2] : alpha;
                VariableOrderKernel vk(ap, bp, a);
                KernelModel m;
                m.dim = dim;
                m.alpha = a;
                m.numerator = [vk](const Vec& x, const Vec& z) { return vk.numerator(x, z); };
                m.class_tag = KernelClass::VariableOrder;
                m.envelope = JumpEnvelope{
                    ap, 1e-6, [vk](const Vec&) { return vk.envelope_amplitude(1e-2); }};
                return m;
            };
            return r;
        }();
        return reg;
    }
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct ProbeReport {
    Vec x;
    double integrability;     // estimate of int (|z|^2 ^ 1) pi(x,z) dz
    double cauchy_residual;   // relative change under refinement
    double symmetry_residual; // max |k(x,z)-k(x,-z)| over sampled z
    bool positivity_ok;
    bool bounds_ok;           // lambda^{-1} <= k <= lambda when lambda set
};

struct ValidationReport {
    std::vector<ProbeReport> probes;
    bool passed = true;
    std::string message;
};

namespace detail {

/// Radial estimate of int (|z|^2 ^ 1) pi(x,z) dz over delta < |z| < r_out.
inline double integrability_estimate(const KernelModel& m, const Vec& x, double delta,
                                     double r_out, int per_decade, const AngularRule& ang) {
    double total = 0.0;
    auto edges = log_panel_edges(delta, r_out, per_decade);
    // pi = k |z|^{-d-alpha}; the shell surface factor r^{d-1} leaves r^{-1-alpha}
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double err;
        total += quad_gk15(
            [&](double r) {
                double w = 0.0;
                for (std::size_t a = 0; a < ang.dirs.size(); ++a)
                    w += ang.weights[a] * m.k(x, r * ang.dirs[a]);
                return std::min(r * r, 1.0) * w * std::pow(r, -1.0 - m.alpha);
            },
            edges[p], edges[p + 1], err);
    }
    return total;
}

}  // namespace detail

/// Probe the defining integrability of the operator: per probe point,
/// estimate int (|z|^2 ^ 1) pi(x,z) dz, run a Cauchy refinement test at ratio
/// 2 (delta halved, r_out doubled, resolution doubled), check positivity of k,
/// the symmetry residual for SymmetricNumerator models, and the two-sided
/// lambda bound when set.
inline ValidationReport validate(const KernelModel& model, const DomainSpec& probe_region,
                                 int n_probes, RngStream rng = RngStream(2024, 0)) {
    model.require_valid_alpha();
    if (n_probes < 1) throw std::invalid_argument("n_probes >= 1");
    ValidationReport rep;
    AngularRule ang = angular_rule(model.dim, 16);
    for (int p = 0; p < n_probes; ++p) {
        // sample a probe point in the region (rejection from a bounding box)
        Vec x(model.dim);
        if (probe_region.bounded()) {
            double R = probe_region.circumradius(probe_region.center());
            for (int tries = 0; tries < 1000; ++tries) {
                for (int i = 0; i < model.dim; ++i)
                    x[i] = probe_region.center()[i] + rng.uniform(-R, R);
                if (probe_region.contains(x)) break;
            }
        } else {
            // complement of a ball: probe on shells at 1.5R .. 3R
            double R = probe_region.radius();
            const Vec& u = ang.dirs[static_cast<std::size_t>(p) % ang.dirs.size()];
            x = probe_region.center() + rng.uniform(1.5 * R, 3.0 * R) * u;
        }

        ProbeReport pr;
        pr.x = x;
        pr.positivity_ok = true;
        pr.bounds_ok = true;
        pr.symmetry_residual = 0.0;

        for (int s = 0; s < 64; ++s) {
            double r = std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
            const Vec& u = ang.dirs[static_cast<std::size_t>(s) % ang.dirs.size()];
            Vec z = r * u;
            double kv = model.k(x, z);
            if (!(kv > 0.0) || !std::isfinite(kv)) pr.positivity_ok = false;
            if (model.class_tag == KernelClass::SymmetricNumerator)
                pr.symmetry_residual =
                    std::max(pr.symmetry_residual, std::fabs(kv - model.k(x, -z)));
            if (model.lambda_bound) {
                double lam = *model.lambda_bound;
                if (kv > lam * (1.0 + 1e-12) || kv < (1.0 / lam) * (1.0 - 1e-12))
                    pr.bounds_ok = false;
            }
        }
        if (model.lambda_bound && model.has_drift) {
            if (norm(model.b(x)) > *model.lambda_bound * (1.0 + 1e-12)) pr.bounds_ok = false;
        }

        if (!pr.positivity_ok)
            throw NonIntegrableKernel("kernel numerator not strictly positive/finite");

        double coarse = detail::integrability_estimate(model, x, 1e-4, 1e4, 12, ang);
        double fine = detail::integrability_estimate(model, x, 5e-5, 2e4, 24, ang);
        pr.integrability = fine;
        pr.cauchy_residual = std::fabs(fine - coarse) / std::max(1.0, std::fabs(fine));
        if (!std::isfinite(pr.integrability) || pr.cauchy_residual > 1e-3)
            throw NonIntegrableKernel("truncated integrability estimate fails Cauchy test");
        if (model.class_tag == KernelClass::SymmetricNumerator && pr.symmetry_residual > 1e-10)
            throw SymmetryViolation("numerator tagged symmetric but k(x,z) != k(x,-z)");
        if (!pr.bounds_ok) {
            rep.passed = false;
            rep.message = "two-sided lambda bound violated";
        }
        rep.probes.push_back(pr);
    }
    return rep;
}

struct GrowthMargin {
    double radius;
    double margin;  // sup over samples of (x.b(x) v |x| k(x,z)) / (1 + |x|^2)
};

struct GrowthReport {
    std::vector<GrowthMargin> margins;
    double fitted_k0;        // max margin over all radii
    bool uniform_fit_ok;     // no systematic growth of margins beyond the fit
};

/// Sampled check of the growth condition: x.b(x) v |x| k(x,z) <= K0 (1+|x|^2).
/// Report-only; uniform_fit_ok is false when margins keep growing with R.
inline GrowthReport growth_condition_check(const KernelModel& model,
                                           const std::vector<double>& radii,
                                           RngStream rng = RngStream(2024, 1)) {
    GrowthReport rep;
    AngularRule ang = angular_rule(model.dim, 16);
    for (double R : radii) {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& u : ang.dirs) {
            Vec x = R * u;
            double xb = dot(x, model.b(x));
            double val = xb;
            for (int s = 0; s < 32; ++s) {
                double r = std::exp(rng.uniform(std::log(1e-2), std::log(1e2)));
                Vec z = r * ang.dirs[static_cast<std::size_t>(s) % ang.dirs.size()];
                val = std::max(val, R * model.k(x, z));
            }
            worst = std::max(worst, val / (1.0 + R * R));
        }
        rep.margins.push_back({R, worst});
    }
    rep.fitted_k0 = -std::numeric_limits<double>::infinity();
    for (const auto& m : rep.margins) rep.fitted_k0 = std::max(rep.fitted_k0, m.margin);
    // consistency: the margin at the largest radius should not dominate the
    // fit by a growing factor (sign of super-quadratic data)
    rep.uniform_fit_ok = true;
    if (rep.margins.size() >= 3) {
        double first = std::fabs(rep.margins.front().margin) + 1e-12;
        double last = std::fabs(rep.margins.back().margin);
        double mid = std::fabs(rep.margins[rep.margins.size() / 2].margin);
        if (last > 4.0 * std::max(first, mid) && last > 1.0) rep.uniform_fit_ok = false;
    }
    return rep;
}

}  // namespace stablesde
