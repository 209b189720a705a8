#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "stablesde/domain.hpp"
#include "stablesde/errors.hpp"
#include "stablesde/grid.hpp"

namespace stablesde {

/// Grid approximations of the boundary-distance weighted Hoelder seminorms
///   [[u]]^(r)_{0;D}       = sup d_x^r |u|
///   [[u]]^(r)_{k;D}       = sup d_x^{k+r} |D^k u|
///   [[u]]^(r)_{k,del;D}   = sup_{x,y} d_xy^{k+del+r} |D^k u(x)-D^k u(y)| / |x-y|^del
/// and the composite norm
///   |||u|||^(r)_{gam;D} = sum_{k=0}^{ceil(gam)-1} [[u]]^(r)_{k;D}
///                         + [[u]]^(r)_{ceil(gam)-1, gam+1-ceil(gam); D}.
struct WeightedNormReport {
    double r;
    double gamma;
    std::vector<double> seminorm_k;  // [[u]]^(r)_{k;D}, k = 0..ceil(gamma)-1
    double seminorm_hoelder;         // [[u]]^(r)_{ceil(gamma)-1, gamma+1-ceil(gamma); D}
    double composite;
};

/// 1-d implementation on GridFunction1D; derivatives by central differences,
/// Hoelder quotients over all grid pairs, d_x exact for the interval.
inline WeightedNormReport weighted_norms(const GridFunction1D& u, const DomainSpec& domain,
                                         double r, double gamma) {
    if (!(gamma >= 0.0) || !(gamma + r >= 0.0))
        throw std::invalid_argument("need gamma >= 0 and gamma + r >= 0");
    const int n = u.n();
    if (n < 8) throw GridTooCoarse("need at least 8 interior nodes");
    const double h = u.h();

    int kmax = std::max(0, static_cast<int>(std::ceil(gamma)) - 1);  // highest derivative order
    if (gamma == 0.0) kmax = 0;
    if (kmax > 1) throw std::invalid_argument("grid norms support gamma <= 2");
    double del = gamma + 1.0 - std::ceil(gamma);
    if (gamma == 0.0) del = 0.0;
    if (del == 0.0 && gamma > 0.0) del = 1.0;  // C^{k,0} identified with C^{k-1,1}

    std::vector<double> dx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dx[static_cast<std::size_t>(i)] = domain.boundary_distance(Vec{u.node(i)});

    // derivative tables: order 0 = values, order 1 = central differences
    std::vector<std::vector<double>> der(2);
    der[0] = u.values;
    der[1].resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        der[1][static_cast<std::size_t>(i)] = (u.at(i + 1) - u.at(i - 1)) / (2.0 * h);

    WeightedNormReport rep;
    rep.r = r;
    rep.gamma = gamma;
    for (int k = 0; k <= kmax; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s = std::max(s, std::pow(dx[static_cast<std::size_t>(i)], k + r) *
                                std::fabs(der[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]));
        rep.seminorm_k.push_back(s);
    }

    double sh = 0.0;
    if (gamma > 0.0) {
        const auto& dk = der[static_cast<std::size_t>(kmax)];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double dxy =
                    std::min(dx[static_cast<std::size_t>(i)], dx[static_cast<std::size_t>(j)]);
                double quot =
                    std::fabs(dk[static_cast<std::size_t>(i)] - dk[static_cast<std::size_t>(j)]) /
                    std::pow((j - i) * h, del);
                sh = std::max(sh, std::pow(dxy, kmax + del + r) * quot);
            }
        }
    }
    rep.seminorm_hoelder = sh;
    rep.composite = sh;
    for (double s : rep.seminorm_k) rep.composite += s;
    return rep;
}

}  // namespace stablesde
