#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "stablesde/vec.hpp"

namespace stablesde {

/// Open region of R^d with exact membership tests.
/// Ball(c,r) = {|x-c| < r}, Box = {lo < x < hi componentwise},
/// ComplementOfBall(c,r) = {|x-c| > r}, Annulus(c,ri,ro) = {ri < |x-c| < ro}.
class DomainSpec {
  public:
    enum class Shape { Ball, Box, ComplementOfBall, Annulus };

    static DomainSpec ball(const Vec& center, double radius) {
        require_positive(radius, "ball radius");
        DomainSpec s;
        s.shape_ = Shape::Ball;
        s.a_ = center;
        s.r0_ = radius;
        return s;
    }
    static DomainSpec box(const Vec& lo, const Vec& hi) {
        for (int i = 0; i < lo.dim(); ++i)
            if (!(lo[i] < hi[i])) throw std::invalid_argument("box requires lo < hi componentwise");
        DomainSpec s;
        s.shape_ = Shape::Box;
        s.a_ = lo;
        s.b_ = hi;
        return s;
    }
    static DomainSpec complement_of_ball(const Vec& center, double radius) {
        require_positive(radius, "ball radius");
        DomainSpec s;
        s.shape_ = Shape::ComplementOfBall;
        s.a_ = center;
        s.r0_ = radius;
        return s;
    }
    static DomainSpec annulus(const Vec& center, double r_in, double r_out) {
        require_positive(r_in, "inner radius");
        if (!(r_in < r_out)) throw std::invalid_argument("annulus requires r_in < r_out");
        DomainSpec s;
        s.shape_ = Shape::Annulus;
        s.a_ = center;
        s.r0_ = r_in;
        s.r1_ = r_out;
        return s;
    }
    /// Interval (a,b) as a 1-d box.
    static DomainSpec interval(double a, double b) { return box(Vec{a}, Vec{b}); }

    Shape shape() const { return shape_; }
    int dim() const { return a_.dim(); }
    const Vec& center() const { return a_; }
    const Vec& lo() const { return a_; }
    const Vec& hi() const { return b_; }
    double radius() const { return r0_; }
    double inner_radius() const { return r0_; }
    double outer_radius() const { return r1_; }

    bool contains(const Vec& x) const {
        switch (shape_) {
            case Shape::Ball:
                return norm(x - a_) < r0_;
            case Shape::Box:
                for (int i = 0; i < a_.dim(); ++i)
                    if (!(a_[i] < x[i] && x[i] < b_[i])) return false;
                return true;
            case Shape::ComplementOfBall:
                return norm(x - a_) > r0_;
            case Shape::Annulus: {
                double r = norm(x - a_);
                return r0_ < r && r < r1_;
            }
        }
        return false;
    }

    bool bounded() const { return shape_ != Shape::ComplementOfBall; }

    /// Exact distance to the boundary for x inside the domain (d_x of the
    /// weighted norms); 0 if outside.
    double boundary_distance(const Vec& x) const {
        if (!contains(x)) return 0.0;
        switch (shape_) {
            case Shape::Ball:
                return r0_ - norm(x - a_);
            case Shape::Box: {
                double m = std::numeric_limits<double>::infinity();
                for (int i = 0; i < a_.dim(); ++i)
                    m = std::min({m, x[i] - a_[i], b_[i] - x[i]});
                return m;
            }
            case Shape::ComplementOfBall:
                return norm(x - a_) - r0_;
            case Shape::Annulus: {
                double r = norm(x - a_);
                return std::min(r - r0_, r1_ - r);
            }
        }
        return 0.0;
    }

    /// Radius of a ball around `around` containing the whole domain; used to
    /// size quadrature and horizon heuristics. Requires bounded().
    double circumradius(const Vec& around) const {
        switch (shape_) {
            case Shape::Ball:
                return norm(around - a_) + r0_;
            case Shape::Box: {
                double s = 0.0;
                for (int i = 0; i < a_.dim(); ++i) {
                    double m = std::max(std::abs(around[i] - a_[i]), std::abs(around[i] - b_[i]));
                    s += m * m;
                }
                return std::sqrt(s);
            }
            case Shape::Annulus:
                return norm(around - a_) + r1_;
            case Shape::ComplementOfBall:
                throw std::logic_error("circumradius of an unbounded domain");
        }
        return 0.0;
    }

    std::string describe() const {
        switch (shape_) {
            case Shape::Ball:
                return "ball(r=" + std::to_string(r0_) + ")";
            case Shape::Box:
                return "box";
            case Shape::ComplementOfBall:
                return "complement_of_ball(r=" + std::to_string(r0_) + ")";
            case Shape::Annulus:
                return "annulus";
        }
        return "?";
    }

  private:
    static void require_positive(double r, const char* what) {
        if (!(r > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
    }

    Shape shape_ = Shape::Ball;
    Vec a_{0.0};
    Vec b_{0.0};
    double r0_ = 1.0;
    double r1_ = 2.0;
};

inline bool disjoint_by_sampling(const DomainSpec& A, const DomainSpec& B) {
    // exact for the pairings used in practice (interval/interval, ball/ball)
    if (A.dim() != B.dim()) return true;
    if (A.shape() == DomainSpec::Shape::Ball && B.shape() == DomainSpec::Shape::Ball)
        return norm(A.center() - B.center()) >= A.radius() + B.radius();
    if (A.shape() == DomainSpec::Shape::Box && B.shape() == DomainSpec::Shape::Box) {
        for (int i = 0; i < A.dim(); ++i)
            if (A.hi()[i] <= B.lo()[i] || B.hi()[i] <= A.lo()[i]) return true;
        return false;
    }
    if (A.shape() == DomainSpec::Shape::Ball && B.shape() == DomainSpec::Shape::Box)
        return disjoint_by_sampling(B, A);
    if (A.shape() == DomainSpec::Shape::Box && B.shape() == DomainSpec::Shape::Ball) {
        // closest point of the box to the ball center
        double s = 0.0;
        for (int i = 0; i < A.dim(); ++i) {
            double c = std::clamp(B.center()[i], A.lo()[i], A.hi()[i]);
            double dd = B.center()[i] - c;
            s += dd * dd;
        }
        return std::sqrt(s) >= B.radius();
    }
    return false;
}

}  // namespace stablesde
