#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>

namespace stablesde {

/// Fixed-capacity euclidean vector with runtime dimension (d <= 3).
/// Experiments target d in {1,2}; quadrature supports d up to 3.
struct Vec {
    static constexpr int kMaxDim = 3;

    std::array<double, kMaxDim> v{};
    int d = 1;

    Vec() = default;
    explicit Vec(int dim) : d(dim) { assert(dim >= 1 && dim <= kMaxDim); }
    Vec(std::initializer_list<double> xs) : d(static_cast<int>(xs.size())) {
        assert(d >= 1 && d <= kMaxDim);
        int i = 0;
        for (double x : xs) v[static_cast<std::size_t>(i++)] = x;
    }
    static Vec zero(int dim) { return Vec(dim); }
    static Vec unit(int dim, int axis) {
        Vec e(dim);
        e[axis] = 1.0;
        return e;
    }

    double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    int dim() const { return d; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] -= o[i];
        return *this;
    }
    Vec& operator*=(double a) {
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] *= a;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double a, Vec x) { return x *= a; }
    friend Vec operator*(Vec x, double a) { return x *= a; }
    friend Vec operator-(Vec x) { return x *= -1.0; }

    friend double dot(const Vec& a, const Vec& b) {
        double s = 0.0;
        for (int i = 0; i < a.d; ++i) s += a[i] * b[i];
        return s;
    }
    friend double norm2(const Vec& a) { return dot(a, a); }
    friend double norm(const Vec& a) { return std::sqrt(norm2(a)); }

    friend bool operator==(const Vec& a, const Vec& b) {
        if (a.d != b.d) return false;
        for (int i = 0; i < a.d; ++i)
            if (a[i] != b[i]) return false;
        return true;
    }
};

}  // namespace stablesde
