#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rdr/errors.hpp"

namespace rdr {

/// Dense real vector of small fixed dimension (2..n). Length units.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim, 0.0) {}
    Vec(std::initializer_list<double> xs) : c_(xs) {}
    explicit Vec(std::vector<double> xs) : c_(std::move(xs)) {}

    std::size_t dim() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& coords() const { return c_; }

    Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (double& x : c_) x *= s;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

private:
    std::vector<double> c_;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec cross(const Vec& a, const Vec& b) {
    return Vec{a[1] * b[2] - a[2] * b[1],
               a[2] * b[0] - a[0] * b[2],
               a[0] * b[1] - a[1] * b[0]};
}

inline Vec normalized(const Vec& a) {
    double n = norm(a);
    if (n == 0.0) throw DomainError("cannot normalize zero vector");
    return a * (1.0 / n);
}

inline bool all_finite(const Vec& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!std::isfinite(a[i])) return false;
    return true;
}

inline void require_same_dim(const Vec& a, const Vec& b, const char* what) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(what) + ": dimensions differ");
}

} // namespace rdr
