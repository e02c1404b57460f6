#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pbsrd {

// Fixed-capacity position vector; only the first `dim` components of a
// Domain are meaningful, the rest stay zero.
using Vec = std::array<double, 3>;

inline Vec vec1(double x) { return {x, 0.0, 0.0}; }
inline Vec vec2(double x, double y) { return {x, y, 0.0}; }
inline Vec vec3(double x, double y, double z) { return {x, y, z}; }

enum class Boundary { Periodic, Reflecting };

// Cubic simulation box [0, length)^dim.
struct Domain {
    int dim = 1;
    double length = 1.0;
    Boundary boundary = Boundary::Periodic;

    Domain() = default;
    Domain(int d, double len, Boundary b = Boundary::Periodic) : dim(d), length(len), boundary(b) {
        if (d < 1 || d > 3) throw std::invalid_argument("Domain: dim must be 1, 2 or 3");
        if (!(len > 0.0)) throw std::invalid_argument("Domain: box length must be positive");
    }

    double volume() const {
        double v = 1.0;
        for (int k = 0; k < dim; ++k) v *= length;
        return v;
    }

    // Fold a coordinate back into [0, length).
    double wrap_coord(double x) const {
        if (boundary == Boundary::Periodic) {
            double y = std::fmod(x, length);
            if (y < 0.0) y += length;
            // fmod can return length after the negative fixup when x is a
            // tiny negative number
            if (y >= length) y -= length;
            return y;
        }
        // reflecting: fold over an even extension of period 2L
        double y = std::fmod(x, 2.0 * length);
        if (y < 0.0) y += 2.0 * length;
        return y <= length ? y : 2.0 * length - y;
    }

    void apply_boundary(Vec& p) const {
        for (int k = 0; k < dim; ++k) p[k] = wrap_coord(p[k]);
    }

    // Minimum-image component of b - a (periodic); plain difference otherwise.
    double displacement_coord(double a, double b) const {
        double d = b - a;
        if (boundary == Boundary::Periodic) {
            if (d > 0.5 * length)
                d -= length;
            else if (d < -0.5 * length)
                d += length;
        }
        return d;
    }

    Vec displacement(const Vec& a, const Vec& b) const {
        Vec d{0.0, 0.0, 0.0};
        for (int k = 0; k < dim; ++k) d[k] = displacement_coord(a[k], b[k]);
        return d;
    }

    double distance2(const Vec& a, const Vec& b) const {
        double s = 0.0;
        for (int k = 0; k < dim; ++k) {
            double d = displacement_coord(a[k], b[k]);
            s += d * d;
        }
        return s;
    }

    double distance(const Vec& a, const Vec& b) const { return std::sqrt(distance2(a, b)); }
};

// Hypervolume of the radius-eps ball in d dimensions.
inline double ball_volume(int dim, double eps) {
    switch (dim) {
        case 1: return 2.0 * eps;
        case 2: return M_PI * eps * eps;
        case 3: return 4.0 * M_PI * eps * eps * eps / 3.0;
        default: throw std::invalid_argument("ball_volume: dim must be 1, 2 or 3");
    }
}

// Surface area of the unit sphere in d dimensions (2, 2*pi, 4*pi).
inline double sphere_area(int dim) {
    switch (dim) {
        case 1: return 2.0;
        case 2: return 2.0 * M_PI;
        case 3: return 4.0 * M_PI;
        default: throw std::invalid_argument("sphere_area: dim must be 1, 2 or 3");
    }
}

inline double norm2(const Vec& v, int dim) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) s += v[k] * v[k];
    return s;
}

inline double norm(const Vec& v, int dim) { return std::sqrt(norm2(v, dim)); }

}  // namespace pbsrd
