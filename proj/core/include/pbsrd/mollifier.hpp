#pragma once

#include <cmath>
#include <stdexcept>

#include "pbsrd/geometry.hpp"
#include "pbsrd/random.hpp"

namespace pbsrd {

// Compactly supported displacement kernel used to regularize delta-function
// product placements. Shape is the Epanechnikov profile g(x) = c_d (1 - |x|^2)
// on the unit ball, rescaled to range eta: g_eta(x) = eta^-d g(x/eta).
// It integrates to one, is non-negative, and vanishes outside B(0, eta);
// eta -> 0 recovers exact delta placement.
class Mollifier {
public:
    explicit Mollifier(int dim) : dim_(dim) {
        switch (dim) {
            case 1: norm_ = 3.0 / 4.0; break;
            case 2: norm_ = 2.0 / M_PI; break;
            case 3: norm_ = 15.0 / (8.0 * M_PI); break;
            default: throw std::invalid_argument("Mollifier: dim must be 1, 2 or 3");
        }
    }

    int dim() const { return dim_; }

    // Unit-range profile g(x); density(x, eta) = eta^-d g(x/eta).
    double unit_density(const Vec& x) const {
        const double r2 = norm2(x, dim_);
        return r2 >= 1.0 ? 0.0 : norm_ * (1.0 - r2);
    }

    double density(const Vec& x, double eta) const {
        if (eta <= 0.0) throw std::invalid_argument("Mollifier::density: eta must be positive");
        Vec y = x;
        for (int k = 0; k < dim_; ++k) y[k] /= eta;
        double s = unit_density(y);
        for (int k = 0; k < dim_; ++k) s /= eta;
        return s;
    }

    // CDF of the radius |X| for X drawn from the unit-range profile.
    double radial_cdf(double r) const {
        if (r <= 0.0) return 0.0;
        if (r >= 1.0) return 1.0;
        const double r2 = r * r;
        switch (dim_) {
            case 1: return 0.5 * r * (3.0 - r2);
            case 2: return r2 * (2.0 - r2);
            default: return 0.5 * r2 * r * (5.0 - 3.0 * r2);
        }
    }

    // Exact inverse of radial_cdf, polished to machine precision by bisection
    // plus Newton steps (the CDF is a strictly increasing polynomial).
    double radial_quantile(double u) const {
        if (u <= 0.0) return 0.0;
        if (u >= 1.0) return 1.0;
        double lo = 0.0, hi = 1.0, r = 0.5;
        for (int it = 0; it < 80; ++it) {
            r = 0.5 * (lo + hi);
            (radial_cdf(r) < u ? lo : hi) = r;
        }
        for (int it = 0; it < 3; ++it) {
            const double f = radial_cdf(r) - u;
            const double df = radial_pdf(r);
            if (df <= 0.0) break;
            const double step = f / df;
            const double next = r - step;
            if (next > 0.0 && next < 1.0) r = next;
        }
        return r;
    }

    double radial_pdf(double r) const {
        if (r < 0.0 || r > 1.0) return 0.0;
        const double shell = sphere_area(dim_) * std::pow(r, dim_ - 1);
        return shell * norm_ * (1.0 - r * r);
    }

    // Draw a displacement supported in B(0, eta). eta = 0 degenerates to the
    // zero vector (exact delta placement).
    Vec sample(double eta, Rng& rng) const {
        if (eta <= 0.0) return {0.0, 0.0, 0.0};
        const double r = eta * radial_quantile(rng.uniform());
        Vec dir = rng.unit_vector(dim_);
        for (int k = 0; k < dim_; ++k) dir[k] *= r;
        return dir;
    }

private:
    int dim_;
    double norm_;
};

}  // namespace pbsrd
