#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pbsrd/geometry.hpp"
#include "pbsrd/random.hpp"

namespace pbsrd {

// Distribution of the separation |x - y| between the two products of an
// unbinding reaction. Normalized as a density over R^d, i.e. the radius R
// has pdf  sphere_area(d) * r^(d-1) * rho(r).  Everything downstream works
// through the radius CDF, so each variant only has to provide that.
class SeparationDensity {
public:
    enum class Kind { PointMass, TruncatedGaussian, TabulatedCdf };

    static SeparationDensity point_mass(double radius) {
        if (!(radius > 0.0)) throw std::invalid_argument("separation point_mass: radius must be positive");
        SeparationDensity s;
        s.kind_ = Kind::PointMass;
        s.r0_ = radius;
        return s;
    }

    // rho(r) proportional to exp(-r^2 / (2 sigma^2)) truncated to [0, rmax],
    // normalized in R^dim. Radius CDF is tabulated by quadrature of the
    // radial pdf r^(dim-1) exp(-r^2/(2 sigma^2)).
    static SeparationDensity truncated_gaussian(double sigma, double rmax, int dim) {
        if (!(sigma > 0.0) || !(rmax > 0.0)) throw std::invalid_argument("separation gaussian: sigma and rmax must be positive");
        if (dim < 1 || dim > 3) throw std::invalid_argument("separation gaussian: dim must be 1, 2 or 3");
        SeparationDensity s;
        s.kind_ = Kind::TruncatedGaussian;
        const int n = 8192;
        s.grid_r_.resize(n + 1);
        s.grid_cdf_.resize(n + 1);
        const double h = rmax / n;
        auto pdf = [&](double r) { return std::pow(r, dim - 1) * std::exp(-0.5 * r * r / (sigma * sigma)); };
        double acc = 0.0;
        s.grid_r_[0] = 0.0;
        s.grid_cdf_[0] = 0.0;
        double prev = pdf(0.0);
        for (int i = 1; i <= n; ++i) {
            const double r = i * h;
            const double cur = pdf(r);
            acc += 0.5 * (prev + cur) * h;
            prev = cur;
            s.grid_r_[i] = r;
            s.grid_cdf_[i] = acc;
        }
        for (auto& v : s.grid_cdf_) v /= acc;
        s.grid_cdf_.back() = 1.0;
        return s;
    }

    // User-supplied radius CDF nodes. Must start at 0, end at 1 and be
    // non-decreasing; interpolated linearly in between.
    static SeparationDensity tabulated_cdf(std::vector<double> radii, std::vector<double> cdf) {
        if (radii.size() != cdf.size() || radii.size() < 2)
            throw std::invalid_argument("separation tabulated: need matching radius/cdf lists of length >= 2");
        for (std::size_t i = 1; i < radii.size(); ++i) {
            if (!(radii[i] > radii[i - 1])) throw std::invalid_argument("separation tabulated: radii must increase");
            if (cdf[i] < cdf[i - 1]) throw std::invalid_argument("separation tabulated: cdf must be non-decreasing");
        }
        if (radii.front() < 0.0) throw std::invalid_argument("separation tabulated: radii must be non-negative");
        if (std::abs(cdf.front()) > 1e-9 || std::abs(cdf.back() - 1.0) > 1e-9)
            throw std::invalid_argument("separation tabulated: cdf must run from 0 to 1");
        SeparationDensity s;
        s.kind_ = Kind::TabulatedCdf;
        s.grid_r_ = std::move(radii);
        s.grid_cdf_ = std::move(cdf);
        s.grid_cdf_.front() = 0.0;
        s.grid_cdf_.back() = 1.0;
        return s;
    }

    Kind kind() const { return kind_; }

    bool continuous() const { return kind_ != Kind::PointMass; }

    double max_radius() const {
        return kind_ == Kind::PointMass ? r0_ : grid_r_.back();
    }

    double radius_cdf(double r) const {
        if (kind_ == Kind::PointMass) return r < r0_ ? 0.0 : 1.0;
        if (r <= grid_r_.front()) return 0.0;
        if (r >= grid_r_.back()) return 1.0;
        const auto it = std::upper_bound(grid_r_.begin(), grid_r_.end(), r);
        const std::size_t i = static_cast<std::size_t>(it - grid_r_.begin());
        const double t = (r - grid_r_[i - 1]) / (grid_r_[i] - grid_r_[i - 1]);
        return grid_cdf_[i - 1] + t * (grid_cdf_[i] - grid_cdf_[i - 1]);
    }

    double sample_radius(Rng& rng) const {
        if (kind_ == Kind::PointMass) return r0_;
        return quantile(rng.uniform());
    }

    double quantile(double u) const {
        if (kind_ == Kind::PointMass) return r0_;
        u = std::clamp(u, 0.0, 1.0);
        const auto it = std::lower_bound(grid_cdf_.begin(), grid_cdf_.end(), u);
        std::size_t i = static_cast<std::size_t>(it - grid_cdf_.begin());
        if (i == 0) return grid_r_.front();
        if (i >= grid_cdf_.size()) return grid_r_.back();
        const double df = grid_cdf_[i] - grid_cdf_[i - 1];
        const double t = df > 0.0 ? (u - grid_cdf_[i - 1]) / df : 0.0;
        return grid_r_[i - 1] + t * (grid_r_[i] - grid_r_[i - 1]);
    }

    // Exact-mass radial discretization for grid deposits: cell masses
    // q_m = F(edge_{m+1}) - F(edge_m) at cell-midpoint radii; weights sum to
    // one by construction. Point mass collapses to a single node.
    std::vector<std::pair<double, double>> radial_quadrature(int cells) const {
        std::vector<std::pair<double, double>> q;
        if (kind_ == Kind::PointMass) {
            q.emplace_back(r0_, 1.0);
            return q;
        }
        if (cells < 1) throw std::invalid_argument("radial_quadrature: cells must be >= 1");
        const double rmax = max_radius();
        q.reserve(static_cast<std::size_t>(cells));
        double prev = 0.0;
        for (int m = 0; m < cells; ++m) {
            const double hi = rmax * (m + 1) / cells;
            const double w = radius_cdf(hi) - prev;
            prev = radius_cdf(hi);
            if (w > 0.0) q.emplace_back(rmax * (m + 0.5) / cells, w);
        }
        return q;
    }

private:
    SeparationDensity() = default;

    Kind kind_ = Kind::PointMass;
    double r0_ = 1.0;
    std::vector<double> grid_r_;
    std::vector<double> grid_cdf_;
};

// Equal-weight direction set covering the unit sphere; used when a radial
// distribution has to be spread over grid nodes. 1D: both signs. 2D: uniform
// angles. 3D: Fibonacci points.
inline std::vector<Vec> direction_set(int dim, int count) {
    std::vector<Vec> dirs;
    if (dim == 1) {
        dirs.push_back(vec1(-1.0));
        dirs.push_back(vec1(1.0));
        return dirs;
    }
    if (count < 2) count = 2;
    dirs.reserve(static_cast<std::size_t>(count));
    if (dim == 2) {
        for (int i = 0; i < count; ++i) {
            const double phi = 2.0 * M_PI * (i + 0.5) / count;
            dirs.push_back(vec2(std::cos(phi), std::sin(phi)));
        }
        return dirs;
    }
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        dirs.push_back(vec3(r * std::cos(phi), r * std::sin(phi), z));
    }
    return dirs;
}

}  // namespace pbsrd
