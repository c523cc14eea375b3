#include "rgg/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "rgg/special.hpp"

namespace rgg {

namespace {

constexpr double kSegmentTol = 1e-12;
constexpr int kMaxDim = 10;  // gamma-overflow guard for cap/volume functions

void require_finite(const Point& p, const char* what) {
    for (double c : p.coords) {
        if (!std::isfinite(c)) throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
}

// Does the segment a->b pass strictly inside the circle (center, radius)?
// Quadratic in the segment parameter t in [0,1]; grazing tangency is not a crossing.
bool segment_crosses_circle(const Point& a, const Point& b, const Point& center, double radius) {
    const std::size_t d = a.dim();
    double ww = 0.0, fw = 0.0, ff = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double w = b[i] - a[i];
        const double f = a[i] - center[i];
        ww += w * w;
        fw += f * w;
        ff += f * f;
    }
    const double c = ff - radius * radius;
    if (ww == 0.0) return c < -kSegmentTol;
    const double disc = fw * fw - ww * c;
    if (disc <= 0.0) return false;
    const double sq = std::sqrt(disc);
    const double t1 = (-fw - sq) / ww;
    const double t2 = (-fw + sq) / ww;
    return t2 > kSegmentTol && t1 < 1.0 - kSegmentTol && (t2 - t1) > kSegmentTol;
}

Point sample_direction(std::size_t d, RandomState& rng) {
    if (d == 2) {
        const double theta = 2.0 * M_PI * rng.next_double();
        return Point(std::cos(theta), std::sin(theta));
    }
    // d == 3: uniform via z = 2u-1
    const double z = 2.0 * rng.next_double() - 1.0;
    const double phi = 2.0 * M_PI * rng.next_double();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Point(s * std::cos(phi), s * std::sin(phi), z);
}

}  // namespace

double Point::norm() const {
    double s = 0.0;
    for (double c : coords) s += c * c;
    return std::sqrt(s);
}

double euclidean_distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

Domain Domain::disk(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("Domain::disk: R must be > 0");
    Domain d;
    d.kind_ = Kind::Disk;
    d.outer_ = R;
    return d;
}

Domain Domain::annulus(double r, double R) {
    if (!(r > 0.0 && R > 0.0)) throw std::invalid_argument("Domain::annulus: radii must be > 0");
    if (!(r < R)) throw std::invalid_argument("Domain::annulus: requires r < R");
    Domain d;
    d.kind_ = Kind::Annulus;
    d.inner_ = r;
    d.outer_ = R;
    return d;
}

Domain Domain::square(double L, std::vector<ObstacleSpec> obstacles) {
    if (!(L > 0.0)) throw std::invalid_argument("Domain::square: L must be > 0");
    double obstacle_area = 0.0;
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const auto& o = obstacles[i];
        if (o.center.dim() != 2) throw std::invalid_argument("Domain::square: obstacle center must be 2-D");
        if (!(o.radius > 0.0 && o.radius < L / 2.0))
            throw std::invalid_argument("Domain::square: obstacle radius must be in (0, L/2)");
        if (o.center[0] - o.radius <= 0.0 || o.center[0] + o.radius >= L ||
            o.center[1] - o.radius <= 0.0 || o.center[1] + o.radius >= L)
            throw std::invalid_argument("Domain::square: obstacle must lie strictly inside the square");
        for (std::size_t j = 0; j < i; ++j) {
            if (euclidean_distance(o.center, obstacles[j].center) <= o.radius + obstacles[j].radius)
                throw std::invalid_argument("Domain::square: obstacles must be pairwise disjoint");
        }
        obstacle_area += M_PI * o.radius * o.radius;
    }
    if (obstacle_area > 0.9 * L * L)
        throw std::invalid_argument("Domain::square: obstacle area fraction exceeds 0.9");
    Domain d;
    d.kind_ = Kind::Square;
    d.side_ = L;
    d.obstacles_ = std::move(obstacles);
    return d;
}

Domain Domain::sphere(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("Domain::sphere: R must be > 0");
    Domain d;
    d.kind_ = Kind::Sphere;
    d.outer_ = R;
    return d;
}

Domain Domain::spherical_shell(double r, double R) {
    if (!(r > 0.0 && R > 0.0)) throw std::invalid_argument("Domain::spherical_shell: radii must be > 0");
    if (!(r < R)) throw std::invalid_argument("Domain::spherical_shell: requires r < R");
    Domain d;
    d.kind_ = Kind::SphericalShell;
    d.inner_ = r;
    d.outer_ = R;
    return d;
}

Domain Domain::torus(double L) {
    if (!(L > 0.0)) throw std::invalid_argument("Domain::torus: L must be > 0");
    Domain d;
    d.kind_ = Kind::Torus;
    d.side_ = L;
    return d;
}

Domain Domain::interval(double L) {
    if (!(L > 0.0)) throw std::invalid_argument("Domain::interval: L must be > 0");
    Domain d;
    d.kind_ = Kind::Interval;
    d.side_ = L;
    return d;
}

std::size_t Domain::dim() const {
    switch (kind_) {
        case Kind::Interval: return 1;
        case Kind::Sphere:
        case Kind::SphericalShell: return 3;
        default: return 2;
    }
}

double Domain::measure() const {
    switch (kind_) {
        case Kind::Disk: return M_PI * outer_ * outer_;
        case Kind::Annulus: return M_PI * (outer_ * outer_ - inner_ * inner_);
        case Kind::Square: {
            double a = side_ * side_;
            for (const auto& o : obstacles_) a -= M_PI * o.radius * o.radius;
            return a;
        }
        case Kind::Sphere: return 4.0 / 3.0 * M_PI * outer_ * outer_ * outer_;
        case Kind::SphericalShell:
            return 4.0 / 3.0 * M_PI * (outer_ * outer_ * outer_ - inner_ * inner_ * inner_);
        case Kind::Torus: return side_ * side_;
        case Kind::Interval: return side_;
    }
    return 0.0;
}

double Domain::diameter() const {
    switch (kind_) {
        case Kind::Disk:
        case Kind::Annulus:
        case Kind::Sphere:
        case Kind::SphericalShell: return 2.0 * outer_;
        case Kind::Square: return side_ * std::sqrt(2.0);
        case Kind::Torus: return side_ / std::sqrt(2.0);
        case Kind::Interval: return side_;
    }
    return 0.0;
}

bool Domain::convex() const {
    switch (kind_) {
        case Kind::Disk:
        case Kind::Sphere:
        case Kind::Interval: return true;
        case Kind::Square: return obstacles_.empty();
        default: return false;
    }
}

bool Domain::contains(const Point& p) const {
    if (p.dim() != dim()) return false;
    switch (kind_) {
        case Kind::Disk: return p.norm() <= outer_;
        case Kind::Annulus: {
            const double r = p.norm();
            return r >= inner_ && r <= outer_;
        }
        case Kind::Square: {
            if (p[0] < 0.0 || p[0] > side_ || p[1] < 0.0 || p[1] > side_) return false;
            for (const auto& o : obstacles_)
                if (euclidean_distance(p, o.center) < o.radius) return false;
            return true;
        }
        case Kind::Sphere: return p.norm() <= outer_;
        case Kind::SphericalShell: {
            const double r = p.norm();
            return r >= inner_ && r <= outer_;
        }
        case Kind::Torus: return p[0] >= 0.0 && p[0] < side_ && p[1] >= 0.0 && p[1] < side_;
        case Kind::Interval: return p[0] >= 0.0 && p[0] <= side_;
    }
    return false;
}

double Domain::distance(const Point& a, const Point& b) const {
    if (kind_ != Kind::Torus) return euclidean_distance(a, b);
    double s = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        double d = std::fabs(a[i] - b[i]);
        d = std::min(d, side_ - d);  // minimum image
        s += d * d;
    }
    return std::sqrt(s);
}

Point Domain::sample_uniform(RandomState& rng) const {
    switch (kind_) {
        case Kind::Disk:
        case Kind::Annulus: {
            const double r2 = inner_ * inner_ +
                              (outer_ * outer_ - inner_ * inner_) * rng.next_double();
            const double r = std::sqrt(r2);
            const double theta = 2.0 * M_PI * rng.next_double();
            return Point(r * std::cos(theta), r * std::sin(theta));
        }
        case Kind::Square: {
            for (;;) {
                Point p(side_ * rng.next_double(), side_ * rng.next_double());
                if (contains(p)) return p;
            }
        }
        case Kind::Sphere:
        case Kind::SphericalShell: {
            const double r3 = inner_ * inner_ * inner_ +
                              (outer_ * outer_ * outer_ - inner_ * inner_ * inner_) * rng.next_double();
            const double r = std::cbrt(r3);
            Point dir = sample_direction(3, rng);
            return Point(r * dir[0], r * dir[1], r * dir[2]);
        }
        case Kind::Torus: return Point(side_ * rng.next_double(), side_ * rng.next_double());
        case Kind::Interval: return Point({side_ * rng.next_double()});
    }
    throw std::logic_error("Domain::sample_uniform: unreachable");
}

bool visibility(const Domain& domain, const Point& x, const Point& y) {
    require_finite(x, "visibility");
    require_finite(y, "visibility");
    if (!domain.contains(x) || !domain.contains(y))
        throw std::invalid_argument("visibility: points must lie inside the domain");
    switch (domain.kind()) {
        case Domain::Kind::Annulus:
        case Domain::Kind::SphericalShell: {
            Point origin = x;  // zero vector of matching dimension
            for (auto& c : origin.coords) c = 0.0;
            return !segment_crosses_circle(x, y, origin, domain.inner_radius());
        }
        case Domain::Kind::Square: {
            for (const auto& o : domain.obstacles())
                if (segment_crosses_circle(x, y, o.center, o.radius)) return false;
            return true;
        }
        default:
            return true;  // convex domains and the torus
    }
}

double unit_ball_volume(int d) {
    return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double sphere_surface(int d, double radius) {
    return 2.0 * std::pow(M_PI, d / 2.0) * std::pow(radius, d - 1) / std::tgamma(d / 2.0);
}

double intersection_volume(int d, double s) {
    if (d < 1 || d > kMaxDim) throw std::invalid_argument("intersection_volume: d must be in [1,10]");
    if (!(s >= 0.0)) throw std::invalid_argument("intersection_volume: s must be >= 0");
    if (s >= 2.0) return 0.0;
    if (s == 0.0) return unit_ball_volume(d);
    // two caps of half-angle phi with cos(phi) = s/2
    const double x = 1.0 - s * s / 4.0;
    return unit_ball_volume(d) * reg_incomplete_beta(x, (d + 1) / 2.0, 0.5);
}

double cap_area(int d, double radius, double phi) {
    if (d < 2 || d > kMaxDim) throw std::invalid_argument("cap_area: d must be in [2,10]");
    if (!(radius > 0.0)) throw std::invalid_argument("cap_area: radius must be > 0");
    if (!(phi >= 0.0 && phi <= M_PI)) throw std::invalid_argument("cap_area: phi must be in [0,pi]");
    if (phi > M_PI / 2.0) return sphere_surface(d, radius) - cap_area(d, radius, M_PI - phi);
    const double s2 = std::sin(phi) * std::sin(phi);
    return 0.5 * sphere_surface(d, radius) * reg_incomplete_beta(s2, (d - 1) / 2.0, 0.5);
}

double hyperbolic_distance(const Point& p, const Point& q) {
    require_finite(p, "hyperbolic_distance");
    require_finite(q, "hyperbolic_distance");
    const double arg = std::cosh(p[1]) * std::cosh(q[0] - p[0]) * std::cosh(q[1]) -
                       std::sinh(p[1]) * std::sinh(q[1]);
    return std::acosh(std::max(1.0, arg));
}

}  // namespace rgg
