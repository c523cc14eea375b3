#include "rgg/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgg {

namespace {

// First exit of the ray x + t*u from the 2-D domain, together with the first
// entry into a blocking circle; the visible radial extent is the minimum.
double visible_extent_2d(const Domain& dom, const Point& x, double ux, double uy) {
    double t_exit = 0.0;
    switch (dom.kind()) {
        case Domain::Kind::Disk:
        case Domain::Kind::Annulus: {
            const double R = dom.outer_radius();
            const double xu = x[0] * ux + x[1] * uy;
            const double x2 = x[0] * x[0] + x[1] * x[1];
            t_exit = -xu + std::sqrt(std::max(0.0, xu * xu - x2 + R * R));
            break;
        }
        case Domain::Kind::Square: {
            const double L = dom.side();
            t_exit = std::numeric_limits<double>::infinity();
            if (ux > 0.0) t_exit = std::min(t_exit, (L - x[0]) / ux);
            if (ux < 0.0) t_exit = std::min(t_exit, -x[0] / ux);
            if (uy > 0.0) t_exit = std::min(t_exit, (L - x[1]) / uy);
            if (uy < 0.0) t_exit = std::min(t_exit, -x[1] / uy);
            break;
        }
        default:
            throw std::logic_error("visible_extent_2d: unsupported domain");
    }
    double t = t_exit;
    auto block = [&](double cx, double cy, double radius) {
        const double fx = x[0] - cx;
        const double fy = x[1] - cy;
        const double b = fx * ux + fy * uy;
        const double c = fx * fx + fy * fy - radius * radius;
        const double disc = b * b - c;
        if (disc <= 0.0) return;
        const double entry = -b - std::sqrt(disc);
        if (entry > 0.0) t = std::min(t, entry);
    };
    if (dom.kind() == Domain::Kind::Annulus) block(0.0, 0.0, dom.inner_radius());
    for (const auto& o : dom.obstacles()) block(o.center[0], o.center[1], o.radius);
    return std::max(0.0, t);
}

// 3-D version; x is at radius a from the center and theta is measured from
// the outward radial direction (spherically symmetric domains only).
double visible_extent_3d(const Domain& dom, double a, double cos_theta) {
    const double R = dom.outer_radius();
    const double b = a * cos_theta;
    double t = -b + std::sqrt(std::max(0.0, b * b - a * a + R * R));
    if (dom.kind() == Domain::Kind::SphericalShell) {
        const double r = dom.inner_radius();
        const double disc = b * b - (a * a - r * r);
        if (disc > 0.0) {
            const double entry = -b - std::sqrt(disc);
            if (entry > 0.0) t = std::min(t, entry);
        }
    }
    return std::max(0.0, t);
}

// Int_0^t s^{d-1} H(s) ds for the radial profile of the connection function.
double radial_mass(const ConnectionModel& model, double t, int d) {
    if (model.kind == ConnectionModel::Kind::Hard) {
        const double u = std::min(t, model.r0);
        return std::pow(u, d) / d;
    }
    const double beta = model.beta;
    if (model.eta == 2.0) {
        if (d == 2) return (1.0 - std::exp(-beta * t * t)) / (2.0 * beta);
        if (d == 3) {
            const double sb = std::sqrt(beta);
            return std::sqrt(M_PI) * std::erf(sb * t) / (4.0 * beta * sb) -
                   t * std::exp(-beta * t * t) / (2.0 * beta);
        }
    }
    const double t_eff = std::min(t, std::pow(46.0 / beta, 1.0 / model.eta));
    return integrate(
        [&](double s) { return std::pow(s, d - 1) * std::exp(-beta * std::pow(s, model.eta)); },
        0.0, t_eff, 1e-11);
}

double mass_2d(const Domain& dom, const ConnectionModel& model, const Point& x) {
    return integrate(
        [&](double theta) {
            const double t = visible_extent_2d(dom, x, std::cos(theta), std::sin(theta));
            return radial_mass(model, t, 2);
        },
        0.0, 2.0 * M_PI, 1e-9);
}

double mass_3d(const Domain& dom, const ConnectionModel& model, const Point& x) {
    const double a = x.norm();
    return 2.0 * M_PI *
           integrate(
               [&](double theta) {
                   const double t = visible_extent_3d(dom, a, std::cos(theta));
                   return std::sin(theta) * radial_mass(model, t, 3);
               },
               0.0, M_PI, 1e-9);
}

double mass_torus(const Domain& dom, const ConnectionModel& model) {
    const double h = dom.side() / 2.0;
    if (model.kind == ConnectionModel::Kind::Rayleigh && model.eta == 2.0) {
        const double sb = std::sqrt(model.beta);
        const double one_d = std::sqrt(M_PI) / sb * std::erf(sb * h);
        return one_d * one_d;  // separable in the minimum-image coordinates
    }
    return integrate(
        [&](double dx) {
            return integrate(
                [&](double dy) {
                    const double r = std::sqrt(dx * dx + dy * dy);
                    return connection_probability(model, r);
                },
                -h, h, 1e-9);
        },
        -h, h, 1e-8);
}

// Hop index: r in [j, j+1) contributes j+1-hop optimal paths (j >= 1).
void split_hops(double r, int& j, int& k) {
    j = static_cast<int>(std::floor(r));
    k = j + 1;
}

// Contour measure l_lambda at distance lambda from one terminal, terminals
// separated by r: circular arc (d=2) or spherical cap (d=3) inside the lens.
double contour_measure(int d, double r, double lambda) {
    const double cos_phi = (lambda * lambda + r * r - 1.0) / (2.0 * r * lambda);
    if (cos_phi >= 1.0) return 0.0;
    if (d == 2) return 2.0 * lambda * std::acos(std::max(-1.0, cos_phi));
    return 2.0 * M_PI * lambda * lambda * (1.0 - std::max(-1.0, cos_phi));
}

double recursion_level(int d, double rho, double r, double tol) {
    if (r < 1.0) return 1.0;
    if (r < 2.0) return rho * intersection_volume(d, r);
    const double lo = r - 1.0;
    const double hi = std::floor(r);
    const double tmax = std::sqrt(hi - lo);
    // lambda = lo + t^2 removes the sqrt singularity of the contour at lambda = lo
    return rho * integrate(
                     [&](double t) {
                         const double lambda = lo + t * t;
                         return 2.0 * t * contour_measure(d, r, lambda) *
                                recursion_level(d, rho, lambda, tol);
                     },
                     0.0, tmax, tol);
}

}  // namespace

double continuum_betweenness(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0))
        throw std::invalid_argument("continuum_betweenness: eps must be in [0,1]");
    return 2.0 / M_PI * (1.0 - eps * eps) * elliptic_E(eps);
}

double connectivity_mass(const Domain& domain, const ConnectionModel& model, const Point& x) {
    if (!domain.contains(x))
        throw std::invalid_argument("connectivity_mass: x must lie inside the domain");
    switch (domain.kind()) {
        case Domain::Kind::Disk:
        case Domain::Kind::Annulus:
        case Domain::Kind::Square:
            return mass_2d(domain, model, x);
        case Domain::Kind::Sphere:
        case Domain::Kind::SphericalShell:
            return mass_3d(domain, model, x);
        case Domain::Kind::Torus:
            return mass_torus(domain, model);
        case Domain::Kind::Interval: {
            const double L = domain.side();
            return integrate([&](double y) { return connection_probability(model, std::fabs(y - x[0])); },
                             0.0, L, 1e-10);
        }
    }
    throw std::logic_error("connectivity_mass: unreachable");
}

double expected_isolated(const Domain& domain, const ConnectionModel& model, double rho) {
    if (!(rho >= 0.0)) throw std::invalid_argument("expected_isolated: rho must be >= 0");
    if (rho == 0.0) return 0.0;
    switch (domain.kind()) {
        case Domain::Kind::Disk:
        case Domain::Kind::Annulus: {
            const double r0 = domain.inner_radius();
            const double R = domain.outer_radius();
            return 2.0 * M_PI * rho *
                   integrate(
                       [&](double eps) {
                           const double m = connectivity_mass(domain, model, Point(eps, 0.0));
                           return eps * std::exp(-rho * m);
                       },
                       r0, R, 1e-7);
        }
        case Domain::Kind::Sphere:
        case Domain::Kind::SphericalShell: {
            const double r0 = domain.inner_radius();
            const double R = domain.outer_radius();
            return 4.0 * M_PI * rho *
                   integrate(
                       [&](double a) {
                           const double m = connectivity_mass(domain, model, Point(0.0, 0.0, a));
                           return a * a * std::exp(-rho * m);
                       },
                       r0, R, 1e-7);
        }
        case Domain::Kind::Square: {
            const double L = domain.side();
            return rho * integrate(
                             [&](double px) {
                                 return integrate(
                                     [&](double py) {
                                         Point p(px, py);
                                         if (!domain.contains(p)) return 0.0;
                                         return std::exp(-rho * connectivity_mass(domain, model, p));
                                     },
                                     0.0, L, 1e-6);
                             },
                             0.0, L, 1e-5);
        }
        case Domain::Kind::Torus:
            return rho * domain.measure() *
                   std::exp(-rho * mass_torus(domain, model));
        case Domain::Kind::Interval: {
            const double L = domain.side();
            return rho * integrate(
                             [&](double px) {
                                 const double m =
                                     connectivity_mass(domain, model, Point({px}));
                                 return std::exp(-rho * m);
                             },
                             0.0, L, 1e-8);
        }
    }
    throw std::logic_error("expected_isolated: unreachable");
}

PfcValue pfc_closed_form(const PfcDomainSpec& spec) {
    if (!(spec.beta > 0.0)) throw std::invalid_argument("pfc_closed_form: beta must be > 0");
    if (!(spec.rho >= 0.0)) throw std::invalid_argument("pfc_closed_form: rho must be >= 0");
    const double rho = spec.rho;
    const double beta = spec.beta;
    const double sb = std::sqrt(beta);
    const double r0 = 1.0 / sb;  // eta = 2 throughout these formulas
    const double r = spec.inner;
    const double R = spec.outer;
    using V = PfcDomainSpec::Variant;

    auto disk_deficit = [&](double radius) {
        // bulk + outer-boundary terms shared by the 2-D formulas
        const double bulk = M_PI * radius * radius * rho * std::exp(-rho * M_PI / beta);
        const double boundary =
            2.0 * M_PI * radius * std::sqrt(beta / M_PI) *
            std::exp(-(rho / beta) * (M_PI / 2.0 - std::sqrt(M_PI) / (4.0 * radius * sb)));
        return bulk + boundary;
    };
    auto shell_deficit = [&](double r_in, double r_out) {
        const double b32 = beta * sb;
        const double bulk = 4.0 * M_PI / 3.0 * (r_out * r_out * r_out - r_in * r_in * r_in) * rho *
                            std::exp(-rho * M_PI * std::sqrt(M_PI) / b32);
        const double boundary =
            4.0 * M_PI * r_out * r_out * (beta / M_PI) *
            std::exp(-rho * (M_PI * std::sqrt(M_PI) / (2.0 * b32) -
                             (1.0 / (r_out * sb)) * (M_PI / (2.0 * b32))));
        return bulk + boundary;
    };

    double raw = 0.0;
    switch (spec.variant) {
        case V::Disk:
            if (!(R > 0.0)) throw std::invalid_argument("pfc_closed_form: Disk requires R > 0");
            raw = 1.0 - disk_deficit(R);
            break;
        case V::AnnulusSmall: {
            if (!(r >= 0.0 && r < R))
                throw std::invalid_argument("pfc_closed_form: AnnulusSmall requires 0 <= r < R");
            if (!(r < r0 / 3.0))
                throw std::invalid_argument("pfc_closed_form: AnnulusSmall regime requires r < r0/3");
            const double obstacle =
                M_PI * r * r * (2.0 * beta * beta / rho) * std::exp(-rho * M_PI / (2.0 * beta));
            raw = 1.0 - disk_deficit(R) - obstacle;
            break;
        }
        case V::AnnulusLarge: {
            if (!(r > 0.0 && r < R))
                throw std::invalid_argument("pfc_closed_form: AnnulusLarge requires 0 < r < R");
            if (!(r > 3.0 * r0))
                throw std::invalid_argument("pfc_closed_form: AnnulusLarge regime requires r > 3*r0");
            const double obstacle =
                2.0 * M_PI * r * std::sqrt(beta / M_PI) *
                std::exp(-(rho / beta) * (M_PI / 2.0 + std::sqrt(M_PI) / (4.0 * r * sb)));
            raw = 1.0 - disk_deficit(R) - obstacle;
            break;
        }
        case V::AnnulusLargeLimit: {
            if (!(r > 0.0 && r < R))
                throw std::invalid_argument("pfc_closed_form: AnnulusLargeLimit requires 0 < r < R");
            if (!(r > 3.0 * r0))
                throw std::invalid_argument("pfc_closed_form: AnnulusLargeLimit regime requires r > 3*r0");
            raw = 1.0 -
                  2.0 * M_PI * (R + r) * std::sqrt(beta / M_PI) *
                      std::exp(-rho * M_PI / (2.0 * beta)) -
                  M_PI * (R * R - r * r) * rho * std::exp(-rho * M_PI / beta);
            break;
        }
        case V::ShellSmall: {
            if (!(r >= 0.0 && r < R))
                throw std::invalid_argument("pfc_closed_form: ShellSmall requires 0 <= r < R");
            if (!(r < r0 / 3.0))
                throw std::invalid_argument("pfc_closed_form: ShellSmall regime requires r < r0/3");
            const double b32 = beta * sb;
            const double obstacle =
                4.0 / 3.0 * M_PI * r * r * r *
                (12.0 * beta * beta * beta / (rho * M_PI * M_PI * M_PI)) *
                std::exp(-rho * M_PI * std::sqrt(M_PI) / (2.0 * b32));
            raw = 1.0 - shell_deficit(r, R) - obstacle;
            break;
        }
        case V::ShellLarge: {
            if (!(r > 0.0 && r < R))
                throw std::invalid_argument("pfc_closed_form: ShellLarge requires 0 < r < R");
            if (!(r > 3.0 * r0))
                throw std::invalid_argument("pfc_closed_form: ShellLarge regime requires r > 3*r0");
            const double b32 = beta * sb;
            const double obstacle =
                4.0 * M_PI * r * r * (beta / M_PI) *
                std::exp(-rho * (M_PI * std::sqrt(M_PI) / (2.0 * b32) -
                                 (1.0 / (R * sb)) * (M_PI / (2.0 * b32))));
            raw = 1.0 - shell_deficit(r, R) - obstacle;
            break;
        }
        case V::SquareObstacles: {
            const double L = spec.outer;
            if (!(L > 0.0)) throw std::invalid_argument("pfc_closed_form: SquareObstacles requires L > 0");
            double hole_area = 0.0;
            double obstacle_term = 0.0;
            for (double ri : spec.obstacle_radii) {
                if (!(ri > 0.0))
                    throw std::invalid_argument("pfc_closed_form: obstacle radii must be > 0");
                hole_area += M_PI * ri * ri;
                obstacle_term += M_PI * ri * ri * (2.0 * beta * beta / rho) *
                                 std::exp(-rho * M_PI / (2.0 * beta));
            }
            if (hole_area >= L * L)
                throw std::invalid_argument("pfc_closed_form: obstacles exceed the square");
            raw = 1.0 - obstacle_term - (L * L - hole_area) * rho * std::exp(-M_PI * rho / beta) -
                  4.0 * L * std::sqrt(beta / M_PI) * std::exp(-M_PI * rho / (2.0 * beta)) -
                  16.0 * beta / (rho * M_PI) * std::exp(-M_PI * rho / (4.0 * beta));
            break;
        }
    }
    PfcValue out;
    out.raw = raw;
    out.value = std::clamp(raw, 0.0, 1.0);
    out.clamped = out.value != raw;
    return out;
}

double expected_two_hop_exact(const GeodesicQuery& q) {
    if (!(q.r_xy >= 1.0 && q.r_xy < 2.0))
        throw std::invalid_argument("expected_two_hop_exact: r_xy must be in [1,2)");
    return q.rho * intersection_volume(q.d, q.r_xy);
}

double expected_geodesic_cardinality(const GeodesicQuery& q) {
    if (q.d < 2) throw std::invalid_argument("expected_geodesic_cardinality: d must be >= 2");
    if (!(q.r_xy >= 0.0)) throw std::invalid_argument("expected_geodesic_cardinality: r_xy must be >= 0");
    if (q.r_xy < 1.0) return 1.0;
    int j, k;
    split_hops(q.r_xy, j, k);
    const double d = q.d;
    const double lead = std::pow(q.rho, j) * std::pow(2.0 * M_PI, 0.5 * j * (d - 1.0)) *
                        std::pow(static_cast<double>(k), 0.5 * (1.0 - d)) /
                        std::tgamma((k + 1.0) / 2.0 + j * d / 2.0);
    return lead * std::pow(k - q.r_xy, 0.5 * j * (d + 1.0));
}

double geodesic_recursion_numeric(const GeodesicQuery& q, double tol) {
    if (q.d != 2 && q.d != 3)
        throw std::invalid_argument("geodesic_recursion_numeric: d must be 2 or 3");
    if (!(q.r_xy >= 0.0 && q.r_xy < 6.0))
        throw std::invalid_argument("geodesic_recursion_numeric: r_xy must be in [0,6)");
    return recursion_level(q.d, q.rho, q.r_xy, tol);
}

double beta_optimal_correction(double rho, double r_xy) {
    if (!(r_xy >= 1.0 && r_xy < 2.0))
        throw std::invalid_argument("beta_optimal_correction: r_xy must be in [1,2)");
    if (!(rho >= 0.0)) throw std::invalid_argument("beta_optimal_correction: rho must be >= 0");
    const double area = intersection_volume(2, r_xy);
    const double p_empty = std::exp(-rho * area);
    const double three_hop =
        rho * rho *
        integrate(
            [&](double lambda) {
                return contour_measure(2, r_xy, lambda) * intersection_volume(2, lambda);
            },
            1.0, 2.0, 1e-9);
    return rho * area * (1.0 - p_empty) + p_empty * three_hop;
}

NegBinParams negbin_fit(double mean, double second_moment) {
    if (!(mean > 0.0)) throw std::invalid_argument("negbin_fit: mean must be > 0");
    const double variance = second_moment - mean * mean;
    if (!(variance > mean))
        throw std::invalid_argument("negbin_fit: not over-dispersed (variance <= mean, Poisson regime)");
    NegBinParams out;
    out.p = mean / variance;
    out.r = mean * out.p / (1.0 - out.p);
    return out;
}

}  // namespace rgg
