#pragma once

#include <cstddef>
#include <vector>

#include "rgg/rng.hpp"

namespace rgg {

struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(double x, double y) : coords{x, y} {}
    Point(double x, double y, double z) : coords{x, y, z} {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    double norm() const;
};

double euclidean_distance(const Point& a, const Point& b);

struct ObstacleSpec {
    Point center;
    double radius = 0.0;
};

// Geometric region the point processes and graphs live in. Lengths are in
// the same units as Point coordinates (r0-normalized distance).
class Domain {
  public:
    enum class Kind { Disk, Annulus, Square, Sphere, SphericalShell, Torus, Interval };

    static Domain disk(double R);
    static Domain annulus(double r, double R);
    static Domain square(double L, std::vector<ObstacleSpec> obstacles = {});
    static Domain sphere(double R);
    static Domain spherical_shell(double r, double R);
    static Domain torus(double L);
    static Domain interval(double L);

    Kind kind() const { return kind_; }
    std::size_t dim() const;
    double inner_radius() const { return inner_; }   // Annulus / SphericalShell
    double outer_radius() const { return outer_; }   // Disk / Annulus / Sphere / Shell
    double side() const { return side_; }            // Square / Torus / Interval
    const std::vector<ObstacleSpec>& obstacles() const { return obstacles_; }

    double measure() const;   // area / volume / length, holes excluded
    double diameter() const;  // max pairwise distance within the domain
    bool convex() const;
    bool has_boundary() const { return kind_ != Kind::Torus; }

    bool contains(const Point& p) const;
    // metric used for edges; minimum-image for the torus, Euclidean otherwise
    double distance(const Point& a, const Point& b) const;
    // uniform point on the domain (rejection sampling against obstacles/holes)
    Point sample_uniform(RandomState& rng) const;

  private:
    Domain() = default;
    Kind kind_ = Kind::Disk;
    double inner_ = 0.0;
    double outer_ = 0.0;
    double side_ = 0.0;
    std::vector<ObstacleSpec> obstacles_;
};

// True iff the closed segment x->y stays inside the domain. Grazing tangency
// (segment touching a blocking circle to within 1e-12) counts as visible.
bool visibility(const Domain& domain, const Point& x, const Point& y);

// d-volume of the intersection of two unit balls at center separation s.
// Regularized-incomplete-beta form; 0 for s >= 2. Supports d in [1,10].
double intersection_volume(int d, double s);

// Volume of the unit ball in d dimensions.
double unit_ball_volume(int d);

// (d-1)-dimensional surface measure of the spherical cap of colatitude phi
// on a sphere of the given radius, d in [2,10], phi in [0,pi].
double cap_area(int d, double radius, double phi);

// Full surface of the (d-1)-sphere of the given radius.
double sphere_surface(int d, double radius);

// Hyperbolic distance between two points read off in the Cartesian chart:
// arccosh(cosh y1 cosh(x2-x1) cosh y2 - sinh y1 sinh y2).
double hyperbolic_distance(const Point& p, const Point& q);

}  // namespace rgg
