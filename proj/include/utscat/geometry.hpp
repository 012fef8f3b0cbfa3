#pragma once

#include <complex>
#include <vector>

namespace utscat {

using cplx = std::complex<double>;

/// A convex polygon with counterclockwise vertices, the midpoint/half-side
/// parametrization z(t) = m_j + t h_j of each side, and the spectral ray
/// attached to each side (arg lambda = -arg h_j). Immutable after
/// construction; sides are indexed 0..n-1 with cyclic successor.
struct PolygonGeometry {
    std::vector<cplx> vertices;
    std::vector<cplx> midpoints;
    std::vector<cplx> halfsides;
    std::vector<double> ray_angles; // in (-pi, pi]

    int n() const { return static_cast<int>(vertices.size()); }

    cplx side_point(int j, double t) const { return midpoints[j] + t * halfsides[j]; }

    /// The kernel zero lying on side j's ray: exp(i * ray_angles[j]).
    cplx on_ray_pole(int j) const;

    /// Side of the indentation detour around the on-ray pole:
    /// +1 means the detour bulges toward +i * pole, -1 toward -i * pole.
    int indentation_sign(int j) const;
};

/// A point on the boundary, kept consistent with its (side, parameter) pair.
struct SidePoint {
    int side = 0;
    double t = 0.0;
    cplx z;
};

SidePoint make_side_point(const PolygonGeometry& geom, int side, double t);

/// Validates orientation, convexity and non-degeneracy, throws
/// DegenerateSideError / WrongOrientationError / NotConvexError otherwise.
PolygonGeometry build_polygon(const std::vector<cplx>& vertices);

/// Direction of the ray attached to side j (throws std::out_of_range).
double ray_angle(const PolygonGeometry& geom, int j);

/// Reduce an angle to (-pi, pi].
double wrap_angle(double a);

} // namespace utscat
