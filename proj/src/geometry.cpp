#include "utscat/geometry.hpp"
#include "utscat/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace utscat {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

cplx PolygonGeometry::on_ray_pole(int j) const {
    return std::polar(1.0, ray_angles[j]);
}

int PolygonGeometry::indentation_sign(int j) const {
    // Pick, of the two semicircles around the on-ray pole, the one bulging
    // into the half-plane Re(d e^{-i pi/4}) > 0. On the square this leaves
    // the detours above +-1 and to the right of +-i.
    cplx cand = cplx(0, 1) * on_ray_pole(j);
    cplx rot = cand * std::polar(1.0, -kPi / 4.0);
    if (std::abs(rot.real()) > 1e-12) return rot.real() > 0 ? +1 : -1;
    return rot.imag() > 0 ? +1 : -1;
}

SidePoint make_side_point(const PolygonGeometry& geom, int side, double t) {
    if (side < 0 || side >= geom.n()) throw std::out_of_range("make_side_point: side index");
    return SidePoint{side, t, geom.side_point(side, t)};
}

PolygonGeometry build_polygon(const std::vector<cplx>& vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3) throw DegenerateSideError("build_polygon: need at least 3 vertices");

    PolygonGeometry g;
    g.vertices = vertices;
    g.midpoints.resize(n);
    g.halfsides.resize(n);
    g.ray_angles.resize(n);

    double scale = 0.0;
    for (const cplx& v : vertices) scale = std::max(scale, std::abs(v));

    for (int j = 0; j < n; ++j) {
        const cplx zj = vertices[j];
        const cplx zj1 = vertices[(j + 1) % n];
        g.midpoints[j] = 0.5 * (zj + zj1);
        g.halfsides[j] = 0.5 * (zj1 - zj);
        if (std::abs(g.halfsides[j]) < 1e-14 * std::max(1.0, scale))
            throw DegenerateSideError("build_polygon: coincident consecutive vertices");
        g.ray_angles[j] = wrap_angle(-std::arg(zj1 - zj));
    }

    // Signed area (shoelace): positive for counterclockwise.
    double area2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const cplx a = vertices[j], b = vertices[(j + 1) % n];
        area2 += a.real() * b.imag() - b.real() * a.imag();
    }
    if (area2 <= 0.0) throw WrongOrientationError("build_polygon: vertices must be counterclockwise");

    // Convexity: all consecutive edge cross products strictly positive.
    for (int j = 0; j < n; ++j) {
        const cplx e1 = 2.0 * g.halfsides[j];
        const cplx e2 = 2.0 * g.halfsides[(j + 1) % n];
        const double cross = e1.real() * e2.imag() - e2.real() * e1.imag();
        if (cross <= 0.0) throw NotConvexError("build_polygon: polygon is not strictly convex");
    }
    return g;
}

double ray_angle(const PolygonGeometry& geom, int j) {
    if (j < 0 || j >= geom.n()) throw std::out_of_range("ray_angle: side index");
    return geom.ray_angles[j];
}

} // namespace utscat
