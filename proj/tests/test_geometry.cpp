#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "utscat/errors.hpp"
#include "utscat/geometry.hpp"

#include <cmath>
#include <numbers>

using namespace utscat;

namespace {
const std::vector<cplx> kSquare{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("square midpoints and half-sides") {
    const PolygonGeometry g = build_polygon(kSquare);
    REQUIRE(g.n() == 4);
    const cplx m_ref[4] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    const cplx h_ref[4] = {{-1, 0}, {0, -1}, {1, 0}, {0, 1}};
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(g.midpoints[j] - m_ref[j]) < 1e-15);
        CHECK(std::abs(g.halfsides[j] - h_ref[j]) < 1e-15);
    }
}

TEST_CASE("side parametrization endpoints and closure") {
    const PolygonGeometry g = build_polygon({{0, 0}, {2, 0}, {2.5, 1.5}, {0.5, 2}});
    cplx closure{};
    for (int j = 0; j < g.n(); ++j) {
        CHECK(std::abs(g.side_point(j, -1.0) - g.vertices[j]) < 1e-14);
        CHECK(std::abs(g.side_point(j, +1.0) - g.vertices[(j + 1) % g.n()]) < 1e-14);
        closure += 2.0 * g.halfsides[j];
    }
    CHECK(std::abs(closure) < 1e-14);
}

TEST_CASE("translation covariance") {
    const cplx shift{0.7, -2.1};
    std::vector<cplx> moved = kSquare;
    for (cplx& v : moved) v += shift;
    const PolygonGeometry a = build_polygon(kSquare), b = build_polygon(moved);
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(b.midpoints[j] - a.midpoints[j] - shift) < 1e-14);
        CHECK(std::abs(b.halfsides[j] - a.halfsides[j]) < 1e-15);
        CHECK(b.ray_angles[j] == doctest::Approx(a.ray_angles[j]));
    }
}

TEST_CASE("ray directions and on-ray kernel zeros") {
    const PolygonGeometry g = build_polygon(kSquare);
    CHECK(ray_angle(g, 0) == doctest::Approx(kPi));     // top side, ray (0, -inf)
    CHECK(ray_angle(g, 1) == doctest::Approx(kPi / 2)); // left side, ray (0, i inf)
    CHECK_THROWS_AS((void)ray_angle(g, 4), std::out_of_range);
    for (int j = 0; j < 4; ++j) {
        const cplx pole = g.on_ray_pole(j);
        const cplx h = g.halfsides[j];
        CHECK(std::abs(pole * h - std::conj(h) / pole) < 1e-14);
        CHECK(std::abs(std::arg(pole) - g.ray_angles[j]) < 1e-14);
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS((void)build_polygon({{0, 0}, {0, 0}, {1, 1}}), DegenerateSideError);
    CHECK_THROWS_AS((void)build_polygon({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}),
                    WrongOrientationError);
    CHECK_THROWS_AS(
        (void)build_polygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), NotConvexError);
    CHECK_THROWS_AS((void)build_polygon({{0, 0}, {1, 0}}), DegenerateSideError);
}

TEST_CASE("side point record stays consistent") {
    const PolygonGeometry g = build_polygon(kSquare);
    const SidePoint sp = make_side_point(g, 2, 0.4);
    CHECK(sp.side == 2);
    CHECK(sp.t == doctest::Approx(0.4));
    CHECK(std::abs(sp.z - g.side_point(2, 0.4)) < 1e-15);
}

TEST_CASE("angle wrapping lands in (-pi, pi]") {
    CHECK(wrap_angle(3 * kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(0.3) == doctest::Approx(0.3));
    CHECK(wrap_angle(-kPi - 0.1) == doctest::Approx(kPi - 0.1));
}
