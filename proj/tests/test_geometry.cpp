// SPDX-License-Identifier: Apache-2.0
//
// holocura: spatial statistics of curvature-reconfigurable antenna apertures
// Copyright (C) 2026 The holocura authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "generators.hpp"
#include "holocura/geometry.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace holocura;
using namespace holocura::geometry;
using Catch::Approx;

namespace
{
    constexpr double L = 0.32;
}

TEST_CASE("semicircle endpoints sit on the z axis", "[geometry]")
{
    const double R = L / pi;
    const auto g = build_arc_1d(L, R, 3);
    REQUIRE(g.half_angle() == Approx(pi / 2).epsilon(1e-15));
    const Vec3 &p1 = g.position(0);
    CHECK(std::abs(p1.x()) < 1e-15);
    CHECK(std::abs(p1.y()) < 1e-15);
    CHECK(p1.z() == Approx(R).epsilon(1e-15));
}

TEST_CASE("last element mirrors the first", "[geometry]")
{
    testing::Gen gen(11);
    for (int trial = 0; trial < 50; ++trial)
    {
        const double beta = gen.uniform(0.01, pi / 2);
        const double R = L / (2 * beta);
        const auto g = build_arc_1d(L, R, gen.index(2, 200));
        const Vec3 &pn = g.position(g.size() - 1);
        CHECK(std::abs(pn.y()) < 1e-14);
        CHECK(pn.z() == Approx(-R * std::sin(beta)).margin(1e-14));
    }
}

TEST_CASE("arc elements lie on the circle", "[geometry]")
{
    const double R = 2 * L / pi;
    const auto g = build_arc_1d(L, R, 128);
    CHECK(g.half_angle() == Approx(pi / 4).epsilon(1e-15));
    const Vec3 c(0.0, -R * std::cos(pi / 4), 0.0);
    for (std::size_t n = 0; n < g.size(); ++n)
        CHECK(std::abs((g.position(n) - c).norm() - R) < 1e-12);
}

TEST_CASE("central angles are uniform from 0 to 2 beta", "[geometry]")
{
    const auto g = build_arc_1d(L, L / (2 * 0.7), 9);
    CHECK(g.central_angle(0) == 0.0);
    CHECK(g.central_angle(8) == Approx(1.4).epsilon(1e-15));
    for (std::size_t n = 1; n < 9; ++n)
        CHECK(g.central_angle(n) - g.central_angle(n - 1) == Approx(1.4 / 8).epsilon(1e-12));
}

TEST_CASE("builders reject bad shapes", "[geometry]")
{
    CHECK_THROWS_AS(build_arc_1d(L, L / (2 * 1.6), 8), std::invalid_argument);
    CHECK_THROWS_AS(build_arc_1d(L, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_arc_1d(-1.0, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_flat_1d(L, 1), std::invalid_argument);
    CHECK_NOTHROW(build_arc_1d(L, L / pi, 4));
    // strict mode wants d_x equal to the arc spacing
    CHECK_THROWS_AS(build_cyl_2d(L, L / pi, 5, 3, 0.01, true), std::invalid_argument);
    CHECK_NOTHROW(build_cyl_2d(L, L / pi, 5, 3, L / 4, true));
    CHECK_THROWS_AS(build_flat_1d(L, 4).radius(), std::logic_error);
}

TEST_CASE("single-row 2D aperture is the 1D arc shifted by d_x", "[geometry]")
{
    const double R = L / 1.2, dx = 0.003;
    const auto arc = build_arc_1d(L, R, 17);
    const auto cyl = build_cyl_2d(L, R, 17, 1, dx);
    for (std::size_t n = 0; n < 17; ++n)
        CHECK((cyl.position(0, n) - arc.position(n) - Vec3(dx, 0, 0)).norm() < 1e-15);
}

TEST_CASE("flat 2D aperture is a regular x-z grid", "[geometry]")
{
    const auto g = build_flat_2d(L, 5, 4, 0.08, true);
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 5; ++n)
        {
            const Vec3 &p = g.position(m, n);
            CHECK(p.x() == Approx(0.08 * double(m + 1)).epsilon(1e-15));
            CHECK(p.y() == 0.0);
            CHECK(p.z() == Approx(L / 2 - 0.08 * double(n)).margin(1e-15));
        }
}

TEST_CASE("2D positions match the cylindrical formula term by term", "[geometry]")
{
    const double beta = pi / 4, R = L / (2 * beta), dx = L / 3;
    const auto g = build_cyl_2d(L, R, 4, 4, dx, true);
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n)
        {
            const double psi = 2 * beta * double(n) / 3.0;
            const Vec3 expect(double(m + 1) * dx, R * std::cos(beta - psi) - R * std::cos(beta), R * std::sin(beta - psi));
            CHECK((g.position(m, n) - expect).norm() < 1e-15);
            CHECK(g.index(m, n) == m * 4 + n);
            CHECK(g.row_of(g.index(m, n)) == m);
            CHECK(g.column_of(g.index(m, n)) == n);
        }
}

TEST_CASE("exact distance for a user on the z axis", "[geometry]")
{
    const double beta = pi / 3, R = L / (2 * beta);
    const auto g = build_arc_1d(L, R, 8);
    const UserLocation user{3.0, 0.0, 0.7};
    CHECK(exact_distance(g, 0, user) == Approx(std::abs(3.0 - R * std::sin(beta))).epsilon(1e-14));
}

TEST_CASE("exact distance matches an expanded norm", "[geometry][property]")
{
    testing::Gen gen(5);
    for (int trial = 0; trial < 200; ++trial)
    {
        const double beta = gen.uniform(0.05, pi / 2);
        const auto g = build_cyl_2d(L, L / (2 * beta), 6, 3, 0.01);
        const UserLocation u{gen.uniform(0.5, 50.0), gen.uniform(0, pi), gen.uniform(0, 2 * pi)};
        const std::size_t e = gen.index(0, g.size() - 1);
        const Vec3 p = g.position(e);
        const double ux = u.range_m * std::sin(u.zenith_rad) * std::cos(u.azimuth_rad);
        const double uy = u.range_m * std::sin(u.zenith_rad) * std::sin(u.azimuth_rad);
        const double uz = u.range_m * std::cos(u.zenith_rad);
        const double expect = std::sqrt((ux - p.x()) * (ux - p.x()) + (uy - p.y()) * (uy - p.y()) + (uz - p.z()) * (uz - p.z()));
        CHECK(exact_distance(g, e, u) == Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("user on an element is degenerate", "[geometry]")
{
    const auto g = build_arc_1d(L, L / pi, 3);
    // p_1 = (0, 0, R)
    const UserLocation on_top{L / pi, 0.0, 0.0};
    CHECK_THROWS_AS(exact_distance(g, 0, on_top), DegenerateGeometry);
}

TEST_CASE("far-field residual decays like 1/r", "[geometry]")
{
    const double beta = pi / 4;
    const auto g = build_arc_1d(L, L / (2 * beta), 32);
    const double theta = 1.1, phi = 0.9;
    std::vector<double> res;
    for (double r : {1e2, 1e3, 1e4})
    {
        double worst = 0.0;
        for (std::size_t n = 0; n < g.size(); ++n)
        {
            const double d = exact_distance(g, n, {r, theta, phi});
            worst = std::max(worst, std::abs(d - (r - farfield_path_difference(g, n, theta, phi))));
        }
        res.push_back(worst);
    }
    const double slope1 = std::log10(res[1] / res[0]), slope2 = std::log10(res[2] / res[1]);
    CHECK(slope1 == Approx(-1.0).margin(0.1));
    CHECK(slope2 == Approx(-1.0).margin(0.1));

    // halving check for doubling r
    double worst_a = 0.0, worst_b = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n)
    {
        worst_a = std::max(worst_a, std::abs(exact_distance(g, n, {200.0, theta, phi}) - 200.0 + farfield_path_difference(g, n, theta, phi)));
        worst_b = std::max(worst_b, std::abs(exact_distance(g, n, {400.0, theta, phi}) - 400.0 + farfield_path_difference(g, n, theta, phi)));
    }
    CHECK(worst_b / worst_a == Approx(0.5).margin(0.02));
}

TEST_CASE("steering vectors have unit norm", "[geometry][property]")
{
    testing::Gen gen(21);
    const double lambda = 0.01;
    for (int trial = 0; trial < 100; ++trial)
    {
        const double beta = gen.coin() ? 0.0 : gen.uniform(0.01, pi / 2);
        const auto g = build_from_pitch(gen.index(2, 40), lambda / 2, beta, gen.index(1, 4), gen.coin());
        const UserLocation u{gen.uniform(1.0, 100.0), gen.uniform(0, pi), gen.uniform(0, 2 * pi)};
        CHECK(steering_exact(g, u, lambda).norm() == Approx(1.0).epsilon(1e-12));
        CHECK(steering_farfield(g, u.zenith_rad, u.azimuth_rad, lambda).norm() == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("exact and far-field steering agree at 100 m up to the quadratic term", "[geometry]")
{
    // The phase gap at r = 100 m is bounded by k |p|^2 / (2 r), about 0.08 rad for L = 0.32 m at 30 GHz
    const double lambda = wavelength_from_frequency(3e10), r = 100.0, k = wavenumber(lambda);
    for (double beta : {0.0, pi / 4, pi / 2})
    {
        const auto g = build_from_pitch(128, L / 127, beta);
        for (double theta : {0.3, 1.2, pi / 2})
            for (double phi : {0.4, pi / 2, 2.0})
            {
                const CVector ae = steering_exact(g, {r, theta, phi}, lambda);
                const CVector af = steering_farfield(g, theta, phi, lambda);
                for (Eigen::Index n = 0; n < ae.size(); ++n)
                {
                    const double p2 = g.position(std::size_t(n)).squaredNorm();
                    CHECK(std::abs(std::arg(ae(n) / af(n))) <= k * p2 / (2 * r) * 1.01 + 1e-12);
                }
            }
    }
    // and the gap shrinks as the range grows
    const auto g = build_from_pitch(128, L / 127, pi / 4);
    double gap_near = 0.0, gap_far = 0.0;
    const CVector af = steering_farfield(g, 1.0, 1.3, lambda);
    const CVector a_near = steering_exact(g, {100.0, 1.0, 1.3}, lambda);
    const CVector a_far = steering_exact(g, {1e5, 1.0, 1.3}, lambda);
    for (Eigen::Index n = 0; n < af.size(); ++n)
    {
        gap_near = std::max(gap_near, std::abs(std::arg(a_near(n) / af(n))));
        gap_far = std::max(gap_far, std::abs(std::arg(a_far(n) / af(n))));
    }
    CHECK(gap_far < 1e-3);
    CHECK(gap_far < gap_near / 500);
}

TEST_CASE("flat far-field phase is the linear-array term", "[geometry]")
{
    const auto g = build_flat_1d(L, 9);
    for (double theta : {0.0, 0.4, 1.9, pi})
        for (std::size_t n = 0; n < 9; ++n)
            CHECK(farfield_path_difference(g, n, theta, 0.8) == Approx(g.position(n).z() * std::cos(theta)).margin(1e-16));
}

TEST_CASE("2D far-field x dependence", "[geometry]")
{
    const double dx = 0.005;
    const auto g = build_cyl_2d(L, L / 1.5, 6, 5, dx);
    const double theta = 0.7, phi = 2.2;
    for (std::size_t m = 1; m < 5; ++m)
        for (std::size_t n = 0; n < 6; ++n)
        {
            const double diff = farfield_path_difference(g, g.index(m, n), theta, phi) - farfield_path_difference(g, g.index(0, n), theta, phi);
            CHECK(diff == Approx(double(m) * dx * std::sin(theta) * std::cos(phi)).margin(1e-15));
        }
}

TEST_CASE("broadside path difference equals the y coordinate", "[geometry]")
{
    const auto g = build_arc_1d(L, L / 1.3, 11);
    for (std::size_t n = 0; n < 11; ++n)
        CHECK(farfield_path_difference(g, n, pi / 2, pi / 2) == Approx(g.position(n).y()).margin(1e-15));
}

TEST_CASE("outward normals", "[geometry]")
{
    const double beta = 0.9, R = L / (2 * beta);
    const auto g = build_arc_1d(L, R, 21);
    const Vec3 mid = outward_normal(g, 10);
    CHECK((mid - Vec3(0, 1, 0)).norm() < 1e-15);
    CHECK((outward_normal(g, 0) - Vec3(0, std::cos(beta), std::sin(beta))).norm() < 1e-15);
    for (std::size_t n = 0; n < 21; ++n)
    {
        const Vec3 nn = outward_normal(g, n);
        CHECK(std::abs(nn.norm() - 1.0) < 1e-12);
        CHECK(((g.position(n) - g.center()) / R - nn).norm() < 1e-12);
    }
    CHECK((outward_normal(build_flat_1d(L, 4), 2) - Vec3(0, 1, 0)).norm() == 0.0);
}

TEST_CASE("chord identity", "[geometry][property]")
{
    testing::Gen gen(3);
    for (int trial = 0; trial < 300; ++trial)
    {
        const double beta = gen.uniform(1e-3, pi / 2), R = L / (2 * beta);
        const auto g = build_arc_1d(L, R, gen.index(2, 256));
        const std::size_t m = gen.index(0, g.size() - 1), n = gen.index(0, g.size() - 1);
        const double chord = 2 * R * std::abs(std::sin((g.central_angle(n) - g.central_angle(m)) / 2));
        CHECK(std::abs((g.position(n) - g.position(m)).norm() - chord) < 1e-10);
    }
}

TEST_CASE("geometry JSON document", "[geometry]")
{
    const auto j = to_json(build_cyl_2d(L, L / 1.2, 4, 2, 0.01));
    CHECK(j.at("kind") == "curved_2d");
    CHECK(j.at("positions").size() == 8);
    CHECK(j.at("normals").size() == 8);
    CHECK(j.at("rows") == 2);
    CHECK(to_json(build_flat_1d(L, 3)).at("radius_m").is_null());
}

TEST_CASE("pitch builder spans (N - 1) pitches", "[geometry]")
{
    const auto flat = build_from_pitch(64, 0.005, 0.0);
    CHECK(flat.is_flat());
    CHECK(flat.length() == Approx(63 * 0.005));
    const auto curved = build_from_pitch(64, 0.005, pi / 2);
    CHECK(curved.radius() == Approx(63 * 0.005 / pi));
    const auto two = build_from_pitch(8, 0.005, pi / 4, 3, true);
    CHECK(two.rows() == 3);
    CHECK(two.x_spacing() == 0.005);
}
