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
#include "holocura/visibility.hpp"

#include <catch_amalgamated.hpp>

using namespace holocura;
using namespace holocura::visibility;
using geometry::UserLocation;

namespace
{
    constexpr double L = 0.32;

    // (u - p_n) . n_n >= 0 evaluated from positions and normals
    bool tangent_plane_from_positions(const geometry::Aperture &g, std::size_t e, const UserLocation &u, double *margin)
    {
        const double v = (u.cartesian() - g.position(e)).dot(geometry::outward_normal(g, e));
        if (margin)
            *margin = v;
        return v >= 0.0;
    }
}

TEST_CASE("flat aperture sees the whole front half space", "[visibility]")
{
    const auto g = geometry::build_flat_1d(L, 32);
    for (double theta = 0.0; theta <= pi; theta += pi / 18)
        for (double phi = 0.0; phi <= pi; phi += pi / 18)
            for (double r : {0.5, 2.0, 100.0})
            {
                const auto m = vr_mask_1d(g, {r, theta, phi}, VrPolicy::full_tangent);
                CHECK(m.all_visible());
            }
}

TEST_CASE("far users reduce the test to g >= 0", "[visibility]")
{
    const double beta = pi / 3;
    const auto g = geometry::build_arc_1d(L, L / (2 * beta), 64);
    testing::Gen gen(8);
    for (int trial = 0; trial < 200; ++trial)
    {
        const UserLocation u{1e9, gen.uniform(0, pi), gen.uniform(0, 2 * pi)};
        const auto m = vr_mask_1d(g, u, VrPolicy::full_tangent);
        for (std::size_t n = 0; n < g.size(); ++n)
        {
            const double s = tangent_statistic(g, n, u.zenith_rad, u.azimuth_rad);
            if (std::abs(s) > 1e-6)
                CHECK(m[n] == (s >= 0.0));
        }
    }
}

TEST_CASE("broadside user sees the middle element", "[visibility]")
{
    const double beta = pi / 2, R = L / pi;
    const auto g = geometry::build_arc_1d(L, R, 33);
    for (double r : {R, 2 * R, 10.0})
    {
        const UserLocation u{r, pi / 2, pi / 2};
        CHECK(tangent_visible(g, 16, u));
        // (u - C) . n = r + R cos(beta)
        CHECK((u.cartesian() - g.center()).dot(geometry::outward_normal(g, 16)) == Catch::Approx(r + R * std::cos(beta)));
    }
}

TEST_CASE("tangent test agrees with the position form", "[visibility][property]")
{
    testing::Gen gen(44);
    std::size_t checked = 0;
    for (int trial = 0; trial < 400; ++trial)
    {
        const double beta = gen.uniform(0.01, pi / 2);
        const auto g = geometry::build_arc_1d(L, L / (2 * beta), 24);
        const UserLocation u{gen.uniform(0.3, 20.0), gen.uniform(0, pi), gen.uniform(0, 2 * pi)};
        for (std::size_t n = 0; n < g.size(); ++n)
        {
            double margin = 0.0;
            const bool direct = tangent_plane_from_positions(g, n, u, &margin);
            if (std::abs(margin) < 1e-12)
                continue;
            CHECK(tangent_visible(g, n, u) == direct);
            ++checked;
        }
    }
    CHECK(checked > 9000);
}

TEST_CASE("visibility is monotone in range", "[visibility][property]")
{
    testing::Gen gen(9);
    for (int trial = 0; trial < 300; ++trial)
    {
        const double beta = gen.uniform(0.01, pi / 2);
        const auto g = geometry::build_arc_1d(L, L / (2 * beta), 40);
        const double theta = gen.uniform(0, pi), phi = gen.uniform(0, 2 * pi);
        const double r1 = gen.uniform(0.2, 5.0), r2 = r1 * gen.uniform(1.0, 20.0);
        const auto m1 = vr_mask_1d(g, {r1, theta, phi}, VrPolicy::full_tangent);
        const auto m2 = vr_mask_1d(g, {r2, theta, phi}, VrPolicy::full_tangent);
        for (std::size_t n = 0; n < g.size(); ++n)
            if (m1[n])
                CHECK(m2[n]);
    }
}

TEST_CASE("broadside-gated policy only tests the broadside cut", "[visibility]")
{
    const auto g = geometry::build_arc_1d(L, L / pi, 64);
    const UserLocation off{2.0, 0.2, 1.2};
    CHECK(vr_mask_1d(g, off, VrPolicy::broadside_gated).all_visible());
    CHECK_FALSE(vr_mask_1d(g, off, VrPolicy::full_tangent).all_visible());

    const UserLocation on{2.0, 0.2, pi / 2 + 0.004};
    const auto gated = vr_mask_1d(g, on, VrPolicy::broadside_gated);
    const auto full = vr_mask_1d(g, on, VrPolicy::full_tangent);
    CHECK(gated.bits == full.bits);
    CHECK_FALSE(gated.all_visible());
    CHECK(vr_mask_1d(g, on, VrPolicy::all_visible).all_visible());
    // outside the half-degree window
    CHECK(vr_mask_1d(g, {2.0, 0.2, pi / 2 + 0.01}, VrPolicy::broadside_gated).all_visible());
}

TEST_CASE("2D masks are replicated across rows", "[visibility]")
{
    const double beta = pi / 3;
    const auto g = geometry::build_cyl_2d(L, L / (2 * beta), 16, 5, L / 15);
    testing::Gen gen(77);
    for (int trial = 0; trial < 8; ++trial)
    {
        const UserLocation u{gen.uniform(0.5, 5.0), gen.uniform(0, pi), gen.uniform(0, 2 * pi)};
        const auto m = vr_mask_2d(g, u, VrPolicy::broadside_gated);
        for (std::size_t row = 1; row < g.rows(); ++row)
            for (std::size_t n = 0; n < g.columns(); ++n)
                CHECK(m[g.index(row, n)] == m[g.index(0, n)]);
        for (std::size_t n = 0; n < g.columns(); ++n)
            CHECK(m[g.index(0, n)] == tangent_visible(g, n, u));
    }
    const auto flat = geometry::build_flat_2d(L, 8, 3, L / 7);
    CHECK(vr_mask_2d(flat, {3.0, 1.0, 0.5}, VrPolicy::full_tangent).all_visible());
}

TEST_CASE("gating zeroes exactly the hidden entries", "[visibility]")
{
    testing::Gen gen(1);
    const CVector h = gen.complex_vector(10);
    VisibilityMask all{std::vector<std::uint8_t>(10, 1), VrPolicy::full_tangent};
    VisibilityMask none{std::vector<std::uint8_t>(10, 0), VrPolicy::full_tangent};
    VisibilityMask half{{1, 0, 1, 0, 1, 0, 1, 0, 1, 0}, VrPolicy::full_tangent};
    CHECK(gate_channel(h, all) == h);
    CHECK(gate_channel(h, none).squaredNorm() == 0.0);
    const CVector gated = gate_channel(h, half);
    double expect = 0.0;
    for (int i = 0; i < 10; i += 2)
        expect += std::norm(h(i));
    CHECK(gated.squaredNorm() == Catch::Approx(expect));
    for (int i = 1; i < 10; i += 2)
        CHECK(gated(i) == cplx(0.0, 0.0));
    CHECK(half.bitmap() == "1010101010");
    CHECK_THROWS_AS(gate_channel(gen.complex_vector(3), half), std::invalid_argument);
}

TEST_CASE("NLoS support filter", "[visibility]")
{
    CHECK_FALSE(nlos_support_filter(pi / 2, 3 * pi / 2, 0.0));
    CHECK(nlos_support_filter(pi / 2, pi / 3, 0.0));
    CHECK(nlos_support_filter(pi / 12, 3 * pi / 2, pi / 6));
    CHECK_FALSE(nlos_support_filter(pi / 3, 3 * pi / 2, pi / 6));
    CHECK(nlos_support_filter(pi - 0.1, -pi / 2, pi / 6));
    for (double theta = 0.0; theta <= pi; theta += 0.05)
        for (double phi = 0.0; phi < 2 * pi; phi += 0.05)
        {
            CHECK(nlos_support_filter(theta, phi, pi / 2));
            // flat: exactly the front half space
            const double wrapped = std::fmod(phi, 2 * pi);
            CHECK(nlos_support_filter(theta, phi, 0.0) == (wrapped <= pi || theta == 0.0 || theta == pi));
        }
}

TEST_CASE("policy names round-trip", "[visibility]")
{
    for (auto p : {VrPolicy::broadside_gated, VrPolicy::full_tangent, VrPolicy::all_visible})
        CHECK(policy_from_string(to_string(p)) == p);
    CHECK(policy_from_string("off") == VrPolicy::all_visible);
    CHECK_THROWS_AS(policy_from_string("maybe"), std::invalid_argument);
}
