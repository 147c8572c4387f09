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
#include "holocura/numerics.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <catch_amalgamated.hpp>

using namespace holocura;
using namespace holocura::numerics;
using Catch::Approx;

TEST_CASE("J0 at the origin and its first zero", "[numerics][bessel]")
{
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
    // root bracket
    CHECK(bessel_j0(2.40) > 0.0);
    CHECK(bessel_j0(2.41) < 0.0);
}

TEST_CASE("J0 matches 20-digit references", "[numerics][bessel]")
{
    // mpmath besselj(0, x) at 30 digits
    const std::vector<std::pair<double, double>> ref{
        {0.5, 0.93846980724081290423},   {2.5, -0.048383776468197996327}, {7.3, 0.28821694763501439904},
        {13.0, 0.206926102377067811},    {24.9, 0.083245968353015490053}, {25.1, 0.10827567149994945198},
        {40.0, 0.0073668905842372895535}, {100.0, 0.019985850304223122424}, {1000.0, 0.024786686152420174561}};
    for (const auto &[x, v] : ref)
    {
        INFO("x = " << x);
        CHECK(std::abs(bessel_j0(x) - v) <= 1e-12);
        CHECK(std::abs(bessel_j0(-x) - v) <= 1e-12);
    }
}

TEST_CASE("J0 agrees with Boost over a dense sweep", "[numerics][bessel][property]")
{
    double worst = 0.0, at = 0.0;
    for (double x = 0.0; x <= 300.0; x += 0.0137)
    {
        const double e = std::abs(bessel_j0(x) - boost::math::cyl_bessel_j(0, x));
        if (e > worst)
        {
            worst = e;
            at = x;
        }
    }
    INFO("worst at x = " << at);
    CHECK(worst <= 1e-12);
}

TEST_CASE("J0 from its integral representation", "[numerics][bessel]")
{
    for (double z : {0.5, 3.0, 10.0})
    {
        const auto r = integrate_1d([z](double t) { return std::cos(z * std::sin(t)); }, 0.0, pi, 1e-12);
        CHECK(std::abs(r.value - pi * bessel_j0(z)) < 1e-8);
    }
}

TEST_CASE("quadrature rules integrate constants exactly", "[numerics][quadrature]")
{
    for (std::size_t n : {1u, 2u, 7u, 64u, 501u})
    {
        const auto gl = QuadratureRule::gauss_legendre(n, -0.3, 2.9);
        double sum = 0.0;
        for (double w : gl.weights)
        {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - 3.2) < 1e-14);
    }
    for (std::size_t n : {2u, 10u, 720u})
    {
        const auto s = QuadratureRule::simpson(n, 0.0, pi);
        CHECK(s.size() == n + 1);
        double sum = 0.0;
        for (double w : s.weights)
        {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - pi) < 1e-13);
    }
    CHECK_THROWS_AS(QuadratureRule::simpson(3, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre is exact up to degree 2n - 1", "[numerics][quadrature]")
{
    const auto gl = QuadratureRule::gauss_legendre(6, 0.0, 2.0);
    for (int p = 0; p <= 11; ++p)
        CHECK(gl.apply([p](double x) { return std::pow(x, p); }) == Approx(std::pow(2.0, p + 1) / (p + 1)).epsilon(1e-13));
}

TEST_CASE("adaptive integration", "[numerics][quadrature]")
{
    CHECK(integrate_1d([](double) { return 1.0; }, 0.0, 1.0, 1e-12).value == Approx(1.0).epsilon(1e-15));
    CHECK(integrate_1d([](double) { return 1.0; }, std::cos(pi / 3), 1.0, 1e-12).value == Approx(0.5).epsilon(1e-14));
    const auto osc = integrate_1d([](double t) { return std::cos(10.0 * std::sin(t)); }, 0.0, pi, 1e-12);
    CHECK(std::abs(osc.value - pi * bessel_j0(10.0)) < 1e-10);
    CHECK(osc.error_bound <= 1e-12);
    CHECK(osc.evaluations > 0);
    CHECK(integrate_1d([](double x) { return x; }, 2.0, 2.0, 1e-12).value == 0.0);
    CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 1.0, 0.0, 1e-12), std::invalid_argument);
    // far too few intervals for a wildly oscillating integrand
    CHECK_THROWS_AS(integrate_1d([](double x) { return std::cos(5000.0 * x * x); }, 0.0, 3.0, 1e-14, 3), NonConvergence);
}

TEST_CASE("front half-space density integrates to one", "[numerics][oracle]")
{
    const auto grid = AngularGrid::uniform(721, 1441, 0.0, pi, 0.0, pi);
    CHECK(std::abs(grid.density_integral() - 1.0) < 1e-6);
    CHECK(grid.cell_weight(0, 0) == 0.0); // sin(0)
    CHECK_THROWS_AS(AngularGrid::uniform(720, 1441, 0.0, pi, 0.0, pi), std::invalid_argument);
}

TEST_CASE("oracle normalization", "[numerics][oracle]")
{
    const double lambda = 0.01;
    testing::Gen gen(12);
    for (int trial = 0; trial < 5; ++trial)
    {
        const Vec3 p(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
        const auto front = oracle_corr_pair(p, p, lambda, OracleDomain::front);
        CHECK(std::abs(front.value - cplx(1.0, 0.0)) < 1e-8);
        for (double beta : {pi / 6, pi / 4, pi / 3, pi / 2})
        {
            const auto both = oracle_corr_pair(p, p, lambda, OracleDomain::front_and_caps, beta);
            CHECK(std::abs(both.value - cplx(2.0 - std::cos(beta), 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("oracle is Hermitian in the pair order", "[numerics][oracle][property]")
{
    testing::Gen gen(99);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Vec3 a(gen.uniform(-0.02, 0.02), gen.uniform(-0.02, 0.02), gen.uniform(-0.02, 0.02));
        const Vec3 b(gen.uniform(-0.02, 0.02), gen.uniform(-0.02, 0.02), gen.uniform(-0.02, 0.02));
        const double beta = gen.uniform(0.0, pi / 2);
        const auto ab = oracle_corr_pair(a, b, 0.01, OracleDomain::front_and_caps, beta);
        const auto ba = oracle_corr_pair(b, a, 0.01, OracleDomain::front_and_caps, beta);
        CHECK(std::abs(ab.value - std::conj(ba.value)) < 1e-12);
    }
}

TEST_CASE("in-plane pairs reproduce the sinc kernel", "[numerics][oracle]")
{
    const double lambda = 0.01;
    testing::Gen gen(31);
    for (int trial = 0; trial < 12; ++trial)
    {
        const Vec3 a(0.0, gen.uniform(-0.03, 0.03), gen.uniform(-0.05, 0.05));
        const Vec3 b(0.0, gen.uniform(-0.03, 0.03), gen.uniform(-0.05, 0.05));
        const auto r = oracle_corr_pair(a, b, lambda, OracleDomain::front);
        CHECK(std::abs(r.value.real() - sinc(2.0 * (a - b).norm() / lambda)) < 1e-6);
    }
}

TEST_CASE("oracle matches two-dimensional adaptive references", "[numerics][oracle]")
{
    // scipy dblquad of sin(theta) cos(k d.u) / (2 pi), arc L = 0.32 m, N = 16, lambda = 0.02 m
    struct Ref
    {
        double beta;
        std::size_t m, n;
        double front, total;
    };
    const std::vector<Ref> refs{{pi / 4, 0, 1, 0.0602981616953875, 0.0823829361012065},
                                {pi / 4, 2, 5, 0.04606188651901, 0.0962862770416806},
                                {pi / 4, 0, 15, 0.00620669643531244, 0.00224844520691942},
                                {pi / 2, 0, 1, 0.0591229809609276, 0.118245961921855},
                                {pi / 2, 2, 5, 0.0404580235707337, 0.0809160471414673},
                                {pi / 2, 0, 15, 0.0143754068468252, 0.0287508136936503}};
    for (const auto &r : refs)
    {
        const auto g = geometry::build_arc_1d(0.32, 0.32 / (2 * r.beta), 16);
        const auto f = oracle_corr_pair(g.position(r.m), g.position(r.n), 0.02, OracleDomain::front, r.beta);
        const auto t = oracle_corr_pair(g.position(r.m), g.position(r.n), 0.02, OracleDomain::front_and_caps, r.beta);
        CHECK(std::abs(f.value.real() - r.front) < 1e-8);
        CHECK(std::abs(t.value.real() - r.total) < 1e-8);
    }
}

TEST_CASE("refined oracle agrees with the fixed uniform grid", "[numerics][oracle]")
{
    const auto grid = AngularGrid::uniform(721, 1441, 0.0, pi, 0.0, pi);
    const auto g = geometry::build_arc_1d(0.32, 0.32 / pi, 64);
    const double lambda = 0.01;
    for (std::size_t n : {1u, 7u, 40u})
    {
        const cplx fixed = oracle_corr_on_grid(g.position(0), g.position(n), lambda, grid);
        const auto refined = oracle_corr_pair(g.position(0), g.position(n), lambda, OracleDomain::front);
        CHECK(std::abs(fixed - refined.value) < 1e-6);
    }
}

TEST_CASE("oracle reports non-convergence", "[numerics][oracle]")
{
    const Vec3 a(0.0, 0.0, 0.5), b(0.0, 0.3, -0.5);
    CHECK_THROWS_AS(oracle_corr_pair(a, b, 0.001, OracleDomain::front, 0.0, {1e-7, 64}), NonConvergence);
}

TEST_CASE("backside azimuth integral", "[numerics][oracle]")
{
    const auto zero = phi_integral_identity_check(0.0);
    CHECK(std::abs(zero.integral - cplx(pi, 0.0)) < 1e-13);
    CHECK(zero.pi_j0 == Approx(pi).epsilon(1e-15));
    for (double z : {0.7, 5.0, 17.3, 49.0})
    {
        const auto r = phi_integral_identity_check(z);
        CHECK(std::abs(r.integral.real() - r.pi_j0) < 1e-8);
        CHECK(std::abs(r.integral.imag() - odd_phi_part(z)) < 1e-8);
    }
    CHECK(odd_phi_part(0.0) == 0.0);
    CHECK(odd_phi_part(-3.0) == Approx(-odd_phi_part(3.0)));
}

TEST_CASE("cap imaginary part: zero for flat pairs, odd Bessel term otherwise", "[numerics][oracle]")
{
    const double lambda = 0.01, k = wavenumber(lambda);
    // flat pairs have no y offset and the odd part cancels
    {
        const Vec3 a(0.0, 0.0, 0.012), b(0.0, 0.0, -0.007);
        for (double beta : {pi / 6, pi / 3, pi / 2})
            CHECK(std::abs(oracle_corr_pair(a, b, lambda, OracleDomain::caps, beta).value.imag()) < 1e-9);
    }
    // curved pairs keep -(1/pi) int_0^beta sin(t) cos(k dz cos t) Xi(k dy sin t) dt; n = 15 mirrors n = 0 and has dy = 0
    for (double beta : {pi / 6, pi / 4, pi / 2})
    {
        const auto g = geometry::build_arc_1d(0.04, 0.04 / (2 * beta), 16);
        for (std::size_t n : {3u, 9u, 12u})
        {
            const Vec3 d = g.position(0) - g.position(n);
            const auto caps = oracle_corr_pair(g.position(0), g.position(n), lambda, OracleDomain::caps, beta, {1e-10, 4096});
            const double predicted = -integrate_1d([&](double t) {
                                          return std::sin(t) * std::cos(k * d.z() * std::cos(t)) *
                                                 odd_phi_part(k * d.y() * std::sin(t));
                                      },
                                                   0.0, beta, 1e-11)
                                          .value /
                                     pi;
            CHECK(std::abs(caps.value.imag() - predicted) < 1e-8);
            CHECK(std::abs(caps.value.imag()) > 1e-4);
        }
    }
}
