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

#include "holocura/geometry.hpp"

#include <cmath>
#include <string>

namespace holocura::geometry
{
    namespace
    {
        // Round-off allowance when beta is computed as exactly pi/2 from L and R
        constexpr double beta_slack = 1e-12;

        void check_common(double length_m, std::size_t num_columns)
        {
            if (!(length_m > 0.0) || !std::isfinite(length_m))
                throw std::invalid_argument("Aperture length must be positive and finite");
            if (num_columns < 2)
                throw std::invalid_argument("Aperture needs at least 2 elements along the arc, got " + std::to_string(num_columns));
        }

        double checked_half_angle(double length_m, double radius_m)
        {
            if (!(radius_m > 0.0) || !std::isfinite(radius_m))
                throw std::invalid_argument("Curvature radius must be positive and finite");
            double beta = length_m / (2.0 * radius_m);
            if (beta > 0.5 * pi * (1.0 + beta_slack))
                throw std::invalid_argument("Half angle beta = L/(2R) = " + std::to_string(beta) + " exceeds pi/2");
            return std::min(beta, 0.5 * pi);
        }

        void check_x_spacing(double x_spacing_m, double arc_spacing, bool strict)
        {
            if (!(x_spacing_m > 0.0) || !std::isfinite(x_spacing_m))
                throw std::invalid_argument("Row spacing d_x must be positive");
            if (strict && std::abs(x_spacing_m - arc_spacing) > 1e-12 * arc_spacing)
                throw std::invalid_argument("Row spacing d_x = " + std::to_string(x_spacing_m) +
                                            " differs from the arc spacing d_yz = " + std::to_string(arc_spacing));
        }
    }

    Vec3 direction_vector(double zenith_rad, double azimuth_rad)
    {
        const double st = std::sin(zenith_rad);
        return {st * std::cos(azimuth_rad), st * std::sin(azimuth_rad), std::cos(zenith_rad)};
    }

    Vec3 UserLocation::cartesian() const
    {
        return range_m * direction_vector(zenith_rad, azimuth_rad);
    }

    UserLocation UserLocation::from_degrees(double range_m, double zenith_deg, double azimuth_deg)
    {
        return {range_m, zenith_deg * pi / 180.0, azimuth_deg * pi / 180.0};
    }

    double Aperture::radius() const
    {
        if (flat)
            throw std::logic_error("Flat aperture has no finite curvature radius");
        return curvature_radius;
    }

    Vec3 Aperture::center(std::size_t row) const
    {
        const double x = two_dim ? double(row + 1) * pitch_x : 0.0;
        return {x, -radius() * std::cos(beta), 0.0};
    }

    double Aperture::central_angle(std::size_t column) const { return alphas.at(column); }

    double Aperture::tilt(std::size_t column) const { return beta - alphas.at(column); }

    double Aperture::arc_coordinate(std::size_t column) const
    {
        if (column >= n_cols)
            throw std::out_of_range("Column index out of range");
        if (flat)
            return 0.5 * arc_length - double(column) * pitch_yz;
        return curvature_radius * tilt(column);
    }

    void Aperture::place_elements()
    {
        alphas.resize(n_cols);
        for (std::size_t n = 0; n < n_cols; ++n)
            alphas[n] = flat ? 0.0 : 2.0 * beta * double(n) / double(n_cols - 1);

        positions.assign(size(), Vec3::Zero());
        for (std::size_t m = 0; m < n_rows; ++m)
        {
            const double x = two_dim ? double(m + 1) * pitch_x : 0.0;
            for (std::size_t n = 0; n < n_cols; ++n)
            {
                Vec3 &p = positions[index(m, n)];
                if (flat)
                    p = {x, 0.0, arc_coordinate(n)};
                else
                {
                    // R cos(beta - alpha) - R cos(beta), written without cancellation
                    const double a = alphas[n];
                    const double y = 2.0 * curvature_radius * std::sin(beta - 0.5 * a) * std::sin(0.5 * a);
                    p = {x, y, curvature_radius * std::sin(beta - a)};
                }
            }
        }
    }

    Aperture build_arc_1d(double length_m, double radius_m, std::size_t num_elements)
    {
        check_common(length_m, num_elements);
        Aperture g;
        g.beta = checked_half_angle(length_m, radius_m);
        g.curvature_radius = radius_m;
        g.arc_length = length_m;
        g.n_cols = num_elements;
        g.pitch_yz = length_m / double(num_elements - 1);
        g.place_elements();
        return g;
    }

    Aperture build_flat_1d(double length_m, std::size_t num_elements)
    {
        check_common(length_m, num_elements);
        Aperture g;
        g.flat = true;
        g.arc_length = length_m;
        g.n_cols = num_elements;
        g.pitch_yz = length_m / double(num_elements - 1);
        g.place_elements();
        return g;
    }

    Aperture build_cyl_2d(double length_m, double radius_m, std::size_t num_columns, std::size_t num_rows,
                          double x_spacing_m, bool strict_spacing)
    {
        check_common(length_m, num_columns);
        if (num_rows < 1)
            throw std::invalid_argument("2D aperture needs at least one row");
        Aperture g;
        g.two_dim = true;
        g.beta = checked_half_angle(length_m, radius_m);
        g.curvature_radius = radius_m;
        g.arc_length = length_m;
        g.n_cols = num_columns;
        g.n_rows = num_rows;
        g.pitch_yz = length_m / double(num_columns - 1);
        check_x_spacing(x_spacing_m, g.pitch_yz, strict_spacing);
        g.pitch_x = x_spacing_m;
        g.place_elements();
        return g;
    }

    Aperture build_flat_2d(double length_m, std::size_t num_columns, std::size_t num_rows, double x_spacing_m,
                           bool strict_spacing)
    {
        check_common(length_m, num_columns);
        if (num_rows < 1)
            throw std::invalid_argument("2D aperture needs at least one row");
        Aperture g;
        g.two_dim = true;
        g.flat = true;
        g.arc_length = length_m;
        g.n_cols = num_columns;
        g.n_rows = num_rows;
        g.pitch_yz = length_m / double(num_columns - 1);
        check_x_spacing(x_spacing_m, g.pitch_yz, strict_spacing);
        g.pitch_x = x_spacing_m;
        g.place_elements();
        return g;
    }

    Aperture build_from_pitch(std::size_t num_columns, double pitch_m, double half_angle_rad, std::size_t num_rows,
                              bool two_dim)
    {
        if (num_columns < 2)
            throw std::invalid_argument("Aperture needs at least 2 elements along the arc");
        if (!(pitch_m > 0.0))
            throw std::invalid_argument("Element pitch must be positive");
        if (half_angle_rad < 0.0)
            throw std::invalid_argument("Half angle must be nonnegative");
        const double length = double(num_columns - 1) * pitch_m;
        if (!two_dim)
        {
            if (half_angle_rad == 0.0)
                return build_flat_1d(length, num_columns);
            return build_arc_1d(length, length / (2.0 * half_angle_rad), num_columns);
        }
        if (half_angle_rad == 0.0)
            return build_flat_2d(length, num_columns, num_rows, pitch_m);
        return build_cyl_2d(length, length / (2.0 * half_angle_rad), num_columns, num_rows, pitch_m);
    }

    double exact_distance(const Aperture &geom, std::size_t element, const UserLocation &user)
    {
        if (!(user.range_m > 0.0))
            throw std::invalid_argument("User range must be positive");
        const double d = (user.cartesian() - geom.position(element)).norm();
        if (!(d > 1e-12))
            throw DegenerateGeometry("User coincides with element " + std::to_string(element));
        return d;
    }

    double farfield_path_difference(const Aperture &geom, std::size_t element, double zenith_rad, double azimuth_rad)
    {
        const std::size_t n = geom.column_of(element);
        const double st = std::sin(zenith_rad), ct = std::cos(zenith_rad);
        const double x_term = geom.is_2d() ? double(geom.row_of(element) + 1) * geom.x_spacing() * st * std::cos(azimuth_rad) : 0.0;
        if (geom.is_flat())
            return x_term + geom.arc_coordinate(n) * ct;

        const double R = geom.radius(), beta = geom.half_angle(), g = geom.tilt(n);
        return x_term + R * (st * std::sin(azimuth_rad) * (std::cos(g) - std::cos(beta)) + ct * std::sin(g));
    }

    CVector steering_exact(const Aperture &geom, const UserLocation &user, double wavelength)
    {
        const double k = wavenumber(wavelength);
        const double scale = 1.0 / std::sqrt(double(geom.size()));
        CVector a(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
            a[i] = scale * std::polar(1.0, -k * (exact_distance(geom, i, user) - user.range_m));
        return a;
    }

    CVector steering_farfield(const Aperture &geom, double zenith_rad, double azimuth_rad, double wavelength)
    {
        const double k = wavenumber(wavelength);
        const double scale = 1.0 / std::sqrt(double(geom.size()));
        CVector a(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
            a[i] = scale * std::polar(1.0, k * farfield_path_difference(geom, i, zenith_rad, azimuth_rad));
        return a;
    }

    Vec3 outward_normal(const Aperture &geom, std::size_t element)
    {
        if (element >= geom.size())
            throw std::out_of_range("Element index out of range");
        if (geom.is_flat())
            return {0.0, 1.0, 0.0};
        const double g = geom.tilt(geom.column_of(element));
        return {0.0, std::cos(g), std::sin(g)};
    }

    nlohmann::json to_json(const Aperture &geom)
    {
        nlohmann::json j;
        j["kind"] = std::string(geom.is_flat() ? "flat" : "curved") + (geom.is_2d() ? "_2d" : "_1d");
        j["length_m"] = geom.length();
        j["radius_m"] = geom.is_flat() ? nlohmann::json(nullptr) : nlohmann::json(geom.radius());
        j["half_angle_rad"] = geom.half_angle();
        j["rows"] = geom.rows();
        j["columns"] = geom.columns();
        j["arc_spacing_m"] = geom.arc_spacing();
        j["x_spacing_m"] = geom.x_spacing();
        auto &pos = j["positions"] = nlohmann::json::array();
        auto &nrm = j["normals"] = nlohmann::json::array();
        for (std::size_t i = 0; i < geom.size(); ++i)
        {
            const Vec3 &p = geom.position(i);
            const Vec3 nn = outward_normal(geom, i);
            pos.push_back({p.x(), p.y(), p.z()});
            nrm.push_back({nn.x(), nn.y(), nn.z()});
        }
        return j;
    }
}
