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

#ifndef HOLOCURA_GEOMETRY_HPP
#define HOLOCURA_GEOMETRY_HPP

#include "holocura/common.hpp"

#include <json.hpp>
#include <vector>

namespace holocura::geometry
{
    // User position in spherical coordinates around the array origin
    struct UserLocation
    {
        double range_m = 1.0;     // r > 0
        double zenith_rad = 0.0;  // theta in [0, pi]
        double azimuth_rad = 0.0; // phi

        Vec3 cartesian() const;
        static UserLocation from_degrees(double range_m, double zenith_deg, double azimuth_deg);
    };

    // Unit vector pointing towards (theta, phi)
    Vec3 direction_vector(double zenith_rad, double azimuth_rad);

    // A 1D arc (M = 1) or a stack of M identical arcs along x (2D cylindrical section).
    // Curved apertures lie on a circle of radius R centered at C = (x, -R cos(beta), 0).
    // The flat variant (beta = 0) places the arc samples on the z-axis without any R = inf arithmetic.
    // Elements are flattened row-major: index = m * columns + n, m along x, n along the arc.
    class Aperture
    {
    public:
        std::size_t rows() const { return n_rows; }
        std::size_t columns() const { return n_cols; }
        std::size_t size() const { return n_rows * n_cols; }
        bool is_flat() const { return flat; }
        bool is_2d() const { return two_dim; }

        double length() const { return arc_length; }           // L, arc length spanned by the element centers [m]
        double half_angle() const { return beta; }             // beta = L / (2R), 0 for flat
        double radius() const;                                 // R, throws for the flat variant
        double arc_spacing() const { return pitch_yz; }        // d_yz = L / (N - 1)
        double x_spacing() const { return pitch_x; }           // d_x, 0 for 1D
        Vec3 center(std::size_t row = 0) const;                // circle center of a row, throws for flat
        double central_angle(std::size_t column) const;        // alpha_n (psi_n in 2D), 0-based column
        double tilt(std::size_t column) const;                 // gamma_n = beta - alpha_n
        double arc_coordinate(std::size_t column) const;       // signed arc length from the middle, R * gamma_n or z_n

        std::size_t index(std::size_t row, std::size_t column) const { return row * n_cols + column; }
        std::size_t row_of(std::size_t element) const { return element / n_cols; }
        std::size_t column_of(std::size_t element) const { return element % n_cols; }

        const Vec3 &position(std::size_t element) const { return positions.at(element); }
        const Vec3 &position(std::size_t row, std::size_t column) const { return positions.at(index(row, column)); }
        const std::vector<Vec3> &all_positions() const { return positions; }

        friend Aperture build_arc_1d(double, double, std::size_t);
        friend Aperture build_flat_1d(double, std::size_t);
        friend Aperture build_cyl_2d(double, double, std::size_t, std::size_t, double, bool);
        friend Aperture build_flat_2d(double, std::size_t, std::size_t, double, bool);

    private:
        Aperture() = default;
        void place_elements();

        std::size_t n_rows = 1, n_cols = 0;
        bool flat = false, two_dim = false;
        double arc_length = 0.0, beta = 0.0, curvature_radius = 0.0;
        double pitch_yz = 0.0, pitch_x = 0.0;
        std::vector<double> alphas;
        std::vector<Vec3> positions;
    };

    // Curved 1D aperture: requires L > 0, R > 0, N >= 2 and beta = L / (2R) <= pi/2
    Aperture build_arc_1d(double length_m, double radius_m, std::size_t num_elements);

    // Flat 1D aperture along z, centered at the origin
    Aperture build_flat_1d(double length_m, std::size_t num_elements);

    // Curved 2D aperture: M rows at x = m * d_x, m = 1..M. With strict_spacing, d_x must equal the arc spacing.
    Aperture build_cyl_2d(double length_m, double radius_m, std::size_t num_columns, std::size_t num_rows,
                          double x_spacing_m, bool strict_spacing = false);

    // Flat 2D aperture in the x-z plane
    Aperture build_flat_2d(double length_m, std::size_t num_columns, std::size_t num_rows,
                           double x_spacing_m, bool strict_spacing = false);

    // Convenience: aperture with a given element pitch and bend half-angle (beta = 0 gives the flat variant).
    // The element centers span (N - 1) * pitch along the arc; 2D rows use d_x = pitch.
    Aperture build_from_pitch(std::size_t num_columns, double pitch_m, double half_angle_rad, std::size_t num_rows = 1,
                              bool two_dim = false);

    // Exact Euclidean user-to-element distance; throws DegenerateGeometry if they coincide
    double exact_distance(const Aperture &geom, std::size_t element, const UserLocation &user);

    // First-order far-field path difference Delta_n such that r_un ~ r - Delta_n
    double farfield_path_difference(const Aperture &geom, std::size_t element, double zenith_rad, double azimuth_rad);

    // Exact spherical-wave response (1/sqrt(N_ant)) exp(-j k (r_un - r))
    CVector steering_exact(const Aperture &geom, const UserLocation &user, double wavelength);

    // Far-field response (1/sqrt(N_ant)) exp(+j k Delta_n)
    CVector steering_farfield(const Aperture &geom, double zenith_rad, double azimuth_rad, double wavelength);

    // Outward unit normal (0, cos gamma_n, sin gamma_n); (0, 1, 0) for flat apertures
    Vec3 outward_normal(const Aperture &geom, std::size_t element);

    // Positions, normals and parameters for golden-file tests
    nlohmann::json to_json(const Aperture &geom);
}

#endif
