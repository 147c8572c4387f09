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

#ifndef HOLOCURA_SNSPIPE_HPP
#define HOLOCURA_SNSPIPE_HPP

#include "holocura/channels.hpp"
#include "holocura/geometry.hpp"
#include "holocura/metrics.hpp"
#include "holocura/visibility.hpp"

#include <cmath>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

namespace holocura::sns
{
    inline const double default_eta_max = std::exp(-1.0);
    inline constexpr double default_p_min = 0.7;

    // Violated divisibility or shape rule of a partition request
    class PartitionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    enum class PartitionScheme
    {
        contiguous_1d, // K consecutive blocks along the arc of a 1D aperture
        grid_2d        // g_z x g_x tiles of a 2D aperture
    };

    struct PartitionSpec
    {
        PartitionScheme scheme = PartitionScheme::contiguous_1d;
        std::size_t subarrays = 0; // K for contiguous_1d
        std::size_t grid_z = 0, grid_x = 0;

        std::string label() const; // "K8" or "grid4x4"
    };

    struct Partition
    {
        PartitionScheme scheme = PartitionScheme::contiguous_1d;
        std::size_t grid_z = 1, grid_x = 1;
        std::size_t tile_z = 0, tile_x = 1; // elements per tile along the arc and along x
        // Tile k = iz * grid_x + ix; indices inside a tile ordered m outer, n inner
        std::vector<std::vector<std::size_t>> subarrays;

        std::size_t count() const { return subarrays.size(); }
        std::size_t tile_size() const { return tile_z * tile_x; }
    };

    Partition make_partition(const geometry::Aperture &geom, const PartitionSpec &spec);
    Partition make_contiguous(const geometry::Aperture &geom, std::size_t subarrays);
    Partition make_grid(const geometry::Aperture &geom, std::size_t grid_z, std::size_t grid_x);

    struct Direction
    {
        double zenith_rad = 0.0;
        double azimuth_rad = 0.0;
    };

    struct DirectionGrid
    {
        std::vector<Direction> directions;
        std::string region;

        std::size_t size() const { return directions.size(); }

        // theta in [0, 180] deg, phi in [0, 180] deg, both at step_deg
        static DirectionGrid half_space(double step_deg = 1.0);
        // theta in [0, 180] deg at a fixed azimuth
        static DirectionGrid theta_cut(double azimuth_rad, double step_deg = 1.0);
        // half space with the phi = 90 deg column removed
        static DirectionGrid off_broadside(double step_deg = 1.0);
    };

    struct ScreenThresholds
    {
        double eta_max = default_eta_max;
        double p_min = default_p_min;
    };

    struct LocalScreenReport
    {
        std::vector<double> pass_probability; // P_k, NaN when the active set is empty
        std::vector<std::size_t> active_count; // |V_k|
        std::vector<std::size_t> pass_count;
        std::vector<bool> admissible;         // P_k >= p_min
        std::vector<bool> empty_active_set;   // P_k undefined, reported inadmissible
        RMatrix eta;                          // K x directions, NaN where mu_k = 0
        double stable_fraction = 0.0;
        ScreenThresholds thresholds;

        nlohmann::json to_json(bool include_eta = false) const;
    };

    // eta = population variance / mean^2 of the element powers of one subarray; NaN if the mean is zero
    double stationarity_index(const Eigen::VectorXd &powers);

    LocalScreenReport local_screen(const geometry::Aperture &geom, const Partition &partition,
                                   const DirectionGrid &grid, double range_m, double wavelength,
                                   visibility::VrPolicy policy, const ScreenThresholds &thresholds = {},
                                   double azimuth_tolerance_rad = visibility::default_azimuth_tolerance);

    struct HeatmapMetadata
    {
        double range_m = 0.0;
        double half_angle_rad = 0.0;
        double wavelength = 0.0;
        double q = metrics::default_q;
        std::size_t subarrays = 0;
        visibility::VrPolicy policy = visibility::VrPolicy::broadside_gated;
        std::string geometry;
    };

    struct SnSHeatmap
    {
        DirectionGrid grid;
        std::vector<double> d_mean;              // NaN when every pair was excluded
        std::vector<std::size_t> defined_pairs;  // pairs entering the mean
        std::vector<std::size_t> excluded_pairs; // both subarrays dark
        std::vector<std::size_t> zero_operand_pairs;
        RMatrix pair_d;                          // directions x pairs (k < l, lexicographic), filled on request
        HeatmapMetadata metadata;

        bool defined(std::size_t i) const { return defined_pairs[i] > 0; }
        double mean_over_defined() const; // average of d_mean over defined directions
        std::size_t undefined_count() const;
        std::string to_csv() const; // theta_deg,phi_deg,d_mean,defined_pair_count
    };

    SnSHeatmap sns_heatmap(const geometry::Aperture &geom, const Partition &partition, const DirectionGrid &grid,
                           double range_m, double wavelength, double q, visibility::VrPolicy policy,
                           bool keep_pair_values = false,
                           double azimuth_tolerance_rad = visibility::default_azimuth_tolerance);

    struct SeparationStats
    {
        std::vector<double> mean;     // index s - 1 for lag s
        std::vector<double> variance; // population variance over the K - s pairs
        std::vector<std::size_t> pair_count;

        std::string to_csv() const; // lag,mean_d,variance,pairs
    };

    SeparationStats separation_stats(const CMatrix &r, const Partition &partition, double q = metrics::default_q);

    struct PortBudgetRow
    {
        double half_angle_rad = 0.0;
        double r_eff = 0.0;       // mean over the directions used
        double r_eff_over_k = 0.0;
        std::size_t subarrays = 0;
        std::size_t directions_used = 0;
        std::size_t directions_excluded = 0; // some pair had both subarrays dark
    };

    using ApertureFactory = std::function<geometry::Aperture(double half_angle_rad)>;

    std::vector<PortBudgetRow> port_budget_sweep(const ApertureFactory &make_geometry, const PartitionSpec &spec,
                                                 const DirectionGrid &grid, double range_m, double wavelength,
                                                 const std::vector<double> &half_angles, double q,
                                                 visibility::VrPolicy policy,
                                                 double azimuth_tolerance_rad = visibility::default_azimuth_tolerance);

    std::string port_budget_csv(const std::vector<PortBudgetRow> &rows);
}

#endif
