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

#ifndef HOLOCURA_CONFIG_HPP
#define HOLOCURA_CONFIG_HPP

#include "holocura/geometry.hpp"
#include "holocura/snspipe.hpp"
#include "holocura/visibility.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace holocura::runner
{
    inline constexpr int schema_version = 1;
    inline constexpr std::size_t max_columns = 128, max_rows = 128; // 2D desk-scale cap
    inline constexpr std::size_t max_dense_elements = 4096;         // dense correlation matrices

    // Every violated constraint of a configuration, one message each
    class ConfigError : public std::runtime_error
    {
    public:
        explicit ConfigError(std::vector<std::string> problems);
        const std::vector<std::string> &problems() const { return list; }

    private:
        std::vector<std::string> list;
    };

    struct ApertureConfig
    {
        double length_m = 0.32;
        double spacing_fraction = 0.25; // element pitch in wavelengths
        bool two_dim = false;
        std::size_t rows = 0; // 2D only, 0 means as many rows as columns
    };

    struct GridConfig
    {
        std::string region = "half-space"; // half-space | theta-cut | off-broadside
        double step_deg = 1.0;
        double phi_deg = 90.0; // theta-cut azimuth
    };

    struct CdlConfig
    {
        bool support_filter = true;
        bool renormalize = true;
        std::string table_path; // empty: bundled table of the scenario
    };

    struct OracleConfig
    {
        bool enable = false;
        double tolerance = 1e-7;
        std::size_t max_pairs = 64;
    };

    struct RunnerConfig
    {
        std::string scenario = "los"; // los | cdl-a | cdl-d | isotropic
        double carrier_frequency_hz = 3.0e10;
        ApertureConfig aperture;
        std::vector<double> betas_rad{0.0, pi / 8, pi / 4, 3 * pi / 8, pi / 2};
        std::vector<double> ranges_m{2.0, 8.0, 100.0};
        std::vector<sns::PartitionSpec> partitions{{sns::PartitionScheme::contiguous_1d, 8, 0, 0}};
        double q = 1.0;
        sns::ScreenThresholds thresholds;
        visibility::VrPolicy vr_policy = visibility::VrPolicy::broadside_gated;
        double azimuth_tolerance_deg = 0.5;
        GridConfig grid;
        CdlConfig cdl;
        OracleConfig oracle;
        double iso_tolerance = 1e-10;
        double n_rf = 8.0;
        std::size_t eig_limit = 4096;
        bool port_budget = true;
        bool svg = false;
        std::string output_dir = "holocura_out";

        double wavelength() const { return wavelength_from_frequency(carrier_frequency_hz); }
        double pitch_m() const { return aperture.spacing_fraction * wavelength(); }
        std::size_t columns() const;
        std::size_t rows() const;
        std::size_t elements() const { return columns() * rows(); }
        // Nominal aperture length N * pitch used for reference DoF lines
        double nominal_length() const { return double(columns()) * pitch_m(); }
        geometry::Aperture geometry(double half_angle_rad) const;
        sns::DirectionGrid direction_grid() const;
    };

    // "lambda/2", "lambda/4", "lambda/16" or a positive number of wavelengths
    double parse_spacing(const nlohmann::json &value);

    RunnerConfig config_from_json(const nlohmann::json &j);
    nlohmann::json to_json(const RunnerConfig &cfg);
    RunnerConfig load_config(const std::string &path);

    // Throws ConfigError listing every problem
    void validate(const RunnerConfig &cfg);
    std::vector<std::string> validation_problems(const RunnerConfig &cfg);
}

#endif
