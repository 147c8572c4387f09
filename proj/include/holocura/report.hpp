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

#ifndef HOLOCURA_REPORT_HPP
#define HOLOCURA_REPORT_HPP

#include "holocura/common.hpp"
#include "holocura/snspipe.hpp"

#include <filesystem>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

namespace holocura::runner
{
    inline constexpr const char *version = "0.1.0";

    struct FieldRegionBounds
    {
        double length_m = 0.0, half_angle_rad = 0.0, wavelength = 0.0;
        double d_max = 0.0;  // flat aperture, D = L
        double d_min = 0.0;  // semicircle chord, 2L / pi
        double d_beta = 0.0; // chord of the arc at this beta
        double r_react_beta = 0.0, r_rayleigh_beta = 0.0;
        double r_react_max = 0.0;    // 0.62 sqrt(D_max^3 / lambda)
        double r_rayleigh_min = 0.0; // 2 D_min^2 / lambda

        nlohmann::json to_json() const;
    };

    // Reactive near-field 0.62 sqrt(D^3 / lambda) and Rayleigh distance 2 D^2 / lambda
    double reactive_bound(double aperture_m, double wavelength);
    double rayleigh_distance(double aperture_m, double wavelength);

    FieldRegionBounds field_region_bounds(double length_m, double half_angle_rad, double wavelength);
    std::string bounds_csv(const std::vector<FieldRegionBounds> &rows);

    // 2L / lambda for a 1D aperture
    double reference_dof_1d(double length_m, double wavelength);
    // min(pi L^2 / lambda^2, ray count); ray_count = 0 means no path ceiling
    double reference_dof_2d(double length_m, double wavelength, std::size_t ray_count = 0);

    struct SpectrumTable
    {
        std::vector<double> eigenvalues; // descending; empty when over the size limit
        bool spectrum_available = false;
        double effective_rank = 0.0;
        double reference_dof = 0.0;
        std::string reference_label; // "2L/lambda" or "min(piL^2/lambda^2,L_ray)"

        std::string to_csv() const; // order,eigenvalue,<reference_label>
        nlohmann::json summary() const;
    };

    SpectrumTable emit_spectrum_table(const CMatrix &r, double reference_dof, const std::string &reference_label,
                                      std::size_t eig_limit);
    SpectrumTable emit_spectrum_table(const std::vector<double> &spectrum, double effective_rank, double reference_dof,
                                      const std::string &reference_label);

    // Minimal SVG raster of d_mean over (phi, theta); undefined cells drawn grey
    std::string heatmap_svg(const sns::SnSHeatmap &map, const std::string &title);

    std::string sha256_hex(const std::string &data);
    std::string sha256_file(const std::filesystem::path &path);

    // Writes into a hidden staging directory next to the target and moves it in place on commit.
    // An uncommitted writer removes its staging directory, so failed runs leave nothing behind.
    class ArtifactWriter
    {
    public:
        explicit ArtifactWriter(std::filesystem::path target);
        ~ArtifactWriter();
        ArtifactWriter(const ArtifactWriter &) = delete;
        ArtifactWriter &operator=(const ArtifactWriter &) = delete;

        void write(const std::string &relative_path, const std::string &content);
        void write_json(const std::string &relative_path, const nlohmann::json &doc);

        // Adds manifest.json (artifact hashes included) and timing.json, then swaps the directory in
        void commit(nlohmann::json manifest, const nlohmann::json &timing);

        const std::map<std::string, std::string> &hashes() const { return digests; }
        const std::filesystem::path &target() const { return final_dir; }

    private:
        void write_raw(const std::string &relative_path, const std::string &content);

        std::filesystem::path final_dir, staging_dir;
        std::map<std::string, std::string> digests;
        bool committed = false;
    };
}

#endif
