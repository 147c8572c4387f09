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

#include "holocura/report.hpp"
#include "holocura/metrics.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unistd.h>

namespace holocura::runner
{
    double reactive_bound(double aperture_m, double wavelength)
    {
        return 0.62 * std::sqrt(aperture_m * aperture_m * aperture_m / wavelength);
    }

    double rayleigh_distance(double aperture_m, double wavelength) { return 2.0 * aperture_m * aperture_m / wavelength; }

    FieldRegionBounds field_region_bounds(double length_m, double half_angle_rad, double wavelength)
    {
        if (!(length_m > 0.0 && wavelength > 0.0 && half_angle_rad >= 0.0))
            throw std::invalid_argument("field region bounds need positive length and wavelength");
        FieldRegionBounds b;
        b.length_m = length_m;
        b.half_angle_rad = half_angle_rad;
        b.wavelength = wavelength;
        b.d_max = length_m;
        b.d_min = 2.0 * length_m / pi;
        // chord 2R sin(beta) with R = L / (2 beta)
        b.d_beta = half_angle_rad == 0.0 ? length_m : length_m * std::sin(half_angle_rad) / half_angle_rad;
        b.r_react_beta = reactive_bound(b.d_beta, wavelength);
        b.r_rayleigh_beta = rayleigh_distance(b.d_beta, wavelength);
        b.r_react_max = reactive_bound(b.d_max, wavelength);
        b.r_rayleigh_min = rayleigh_distance(b.d_min, wavelength);
        return b;
    }

    nlohmann::json FieldRegionBounds::to_json() const
    {
        return {{"length_m", length_m},       {"half_angle_rad", half_angle_rad}, {"wavelength_m", wavelength},
                {"D_max_m", d_max},           {"D_min_m", d_min},                 {"D_beta_m", d_beta},
                {"R_react_beta_m", r_react_beta}, {"R_rayleigh_beta_m", r_rayleigh_beta},
                {"R_react_max_m", r_react_max},   {"R_rayleigh_min_m", r_rayleigh_min}};
    }

    std::string bounds_csv(const std::vector<FieldRegionBounds> &rows)
    {
        std::ostringstream os;
        os << "beta_rad,L_m,wavelength_m,D_max_m,D_min_m,D_beta_m,R_react_beta_m,R_rayleigh_beta_m,R_react_max_m,"
              "R_rayleigh_min_m\n";
        for (const auto &b : rows)
            os << format_number(b.half_angle_rad) << ',' << format_number(b.length_m) << ','
               << format_number(b.wavelength) << ',' << format_number(b.d_max) << ',' << format_number(b.d_min) << ','
               << format_number(b.d_beta) << ',' << format_number(b.r_react_beta) << ','
               << format_number(b.r_rayleigh_beta) << ',' << format_number(b.r_react_max) << ','
               << format_number(b.r_rayleigh_min) << '\n';
        return os.str();
    }

    double reference_dof_1d(double length_m, double wavelength) { return 2.0 * length_m / wavelength; }

    double reference_dof_2d(double length_m, double wavelength, std::size_t ray_count)
    {
        const double area_bound = pi * length_m * length_m / (wavelength * wavelength);
        return ray_count == 0 ? area_bound : std::min(area_bound, double(ray_count));
    }

    SpectrumTable emit_spectrum_table(const CMatrix &r, double reference_dof, const std::string &reference_label,
                                      std::size_t eig_limit)
    {
        SpectrumTable t;
        t.effective_rank = metrics::renyi2_effective_rank(r);
        t.reference_dof = reference_dof;
        t.reference_label = reference_label;
        if (std::size_t(r.rows()) <= eig_limit)
        {
            t.eigenvalues = metrics::eigen_spectrum(r, eig_limit);
            t.spectrum_available = true;
        }
        return t;
    }

    SpectrumTable emit_spectrum_table(const std::vector<double> &spectrum, double effective_rank, double reference_dof,
                                      const std::string &reference_label)
    {
        SpectrumTable t;
        t.eigenvalues = spectrum;
        std::sort(t.eigenvalues.begin(), t.eigenvalues.end(), std::greater<>());
        t.spectrum_available = true;
        t.effective_rank = effective_rank;
        t.reference_dof = reference_dof;
        t.reference_label = reference_label;
        return t;
    }

    std::string SpectrumTable::to_csv() const
    {
        std::ostringstream os;
        os << "order,eigenvalue," << reference_label << '\n';
        for (std::size_t i = 0; i < eigenvalues.size(); ++i)
            os << i + 1 << ',' << format_number(eigenvalues[i]) << ',' << format_number(reference_dof) << '\n';
        return os.str();
    }

    nlohmann::json SpectrumTable::summary() const
    {
        return {{"effective_rank", effective_rank},
                {"reference_dof", reference_dof},
                {"reference", reference_label},
                {"spectrum_available", spectrum_available}};
    }

    std::string heatmap_svg(const sns::SnSHeatmap &map, const std::string &title)
    {
        std::set<double> thetas, phis;
        for (const auto &d : map.grid.directions)
        {
            thetas.insert(d.zenith_rad);
            phis.insert(d.azimuth_rad);
        }
        const std::vector<double> tv(thetas.begin(), thetas.end()), pv(phis.begin(), phis.end());
        const int cell = 3, margin = 30;
        const int width = int(pv.size()) * cell + 2 * margin, height = int(tv.size()) * cell + 2 * margin;

        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
        os << "<text x=\"" << margin << "\" y=\"18\" font-size=\"12\">" << title << "</text>\n";
        for (std::size_t i = 0; i < map.d_mean.size(); ++i)
        {
            const auto &d = map.grid.directions[i];
            const auto col = std::lower_bound(pv.begin(), pv.end(), d.azimuth_rad) - pv.begin();
            const auto row = std::lower_bound(tv.begin(), tv.end(), d.zenith_rad) - tv.begin();
            std::string fill = "#808080";
            if (map.defined(i))
            {
                // blue (0) to red (1)
                const double v = std::clamp(map.d_mean[i], 0.0, 1.0);
                const int red = int(std::lround(255 * v)), blue = 255 - red;
                std::ostringstream c;
                c << '#' << std::hex << std::setfill('0') << std::setw(2) << red << "00" << std::setw(2) << blue;
                fill = c.str();
            }
            os << "<rect x=\"" << margin + col * cell << "\" y=\"" << margin + row * cell << "\" width=\"" << cell
               << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
        }
        os << "<text x=\"" << margin << "\" y=\"" << height - 8 << "\" font-size=\"10\">phi 0..180 deg (right), theta 0..180 deg (down)</text>\n";
        os << "</svg>\n";
        return os.str();
    }

    std::string sha256_hex(const std::string &data)
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("SHA-256 computation failed");
        std::ostringstream os;
        for (unsigned int i = 0; i < len; ++i)
            os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
        return os.str();
    }

    std::string sha256_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot read '" + path.string() + "' for hashing");
        std::ostringstream buf;
        buf << in.rdbuf();
        return sha256_hex(buf.str());
    }

    ArtifactWriter::ArtifactWriter(std::filesystem::path target) : final_dir(std::move(target))
    {
        namespace fs = std::filesystem;
        final_dir = fs::absolute(final_dir).lexically_normal();
        if (final_dir.filename().empty())
            final_dir = final_dir.parent_path();
        fs::create_directories(final_dir.parent_path());
        staging_dir = final_dir.parent_path() / ("." + final_dir.filename().string() + ".staging." + std::to_string(::getpid()));
        fs::remove_all(staging_dir);
        fs::create_directories(staging_dir);
    }

    ArtifactWriter::~ArtifactWriter()
    {
        if (!committed)
        {
            std::error_code ec;
            std::filesystem::remove_all(staging_dir, ec);
        }
    }

    void ArtifactWriter::write_raw(const std::string &relative_path, const std::string &content)
    {
        const auto path = staging_dir / relative_path;
        std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        out << content;
        if (!out)
            throw std::runtime_error("failed to write artifact '" + relative_path + "'");
    }

    void ArtifactWriter::write(const std::string &relative_path, const std::string &content)
    {
        write_raw(relative_path, content);
        digests[relative_path] = sha256_hex(content);
    }

    void ArtifactWriter::write_json(const std::string &relative_path, const nlohmann::json &doc)
    {
        write(relative_path, doc.dump(2) + "\n");
    }

    void ArtifactWriter::commit(nlohmann::json manifest, const nlohmann::json &timing)
    {
        namespace fs = std::filesystem;
        manifest["artifacts"] = digests;
        write_raw("manifest.json", manifest.dump(2) + "\n");
        write_raw("timing.json", timing.dump(2) + "\n");

        const fs::path backup = final_dir.parent_path() / ("." + final_dir.filename().string() + ".old." + std::to_string(::getpid()));
        const bool had_previous = fs::exists(final_dir);
        if (had_previous)
            fs::rename(final_dir, backup);
        try
        {
            fs::rename(staging_dir, final_dir);
        }
        catch (...)
        {
            if (had_previous)
                fs::rename(backup, final_dir);
            throw;
        }
        committed = true;
        if (had_previous)
            fs::remove_all(backup);
    }
}
