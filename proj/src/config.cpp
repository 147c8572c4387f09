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

#include "holocura/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace holocura::runner
{
    namespace
    {
        std::string join(const std::vector<std::string> &items)
        {
            std::string s = "invalid configuration:";
            for (const auto &p : items)
                s += "\n  - " + p;
            return s;
        }

        using json = nlohmann::json;

        // Reads one field into out, appending a message on type errors
        template <typename T>
        void read(const json &obj, const std::string &key, T &out, std::vector<std::string> &errors,
                  const std::string &where)
        {
            if (!obj.contains(key))
                return;
            try
            {
                out = obj.at(key).get<T>();
            }
            catch (const json::exception &)
            {
                errors.push_back(where + key + ": wrong type (" + std::string(obj.at(key).type_name()) + ")");
            }
        }

        void reject_unknown(const json &obj, const std::set<std::string> &known, std::vector<std::string> &errors,
                            const std::string &where)
        {
            for (const auto &item : obj.items())
                if (!known.count(item.key()))
                    errors.push_back(where + item.key() + ": unknown key");
        }

        sns::PartitionSpec partition_from_json(const json &p, std::vector<std::string> &errors, const std::string &where)
        {
            sns::PartitionSpec spec;
            if (!p.is_object())
            {
                errors.push_back(where + ": partition must be an object");
                return spec;
            }
            reject_unknown(p, {"scheme", "K", "g_z", "g_x"}, errors, where + ".");
            std::string scheme = p.contains("K") ? "contiguous" : "grid";
            read(p, "scheme", scheme, errors, where + ".");
            if (scheme == "contiguous")
            {
                spec.scheme = sns::PartitionScheme::contiguous_1d;
                read(p, "K", spec.subarrays, errors, where + ".");
            }
            else if (scheme == "grid")
            {
                spec.scheme = sns::PartitionScheme::grid_2d;
                read(p, "g_z", spec.grid_z, errors, where + ".");
                read(p, "g_x", spec.grid_x, errors, where + ".");
            }
            else
                errors.push_back(where + ".scheme: expected contiguous or grid, got '" + scheme + "'");
            return spec;
        }
    }

    ConfigError::ConfigError(std::vector<std::string> problems) : std::runtime_error(join(problems)), list(std::move(problems))
    {
    }

    double parse_spacing(const nlohmann::json &value)
    {
        if (value.is_number())
            return value.get<double>();
        if (value.is_string())
        {
            const auto s = value.get<std::string>();
            if (s == "lambda/2")
                return 0.5;
            if (s == "lambda/4")
                return 0.25;
            if (s == "lambda/16")
                return 1.0 / 16.0;
        }
        throw std::invalid_argument("element_spacing must be lambda/2, lambda/4, lambda/16 or a number of wavelengths");
    }

    std::size_t RunnerConfig::columns() const
    {
        const double n = aperture.length_m / pitch_m();
        return std::isfinite(n) && n > 0.0 ? std::size_t(std::llround(n)) : 0;
    }

    std::size_t RunnerConfig::rows() const
    {
        if (!aperture.two_dim)
            return 1;
        return aperture.rows == 0 ? columns() : aperture.rows;
    }

    geometry::Aperture RunnerConfig::geometry(double half_angle_rad) const
    {
        return geometry::build_from_pitch(columns(), pitch_m(), half_angle_rad, rows(), aperture.two_dim);
    }

    sns::DirectionGrid RunnerConfig::direction_grid() const
    {
        if (grid.region == "theta-cut")
            return sns::DirectionGrid::theta_cut(grid.phi_deg * pi / 180.0, grid.step_deg);
        if (grid.region == "off-broadside")
            return sns::DirectionGrid::off_broadside(grid.step_deg);
        return sns::DirectionGrid::half_space(grid.step_deg);
    }

    RunnerConfig config_from_json(const nlohmann::json &j)
    {
        std::vector<std::string> errors;
        RunnerConfig c;
        if (!j.is_object())
            throw ConfigError({"top level must be a JSON object"});

        reject_unknown(j,
                       {"schema_version", "scenario", "carrier_frequency_hz", "aperture", "betas_rad", "betas_deg",
                        "ranges_m", "partitions", "q", "thresholds", "vr_policy", "azimuth_tolerance_deg",
                        "direction_grid", "cdl", "oracle", "iso_tolerance", "n_rf", "eig_limit", "port_budget", "svg",
                        "output_dir"},
                       errors, "");

        int version = schema_version;
        read(j, "schema_version", version, errors, "");
        if (!j.contains("schema_version"))
            errors.push_back("schema_version: missing (expected " + std::to_string(schema_version) + ")");
        else if (version != schema_version)
            errors.push_back("schema_version: unsupported version " + std::to_string(version));

        read(j, "scenario", c.scenario, errors, "");
        read(j, "carrier_frequency_hz", c.carrier_frequency_hz, errors, "");
        read(j, "q", c.q, errors, "");
        read(j, "azimuth_tolerance_deg", c.azimuth_tolerance_deg, errors, "");
        read(j, "iso_tolerance", c.iso_tolerance, errors, "");
        read(j, "n_rf", c.n_rf, errors, "");
        read(j, "eig_limit", c.eig_limit, errors, "");
        read(j, "port_budget", c.port_budget, errors, "");
        read(j, "svg", c.svg, errors, "");
        read(j, "output_dir", c.output_dir, errors, "");
        read(j, "ranges_m", c.ranges_m, errors, "");

        if (j.contains("betas_rad") && j.contains("betas_deg"))
            errors.push_back("betas_rad, betas_deg: give only one of them");
        read(j, "betas_rad", c.betas_rad, errors, "");
        if (j.contains("betas_deg"))
        {
            std::vector<double> deg;
            read(j, "betas_deg", deg, errors, "");
            c.betas_rad.clear();
            for (double d : deg)
                c.betas_rad.push_back(d * pi / 180.0);
        }

        if (j.contains("vr_policy"))
        {
            try
            {
                c.vr_policy = visibility::policy_from_string(j.at("vr_policy").get<std::string>());
            }
            catch (const std::exception &e)
            {
                errors.push_back(std::string("vr_policy: ") + e.what());
            }
        }

        if (j.contains("aperture"))
        {
            const auto &a = j.at("aperture");
            reject_unknown(a, {"length_m", "element_spacing", "dims", "rows"}, errors, "aperture.");
            read(a, "length_m", c.aperture.length_m, errors, "aperture.");
            read(a, "rows", c.aperture.rows, errors, "aperture.");
            if (a.contains("element_spacing"))
            {
                try
                {
                    c.aperture.spacing_fraction = parse_spacing(a.at("element_spacing"));
                }
                catch (const std::exception &e)
                {
                    errors.push_back(std::string("aperture.element_spacing: ") + e.what());
                }
            }
            std::string dims = "1D";
            read(a, "dims", dims, errors, "aperture.");
            if (dims != "1D" && dims != "2D")
                errors.push_back("aperture.dims: expected 1D or 2D, got '" + dims + "'");
            c.aperture.two_dim = dims == "2D";
        }

        if (j.contains("partitions"))
        {
            c.partitions.clear();
            const auto &parts = j.at("partitions");
            if (!parts.is_array())
                errors.push_back("partitions: must be an array");
            else
                for (std::size_t i = 0; i < parts.size(); ++i)
                    c.partitions.push_back(partition_from_json(parts[i], errors, "partitions[" + std::to_string(i) + "]"));
        }

        if (j.contains("thresholds"))
        {
            const auto &t = j.at("thresholds");
            reject_unknown(t, {"eta_max", "p_min"}, errors, "thresholds.");
            read(t, "eta_max", c.thresholds.eta_max, errors, "thresholds.");
            read(t, "p_min", c.thresholds.p_min, errors, "thresholds.");
        }

        if (j.contains("direction_grid"))
        {
            const auto &g = j.at("direction_grid");
            reject_unknown(g, {"region", "step_deg", "phi_deg"}, errors, "direction_grid.");
            read(g, "region", c.grid.region, errors, "direction_grid.");
            read(g, "step_deg", c.grid.step_deg, errors, "direction_grid.");
            read(g, "phi_deg", c.grid.phi_deg, errors, "direction_grid.");
        }

        if (j.contains("cdl"))
        {
            const auto &g = j.at("cdl");
            reject_unknown(g, {"support_filter", "renormalize", "table_path"}, errors, "cdl.");
            read(g, "support_filter", c.cdl.support_filter, errors, "cdl.");
            read(g, "renormalize", c.cdl.renormalize, errors, "cdl.");
            read(g, "table_path", c.cdl.table_path, errors, "cdl.");
        }

        if (j.contains("oracle"))
        {
            const auto &g = j.at("oracle");
            reject_unknown(g, {"enable", "tolerance", "max_pairs"}, errors, "oracle.");
            read(g, "enable", c.oracle.enable, errors, "oracle.");
            read(g, "tolerance", c.oracle.tolerance, errors, "oracle.");
            read(g, "max_pairs", c.oracle.max_pairs, errors, "oracle.");
        }

        for (auto &p : validation_problems(c))
            errors.push_back(std::move(p));
        if (!errors.empty())
            throw ConfigError(errors);
        return c;
    }

    std::vector<std::string> validation_problems(const RunnerConfig &c)
    {
        std::vector<std::string> e;
        static const std::set<std::string> scenarios{"los", "cdl-a", "cdl-d", "isotropic"};
        if (!scenarios.count(c.scenario))
            e.push_back("scenario: expected one of los, cdl-a, cdl-d, isotropic, got '" + c.scenario + "'");
        if (!(c.carrier_frequency_hz > 0.0) || !std::isfinite(c.carrier_frequency_hz))
            e.push_back("carrier_frequency_hz: must be positive");
        if (!(c.aperture.length_m > 0.0))
            e.push_back("aperture.length_m: must be positive");
        if (!(c.aperture.spacing_fraction > 0.0))
            e.push_back("aperture.element_spacing: must be positive");
        if (!(c.q >= 1.0))
            e.push_back("q: must be >= 1");
        if (!(c.thresholds.eta_max > 0.0))
            e.push_back("thresholds.eta_max: must be positive");
        if (!(c.thresholds.p_min > 0.0 && c.thresholds.p_min <= 1.0))
            e.push_back("thresholds.p_min: must lie in (0, 1]");
        if (!(c.azimuth_tolerance_deg > 0.0))
            e.push_back("azimuth_tolerance_deg: must be positive");
        if (!(c.iso_tolerance > 0.0))
            e.push_back("iso_tolerance: must be positive");
        if (!(c.n_rf > 0.0))
            e.push_back("n_rf: must be positive");
        if (!(c.oracle.tolerance > 0.0))
            e.push_back("oracle.tolerance: must be positive");
        if (c.oracle.max_pairs == 0)
            e.push_back("oracle.max_pairs: must be at least 1");
        if (c.output_dir.empty())
            e.push_back("output_dir: must not be empty");
        if (c.betas_rad.empty())
            e.push_back("betas: at least one bend half-angle is required");
        for (double b : c.betas_rad)
            if (!(b >= 0.0 && b <= pi / 2 + 1e-12))
                e.push_back("betas: " + format_number(b) + " rad outside [0, pi/2]");
        if (c.scenario == "los" && c.ranges_m.empty())
            e.push_back("ranges_m: at least one range is required for the los scenario");
        for (double r : c.ranges_m)
            if (!(r > 0.0))
                e.push_back("ranges_m: " + format_number(r) + " is not a positive range");

        static const std::set<std::string> regions{"half-space", "theta-cut", "off-broadside"};
        if (!regions.count(c.grid.region))
            e.push_back("direction_grid.region: expected half-space, theta-cut or off-broadside, got '" + c.grid.region + "'");
        if (!(c.grid.step_deg > 0.0 && c.grid.step_deg <= 180.0) ||
            std::abs(180.0 / c.grid.step_deg - std::round(180.0 / c.grid.step_deg)) > 1e-9)
            e.push_back("direction_grid.step_deg: must divide 180");

        const std::size_t N = c.columns(), M = c.rows();
        if (N < 2 && c.aperture.length_m > 0.0 && c.aperture.spacing_fraction > 0.0)
            e.push_back("aperture: length / spacing gives fewer than 2 elements");
        if (c.aperture.two_dim && (N > max_columns || M > max_rows))
            e.push_back("aperture: 2D apertures are capped at " + std::to_string(max_columns) + " x " +
                        std::to_string(max_rows) + " elements, got " + std::to_string(N) + " x " + std::to_string(M));
        if (c.scenario != "los" && N * M > max_dense_elements)
            e.push_back("aperture: dense " + c.scenario + " correlation matrices are capped at " +
                        std::to_string(max_dense_elements) + " elements, got " + std::to_string(N * M));

        if (c.partitions.empty())
            e.push_back("partitions: at least one partition is required");
        for (std::size_t i = 0; i < c.partitions.size(); ++i)
        {
            const auto &p = c.partitions[i];
            const std::string where = "partitions[" + std::to_string(i) + "]: ";
            if (p.scheme == sns::PartitionScheme::contiguous_1d)
            {
                if (c.aperture.two_dim)
                    e.push_back(where + "contiguous partitions need a 1D aperture, use a grid with g_x = 1 (Z-cut)");
                else if (p.subarrays < 2)
                    e.push_back(where + "rule K >= 2 violated (K = " + std::to_string(p.subarrays) + ")");
                else if (N > 0 && N % p.subarrays != 0)
                    e.push_back(where + "divisibility rule K | N violated: K = " + std::to_string(p.subarrays) +
                                " does not divide N = " + std::to_string(N));
            }
            else
            {
                if (p.grid_z == 0 || p.grid_x == 0)
                    e.push_back(where + "grid rule g_z, g_x >= 1 violated");
                else
                {
                    if (p.grid_z * p.grid_x < 2)
                        e.push_back(where + "rule K = g_z g_x >= 2 violated");
                    if (N > 0 && N % p.grid_z != 0)
                        e.push_back(where + "divisibility rule g_z | N violated: g_z = " + std::to_string(p.grid_z) +
                                    ", N = " + std::to_string(N));
                    if (M > 0 && M % p.grid_x != 0)
                        e.push_back(where + "divisibility rule g_x | M violated: g_x = " + std::to_string(p.grid_x) +
                                    ", M = " + std::to_string(M));
                }
            }
        }
        return e;
    }

    void validate(const RunnerConfig &cfg)
    {
        auto problems = validation_problems(cfg);
        if (!problems.empty())
            throw ConfigError(std::move(problems));
    }

    nlohmann::json to_json(const RunnerConfig &c)
    {
        json j;
        j["schema_version"] = schema_version;
        j["scenario"] = c.scenario;
        j["carrier_frequency_hz"] = c.carrier_frequency_hz;
        j["wavelength_m"] = c.wavelength();
        j["aperture"] = {{"length_m", c.aperture.length_m},
                         {"element_spacing", c.aperture.spacing_fraction},
                         {"dims", c.aperture.two_dim ? "2D" : "1D"},
                         {"rows", c.rows()},
                         {"columns", c.columns()},
                         {"pitch_m", c.pitch_m()},
                         {"nominal_length_m", c.nominal_length()}};
        j["betas_rad"] = c.betas_rad;
        j["ranges_m"] = c.ranges_m;
        auto &parts = j["partitions"] = json::array();
        for (const auto &p : c.partitions)
        {
            if (p.scheme == sns::PartitionScheme::contiguous_1d)
                parts.push_back({{"scheme", "contiguous"}, {"K", p.subarrays}});
            else
                parts.push_back({{"scheme", "grid"}, {"g_z", p.grid_z}, {"g_x", p.grid_x}});
        }
        j["q"] = c.q;
        j["thresholds"] = {{"eta_max", c.thresholds.eta_max}, {"p_min", c.thresholds.p_min}};
        j["vr_policy"] = visibility::to_string(c.vr_policy);
        j["azimuth_tolerance_deg"] = c.azimuth_tolerance_deg;
        j["direction_grid"] = {{"region", c.grid.region}, {"step_deg", c.grid.step_deg}, {"phi_deg", c.grid.phi_deg}};
        j["cdl"] = {{"support_filter", c.cdl.support_filter}, {"renormalize", c.cdl.renormalize},
                    {"table_path", c.cdl.table_path}};
        j["oracle"] = {{"enable", c.oracle.enable}, {"tolerance", c.oracle.tolerance}, {"max_pairs", c.oracle.max_pairs}};
        j["iso_tolerance"] = c.iso_tolerance;
        j["n_rf"] = c.n_rf;
        j["eig_limit"] = c.eig_limit;
        j["port_budget"] = c.port_budget;
        j["svg"] = c.svg;
        j["output_dir"] = c.output_dir;
        return j;
    }

    RunnerConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError({"cannot open config file '" + path + "'"});
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ConfigError({"config file '" + path + "' is not valid JSON: " + e.what()});
        }
        return config_from_json(j);
    }
}
