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

#include "holocura/channels.hpp"

#include <cmath>
#include <fstream>

namespace holocura::channels
{
    std::vector<double> ClusterTable::normalized_powers() const
    {
        std::vector<double> p(clusters.size());
        double total = 0.0;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            total += p[i] = std::pow(10.0, clusters[i].power_db / 10.0);
        for (double &v : p)
            v /= total;
        return p;
    }

    void ClusterTable::validate() const
    {
        if (clusters.empty())
            throw std::invalid_argument("Cluster table '" + model_name + "' has no clusters");
        if (ray_offsets.size() != 20)
            throw std::invalid_argument("Cluster table '" + model_name + "' needs 20 ray offsets, got " +
                                        std::to_string(ray_offsets.size()));
        for (const auto &c : clusters)
            if (!std::isfinite(c.power_db) || !std::isfinite(c.aoa_deg) || !std::isfinite(c.zoa_deg))
                throw std::invalid_argument("Cluster table '" + model_name + "' has a non-finite entry");
        if (!(c_asa_deg >= 0.0) || !(c_zsa_deg >= 0.0))
            throw std::invalid_argument("Cluster angular spreads must be nonnegative");
    }

    ClusterTable cluster_table_from_json(const nlohmann::json &j)
    {
        ClusterTable t;
        t.model_name = j.at("model_name").get<std::string>();
        t.provenance = j.value("provenance", std::string());
        t.c_asa_deg = j.at("c_asa_deg").get<double>();
        t.c_zsa_deg = j.at("c_zsa_deg").get<double>();
        t.ray_offsets = j.at("ray_offsets").get<std::vector<double>>();
        for (const auto &c : j.at("clusters"))
            t.clusters.push_back({c.at("power_dB").get<double>(), c.at("aoa_deg").get<double>(),
                                  c.at("zoa_deg").get<double>(), c.value("specular", false)});
        t.validate();
        return t;
    }

    nlohmann::json to_json(const ClusterTable &table)
    {
        nlohmann::json j;
        j["model_name"] = table.model_name;
        j["provenance"] = table.provenance;
        j["c_asa_deg"] = table.c_asa_deg;
        j["c_zsa_deg"] = table.c_zsa_deg;
        j["ray_offsets"] = table.ray_offsets;
        auto &cl = j["clusters"] = nlohmann::json::array();
        for (const auto &c : table.clusters)
        {
            nlohmann::json e{{"power_dB", c.power_db}, {"aoa_deg", c.aoa_deg}, {"zoa_deg", c.zoa_deg}};
            if (c.specular)
                e["specular"] = true;
            cl.push_back(e);
        }
        return j;
    }

    ClusterTable load_cluster_table(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("Cannot open cluster table '" + path + "'");
        nlohmann::json j;
        try
        {
            in >> j;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw std::invalid_argument("Malformed cluster table '" + path + "': " + e.what());
        }
        return cluster_table_from_json(j);
    }

    std::vector<Ray> expand_rays(const ClusterTable &table)
    {
        table.validate();
        const auto powers = table.normalized_powers();
        constexpr double deg = pi / 180.0;

        auto make_ray = [](double power, double zoa_deg, double aoa_deg) {
            // Fold zenith back into [0, 180]
            double z = std::fmod(zoa_deg, 360.0);
            if (z < 0.0)
                z += 360.0;
            if (z > 180.0)
            {
                z = 360.0 - z;
                aoa_deg += 180.0;
            }
            return Ray{power, z * deg, aoa_deg * deg};
        };

        std::vector<Ray> rays;
        for (std::size_t c = 0; c < table.clusters.size(); ++c)
        {
            const Cluster &cl = table.clusters[c];
            if (cl.specular)
            {
                rays.push_back(make_ray(powers[c], cl.zoa_deg, cl.aoa_deg));
                continue;
            }
            const double per_ray = powers[c] / double(table.ray_offsets.size());
            for (double offset : table.ray_offsets)
                rays.push_back(make_ray(per_ray, cl.zoa_deg + table.c_zsa_deg * offset, cl.aoa_deg + table.c_asa_deg * offset));
        }
        return rays;
    }
}
