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

#ifndef HOLOCURA_RUNNER_HPP
#define HOLOCURA_RUNNER_HPP

#include "holocura/config.hpp"
#include "holocura/numerics.hpp"
#include "holocura/report.hpp"

#include <filesystem>
#include <json.hpp>
#include <map>
#include <string>

namespace holocura::runner
{
    enum class Command
    {
        run,    // full scenario pipeline
        screen, // local stationarity screen only
        oracle, // closed forms against the quadrature oracle
        bounds  // field-region table
    };

    std::string to_string(Command c);

    struct RunResult
    {
        std::filesystem::path output_dir;
        nlohmann::json summary;
        std::map<std::string, std::string> artifacts; // relative path -> sha256
    };

    // Directory holding cdl_a.json and cdl_d.json in the source tree
    std::string default_data_dir();

    // Validates, runs and commits all artifacts atomically into cfg.output_dir
    RunResult execute(const RunnerConfig &cfg, Command command, const std::string &data_dir = default_data_dir());

    // Pieces of the pipeline, also used by the tests
    nlohmann::json isotropic_summary(const CMatrix &r, std::size_t num_antennas);
    std::string oracle_audit_csv(const geometry::Aperture &geom, double wavelength, double iso_tolerance,
                                 const numerics::OracleOptions &options, std::size_t max_pairs, double *max_total_dev,
                                 double *max_baseline_dev);
}

#endif
