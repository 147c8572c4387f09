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

#include "holocura/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using holocura::runner::Command;

namespace
{
    constexpr int exit_ok = 0, exit_failure = 1, exit_config = 2, exit_numeric = 3;

    struct Overrides
    {
        std::string config_path, output_dir, scenario, vr_policy, data_dir = holocura::runner::default_data_dir();
        double frequency = 0.0, q = 0.0, n_rf = 0.0;
        bool quiet = false;
    };

    void add_common(CLI::App *cmd, Overrides &o, bool config_required)
    {
        auto *opt = cmd->add_option("config", o.config_path, "JSON run configuration");
        if (config_required)
            opt->required()->check(CLI::ExistingFile);
        else
            opt->check(CLI::ExistingFile);
        cmd->add_option("-o,--output-dir", o.output_dir, "Output directory (beats HOLOCURA_OUTPUT_DIR and the config)");
        cmd->add_option("--scenario", o.scenario, "los, cdl-a, cdl-d or isotropic");
        cmd->add_option("--frequency", o.frequency, "Carrier frequency [Hz]");
        cmd->add_option("--q", o.q, "PoVi power exponent");
        cmd->add_option("--vr-policy", o.vr_policy, "broadside-gated, full-tangent or all-visible");
        cmd->add_option("--n-rf", o.n_rf, "RF chain count for the port-mode bound");
        cmd->add_option("--data-dir", o.data_dir, "Directory with the bundled CDL tables");
        cmd->add_flag("--quiet", o.quiet, "Only report errors");
    }

    nlohmann::json load_document(const Overrides &o)
    {
        nlohmann::json j = nlohmann::json::object();
        if (!o.config_path.empty())
        {
            std::ifstream in(o.config_path);
            try
            {
                in >> j;
            }
            catch (const nlohmann::json::exception &e)
            {
                throw holocura::runner::ConfigError({"config file '" + o.config_path + "' is not valid JSON: " + e.what()});
            }
        }
        else
            j["schema_version"] = holocura::runner::schema_version;

        if (const char *env = std::getenv("HOLOCURA_OUTPUT_DIR"); env && *env)
            j["output_dir"] = env;
        if (!o.output_dir.empty())
            j["output_dir"] = o.output_dir;
        if (!o.scenario.empty())
            j["scenario"] = o.scenario;
        if (!o.vr_policy.empty())
            j["vr_policy"] = o.vr_policy;
        if (o.frequency != 0.0)
            j["carrier_frequency_hz"] = o.frequency;
        if (o.q != 0.0)
            j["q"] = o.q;
        if (o.n_rf != 0.0)
            j["n_rf"] = o.n_rf;
        return j;
    }

    int run(Command command, const Overrides &o)
    {
        try
        {
            const auto cfg = holocura::runner::config_from_json(load_document(o));
            const auto result = holocura::runner::execute(cfg, command, o.data_dir);
            if (!o.quiet)
            {
                if (command == Command::bounds)
                    std::cout << result.summary.dump(2) << '\n';
                std::cout << "wrote " << result.artifacts.size() << " artifacts to " << result.output_dir.string() << '\n';
            }
            return exit_ok;
        }
        catch (const holocura::runner::ConfigError &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return exit_config;
        }
        catch (const holocura::sns::PartitionError &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return exit_config;
        }
        catch (const holocura::NonConvergence &e)
        {
            std::cerr << "numerical error: " << e.what() << '\n';
            return exit_numeric;
        }
        catch (const std::exception &e)
        {
            std::cerr << "error: " << e.what() << '\n';
            return exit_failure;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"holocura: spatial statistics of curvature-reconfigurable antenna apertures"};
    app.require_subcommand(1);
    Overrides o;

    auto *run_cmd = app.add_subcommand("run", "Run the configured scenario");
    add_common(run_cmd, o, true);
    auto *screen_cmd = app.add_subcommand("screen", "Local stationarity screen only");
    add_common(screen_cmd, o, true);
    auto *oracle_cmd = app.add_subcommand("oracle", "Compare isotropic closed forms with angular quadrature");
    add_common(oracle_cmd, o, true);
    auto *bounds_cmd = app.add_subcommand("bounds", "Near-field and Rayleigh bounds per bend angle");
    add_common(bounds_cmd, o, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    if (run_cmd->parsed())
        return run(Command::run, o);
    if (screen_cmd->parsed())
        return run(Command::screen, o);
    if (oracle_cmd->parsed())
        return run(Command::oracle, o);
    return run(Command::bounds, o);
}
