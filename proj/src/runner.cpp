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
#include "holocura/channels.hpp"
#include "holocura/metrics.hpp"
#include "holocura/numerics.hpp"

#include <chrono>
#include <cstdio>
#include <type_traits>
#include <sstream>

#ifndef HOLOCURA_DATA_DIR
#define HOLOCURA_DATA_DIR "data"
#endif

namespace holocura::runner
{
    namespace
    {
        using json = nlohmann::json;
        using clock_type = std::chrono::steady_clock;

        std::string tag(double x)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6g", x);
            return buf;
        }

        std::string beta_dir(double beta) { return "beta" + tag(beta * 180.0 / pi); }

        class Stopwatch
        {
        public:
            explicit Stopwatch(json &sink) : out(sink) {}
            template <typename F>
            auto time(const std::string &step, F &&f)
            {
                const auto start = clock_type::now();
                if constexpr (std::is_void_v<decltype(f())>)
                {
                    f();
                    record(step, start);
                }
                else
                {
                    auto r = f();
                    record(step, start);
                    return r;
                }
            }

        private:
            void record(const std::string &step, clock_type::time_point start)
            {
                out[step] = std::chrono::duration<double>(clock_type::now() - start).count();
            }
            json &out;
        };

        double physical_dof_reference(const RunnerConfig &cfg, std::size_t ray_count = 0)
        {
            return cfg.aperture.two_dim ? reference_dof_2d(cfg.nominal_length(), cfg.wavelength(), ray_count)
                                        : reference_dof_1d(cfg.nominal_length(), cfg.wavelength());
        }

        std::string reference_label(const RunnerConfig &cfg)
        {
            return cfg.aperture.two_dim ? "min(piL^2/lambda^2,L_ray)" : "2L/lambda";
        }

        double azimuth_tolerance(const RunnerConfig &cfg) { return cfg.azimuth_tolerance_deg * pi / 180.0; }

        void run_screen(const RunnerConfig &cfg, ArtifactWriter &out, json &summary, Stopwatch &sw)
        {
            const auto grid = cfg.direction_grid();
            for (double r : cfg.ranges_m)
                for (double beta : cfg.betas_rad)
                {
                    const auto geom = cfg.geometry(beta);
                    for (const auto &spec : cfg.partitions)
                    {
                        const auto part = sns::make_partition(geom, spec);
                        const std::string base = "screen/r" + tag(r) + "/" + beta_dir(beta) + "/" + spec.label();
                        const auto rep = sw.time(base, [&] {
                            return sns::local_screen(geom, part, grid, r, cfg.wavelength(), cfg.vr_policy,
                                                     cfg.thresholds, azimuth_tolerance(cfg));
                        });
                        out.write_json(base + "_screen.json", rep.to_json());
                        summary["screen"].push_back({{"range_m", r},
                                                     {"beta_rad", beta},
                                                     {"partition", spec.label()},
                                                     {"stable_fraction", rep.stable_fraction}});
                    }
                }
        }

        void run_los(const RunnerConfig &cfg, ArtifactWriter &out, json &summary, Stopwatch &sw)
        {
            run_screen(cfg, out, summary, sw);
            const auto grid = cfg.direction_grid();
            for (double r : cfg.ranges_m)
            {
                for (double beta : cfg.betas_rad)
                {
                    const auto geom = cfg.geometry(beta);
                    for (const auto &spec : cfg.partitions)
                    {
                        const auto part = sns::make_partition(geom, spec);
                        const std::string base = "los/r" + tag(r) + "/" + beta_dir(beta) + "/" + spec.label();
                        const auto map = sw.time(base + "_heatmap", [&] {
                            return sns::sns_heatmap(geom, part, grid, r, cfg.wavelength(), cfg.q, cfg.vr_policy, false,
                                                    azimuth_tolerance(cfg));
                        });
                        out.write(base + "_heatmap.csv", map.to_csv());
                        if (cfg.svg)
                            out.write(base + "_heatmap.svg",
                                      heatmap_svg(map, "d_mean r=" + tag(r) + " m, " + beta_dir(beta) + ", " + spec.label()));
                        summary["heatmaps"].push_back({{"range_m", r},
                                                       {"beta_rad", beta},
                                                       {"partition", spec.label()},
                                                       {"mean_d", map.mean_over_defined()},
                                                       {"undefined_directions", map.undefined_count()}});
                    }
                }
                if (!cfg.port_budget)
                    continue;
                for (const auto &spec : cfg.partitions)
                {
                    const std::string base = "los/r" + tag(r) + "/" + spec.label() + "_port_budget";
                    const auto rows = sw.time(base, [&] {
                        return sns::port_budget_sweep([&](double b) { return cfg.geometry(b); }, spec, grid, r,
                                                      cfg.wavelength(), cfg.betas_rad, cfg.q, cfg.vr_policy,
                                                      azimuth_tolerance(cfg));
                    });
                    out.write(base + ".csv", sns::port_budget_csv(rows));
                    for (const auto &row : rows)
                        summary["port_budget"].push_back(
                            {{"range_m", r},
                             {"beta_rad", row.half_angle_rad},
                             {"partition", spec.label()},
                             {"R_eff", row.r_eff},
                             {"R_eff_over_K", row.r_eff_over_k},
                             {"directions_excluded", row.directions_excluded},
                             {"port_mode_bound", metrics::port_mode_bound(row.r_eff, physical_dof_reference(cfg), cfg.n_rf)}});
                }
            }
        }

        void write_statistics(const RunnerConfig &cfg, const geometry::Aperture &geom, const CMatrix &r,
                              double reference, const std::string &dir, ArtifactWriter &out, json &entry)
        {
            const auto table = emit_spectrum_table(r, reference, reference_label(cfg), cfg.eig_limit);
            if (table.spectrum_available)
                out.write(dir + "/spectrum.csv", table.to_csv());
            entry["spectrum"] = table.summary();
            entry["normalized_dof"] = metrics::normalized_dof(table.effective_rank, geom.size());
            for (const auto &spec : cfg.partitions)
            {
                const auto part = sns::make_partition(geom, spec);
                const auto st = sns::separation_stats(r, part, cfg.q);
                out.write(dir + "/separation_" + spec.label() + ".csv", st.to_csv());
            }
        }

        void run_cdl(const RunnerConfig &cfg, const std::string &data_dir, ArtifactWriter &out, json &summary,
                     json &data_files, Stopwatch &sw)
        {
            const std::string path = !cfg.cdl.table_path.empty()
                                         ? cfg.cdl.table_path
                                         : data_dir + (cfg.scenario == "cdl-a" ? "/cdl_a.json" : "/cdl_d.json");
            const auto table = channels::load_cluster_table(path);
            data_files[std::filesystem::path(path).filename().string()] = {{"path", path}, {"sha256", sha256_file(path)}};
            const channels::CdlOptions opts{cfg.cdl.support_filter, cfg.cdl.renormalize};
            for (double beta : cfg.betas_rad)
            {
                const auto geom = cfg.geometry(beta);
                const std::string dir = cfg.scenario + "/" + beta_dir(beta);
                const auto res = sw.time(dir, [&] { return channels::cdl_correlation(geom, table, cfg.wavelength(), opts); });
                json entry{{"beta_rad", beta},
                           {"surviving_rays", res.rays.size()},
                           {"dropped_rays", res.dropped_rays},
                           {"trace", res.correlation.trace()}};
                write_statistics(cfg, geom, res.correlation.values, physical_dof_reference(cfg, res.rays.size()), dir,
                                 out, entry);
                summary["cdl"].push_back(entry);
            }
        }

        void run_isotropic(const RunnerConfig &cfg, ArtifactWriter &out, json &summary, Stopwatch &sw)
        {
            for (double beta : cfg.betas_rad)
            {
                const auto geom = cfg.geometry(beta);
                const std::string dir = "isotropic/" + beta_dir(beta);
                const auto r = sw.time(dir, [&] {
                    return channels::iso_corr_matrix(geom, cfg.wavelength(), true, cfg.iso_tolerance);
                });
                json entry = isotropic_summary(r.values, geom.size());
                entry["beta_rad"] = beta;
                write_statistics(cfg, geom, r.values, physical_dof_reference(cfg), dir, out, entry);
                if (cfg.oracle.enable)
                {
                    double total_dev = 0.0, base_dev = 0.0;
                    const numerics::OracleOptions opts{cfg.oracle.tolerance, 4096};
                    out.write(dir + "/oracle_audit.csv",
                              sw.time(dir + "/oracle", [&] {
                                  return oracle_audit_csv(geom, cfg.wavelength(), cfg.iso_tolerance, opts,
                                                          cfg.oracle.max_pairs, &total_dev, &base_dev);
                              }));
                    entry["oracle_max_total_deviation"] = total_dev;
                    entry["oracle_max_baseline_deviation"] = base_dev;
                }
                summary["isotropic"].push_back(entry);
            }
        }

        void run_oracle(const RunnerConfig &cfg, ArtifactWriter &out, json &summary, Stopwatch &sw)
        {
            const numerics::OracleOptions opts{cfg.oracle.tolerance, 4096};
            for (double beta : cfg.betas_rad)
            {
                const auto geom = cfg.geometry(beta);
                const std::string name = "oracle/" + beta_dir(beta) + "_audit.csv";
                double total_dev = 0.0, base_dev = 0.0;
                out.write(name, sw.time(name, [&] {
                              return oracle_audit_csv(geom, cfg.wavelength(), cfg.iso_tolerance, opts,
                                                      cfg.oracle.max_pairs, &total_dev, &base_dev);
                          }));
                summary["oracle"].push_back({{"beta_rad", beta},
                                             {"max_total_deviation", total_dev},
                                             {"max_baseline_deviation", base_dev}});
            }
        }

        void run_bounds(const RunnerConfig &cfg, ArtifactWriter &out, json &summary)
        {
            std::vector<FieldRegionBounds> rows;
            for (double beta : cfg.betas_rad)
            {
                rows.push_back(field_region_bounds(cfg.aperture.length_m, beta, cfg.wavelength()));
                summary["bounds"].push_back(rows.back().to_json());
            }
            out.write("bounds.csv", bounds_csv(rows));
        }
    }

    std::string to_string(Command c)
    {
        switch (c)
        {
        case Command::run:
            return "run";
        case Command::screen:
            return "screen";
        case Command::oracle:
            return "oracle";
        case Command::bounds:
            return "bounds";
        }
        return "run";
    }

    std::string default_data_dir() { return HOLOCURA_DATA_DIR; }

    nlohmann::json isotropic_summary(const CMatrix &r, std::size_t num_antennas)
    {
        double max_off = 0.0;
        for (Eigen::Index i = 0; i < r.rows(); ++i)
            for (Eigen::Index j = 0; j < r.cols(); ++j)
                if (i != j)
                    max_off = std::max(max_off, std::abs(r(i, j)));
        const double dof = metrics::renyi2_effective_rank(r);
        return {{"dimension", num_antennas}, {"effective_rank", dof}, {"max_offdiagonal_abs", max_off}};
    }

    std::string oracle_audit_csv(const geometry::Aperture &geom, double wavelength, double iso_tolerance,
                                 const numerics::OracleOptions &options, std::size_t max_pairs, double *max_total_dev,
                                 double *max_baseline_dev)
    {
        const std::size_t n = geom.size();
        const std::size_t stride = std::max<std::size_t>(1, (n + max_pairs - 1) / max_pairs);
        std::vector<std::size_t> partners;
        for (std::size_t j = 0; j < n; j += stride)
            partners.push_back(j);

        std::vector<std::string> lines(partners.size());
        std::vector<double> total_dev(partners.size()), base_dev(partners.size());
        const double beta = geom.half_angle();

#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(partners.size()); ++i)
        {
            const std::size_t j = partners[std::size_t(i)];
            const auto closed = geom.is_2d() ? channels::iso_corr_2d(geom, 0, j, wavelength, iso_tolerance)
                                             : channels::iso_corr_1d(geom, 0, j, wavelength, iso_tolerance);
            const Vec3 &pa = geom.position(0), &pb = geom.position(j);
            const auto front = numerics::oracle_corr_pair(pa, pb, wavelength, numerics::OracleDomain::front, beta, options);
            const auto full = beta > 0.0 ? numerics::oracle_corr_pair(pa, pb, wavelength,
                                                                     numerics::OracleDomain::front_and_caps, beta, options)
                                         : front;
            const auto k = std::size_t(i);
            base_dev[k] = std::abs(closed.baseline - front.value.real());
            total_dev[k] = std::abs(closed.total() - full.value.real());
            std::ostringstream os;
            os << 0 << ',' << j << ',' << format_number(closed.baseline) << ',' << format_number(closed.extension) << ','
               << format_number(front.value.real()) << ',' << format_number(full.value.real()) << ','
               << format_number(full.value.imag()) << ',' << format_number(base_dev[k]) << ','
               << format_number(total_dev[k]) << '\n';
            lines[k] = os.str();
        }

        std::string csv = "element_a,element_b,closed_baseline,closed_extension,oracle_front_re,oracle_total_re,"
                          "oracle_total_im,baseline_deviation,total_deviation\n";
        double td = 0.0, bd = 0.0;
        for (std::size_t k = 0; k < lines.size(); ++k)
        {
            csv += lines[k];
            td = std::max(td, total_dev[k]);
            bd = std::max(bd, base_dev[k]);
        }
        if (max_total_dev)
            *max_total_dev = td;
        if (max_baseline_dev)
            *max_baseline_dev = bd;
        return csv;
    }

    RunResult execute(const RunnerConfig &cfg, Command command, const std::string &data_dir)
    {
        validate(cfg);
        json summary = json::object(), timing = json::object(), data_files = json::object();
        Stopwatch sw(timing);
        ArtifactWriter out(cfg.output_dir);
        const auto start = clock_type::now();

        switch (command)
        {
        case Command::screen:
            run_screen(cfg, out, summary, sw);
            break;
        case Command::oracle:
            run_oracle(cfg, out, summary, sw);
            break;
        case Command::bounds:
            run_bounds(cfg, out, summary);
            break;
        case Command::run:
            if (cfg.scenario == "los")
                run_los(cfg, out, summary, sw);
            else if (cfg.scenario == "isotropic")
                run_isotropic(cfg, out, summary, sw);
            else
                run_cdl(cfg, data_dir, out, summary, data_files, sw);
            if (cfg.betas_rad.size())
                out.write_json("geometry.json", geometry::to_json(cfg.geometry(cfg.betas_rad.front())));
            break;
        }
        out.write_json("summary.json", summary);

        json manifest{{"tool", "holocura"},
                      {"version", version},
                      {"command", to_string(command)},
                      {"config", to_json(cfg)},
                      {"data_files", data_files}};
        timing["total"] = std::chrono::duration<double>(clock_type::now() - start).count();
        out.commit(manifest, timing);
        return {out.target(), summary, out.hashes()};
    }
}
