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

#include "holocura/snspipe.hpp"

#include <limits>
#include <sstream>

namespace holocura::sns
{
    namespace
    {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();

        CVector gather(const CVector &h, const std::vector<std::size_t> &indices)
        {
            CVector out(Eigen::Index(indices.size()));
            for (std::size_t i = 0; i < indices.size(); ++i)
                out(Eigen::Index(i)) = h(Eigen::Index(indices[i]));
            return out;
        }

        CVector los_entries(const geometry::Aperture &geom, const Direction &dir, double range_m, double wavelength,
                            visibility::VrPolicy policy, double azimuth_tolerance_rad)
        {
            const geometry::UserLocation user{range_m, dir.zenith_rad, dir.azimuth_rad};
            return channels::los_channel(geom, user, wavelength, policy, azimuth_tolerance_rad).entries;
        }

        double to_deg(double rad) { return rad * 180.0 / pi; }
    }

    double stationarity_index(const Eigen::VectorXd &powers)
    {
        if (powers.size() == 0)
            return nan;
        const double mu = powers.mean();
        if (mu == 0.0)
            return nan;
        const double var = (powers.array() - mu).square().mean();
        return var / (mu * mu);
    }

    LocalScreenReport local_screen(const geometry::Aperture &geom, const Partition &partition,
                                   const DirectionGrid &grid, double range_m, double wavelength,
                                   visibility::VrPolicy policy, const ScreenThresholds &thresholds,
                                   double azimuth_tolerance_rad)
    {
        if (grid.size() == 0)
            throw std::invalid_argument("local screen needs a nonempty direction grid");
        const std::size_t K = partition.count();
        LocalScreenReport rep;
        rep.thresholds = thresholds;
        rep.eta = RMatrix::Constant(Eigen::Index(K), Eigen::Index(grid.size()), nan);

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(grid.size()); ++i)
        {
            const CVector h = los_entries(geom, grid.directions[std::size_t(i)], range_m, wavelength, policy,
                                          azimuth_tolerance_rad);
            for (std::size_t k = 0; k < K; ++k)
                rep.eta(Eigen::Index(k), i) = stationarity_index(gather(h, partition.subarrays[k]).cwiseAbs2());
        }

        std::size_t admissible = 0;
        for (std::size_t k = 0; k < K; ++k)
        {
            std::size_t active = 0, passed = 0;
            for (Eigen::Index i = 0; i < rep.eta.cols(); ++i)
            {
                const double eta = rep.eta(Eigen::Index(k), i);
                if (std::isnan(eta))
                    continue;
                ++active;
                if (eta <= thresholds.eta_max)
                    ++passed;
            }
            const bool empty = active == 0;
            const double p = empty ? nan : double(passed) / double(active);
            const bool ok = !empty && p >= thresholds.p_min;
            rep.active_count.push_back(active);
            rep.pass_count.push_back(passed);
            rep.pass_probability.push_back(p);
            rep.empty_active_set.push_back(empty);
            rep.admissible.push_back(ok);
            admissible += ok ? 1 : 0;
        }
        rep.stable_fraction = K == 0 ? 0.0 : double(admissible) / double(K);
        return rep;
    }

    nlohmann::json LocalScreenReport::to_json(bool include_eta) const
    {
        nlohmann::json j;
        j["eta_max"] = thresholds.eta_max;
        j["p_min"] = thresholds.p_min;
        j["stable_fraction"] = stable_fraction;
        auto &subs = j["subarrays"] = nlohmann::json::array();
        for (std::size_t k = 0; k < pass_probability.size(); ++k)
        {
            nlohmann::json s;
            s["k"] = k;
            s["pass_probability"] = std::isnan(pass_probability[k]) ? nlohmann::json(nullptr) : nlohmann::json(pass_probability[k]);
            s["active_directions"] = active_count[k];
            s["passing_directions"] = pass_count[k];
            s["admissible"] = bool(admissible[k]);
            s["empty_active_set"] = bool(empty_active_set[k]);
            subs.push_back(s);
        }
        if (include_eta)
        {
            auto &e = j["eta"] = nlohmann::json::array();
            for (Eigen::Index k = 0; k < eta.rows(); ++k)
            {
                auto row = nlohmann::json::array();
                for (Eigen::Index i = 0; i < eta.cols(); ++i)
                    row.push_back(std::isnan(eta(k, i)) ? nlohmann::json(nullptr) : nlohmann::json(eta(k, i)));
                e.push_back(row);
            }
        }
        return j;
    }

    SnSHeatmap sns_heatmap(const geometry::Aperture &geom, const Partition &partition, const DirectionGrid &grid,
                           double range_m, double wavelength, double q, visibility::VrPolicy policy,
                           bool keep_pair_values, double azimuth_tolerance_rad)
    {
        const std::size_t K = partition.count();
        if (K < 2)
            throw std::invalid_argument("SnS heatmap needs at least two subarrays");
        const std::size_t D = grid.size(), n_pairs = K * (K - 1) / 2;

        SnSHeatmap map;
        map.grid = grid;
        map.d_mean.assign(D, nan);
        map.defined_pairs.assign(D, 0);
        map.excluded_pairs.assign(D, 0);
        map.zero_operand_pairs.assign(D, 0);
        if (keep_pair_values)
            map.pair_d = RMatrix::Constant(Eigen::Index(D), Eigen::Index(n_pairs), nan);
        map.metadata = {range_m, geom.half_angle(), wavelength, q, K, policy,
                        std::string(geom.is_2d() ? "2D" : "1D") + (geom.is_flat() ? " flat" : " curved")};

#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(D); ++i)
        {
            const CVector h = los_entries(geom, grid.directions[std::size_t(i)], range_m, wavelength, policy,
                                          azimuth_tolerance_rad);
            std::vector<CVector> sub(K);
            for (std::size_t k = 0; k < K; ++k)
                sub[k] = gather(h, partition.subarrays[k]);

            double sum = 0.0;
            std::size_t defined = 0, excluded = 0, zero_op = 0, pair = 0;
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t l = k + 1; l < K; ++l, ++pair)
                {
                    if (sub[k].squaredNorm() == 0.0 && sub[l].squaredNorm() == 0.0)
                    {
                        ++excluded;
                        continue;
                    }
                    const auto r = metrics::povi_cmd_rank_one(sub[k], sub[l], q);
                    sum += r.d;
                    ++defined;
                    zero_op += r.zero_operand ? 1 : 0;
                    if (keep_pair_values)
                        map.pair_d(i, Eigen::Index(pair)) = r.d;
                }
            const auto u = std::size_t(i);
            map.defined_pairs[u] = defined;
            map.excluded_pairs[u] = excluded;
            map.zero_operand_pairs[u] = zero_op;
            if (defined > 0)
                map.d_mean[u] = sum / double(defined);
        }
        return map;
    }

    double SnSHeatmap::mean_over_defined() const
    {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < d_mean.size(); ++i)
            if (defined(i))
            {
                sum += d_mean[i];
                ++n;
            }
        return n == 0 ? nan : sum / double(n);
    }

    std::size_t SnSHeatmap::undefined_count() const
    {
        std::size_t n = 0;
        for (std::size_t i = 0; i < d_mean.size(); ++i)
            n += defined(i) ? 0 : 1;
        return n;
    }

    std::string SnSHeatmap::to_csv() const
    {
        std::ostringstream os;
        os << "theta_deg,phi_deg,d_mean,defined_pair_count\n";
        for (std::size_t i = 0; i < d_mean.size(); ++i)
            os << format_number(to_deg(grid.directions[i].zenith_rad)) << ','
               << format_number(to_deg(grid.directions[i].azimuth_rad)) << ',' << format_number(d_mean[i]) << ','
               << defined_pairs[i] << '\n';
        return os.str();
    }

    SeparationStats separation_stats(const CMatrix &r, const Partition &partition, double q)
    {
        const std::size_t K = partition.count();
        if (K < 2)
            throw std::invalid_argument("separation statistics need K >= 2 subarrays");
        std::vector<CMatrix> blocks(K);
        for (std::size_t k = 0; k < K; ++k)
        {
            const auto &idx = partition.subarrays[k];
            CMatrix b(Eigen::Index(idx.size()), Eigen::Index(idx.size()));
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j)
                {
                    if (idx[i] >= std::size_t(r.rows()) || idx[j] >= std::size_t(r.cols()))
                        throw std::out_of_range("partition index outside the correlation matrix");
                    b(Eigen::Index(i), Eigen::Index(j)) = r(Eigen::Index(idx[i]), Eigen::Index(idx[j]));
                }
            blocks[k] = std::move(b);
        }

        SeparationStats st;
        for (std::size_t s = 1; s < K; ++s)
        {
            std::vector<double> d;
            for (std::size_t k = 0; k + s < K; ++k)
                d.push_back(metrics::povi_cmd(blocks[k], blocks[k + s], q).d);
            double mean = 0.0;
            for (double v : d)
                mean += v;
            mean /= double(d.size());
            double var = 0.0;
            for (double v : d)
                var += (v - mean) * (v - mean);
            var /= double(d.size());
            st.mean.push_back(mean);
            st.variance.push_back(var);
            st.pair_count.push_back(d.size());
        }
        return st;
    }

    std::string SeparationStats::to_csv() const
    {
        std::ostringstream os;
        os << "lag,mean_d,variance,pairs\n";
        for (std::size_t s = 0; s < mean.size(); ++s)
            os << s + 1 << ',' << format_number(mean[s]) << ',' << format_number(variance[s]) << ',' << pair_count[s]
               << '\n';
        return os.str();
    }

    std::vector<PortBudgetRow> port_budget_sweep(const ApertureFactory &make_geometry, const PartitionSpec &spec,
                                                 const DirectionGrid &grid, double range_m, double wavelength,
                                                 const std::vector<double> &half_angles, double q,
                                                 visibility::VrPolicy policy, double azimuth_tolerance_rad)
    {
        std::vector<PortBudgetRow> rows;
        for (double beta : half_angles)
        {
            const geometry::Aperture geom = make_geometry(beta);
            const Partition partition = make_partition(geom, spec);
            const std::size_t K = partition.count();
            std::vector<double> r_eff(grid.size(), nan);

#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(grid.size()); ++i)
            {
                const CVector h = los_entries(geom, grid.directions[std::size_t(i)], range_m, wavelength, policy,
                                              azimuth_tolerance_rad);
                std::vector<CVector> sub(K);
                for (std::size_t k = 0; k < K; ++k)
                    sub[k] = gather(h, partition.subarrays[k]);
                RMatrix d = RMatrix::Zero(Eigen::Index(K), Eigen::Index(K));
                bool undefined = false;
                for (std::size_t k = 0; k < K && !undefined; ++k)
                    for (std::size_t l = k + 1; l < K; ++l)
                    {
                        if (sub[k].squaredNorm() == 0.0 && sub[l].squaredNorm() == 0.0)
                        {
                            undefined = true;
                            break;
                        }
                        d(Eigen::Index(k), Eigen::Index(l)) = d(Eigen::Index(l), Eigen::Index(k)) =
                            metrics::povi_cmd_rank_one(sub[k], sub[l], q).d;
                    }
                if (!undefined)
                    r_eff[std::size_t(i)] = metrics::realizable_port_rank(metrics::port_similarity(d));
            }

            std::vector<double> used;
            for (double v : r_eff)
                if (!std::isnan(v))
                    used.push_back(v);
            PortBudgetRow row;
            row.half_angle_rad = beta;
            row.subarrays = K;
            row.directions_used = used.size();
            row.directions_excluded = grid.size() - used.size();
            row.r_eff = metrics::averaged_port_budget(used);
            row.r_eff_over_k = row.r_eff / double(K);
            rows.push_back(row);
        }
        return rows;
    }

    std::string port_budget_csv(const std::vector<PortBudgetRow> &rows)
    {
        std::ostringstream os;
        os << "beta_rad,beta_deg,K,R_eff,R_eff_over_K,directions_used,directions_excluded\n";
        for (const auto &r : rows)
            os << format_number(r.half_angle_rad) << ',' << format_number(to_deg(r.half_angle_rad)) << ','
               << r.subarrays << ',' << format_number(r.r_eff) << ',' << format_number(r.r_eff_over_k) << ','
               << r.directions_used << ',' << r.directions_excluded << '\n';
        return os.str();
    }
}
