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

#ifndef HOLOCURA_CHANNELS_HPP
#define HOLOCURA_CHANNELS_HPP

#include "holocura/geometry.hpp"
#include "holocura/visibility.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace holocura::channels
{
    enum class Provenance
    {
        los,
        cdl,
        synthetic
    };

    struct ChannelVector
    {
        CVector entries;
        double wavelength = 0.0;
        Provenance provenance = Provenance::synthetic;

        std::size_t size() const { return std::size_t(entries.size()); }
        double energy() const { return entries.squaredNorm(); }
    };

    struct CorrelationMatrix
    {
        enum class Normalization
        {
            raw,
            coefficient // diagonal scaled to one
        };

        CMatrix values;
        Normalization normalization = Normalization::raw;

        std::size_t dim() const { return std::size_t(values.rows()); }
        double trace() const { return values.diagonal().real().sum(); }
        double frobenius_norm() const { return values.norm(); }
        bool is_zero() const { return values.squaredNorm() == 0.0; }
        double hermitian_defect() const { return (values - values.adjoint()).cwiseAbs().maxCoeff(); }

        // Principal sub-matrix R[S, S]
        CorrelationMatrix block(const std::vector<std::size_t> &indices) const;
    };

    // Free-space LoS channel (lambda / (4 pi r_un)) exp(-j k r_un), G_t = G_r = 1, gated by the VR mask of the policy
    ChannelVector los_channel(const geometry::Aperture &geom, const geometry::UserLocation &user, double wavelength,
                              visibility::VrPolicy policy,
                              double azimuth_tolerance_rad = visibility::default_azimuth_tolerance);

    // Deterministic-channel correlations R_kk = h_k h_k^H, one per subarray channel
    std::vector<CorrelationMatrix> los_pair_correlations(const std::vector<CVector> &subarray_channels);

    // ---- Clustered delay line tables ----

    struct Cluster
    {
        double power_db = 0.0;
        double aoa_deg = 0.0;
        double zoa_deg = 0.0;
        bool specular = false; // single ray without intra-cluster spread (CDL-D LoS component)
    };

    struct ClusterTable
    {
        std::string model_name;
        std::string provenance;
        std::vector<Cluster> clusters;
        double c_asa_deg = 0.0;
        double c_zsa_deg = 0.0;
        std::vector<double> ray_offsets; // 20 dimensionless multipliers

        std::vector<double> normalized_powers() const; // linear, sums to one
        void validate() const;
    };

    ClusterTable cluster_table_from_json(const nlohmann::json &j);
    nlohmann::json to_json(const ClusterTable &table);
    ClusterTable load_cluster_table(const std::string &path);

    // Single ray of the expanded angular power spectrum
    struct Ray
    {
        double power = 0.0;
        double zenith_rad = 0.0;
        double azimuth_rad = 0.0;
    };

    // 20 rays per cluster (ray m uses offset m for both azimuth and zenith), equal power split.
    // Zenith angles leaving [0, 180] deg are reflected back with the azimuth rotated by 180 deg.
    std::vector<Ray> expand_rays(const ClusterTable &table);

    struct CdlOptions
    {
        bool support_filter = true; // drop rays outside the front half-space and the backside caps
        bool renormalize = true;    // rescale surviving ray powers to sum one
    };

    struct CdlResult
    {
        CorrelationMatrix correlation;
        std::vector<Ray> rays;        // surviving rays (after filtering and renormalization)
        std::size_t dropped_rays = 0;
    };

    // Surviving rays for a given bend half-angle
    std::vector<Ray> supported_rays(const ClusterTable &table, double half_angle_rad, const CdlOptions &options,
                                    std::size_t *dropped = nullptr);

    // R = sum_rays p a(theta, phi) a^H(theta, phi) with far-field steering vectors
    CdlResult cdl_correlation(const geometry::Aperture &geom, const ClusterTable &table, double wavelength,
                              const CdlOptions &options = {});

    // Ray steering matrix A (N_ant x L_ray) for factored computations
    CMatrix ray_steering_matrix(const geometry::Aperture &geom, const std::vector<Ray> &rays, double wavelength);

    // ---- Half-space isotropic scattering ----

    struct IsoEntry
    {
        double baseline = 0.0;  // sinc kernel over the front half-space
        double extension = 0.0; // backside-cap correction, zero for beta = 0
        double total() const { return baseline + extension; }
    };

    // Element pair (m, n) of a 1D aperture (0-based)
    IsoEntry iso_corr_1d(const geometry::Aperture &geom, std::size_t m, std::size_t n, double wavelength,
                         double tolerance = 1e-10);

    // Element pair ((m, n), (m', n')) of a 2D aperture given as flattened indices
    IsoEntry iso_corr_2d(const geometry::Aperture &geom, std::size_t element_a, std::size_t element_b,
                         double wavelength, double tolerance = 1e-10);

    // Geometric D (transverse) and E (along z) separations of a 2D pair
    struct PairSeparation
    {
        double transverse = 0.0;
        double axial = 0.0;
    };
    PairSeparation iso_pair_separation(const geometry::Aperture &geom, std::size_t element_a, std::size_t element_b);

    // Full matrix; with normalize, every entry is divided by 2 - cos(beta) so the diagonal is one
    CorrelationMatrix iso_corr_matrix(const geometry::Aperture &geom, double wavelength, bool normalize,
                                      double tolerance = 1e-10);

    // int_{cos beta}^1 cos(axial_phase * u) J0(transverse_phase * sqrt(1 - u^2)) du
    double iso_extension_integral(double axial_phase, double transverse_phase, double half_angle_rad, double tolerance);
}

#endif
