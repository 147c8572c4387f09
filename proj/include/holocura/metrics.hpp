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

#ifndef HOLOCURA_METRICS_HPP
#define HOLOCURA_METRICS_HPP

#include "holocura/channels.hpp"
#include "holocura/common.hpp"

#include <vector>

namespace holocura::metrics
{
    inline constexpr double default_q = 1.0;
    inline constexpr std::size_t default_eig_limit = 4096;

    struct PoviResult
    {
        double gamma = 0.0; // structural coherence
        double alpha = 1.0; // Frobenius power ratio ||R_a|| / ||R_b||, 0 or inf with a zero operand
        double f_q = 1.0;   // sech(q |ln alpha|)
        double d = 0.0;     // 1 - gamma f_q
        double q = default_q;
        bool zero_operand = false; // exactly one operand vanished, d = 1 by the alpha limit
    };

    // Throws UndefinedDistance when both operands are zero and std::invalid_argument on shape mismatch or q < 1
    PoviResult povi_cmd(const CMatrix &r_a, const CMatrix &r_b, double q = default_q);
    PoviResult povi_cmd(const channels::CorrelationMatrix &r_a, const channels::CorrelationMatrix &r_b,
                        double q = default_q);

    // Same result for R_a = h_a h_a^H, R_b = h_b h_b^H without forming the matrices
    PoviResult povi_cmd_rank_one(const CVector &h_a, const CVector &h_b, double q = default_q);

    double classic_cmd(const CMatrix &r_a, const CMatrix &r_b);

    // (tr R)^2 / ||R||_F^2, throws std::invalid_argument for a zero matrix
    double renyi2_effective_rank(const CMatrix &r);
    double renyi2_effective_rank(const channels::CorrelationMatrix &r);

    // Same quantity for R = B B^H given only the factor B (N x L); cheap when L << N
    double renyi2_effective_rank_factored(const CMatrix &factor);

    double normalized_dof(double effective_rank, std::size_t num_antennas);

    // Thrown when a spectrum is requested above the size limit
    class SpectrumTooLarge : public std::length_error
    {
    public:
        using std::length_error::length_error;
    };

    // Eigenvalues in descending order, small negative round-off (down to -1e-10 tr R) clipped to zero
    std::vector<double> eigen_spectrum(const CMatrix &r, std::size_t limit = default_eig_limit);

    struct PortSimilarityMatrix
    {
        RMatrix values; // symmetric, unit diagonal, entries in [0, 1]
        std::size_t ports() const { return std::size_t(values.rows()); }
    };

    // s = sqrt(1 - d) off the diagonal, ones on it
    PortSimilarityMatrix port_similarity(const RMatrix &d_matrix);

    // K^2 / (K + 2 sum_{k<l} s_kl^2)
    double realizable_port_rank(const PortSimilarityMatrix &s);

    // Arithmetic mean over the direction grid
    double averaged_port_budget(const std::vector<double> &r_eff_samples);

    double port_mode_bound(double r_eff, double dof_phys, double n_rf);
}

#endif
