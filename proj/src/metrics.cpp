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

#include "holocura/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace holocura::metrics
{
    namespace
    {
        void check_q(double q)
        {
            if (!(q >= 1.0) || !std::isfinite(q))
                throw std::invalid_argument("PoVi power exponent q must be finite and >= 1, got " + std::to_string(q));
        }

        PoviResult one_zero(double q, bool a_is_zero)
        {
            PoviResult r;
            r.gamma = 0.0;
            r.alpha = a_is_zero ? 0.0 : std::numeric_limits<double>::infinity();
            r.f_q = 0.0;
            r.d = 1.0;
            r.q = q;
            r.zero_operand = true;
            return r;
        }

        // log norms keep |ln alpha| exactly symmetric in the operands
        PoviResult assemble(double gamma, double log_norm_a, double log_norm_b, double q)
        {
            PoviResult r;
            r.q = q;
            r.gamma = std::clamp(gamma, 0.0, 1.0);
            const double log_alpha = log_norm_a - log_norm_b;
            r.alpha = std::exp(log_alpha);
            r.f_q = 1.0 / std::cosh(q * std::abs(log_alpha));
            r.d = std::clamp(1.0 - r.gamma * r.f_q, 0.0, 1.0);
            return r;
        }
    }

    PoviResult povi_cmd(const CMatrix &r_a, const CMatrix &r_b, double q)
    {
        check_q(q);
        if (r_a.rows() != r_b.rows() || r_a.cols() != r_b.cols())
            throw std::invalid_argument("PoVi-CMD operands differ in shape");
        const double na = r_a.norm(), nb = r_b.norm();
        if (na == 0.0 && nb == 0.0)
            throw UndefinedDistance("PoVi-CMD between two zero matrices is undefined");
        if (na == 0.0 || nb == 0.0)
            return one_zero(q, na == 0.0);
        // tr(A B) = sum_ij A_ij B_ji
        const double tr = r_a.cwiseProduct(r_b.transpose()).sum().real();
        return assemble(tr / (na * nb), std::log(na), std::log(nb), q);
    }

    PoviResult povi_cmd(const channels::CorrelationMatrix &r_a, const channels::CorrelationMatrix &r_b, double q)
    {
        return povi_cmd(r_a.values, r_b.values, q);
    }

    PoviResult povi_cmd_rank_one(const CVector &h_a, const CVector &h_b, double q)
    {
        check_q(q);
        if (h_a.size() != h_b.size())
            throw std::invalid_argument("PoVi-CMD operands differ in shape");
        const double ea = h_a.squaredNorm(), eb = h_b.squaredNorm();
        if (ea == 0.0 && eb == 0.0)
            throw UndefinedDistance("PoVi-CMD between two zero matrices is undefined");
        if (ea == 0.0 || eb == 0.0)
            return one_zero(q, ea == 0.0);
        const double overlap = std::norm(h_a.dot(h_b));
        return assemble(overlap / (ea * eb), std::log(ea), std::log(eb), q);
    }

    double classic_cmd(const CMatrix &r_a, const CMatrix &r_b)
    {
        return 1.0 - povi_cmd(r_a, r_b, 1.0).gamma;
    }

    double renyi2_effective_rank(const CMatrix &r)
    {
        const double fro2 = r.squaredNorm();
        if (fro2 == 0.0)
            throw std::invalid_argument("Effective rank of a zero matrix is undefined");
        const double tr = r.diagonal().real().sum();
        return tr * tr / fro2;
    }

    double renyi2_effective_rank(const channels::CorrelationMatrix &r) { return renyi2_effective_rank(r.values); }

    double renyi2_effective_rank_factored(const CMatrix &factor)
    {
        // tr(B B^H) = ||B||_F^2 and ||B B^H||_F = ||B^H B||_F
        const double tr = factor.squaredNorm();
        if (tr == 0.0)
            throw std::invalid_argument("Effective rank of a zero matrix is undefined");
        const CMatrix gram = factor.adjoint() * factor;
        return tr * tr / gram.squaredNorm();
    }

    double normalized_dof(double effective_rank, std::size_t num_antennas)
    {
        if (num_antennas == 0)
            throw std::invalid_argument("normalized_dof needs at least one antenna");
        return effective_rank / double(num_antennas);
    }

    std::vector<double> eigen_spectrum(const CMatrix &r, std::size_t limit)
    {
        if (std::size_t(r.rows()) > limit)
            throw SpectrumTooLarge("Matrix dimension " + std::to_string(r.rows()) + " exceeds the eigendecomposition limit " +
                                   std::to_string(limit) + "; use the trace-ratio effective rank instead");
        if (r.rows() == 0)
            return {};
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(r, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw NonConvergence("Hermitian eigensolver did not converge");
        const double floor = -1e-10 * std::abs(r.diagonal().real().sum());
        std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
        for (double &v : ev)
            if (v < 0.0 && v >= floor)
                v = 0.0;
        std::sort(ev.begin(), ev.end(), std::greater<>());
        return ev;
    }

    PortSimilarityMatrix port_similarity(const RMatrix &d_matrix)
    {
        if (d_matrix.rows() != d_matrix.cols())
            throw std::invalid_argument("Port distance matrix must be square");
        constexpr double slack = 1e-12;
        const Eigen::Index K = d_matrix.rows();
        PortSimilarityMatrix s{RMatrix::Identity(K, K)};
        for (Eigen::Index k = 0; k < K; ++k)
            for (Eigen::Index l = k + 1; l < K; ++l)
            {
                const double d = d_matrix(k, l);
                if (!(d >= -slack && d <= 1.0 + slack))
                    throw std::invalid_argument("Port distance out of [0, 1] at (" + std::to_string(k) + ", " +
                                                std::to_string(l) + "): " + std::to_string(d));
                if (std::abs(d - d_matrix(l, k)) > slack)
                    throw std::invalid_argument("Port distance matrix is not symmetric");
                s.values(k, l) = s.values(l, k) = std::sqrt(1.0 - std::clamp(d, 0.0, 1.0));
            }
        return s;
    }

    double realizable_port_rank(const PortSimilarityMatrix &s)
    {
        const Eigen::Index K = s.values.rows();
        if (K == 0)
            throw std::invalid_argument("Port similarity matrix is empty");
        double off = 0.0;
        for (Eigen::Index k = 0; k < K; ++k)
            for (Eigen::Index l = k + 1; l < K; ++l)
                off += s.values(k, l) * s.values(k, l);
        const double kd = double(K);
        return kd * kd / (kd + 2.0 * off);
    }

    double averaged_port_budget(const std::vector<double> &r_eff_samples)
    {
        if (r_eff_samples.empty())
            throw std::invalid_argument("Port budget average over an empty direction grid");
        return std::accumulate(r_eff_samples.begin(), r_eff_samples.end(), 0.0) / double(r_eff_samples.size());
    }

    double port_mode_bound(double r_eff, double dof_phys, double n_rf)
    {
        if (!(r_eff > 0.0 && dof_phys > 0.0 && n_rf > 0.0))
            throw std::invalid_argument("Port mode bound needs positive inputs");
        return std::min({r_eff, dof_phys, n_rf});
    }
}
