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

#ifndef HOLOCURA_TESTS_GENERATORS_HPP
#define HOLOCURA_TESTS_GENERATORS_HPP

// Small seeded generators for the property tests

#include "holocura/common.hpp"
#include "holocura/metrics.hpp"

#include <random>

namespace holocura::testing
{
    class Gen
    {
    public:
        explicit Gen(std::uint64_t seed) : rng(seed) {}

        double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
        std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }
        double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng); }
        bool coin() { return index(0, 1) == 1; }

        CVector complex_vector(std::size_t n)
        {
            CVector v{Eigen::Index(n)};
            for (auto &x : v)
                x = cplx(normal(), normal());
            return v;
        }

        // B B^H with B n x rank, scaled by a random power
        CMatrix psd(std::size_t n, std::size_t rank)
        {
            CMatrix b{Eigen::Index(n), Eigen::Index(rank)};
            for (Eigen::Index i = 0; i < b.rows(); ++i)
                for (Eigen::Index j = 0; j < b.cols(); ++j)
                    b(i, j) = cplx(normal(), normal());
            return std::exp(uniform(-3.0, 3.0)) * (b * b.adjoint());
        }

        CMatrix psd(std::size_t n) { return psd(n, index(1, n)); }

        // Symmetric distance matrix with entries in [0, 1]; some exact zeros and ones
        RMatrix distance_matrix(std::size_t k)
        {
            RMatrix d = RMatrix::Zero(Eigen::Index(k), Eigen::Index(k));
            for (Eigen::Index i = 0; i < d.rows(); ++i)
                for (Eigen::Index j = i + 1; j < d.cols(); ++j)
                {
                    const std::size_t kind = index(0, 9);
                    const double v = kind == 0 ? 0.0 : kind == 1 ? 1.0 : uniform(0.0, 1.0);
                    d(i, j) = d(j, i) = v;
                }
            return d;
        }

        std::mt19937_64 &engine() { return rng; }

    private:
        std::mt19937_64 rng;
    };
}

#endif
