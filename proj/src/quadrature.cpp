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

#include "holocura/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace holocura::numerics
{
    QuadratureRule QuadratureRule::gauss_legendre(std::size_t n, double a, double b)
    {
        if (n == 0)
            throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
        QuadratureRule rule;
        rule.kind = Kind::gauss_legendre;
        rule.lower = a;
        rule.upper = b;
        rule.nodes.assign(n, 0.0);
        rule.weights.assign(n, 0.0);

        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        const std::size_t m = (n + 1) / 2;
        for (std::size_t i = 0; i < m; ++i)
        {
            // Newton iteration on P_n, started from the Tricomi estimate of the i-th root
            double z = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter)
            {
                double p1 = 1.0, p2 = 0.0;
                for (std::size_t j = 0; j < n; ++j)
                {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * double(j) + 1.0) * z * p2 - double(j) * p3) / (double(j) + 1.0);
                }
                dp = double(n) * (z * p1 - p2) / (z * z - 1.0);
                const double z_old = z;
                z = z_old - p1 / dp;
                if (std::abs(z - z_old) <= 1e-15)
                    break;
            }
            rule.nodes[i] = mid - half * z;
            rule.nodes[n - 1 - i] = mid + half * z;
            rule.weights[i] = 2.0 * half / ((1.0 - z * z) * dp * dp);
            rule.weights[n - 1 - i] = rule.weights[i];
        }
        return rule;
    }

    QuadratureRule QuadratureRule::simpson(std::size_t n_intervals, double a, double b)
    {
        if (n_intervals < 2 || n_intervals % 2 != 0)
            throw std::invalid_argument("Composite Simpson needs an even number of intervals");
        QuadratureRule rule;
        rule.kind = Kind::composite_simpson;
        rule.lower = a;
        rule.upper = b;
        const double h = (b - a) / double(n_intervals);
        rule.nodes.resize(n_intervals + 1);
        rule.weights.resize(n_intervals + 1);
        for (std::size_t i = 0; i <= n_intervals; ++i)
        {
            rule.nodes[i] = a + double(i) * h;
            const double w = (i == 0 || i == n_intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            rule.weights[i] = w * h / 3.0;
        }
        return rule;
    }

    namespace
    {
        struct Piece
        {
            double a, b, value, error;
            bool operator<(const Piece &o) const { return error < o.error; }
        };

        using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
        constexpr std::size_t kronrod_points = 31;
    }

    IntegrationResult integrate_1d(const std::function<double(double)> &f, double a, double b, double tolerance,
                                   std::size_t max_intervals)
    {
        if (!(a <= b))
            throw std::invalid_argument("integrate_1d requires a <= b");
        if (!(tolerance > 0.0))
            throw std::invalid_argument("integrate_1d requires a positive tolerance");

        IntegrationResult res;
        if (a == b)
            return res;

        auto evaluate = [&](double lo, double hi) {
            double err = 0.0;
            // Boost reports the error of the non-adaptive rule on the reference interval [-1, 1]
            const double v = Kronrod::integrate(f, lo, hi, 0, 0.0, &err);
            res.evaluations += kronrod_points;
            return Piece{lo, hi, v, err * 0.5 * (hi - lo)};
        };

        std::priority_queue<Piece> heap;
        heap.push(evaluate(a, b));
        double total_error = heap.top().error;
        while (total_error > tolerance)
        {
            if (heap.size() >= max_intervals)
            {
                std::ostringstream msg;
                msg << "integrate_1d did not converge on [" << a << ", " << b << "]: error estimate " << total_error
                    << " > tolerance " << tolerance << " after " << heap.size() << " intervals";
                throw NonConvergence(msg.str());
            }
            const Piece worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            const Piece left = evaluate(worst.a, mid), right = evaluate(mid, worst.b);
            heap.push(left);
            heap.push(right);
            total_error += left.error + right.error - worst.error;
        }

        // Deterministic summation order: sort the final partition by position
        std::vector<Piece> pieces;
        pieces.reserve(heap.size());
        while (!heap.empty())
        {
            pieces.push_back(heap.top());
            heap.pop();
        }
        std::sort(pieces.begin(), pieces.end(), [](const Piece &x, const Piece &y) { return x.a < y.a; });
        res.error_bound = 0.0;
        for (const auto &p : pieces)
        {
            res.value += p.value;
            res.error_bound += p.error;
        }
        res.intervals = pieces.size();
        return res;
    }

    AngularGrid AngularGrid::product(const QuadratureRule &theta_rule, const QuadratureRule &phi_rule)
    {
        return {theta_rule.nodes, phi_rule.nodes, theta_rule.weights, phi_rule.weights};
    }

    AngularGrid AngularGrid::uniform(std::size_t n_theta, std::size_t n_phi, double theta_lo, double theta_hi,
                                     double phi_lo, double phi_hi)
    {
        if (n_theta < 3 || n_phi < 3 || n_theta % 2 == 0 || n_phi % 2 == 0)
            throw std::invalid_argument("Uniform angular grid needs odd sample counts >= 3");
        return product(QuadratureRule::simpson(n_theta - 1, theta_lo, theta_hi),
                       QuadratureRule::simpson(n_phi - 1, phi_lo, phi_hi));
    }

    double AngularGrid::cell_weight(std::size_t i_theta, std::size_t i_phi) const
    {
        return std::sin(theta[i_theta]) * theta_weight[i_theta] * phi_weight[i_phi];
    }

    double AngularGrid::density_integral() const
    {
        double phi_sum = 0.0;
        for (double w : phi_weight)
            phi_sum += w;
        double acc = 0.0;
        for (std::size_t i = 0; i < theta.size(); ++i)
            acc += std::sin(theta[i]) * theta_weight[i];
        return acc * phi_sum / (2.0 * pi);
    }
}
