// SPDX-License-Identifier: Apache-2.0
//
// rmimo: capacity toolkit for reconfigurable-antenna mmWave MIMO links
// Copyright (C) 2026 The rmimo authors
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

#include "rmimo/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "rmimo/errors.hpp"

namespace rmimo
{
    CapacityParams::CapacityParams(double snr_linear, std::size_t tx_count) : snr_(snr_linear), tx_count_(tx_count)
    {
        if (!(snr_linear > 0.0) || !std::isfinite(snr_linear))
            throw validation_error("SNR must be positive and finite");
        if (tx_count == 0)
            throw validation_error("tx count must be at least 1");
    }

    CapacityParams CapacityParams::from_db(double snr_db, std::size_t tx_count)
    {
        return CapacityParams(db_to_linear(snr_db), tx_count);
    }

    double db_to_linear(double db) noexcept
    {
        return std::pow(10.0, db / 10.0);
    }

    double capacity(const ComplexMatrix &channel, const CapacityParams &params)
    {
        if (channel.cols() != params.tx_count())
            throw dimension_error("capacity: channel has " + std::to_string(channel.cols()) + " columns but M = " +
                                  std::to_string(params.tx_count()));

        // det(I_N + a H H^H) = det(I_M + a H^H H); use whichever Gram matrix is smaller
        const auto &h = channel.eigen();
        const Eigen::MatrixXcd gram = h.rows() <= h.cols() ? Eigen::MatrixXcd(h * h.adjoint())
                                                           : Eigen::MatrixXcd(h.adjoint() * h);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);

        const double scale = params.snr() / double(params.tx_count());
        double nats = 0.0;
        for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
            nats += std::log1p(scale * std::max(0.0, solver.eigenvalues()(k)));
        return nats / std::numbers::ln2;
    }

    std::size_t effective_rank(const ComplexMatrix &channel, double rel_tol)
    {
        if (!(rel_tol > 0.0 && rel_tol < 1.0))
            throw validation_error("effective_rank: rel_tol must lie in (0, 1)");

        const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(channel.eigen());
        const auto &sv = svd.singularValues();
        const double sigma_max = sv.size() > 0 ? sv.maxCoeff() : 0.0;
        if (sigma_max == 0.0)
            return 0;

        std::size_t rank = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > rel_tol * sigma_max)
                ++rank;
        return rank;
    }

    CapacityResult ergodic_capacity(const ChannelSpec &channel, const std::optional<StateMatrix> &state,
                                    const CapacityParams &params, std::size_t trials, RandomStream base,
                                    Execution exec)
    {
        if (trials == 0)
            throw validation_error("ergodic_capacity: trials must be at least 1");

        const ComplexMatrix los = los_channel(channel.geometry);
        if (state && !state->matrix().same_shape(los))
            throw dimension_error("ergodic_capacity: state matrix does not match the channel shape");

        auto evaluate = [&](const ComplexMatrix &h) {
            return state ? capacity(apply_state(h, *state), params) : capacity(h, params);
        };

        if (channel.rician.is_infinite())
            return {evaluate(los), 0.0, trials};

        std::vector<double> samples(trials);
        detail::parallel_chunks(trials, exec.workers, [&](std::size_t begin, std::size_t end, unsigned) {
            for (std::size_t t = begin; t < end; ++t)
            {
                const RandomStream stream{base.master_seed, base.stream_index + t};
                const ComplexMatrix nlos = nlos_sample(los.cols(), los.rows(), stream);
                samples[t] = evaluate(rician_compose(channel.rician, los, nlos));
            }
        });

        // fixed summation order keeps the result independent of the worker count
        double sum = 0.0;
        for (double c : samples)
            sum += c;
        const double mean = sum / double(trials);

        double stderr_bits = 0.0;
        if (trials > 1)
        {
            double sq = 0.0;
            for (double c : samples)
                sq += (c - mean) * (c - mean);
            stderr_bits = std::sqrt(sq / double(trials - 1)) / std::sqrt(double(trials));
        }
        return {mean, stderr_bits, trials};
    }
}
