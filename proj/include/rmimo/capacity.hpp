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

#ifndef RMIMO_CAPACITY_HPP
#define RMIMO_CAPACITY_HPP

#include <cstddef>
#include <optional>

#include "channel.hpp"
#include "complex_matrix.hpp"
#include "random_stream.hpp"
#include "reconfig.hpp"

namespace rmimo
{
    // Linear SNR rho and the equal-power divisor M
    class CapacityParams
    {
    public:
        CapacityParams(double snr_linear, std::size_t tx_count); // throws validation_error
        static CapacityParams from_db(double snr_db, std::size_t tx_count);

        double snr() const noexcept { return snr_; }
        std::size_t tx_count() const noexcept { return tx_count_; }

    private:
        double snr_;
        std::size_t tx_count_;
    };

    double db_to_linear(double db) noexcept;

    struct CapacityResult
    {
        double mean_bits = 0.0;
        double stderr_bits = 0.0;
        std::size_t trials = 0;
    };

    // log2 det(I_N + (rho/M) H H^H), evaluated as sum_k log2(1 + (rho/M) lambda_k) over the
    // eigenvalues of the smaller Gram matrix. Throws validation_error if H.cols() != M.
    double capacity(const ComplexMatrix &channel, const CapacityParams &params);

    // Number of singular values above rel_tol * sigma_max; 0 for the zero matrix
    std::size_t effective_rank(const ComplexMatrix &channel, double rel_tol);

    // Thread count for Monte Carlo loops; results never depend on it
    struct Execution
    {
        unsigned workers = 1; // 0 selects hardware concurrency
    };

    // Mean and standard error of capacity over `trials` channel draws. Trial t reads stream
    // {base.master_seed, base.stream_index + t}. With infinite K the channel is deterministic:
    // it is evaluated once and reported with stderr = 0.
    CapacityResult ergodic_capacity(const ChannelSpec &channel, const std::optional<StateMatrix> &state,
                                    const CapacityParams &params, std::size_t trials, RandomStream base,
                                    Execution exec = {});
}

#endif
