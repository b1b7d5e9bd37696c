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

#ifndef RMIMO_SWEEP_HPP
#define RMIMO_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "optimizer.hpp"

namespace rmimo
{
    // One point of a capacity curve
    struct SweepRecord
    {
        std::string mode;
        std::string sweep_var; // "eta" or "k_factor"
        double sweep_value = 0.0;
        std::string system;    // "static" or "reconfigurable"
        double capacity_mean_bits = 0.0;
        double capacity_stderr_bits = 0.0;
        std::size_t trials = 0;
        double snr_db = 0.0;
        std::size_t tx_count = 0;
        std::size_t rx_count = 0;
        double eta = 0.0;
        double k_factor = 0.0; // +inf for pure LoS
        std::uint64_t master_seed = 0;
    };

    // fig1_eta_sweep: pure LoS, one point per eta. fig6_k_sweep: Rician at the configured eta,
    // one point per K. Each point yields a static record and, unless state_mode is none, a
    // reconfigurable record. Point p, trial t draws from stream (master_seed, (p << 32) | t) and
    // both systems see the same draws.
    std::vector<SweepRecord> run_sweep(const ExperimentConfig &config);

    // Composite pattern of the default antenna steered at config.beam_directions
    std::vector<std::pair<double, double>> run_pattern(const ExperimentConfig &config);

    // Exhaustive state search on the LoS channel at config.eta. Alphabet size comes from
    // optimized(L), defaulting to 2.
    SearchResult run_optimize(const ExperimentConfig &config);

    void write_pattern_csv(std::ostream &out, const std::vector<std::pair<double, double>> &cut);
    void write_optimize_csv(std::ostream &out, const SearchResult &result);
}

#endif
