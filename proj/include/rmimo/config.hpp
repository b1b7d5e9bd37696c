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

#ifndef RMIMO_CONFIG_HPP
#define RMIMO_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rmimo
{
    enum class Mode
    {
        fig1_eta_sweep,
        fig6_k_sweep,
        pattern_dump,
        optimize
    };

    std::string_view to_string(Mode mode) noexcept;

    struct NoState
    {
        friend bool operator==(const NoState &, const NoState &) = default;
    };
    struct CanonicalState
    {
        friend bool operator==(const CanonicalState &, const CanonicalState &) = default;
    };
    struct OptimizedState
    {
        unsigned levels = 2;
        friend bool operator==(const OptimizedState &, const OptimizedState &) = default;
    };
    using StateMode = std::variant<NoState, CanonicalState, OptimizedState>;

    std::string to_string(const StateMode &mode);

    // One experiment. Text form: one `key = value` per line, `#` starts a comment, lists are
    // comma separated. Keys:
    //   mode            fig1_eta_sweep | fig6_k_sweep | pattern_dump | optimize   (required)
    //   snr_db          transmit SNR in dB                                        (10)
    //   M, N            transmit / receive antenna counts                         (2, 2)
    //   wavelength      meters                                                    (0.005)
    //   R               link distance, meters                                     (10)
    //   eta             LoS spacing deviation for fig6_k_sweep and optimize       (1e6)
    //   sweep_values    eta grid (fig1) or K grid (fig6, may end in inf)          (per mode)
    //   trials          Monte Carlo trials per point                              (10000)
    //   master_seed     unsigned 64-bit                                           (42)
    //   state_mode      none | canonical_2x2 | optimized(L)                       (none)
    //   beam_directions azimuths in degrees for pattern_dump                      (30, 120)
    //   workers         threads, 0 = all cores; never changes results             (1)
    //   output_path     CSV written by `run`                                      (results.csv)
    struct ExperimentConfig
    {
        Mode mode = Mode::fig6_k_sweep;
        double snr_db = 10.0;
        std::size_t tx_count = 2;
        std::size_t rx_count = 2;
        double wavelength = 0.005;
        double link_distance = 10.0;
        double eta = 1e6;
        std::vector<double> sweep_values;
        std::size_t trials = 10000;
        std::uint64_t master_seed = 42;
        StateMode state_mode = NoState{};
        std::vector<double> beam_directions = {30.0, 120.0};
        unsigned workers = 1;
        std::string output_path = "results.csv";
    };

    std::vector<double> default_sweep_values(Mode mode);

    // Throws config_error naming the key for unknown/duplicate keys, unparsable values and
    // violated invariants; a missing `mode` is reported under "mode".
    ExperimentConfig parse_config(std::string_view text);

    ExperimentConfig load_config(const std::string &path);

    // Re-checks every invariant; used after command-line overrides are applied
    void validate_config(const ExperimentConfig &config);
}

#endif
