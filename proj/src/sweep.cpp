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

#include "rmimo/sweep.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include "rmimo/antenna.hpp"
#include "rmimo/capacity.hpp"
#include "rmimo/channel.hpp"
#include "rmimo/errors.hpp"
#include "rmimo/records.hpp"

namespace rmimo
{
    namespace
    {
        std::optional<StateMatrix> state_for(const ExperimentConfig &config, const ComplexMatrix &los,
                                             const CapacityParams &params)
        {
            if (std::holds_alternative<CanonicalState>(config.state_mode))
                return canonical_state_2x2();
            if (const auto *opt = std::get_if<OptimizedState>(&config.state_mode))
                return exhaustive_state_search(los, PhaseAlphabet(opt->levels), params, {config.workers}).best_state;
            return std::nullopt;
        }

        RicianSpec rician_for(double k)
        {
            return std::isinf(k) ? RicianSpec::infinite() : RicianSpec::finite(k);
        }
    }

    std::vector<SweepRecord> run_sweep(const ExperimentConfig &config)
    {
        validate_config(config);
        const bool eta_sweep = config.mode == Mode::fig1_eta_sweep;
        if (!eta_sweep && config.mode != Mode::fig6_k_sweep)
            throw validation_error("run_sweep: mode " + std::string(to_string(config.mode)) + " is not a sweep");

        const CapacityParams params = CapacityParams::from_db(config.snr_db, config.tx_count);
        const Execution exec{config.workers};

        // fig6 keeps the geometry fixed, so its state is designed once against the LoS component
        std::optional<LosGeometry> fixed_geometry;
        std::optional<StateMatrix> fixed_state;
        if (!eta_sweep)
        {
            fixed_geometry = geometry_for_eta(config.wavelength, config.link_distance, config.tx_count,
                                              config.rx_count, config.eta);
            fixed_state = state_for(config, los_channel(*fixed_geometry), params);
        }

        std::vector<SweepRecord> records;
        for (std::size_t p = 0; p < config.sweep_values.size(); ++p)
        {
            const double value = config.sweep_values[p];
            const RandomStream base{config.master_seed, trial_stream_index(std::uint32_t(p), 0)};

            ChannelSpec spec = eta_sweep
                                   ? ChannelSpec{geometry_for_eta(config.wavelength, config.link_distance,
                                                                  config.tx_count, config.rx_count, value),
                                                 RicianSpec::infinite()}
                                   : ChannelSpec{*fixed_geometry, rician_for(value)};
            const std::optional<StateMatrix> state =
                eta_sweep ? state_for(config, los_channel(spec.geometry), params) : fixed_state;

            SweepRecord rec;
            rec.mode = std::string(to_string(config.mode));
            rec.sweep_var = eta_sweep ? "eta" : "k_factor";
            rec.sweep_value = value;
            rec.snr_db = config.snr_db;
            rec.tx_count = config.tx_count;
            rec.rx_count = config.rx_count;
            rec.eta = spec.geometry.eta();
            rec.k_factor = spec.rician.k_factor();
            rec.master_seed = config.master_seed;

            const CapacityResult fixed = ergodic_capacity(spec, std::nullopt, params, config.trials, base, exec);
            rec.system = "static";
            rec.capacity_mean_bits = fixed.mean_bits;
            rec.capacity_stderr_bits = fixed.stderr_bits;
            rec.trials = fixed.trials;
            records.push_back(rec);

            if (state)
            {
                const CapacityResult reconf = ergodic_capacity(spec, state, params, config.trials, base, exec);
                rec.system = "reconfigurable";
                rec.capacity_mean_bits = reconf.mean_bits;
                rec.capacity_stderr_bits = reconf.stderr_bits;
                rec.trials = reconf.trials;
                records.push_back(rec);
            }
        }
        return records;
    }

    std::vector<std::pair<double, double>> run_pattern(const ExperimentConfig &config)
    {
        const AntennaModel model = default_model();
        const FeedAssignment assignment = select_feeds(model, config.beam_directions);
        return pattern_cut(model, assignment.selection, 0.1);
    }

    SearchResult run_optimize(const ExperimentConfig &config)
    {
        validate_config(config);
        const CapacityParams params = CapacityParams::from_db(config.snr_db, config.tx_count);
        const LosGeometry geometry =
            geometry_for_eta(config.wavelength, config.link_distance, config.tx_count, config.rx_count, config.eta);

        unsigned levels = 2;
        if (const auto *opt = std::get_if<OptimizedState>(&config.state_mode))
            levels = opt->levels;
        return exhaustive_state_search(los_channel(geometry), PhaseAlphabet(levels), params, {config.workers});
    }

    void write_pattern_csv(std::ostream &out, const std::vector<std::pair<double, double>> &cut)
    {
        out << "azimuth_deg,gain_dbi\n";
        for (const auto &[az, gain] : cut)
            out << format_real(az) << ',' << format_real(gain) << '\n';
    }

    void write_optimize_csv(std::ostream &out, const SearchResult &result)
    {
        const ComplexMatrix &g = result.best_state.matrix();
        out << "i,j,re,im\n";
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                out << i << ',' << j << ',' << format_real(g(i, j).real()) << ',' << format_real(g(i, j).imag()) << '\n';
        out << "capacity_bits," << format_real(result.best_capacity) << '\n';
    }
}
