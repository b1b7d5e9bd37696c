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

// Command-line front end:
//   rmimo run <config>       execute the configured mode, write CSV to output_path
//   rmimo pattern <config>   antenna pattern cut (azimuth_deg,gain_dbi) to stdout
//   rmimo optimize <config>  best state matrix (i,j,re,im) and capacity_bits to stdout
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rmimo/config.hpp"
#include "rmimo/errors.hpp"
#include "rmimo/records.hpp"
#include "rmimo/sweep.hpp"

namespace
{
    constexpr int exit_config_error = 1;
    constexpr int exit_runtime_error = 2;

    struct Overrides
    {
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;
        std::optional<std::string> out;
        std::optional<unsigned> workers;
    };

    rmimo::ExperimentConfig load(const std::string &path, const Overrides &o)
    {
        rmimo::ExperimentConfig config = rmimo::load_config(path);
        if (o.seed)
            config.master_seed = *o.seed;
        if (o.trials)
            config.trials = *o.trials;
        if (o.out)
            config.output_path = *o.out;
        if (o.workers)
            config.workers = *o.workers;
        rmimo::validate_config(config);
        return config;
    }

    template <typename Writer>
    void emit(const std::optional<std::string> &path, Writer &&writer)
    {
        if (!path)
        {
            writer(std::cout);
            return;
        }
        std::ofstream out(*path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw rmimo::io_error("cannot open '" + *path + "' for writing");
        writer(out);
        if (!out.flush())
            throw rmimo::io_error("failed writing '" + *path + "'");
    }

    void run_command(const rmimo::ExperimentConfig &config)
    {
        using rmimo::Mode;
        switch (config.mode)
        {
        case Mode::fig1_eta_sweep:
        case Mode::fig6_k_sweep: {
            const auto records = rmimo::run_sweep(config);
            rmimo::write_records(records, config.output_path);
            std::cout << "wrote " << records.size() << " records to " << config.output_path << '\n';
            break;
        }
        case Mode::pattern_dump: {
            const auto cut = rmimo::run_pattern(config);
            emit(config.output_path, [&](std::ostream &os) { rmimo::write_pattern_csv(os, cut); });
            break;
        }
        case Mode::optimize: {
            const auto result = rmimo::run_optimize(config);
            emit(config.output_path, [&](std::ostream &os) { rmimo::write_optimize_csv(os, result); });
            break;
        }
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Capacity experiments for reconfigurable-antenna mmWave MIMO links"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides overrides;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("config", config_path, "Experiment config file")->required();
        sub->add_option("--seed", overrides.seed, "Override master_seed");
        sub->add_option("--trials", overrides.trials, "Override trials");
        sub->add_option("--out", overrides.out, "Override output_path");
        sub->add_option("--workers", overrides.workers, "Worker threads (0 = all cores)");
    };

    auto *run = app.add_subcommand("run", "Execute the configured mode and write CSV to output_path");
    auto *pattern = app.add_subcommand("pattern", "Dump the antenna pattern cut as azimuth_deg,gain_dbi");
    auto *optimize = app.add_subcommand("optimize", "Search the state matrix and print i,j,re,im and capacity_bits");
    for (auto *sub : {run, pattern, optimize})
        add_common(sub);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config_error;
    }

    try
    {
        const rmimo::ExperimentConfig config = load(config_path, overrides);
        if (run->parsed())
            run_command(config);
        else if (pattern->parsed())
        {
            const auto cut = rmimo::run_pattern(config);
            emit(overrides.out, [&](std::ostream &os) { rmimo::write_pattern_csv(os, cut); });
        }
        else
        {
            const auto result = rmimo::run_optimize(config);
            emit(overrides.out, [&](std::ostream &os) { rmimo::write_optimize_csv(os, result); });
        }
    }
    catch (const rmimo::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
    return 0;
}
