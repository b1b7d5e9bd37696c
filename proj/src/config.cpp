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

#include "rmimo/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "rmimo/errors.hpp"

namespace rmimo
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        double parse_real(const std::string &key, std::string_view token)
        {
            token = trim(token);
            double value = 0.0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || end != token.data() + token.size() || token.empty() || std::isnan(value))
                throw config_error(key, "expected a number, got '" + std::string(token) + "'");
            return value;
        }

        template <typename Int>
        Int parse_integer(const std::string &key, std::string_view token)
        {
            token = trim(token);
            Int value = 0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || end != token.data() + token.size() || token.empty())
                throw config_error(key, "expected a non-negative integer, got '" + std::string(token) + "'");
            return value;
        }

        std::vector<double> parse_list(const std::string &key, std::string_view text)
        {
            std::vector<double> values;
            std::size_t start = 0;
            while (true)
            {
                const std::size_t comma = text.find(',', start);
                values.push_back(parse_real(key, text.substr(start, comma - start)));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            return values;
        }

        Mode parse_mode(std::string_view token)
        {
            for (Mode m : {Mode::fig1_eta_sweep, Mode::fig6_k_sweep, Mode::pattern_dump, Mode::optimize})
                if (token == to_string(m))
                    return m;
            throw config_error("mode", "unknown mode '" + std::string(token) + "'");
        }

        StateMode parse_state_mode(std::string_view token)
        {
            if (token == "none")
                return NoState{};
            if (token == "canonical_2x2")
                return CanonicalState{};

            constexpr std::string_view prefix = "optimized(";
            if (token.starts_with(prefix) && token.ends_with(")"))
            {
                const auto inner = token.substr(prefix.size(), token.size() - prefix.size() - 1);
                const unsigned levels = parse_integer<unsigned>("state_mode", inner);
                return OptimizedState{levels};
            }
            throw config_error("state_mode", "expected none, canonical_2x2 or optimized(L), got '" + std::string(token) + "'");
        }

        const std::set<std::string, std::less<>> known_keys = {
            "mode", "snr_db", "M", "N", "wavelength", "R", "eta", "sweep_values", "trials",
            "master_seed", "state_mode", "beam_directions", "workers", "output_path"};
    }

    std::string_view to_string(Mode mode) noexcept
    {
        switch (mode)
        {
        case Mode::fig1_eta_sweep:
            return "fig1_eta_sweep";
        case Mode::fig6_k_sweep:
            return "fig6_k_sweep";
        case Mode::pattern_dump:
            return "pattern_dump";
        case Mode::optimize:
            return "optimize";
        }
        return "unknown";
    }

    std::string to_string(const StateMode &mode)
    {
        if (std::holds_alternative<NoState>(mode))
            return "none";
        if (std::holds_alternative<CanonicalState>(mode))
            return "canonical_2x2";
        return "optimized(" + std::to_string(std::get<OptimizedState>(mode).levels) + ")";
    }

    std::vector<double> default_sweep_values(Mode mode)
    {
        switch (mode)
        {
        case Mode::fig1_eta_sweep:
            return {1.0, 2.0, 4.0, 8.0, 16.0};
        case Mode::fig6_k_sweep:
            return {0.0, 0.1, 1.0, 10.0, 100.0, std::numeric_limits<double>::infinity()};
        default:
            return {};
        }
    }

    void validate_config(const ExperimentConfig &c)
    {
        if (!std::isfinite(c.snr_db))
            throw config_error("snr_db", "must be finite");
        if (c.tx_count == 0)
            throw config_error("M", "must be at least 1");
        if (c.rx_count == 0)
            throw config_error("N", "must be at least 1");
        if (!(c.wavelength > 0.0) || !std::isfinite(c.wavelength))
            throw config_error("wavelength", "must be positive and finite");
        if (!(c.link_distance > 0.0) || !std::isfinite(c.link_distance))
            throw config_error("R", "must be positive and finite");
        if (c.link_distance < 100.0 * c.wavelength)
            throw config_error("R", "must be at least 100 wavelengths");
        if (!(c.eta > 0.0) || !std::isfinite(c.eta))
            throw config_error("eta", "must be positive and finite");
        if (c.trials == 0 || c.trials > std::numeric_limits<std::uint32_t>::max())
            throw config_error("trials", "must lie in [1, 2^32 - 1]");
        if (c.output_path.empty())
            throw config_error("output_path", "must not be empty");
        if (c.beam_directions.empty())
            throw config_error("beam_directions", "must not be empty");

        if (std::holds_alternative<CanonicalState>(c.state_mode) && (c.tx_count != 2 || c.rx_count != 2))
            throw config_error("state_mode", "canonical_2x2 requires M = N = 2");
        if (const auto *opt = std::get_if<OptimizedState>(&c.state_mode); opt && opt->levels < 2)
            throw config_error("state_mode", "optimized(L) needs L >= 2");

        const bool is_sweep = c.mode == Mode::fig1_eta_sweep || c.mode == Mode::fig6_k_sweep;
        if (!is_sweep)
            return;

        const auto &v = c.sweep_values;
        if (v.empty())
            throw config_error("sweep_values", "must not be empty");
        if (v.size() > std::numeric_limits<std::uint32_t>::max())
            throw config_error("sweep_values", "too many sweep points");
        for (std::size_t k = 0; k < v.size(); ++k)
        {
            if (std::isinf(v[k]))
            {
                if (c.mode != Mode::fig6_k_sweep || v[k] < 0.0)
                    throw config_error("sweep_values", "inf is only admitted in K grids");
                if (k + 1 != v.size())
                    throw config_error("sweep_values", "inf may only appear as the final K value");
            }
            if (c.mode == Mode::fig1_eta_sweep && !(v[k] > 0.0))
                throw config_error("sweep_values", "eta values must be positive");
            if (c.mode == Mode::fig6_k_sweep && !(v[k] >= 0.0))
                throw config_error("sweep_values", "K values must be non-negative");
            if (k > 0 && !(v[k] > v[k - 1]))
                throw config_error("sweep_values", "values must be strictly increasing");
        }
    }

    ExperimentConfig parse_config(std::string_view text)
    {
        std::map<std::string, std::string, std::less<>> entries;

        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw config_error("", "line " + std::to_string(line_no) + ": expected 'key = value'");

            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty())
                throw config_error("", "line " + std::to_string(line_no) + ": missing key");
            if (!known_keys.contains(key))
                throw config_error(key, "unknown key '" + key + "'");
            if (value.empty())
                throw config_error(key, "missing value");
            if (!entries.emplace(key, value).second)
                throw config_error(key, "duplicate key");
        }

        const auto mode_it = entries.find("mode");
        if (mode_it == entries.end())
            throw config_error("mode", "missing required key 'mode'");

        ExperimentConfig c;
        c.mode = parse_mode(mode_it->second);
        c.sweep_values = default_sweep_values(c.mode);

        for (const auto &[key, value] : entries)
        {
            if (key == "mode")
                continue;
            else if (key == "snr_db")
                c.snr_db = parse_real(key, value);
            else if (key == "M")
                c.tx_count = parse_integer<std::size_t>(key, value);
            else if (key == "N")
                c.rx_count = parse_integer<std::size_t>(key, value);
            else if (key == "wavelength")
                c.wavelength = parse_real(key, value);
            else if (key == "R")
                c.link_distance = parse_real(key, value);
            else if (key == "eta")
                c.eta = parse_real(key, value);
            else if (key == "sweep_values")
                c.sweep_values = parse_list(key, value);
            else if (key == "trials")
                c.trials = parse_integer<std::size_t>(key, value);
            else if (key == "master_seed")
                c.master_seed = parse_integer<std::uint64_t>(key, value);
            else if (key == "state_mode")
                c.state_mode = parse_state_mode(value);
            else if (key == "beam_directions")
                c.beam_directions = parse_list(key, value);
            else if (key == "workers")
                c.workers = parse_integer<unsigned>(key, value);
            else if (key == "output_path")
                c.output_path = value;
        }

        validate_config(c);
        return c;
    }

    ExperimentConfig load_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw config_error("", "cannot read config file '" + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_config(text.str());
    }
}
