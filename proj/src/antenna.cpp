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

#include "rmimo/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rmimo/errors.hpp"

namespace rmimo
{
    namespace
    {
        // Signed angular distance theta - center folded into (-180, 180]
        double angle_offset(double theta, double center)
        {
            double d = std::fmod(theta - center, 360.0);
            if (d > 180.0)
                d -= 360.0;
            else if (d <= -180.0)
                d += 360.0;
            return d;
        }

        void check_azimuth(double azimuth_deg)
        {
            if (!(azimuth_deg >= 0.0 && azimuth_deg < 360.0))
                throw validation_error("azimuth must lie in [0, 360) degrees, got " + std::to_string(azimuth_deg));
        }

        // Main lobe without the floor
        double lobe_dbi(const AntennaModel &model, std::size_t feed, double azimuth_deg)
        {
            const double x = angle_offset(azimuth_deg, model.feed_directions()[feed]) / model.beamwidth_3db();
            return model.peak_gain_dbi() - 12.0 * x * x;
        }
    }

    AntennaModel::AntennaModel(std::vector<double> feed_directions_deg, double peak_gain_dbi, double sll_db,
                               double beamwidth_3db_deg, std::pair<double, double> band_ghz, LensMetadata lens)
        : feed_directions_(std::move(feed_directions_deg)), peak_gain_dbi_(peak_gain_dbi), sll_db_(sll_db),
          beamwidth_3db_(beamwidth_3db_deg), band_ghz_(band_ghz), lens_(std::move(lens))
    {
        if (feed_directions_.empty())
            throw validation_error("antenna model needs at least one feed");
        for (std::size_t k = 0; k < feed_directions_.size(); ++k)
        {
            const double d = feed_directions_[k];
            if (!(d >= 0.0 && d <= 180.0))
                throw validation_error("feed directions must lie in [0, 180] degrees");
            if (k > 0 && !(d > feed_directions_[k - 1]))
                throw validation_error("feed directions must be strictly increasing");
        }
        if (!std::isfinite(peak_gain_dbi_))
            throw validation_error("peak gain must be finite");
        if (!(sll_db_ > 0.0) || !std::isfinite(sll_db_))
            throw validation_error("side-lobe level must be positive");
        if (!(beamwidth_3db_ > 0.0) || !std::isfinite(beamwidth_3db_))
            throw validation_error("3 dB beamwidth must be positive");
        if (!(band_ghz_.first > 0.0 && band_ghz_.second >= band_ghz_.first))
            throw validation_error("band must satisfy 0 < low <= high");
    }

    double kraus_beamwidth_deg(double gain_dbi)
    {
        return std::sqrt(41253.0 / std::pow(10.0, gain_dbi / 10.0));
    }

    AntennaModel default_model()
    {
        constexpr double peak = 30.0;
        return AntennaModel({30.0, 60.0, 90.0, 120.0, 150.0}, peak, 12.0, kraus_beamwidth_deg(peak));
    }

    void check_selection(const AntennaModel &model, const BeamSelection &selection)
    {
        const auto &feeds = selection.excited_feeds;
        if (feeds.empty() || feeds.size() > model.feed_count())
            throw validation_error("selection must excite between 1 and N_f feeds");
        if (selection.phases.size() != feeds.size())
            throw validation_error("selection needs one phase per excited feed");
        for (std::size_t k = 0; k < feeds.size(); ++k)
        {
            if (feeds[k] >= model.feed_count())
                throw validation_error("feed index " + std::to_string(feeds[k]) + " out of range");
            if (k > 0 && feeds[k] <= feeds[k - 1])
                throw validation_error("excited feeds must be strictly increasing");
            const double p = selection.phases[k];
            if (!(p >= 0.0 && p < 2.0 * std::numbers::pi))
                throw validation_error("feed phases must lie in [0, 2*pi)");
        }
    }

    double feed_gain(const AntennaModel &model, std::size_t feed_index, double azimuth_deg)
    {
        if (feed_index >= model.feed_count())
            throw validation_error("feed index " + std::to_string(feed_index) + " out of range");
        check_azimuth(azimuth_deg);
        return std::max(model.side_lobe_floor_dbi(), lobe_dbi(model, feed_index, azimuth_deg));
    }

    double composite_gain(const AntennaModel &model, const BeamSelection &selection, double azimuth_deg)
    {
        check_selection(model, selection);
        if (selection.excited_feeds.size() == 1)
            return feed_gain(model, selection.excited_feeds.front(), azimuth_deg);
        check_azimuth(azimuth_deg);

        double linear = 0.0;
        for (std::size_t feed : selection.excited_feeds)
            linear += std::pow(10.0, lobe_dbi(model, feed, azimuth_deg) / 10.0);
        const double lobes_dbi = linear > 0.0 ? 10.0 * std::log10(linear) : -std::numeric_limits<double>::infinity();
        return std::max(model.side_lobe_floor_dbi(), lobes_dbi);
    }

    FeedAssignment select_feeds(const AntennaModel &model, const std::vector<double> &desired_directions_deg)
    {
        if (desired_directions_deg.empty())
            throw validation_error("select_feeds: no desired directions");

        const auto &dirs = model.feed_directions();
        const double lo = dirs.front() - model.beamwidth_3db();
        const double hi = dirs.back() + model.beamwidth_3db();

        FeedAssignment out;
        for (double want : desired_directions_deg)
        {
            if (!(want >= lo && want <= hi))
                throw coverage_error("direction " + std::to_string(want) + " deg is outside the covered range [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "]");

            std::size_t best = 0;
            for (std::size_t k = 1; k < dirs.size(); ++k)
                if (std::abs(dirs[k] - want) < std::abs(dirs[best] - want))
                    best = k;

            if (std::find(out.feed_for_direction.begin(), out.feed_for_direction.end(), best) !=
                out.feed_for_direction.end())
                throw conflict_error("two desired directions resolve to feed " + std::to_string(best));

            out.feed_for_direction.push_back(best);
            out.pointing_errors_deg.push_back(std::abs(dirs[best] - want));
        }

        out.selection.excited_feeds = out.feed_for_direction;
        std::sort(out.selection.excited_feeds.begin(), out.selection.excited_feeds.end());
        out.selection.phases.assign(out.selection.excited_feeds.size(), 0.0);
        return out;
    }

    cplx state_entry(const AntennaModel &model, const BeamSelection &selection, double rx_azimuth_deg, double phase)
    {
        if (!(phase >= 0.0 && phase < 2.0 * std::numbers::pi))
            throw validation_error("state phase must lie in [0, 2*pi)");
        const double gain = composite_gain(model, selection, rx_azimuth_deg);
        const double amplitude = std::min(1.0, std::pow(10.0, (gain - model.peak_gain_dbi()) / 20.0));
        return std::polar(amplitude, phase);
    }

    std::vector<std::pair<double, double>> pattern_cut(const AntennaModel &model, const BeamSelection &selection,
                                                       double step_deg)
    {
        if (!(step_deg > 0.0 && step_deg <= 360.0))
            throw validation_error("pattern step must lie in (0, 360] degrees");
        check_selection(model, selection);

        const auto samples = static_cast<std::size_t>(std::ceil(360.0 / step_deg - 1e-9));
        std::vector<std::pair<double, double>> cut;
        cut.reserve(samples);
        for (std::size_t k = 0; k < samples; ++k)
        {
            const double az = double(k) * step_deg;
            if (az >= 360.0)
                break;
            cut.emplace_back(az, composite_gain(model, selection, az));
        }
        return cut;
    }
}
