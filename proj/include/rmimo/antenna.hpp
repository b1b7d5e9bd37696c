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

#ifndef RMIMO_ANTENNA_HPP
#define RMIMO_ANTENNA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "complex_matrix.hpp"

namespace rmimo
{
    // Descriptive data about the physical lens antenna. Not used by any computation.
    struct LensMetadata
    {
        double lens_diameter_mm = 65.0;
        double dielectric_constant = 2.2;
        double feed_length_mm = 25.0;
        double feed_width_mm = 5.0;
        std::string lens_material = "Teflon";
        std::string feed_type = "tapered slot";
    };

    // Azimuth-only far-field model of a multi-beam lens antenna. Each feed produces a pencil beam
    // whose gain in dB falls off quadratically from its boresight down to a common side-lobe floor.
    class AntennaModel
    {
    public:
        // Throws validation_error: directions must be strictly increasing in [0, 180] deg,
        // sll_db and beamwidth_3db positive, band ordered.
        AntennaModel(std::vector<double> feed_directions_deg, double peak_gain_dbi, double sll_db,
                     double beamwidth_3db_deg, std::pair<double, double> band_ghz = {50.0, 70.0},
                     LensMetadata lens = {});

        std::size_t feed_count() const noexcept { return feed_directions_.size(); }
        const std::vector<double> &feed_directions() const noexcept { return feed_directions_; }
        double peak_gain_dbi() const noexcept { return peak_gain_dbi_; }
        double sll_db() const noexcept { return sll_db_; }
        double beamwidth_3db() const noexcept { return beamwidth_3db_; }
        std::pair<double, double> band_ghz() const noexcept { return band_ghz_; }
        const LensMetadata &lens() const noexcept { return lens_; }

        double side_lobe_floor_dbi() const noexcept { return peak_gain_dbi_ - sll_db_; }
        double coverage_span() const noexcept { return feed_directions_.back() - feed_directions_.front(); }

    private:
        std::vector<double> feed_directions_;
        double peak_gain_dbi_;
        double sll_db_;
        double beamwidth_3db_;
        std::pair<double, double> band_ghz_;
        LensMetadata lens_;
    };

    // 3 dB beamwidth of a symmetric pencil beam with the given gain, from the Kraus estimate
    // G ~ 41253 / theta^2 (theta in degrees)
    double kraus_beamwidth_deg(double gain_dbi);

    // Five feeds at 30, 60, ..., 150 deg, 30 dBi, 12 dB SLL, Kraus beamwidth (~6.42 deg)
    AntennaModel default_model();

    struct BeamSelection
    {
        std::vector<std::size_t> excited_feeds; // strictly increasing feed indices
        std::vector<double> phases;             // per excited feed, radians in [0, 2*pi)
    };

    // Throws validation_error if the selection is empty, out of range, unsorted or has bad phases
    void check_selection(const AntennaModel &model, const BeamSelection &selection);

    // Gain of one feed in dBi at an azimuth in [0, 360)
    double feed_gain(const AntennaModel &model, std::size_t feed_index, double azimuth_deg);

    // Pattern of several simultaneously excited feeds in dBi: main lobes add in power, the side-lobe
    // floor bounds the result from below once. A single-feed selection equals feed_gain.
    double composite_gain(const AntennaModel &model, const BeamSelection &selection, double azimuth_deg);

    struct FeedAssignment
    {
        BeamSelection selection;
        std::vector<double> pointing_errors_deg; // per desired direction, in input order
        std::vector<std::size_t> feed_for_direction;
    };

    // Nearest-feed assignment. Throws coverage_error if a direction lies more than one beamwidth
    // outside the feed span, conflict_error if two directions map to one feed.
    FeedAssignment select_feeds(const AntennaModel &model, const std::vector<double> &desired_directions_deg);

    // State coefficient toward a receiver: sqrt(composite gain / peak gain), capped at 1, with the
    // given phase. Phase in [0, 2*pi).
    cplx state_entry(const AntennaModel &model, const BeamSelection &selection, double rx_azimuth_deg, double phase);

    // (azimuth_deg, gain_dbi) samples over [0, 360) at the given step
    std::vector<std::pair<double, double>> pattern_cut(const AntennaModel &model, const BeamSelection &selection,
                                                       double step_deg = 0.1);
}

#endif
