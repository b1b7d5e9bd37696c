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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rmimo/antenna.hpp"
#include "rmimo/errors.hpp"

using namespace rmimo;

namespace
{
    BeamSelection single(std::size_t feed) { return {{feed}, {0.0}}; }
}

TEST_CASE("default model")
{
    const auto m = default_model();
    CHECK(m.feed_count() == 5);
    CHECK(m.peak_gain_dbi() == 30.0);
    CHECK(m.sll_db() == 12.0);
    CHECK(m.coverage_span() == 120.0);
    CHECK(m.side_lobe_floor_dbi() == 18.0);
    CHECK(m.beamwidth_3db() == doctest::Approx(6.4229).epsilon(1e-4));
    CHECK(m.band_ghz() == std::pair(50.0, 70.0));
    CHECK(m.lens().lens_diameter_mm == 65.0);
    CHECK(m.lens().dielectric_constant == 2.2);
}

TEST_CASE("model validation")
{
    CHECK_THROWS_AS(AntennaModel({}, 30, 12, 6), validation_error);
    CHECK_THROWS_AS(AntennaModel({30, 30}, 30, 12, 6), validation_error);
    CHECK_THROWS_AS(AntennaModel({60, 30}, 30, 12, 6), validation_error);
    CHECK_THROWS_AS(AntennaModel({190}, 30, 12, 6), validation_error);
    CHECK_THROWS_AS(AntennaModel({30}, 30, 0, 6), validation_error);
    CHECK_THROWS_AS(AntennaModel({30}, 30, 12, -1), validation_error);
}

TEST_CASE("feed_gain: peak, floor and half-power points")
{
    const auto m = default_model();
    CHECK(feed_gain(m, 0, 30.0) == 30.0);
    CHECK(feed_gain(m, 0, 90.0) == 18.0);
    for (std::size_t f = 0; f < m.feed_count(); ++f)
    {
        const double center = m.feed_directions()[f];
        const double half = m.beamwidth_3db() / 2.0;
        CHECK(std::abs(feed_gain(m, f, center + half) - 27.0) < 1e-9);
        CHECK(std::abs(feed_gain(m, f, center - half) - 27.0) < 1e-9);
    }
    CHECK_THROWS_AS(feed_gain(m, 5, 30.0), validation_error);
    CHECK_THROWS_AS(feed_gain(m, 0, 360.0), validation_error);
    CHECK_THROWS_AS(feed_gain(m, 0, -1.0), validation_error);
}

TEST_CASE("feed_gain pattern properties")
{
    const auto m = default_model();
    for (std::size_t f = 0; f < m.feed_count(); ++f)
    {
        const double center = m.feed_directions()[f];
        double best = -1e9, best_az = -1.0;
        for (int k = 0; k < 3600; ++k)
        {
            const double az = k * 0.1;
            const double g = feed_gain(m, f, az);
            if (g > best)
            {
                best = g;
                best_az = az;
            }
            if (std::abs(az - center) > 3.0 * m.beamwidth_3db())
                CHECK(g == m.side_lobe_floor_dbi());
        }
        CHECK(std::abs(best - 30.0) < 0.01);
        CHECK(std::abs(best_az - center) < 1e-9);

        auto wrap = [](double az) { return std::fmod(az + 360.0, 360.0); };
        for (double x : {0.3, 1.7, 3.0, 5.5, 12.0, 40.0, 170.0})
            CHECK(std::abs(feed_gain(m, f, wrap(center + x)) - feed_gain(m, f, wrap(center - x))) < 1e-9);
    }
}

TEST_CASE("composite_gain of the 30/120 dual beam")
{
    const auto m = default_model();
    const BeamSelection dual{{0, 3}, {0.0, 0.0}};

    for (double dir : {30.0, 120.0})
    {
        const double peak = composite_gain(m, dual, dir);
        CHECK(std::abs(peak - 30.0) < 0.1);
        CHECK(peak >= composite_gain(m, dual, dir - 0.1));
        CHECK(peak >= composite_gain(m, dual, dir + 0.1));
    }
    CHECK(composite_gain(m, dual, 75.0) <= 18.0 + 3.0);
}

TEST_CASE("single-feed composite equals feed_gain")
{
    const auto m = default_model();
    for (std::size_t f = 0; f < m.feed_count(); ++f)
        for (int k = 0; k < 3600; k += 7)
            CHECK(composite_gain(m, single(f), k * 0.1) == feed_gain(m, f, k * 0.1));
}

TEST_CASE("widely separated beams keep their peaks")
{
    const AntennaModel m({10.0, 60.0, 100.0, 170.0}, 30.0, 12.0, 6.0);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
        {
            const BeamSelection sel{{a, b}, {0.0, 0.0}};
            CHECK(std::abs(composite_gain(m, sel, m.feed_directions()[a]) - 30.0) < 0.1);
            CHECK(std::abs(composite_gain(m, sel, m.feed_directions()[b]) - 30.0) < 0.1);
        }
}

TEST_CASE("selection validation")
{
    const auto m = default_model();
    CHECK_THROWS_AS(composite_gain(m, {{}, {}}, 30.0), validation_error);
    CHECK_THROWS_AS(composite_gain(m, {{7}, {0.0}}, 30.0), validation_error);
    CHECK_THROWS_AS(composite_gain(m, {{3, 1}, {0.0, 0.0}}, 30.0), validation_error);
    CHECK_THROWS_AS(composite_gain(m, {{1}, {}}, 30.0), validation_error);
    CHECK_THROWS_AS(composite_gain(m, {{1}, {7.0}}, 30.0), validation_error);
}

TEST_CASE("select_feeds")
{
    const auto m = default_model();

    const auto dual = select_feeds(m, {30.0, 120.0});
    CHECK(dual.selection.excited_feeds == std::vector<std::size_t>{0, 3});
    CHECK(dual.pointing_errors_deg == std::vector<double>{0.0, 0.0});
    CHECK(dual.selection.phases == std::vector<double>{0.0, 0.0});

    const auto off = select_feeds(m, {95.0});
    CHECK(off.selection.excited_feeds == std::vector<std::size_t>{2});
    CHECK(off.pointing_errors_deg[0] == doctest::Approx(5.0));

    const auto reversed = select_feeds(m, {150.0, 60.0});
    CHECK(reversed.selection.excited_feeds == std::vector<std::size_t>{1, 4});
    CHECK(reversed.feed_for_direction == std::vector<std::size_t>{4, 1});

    CHECK_THROWS_AS(select_feeds(m, {10.0}), coverage_error);
    CHECK_THROWS_AS(select_feeds(m, {170.0}), coverage_error);
    CHECK_NOTHROW(select_feeds(m, {25.0}));
    CHECK_THROWS_AS(select_feeds(m, {88.0, 92.0}), conflict_error);
}

TEST_CASE("state_entry")
{
    const auto m = default_model();
    const auto beam = select_feeds(m, {30.0}).selection;

    CHECK(std::abs(state_entry(m, beam, 30.0, std::numbers::pi) - cplx(-1.0, 0.0)) < 1e-12);
    CHECK(state_entry(m, beam, 30.0, 0.0) == cplx(1.0, 0.0));

    // exactly half a beamwidth off boresight is the 3 dB point
    const double half = m.beamwidth_3db() / 2.0;
    CHECK(std::abs(std::abs(state_entry(m, beam, 30.0 + half, 0.0)) - std::pow(10.0, -3.0 / 20.0)) < 1e-3);

    // 3.2 deg: 30 - 12 (3.2 / bw)^2 dB, converted to amplitude
    const double x = 3.2 / m.beamwidth_3db();
    CHECK(std::abs(state_entry(m, beam, 33.2, 0.0)) == doctest::Approx(std::pow(10.0, -12.0 * x * x / 20.0)).epsilon(1e-12));

    CHECK_THROWS_AS(state_entry(m, beam, 30.0, 2.0 * std::numbers::pi), validation_error);
    CHECK_THROWS_AS(state_entry(m, beam, 30.0, -0.1), validation_error);
}

TEST_CASE("state_entry modulus is at most one, reaching one only on boresight")
{
    const auto m = default_model();
    const BeamSelection dual{{0, 3}, {0.0, 0.0}};
    for (int k = 0; k < 3600; ++k)
    {
        const double az = k * 0.1;
        const double a = std::abs(state_entry(m, dual, az, 1.0));
        CHECK(a <= 1.0);
        if (az == 30.0 || az == 120.0)
            CHECK(a == 1.0);
        else
            CHECK(a < 1.0);
    }
}

TEST_CASE("pattern_cut covers [0, 360) at 0.1 deg")
{
    const auto m = default_model();
    const auto cut = pattern_cut(m, select_feeds(m, {30.0, 120.0}).selection);
    REQUIRE(cut.size() == 3600);
    CHECK(cut.front().first == 0.0);
    CHECK(cut.back().first == doctest::Approx(359.9));
    CHECK(cut[300].first == 30.0);
    CHECK(std::abs(cut[300].second - 30.0) < 0.1);
}
