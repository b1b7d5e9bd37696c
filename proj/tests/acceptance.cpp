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

// Exit criteria for the toolkit. Each criterion prints one PASS/FAIL line with its elapsed
// time; the process fails if any criterion fails or overruns its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rmimo/antenna.hpp"
#include "rmimo/capacity.hpp"
#include "rmimo/channel.hpp"
#include "rmimo/optimizer.hpp"
#include "rmimo/records.hpp"
#include "rmimo/reconfig.hpp"
#include "rmimo/sweep.hpp"

using namespace rmimo;

namespace
{
    // Collects failed checks for one criterion
    class Checks
    {
    public:
        void expect(bool ok, const std::string &what)
        {
            if (!ok)
                failures_.push_back(what);
        }

        void near(double got, double want, double tol, const std::string &what)
        {
            std::ostringstream msg;
            msg.precision(12);
            msg << what << ": got " << got << ", want " << want << " +/- " << tol;
            expect(std::abs(got - want) <= tol, msg.str());
        }

        const std::vector<std::string> &failures() const { return failures_; }

    private:
        std::vector<std::string> failures_;
    };

    struct Criterion
    {
        std::string name;
        double budget_seconds;
        std::function<void(Checks &)> body;
    };

    const SweepRecord &find(const std::vector<SweepRecord> &records, double value, const std::string &system)
    {
        for (const auto &r : records)
            if (r.sweep_value == value && r.system == system)
                return r;
        throw std::runtime_error("missing record");
    }

    double combined(const SweepRecord &a, const SweepRecord &b)
    {
        return std::hypot(a.capacity_stderr_bits, b.capacity_stderr_bits);
    }

    void fig1_endpoints(Checks &c)
    {
        ExperimentConfig config = parse_config("mode = fig1_eta_sweep\nM = 4\nN = 4\nsnr_db = 10\n"
                                               "sweep_values = 1, 2, 4, 8, 16, 1000000");
        const auto records = run_sweep(config);
        c.expect(records.size() == 6, "one record per eta");

        c.near(find(records, 1.0, "static").capacity_mean_bits, 4.0 * std::log2(11.0), 1e-6, "C(eta = 1)");
        c.near(find(records, 1e6, "static").capacity_mean_bits, std::log2(41.0), 1e-4, "C(eta = 1e6)");

        const double grid[] = {1, 2, 4, 8, 16};
        for (int k = 1; k < 5; ++k)
        {
            const double prev = find(records, grid[k - 1], "static").capacity_mean_bits;
            const double next = find(records, grid[k], "static").capacity_mean_bits;
            c.expect(next <= prev, "non-increasing from eta = " + std::to_string(grid[k - 1]));
        }
    }

    void fig6_endpoints(Checks &c)
    {
        ExperimentConfig config = parse_config("mode = fig6_k_sweep\nM = 2\nN = 2\nsnr_db = 10\ntrials = 10000\n"
                                               "sweep_values = 0, 0.1, 1, 10, 100, inf\nstate_mode = canonical_2x2");
        const auto records = run_sweep(config);

        c.near(find(records, INFINITY, "static").capacity_mean_bits, std::log2(21.0), 1e-6, "static at K = inf");
        c.near(find(records, INFINITY, "reconfigurable").capacity_mean_bits, 2.0 * std::log2(11.0), 1e-6,
               "reconfigurable at K = inf");

        const double ks[] = {0.1, 1, 10, 100};
        for (int k = 1; k < 4; ++k)
        {
            const auto &a = find(records, ks[k - 1], "static");
            const auto &b = find(records, ks[k], "static");
            c.expect(b.capacity_mean_bits <= a.capacity_mean_bits + 3.0 * combined(a, b),
                     "static non-increasing from K = " + std::to_string(ks[k - 1]));
        }

        const auto &s100 = find(records, 100, "static");
        const auto &r100 = find(records, 100, "reconfigurable");
        c.expect(r100.capacity_mean_bits - s100.capacity_mean_bits > 3.0 * combined(s100, r100),
                 "reconfigurable above static at K = 100");

        const auto &s0 = find(records, 0, "static");
        const auto &r0 = find(records, 0, "reconfigurable");
        c.expect(std::abs(r0.capacity_mean_bits - s0.capacity_mean_bits) <= 3.0 * combined(s0, r0),
                 "systems coincide at K = 0");
    }

    void reconfiguration_algebra(Checks &c)
    {
        std::mt19937_64 rng(31337);
        bool exact = true, norm_ok = true;
        for (int rep = 0; rep < 100; ++rep)
        {
            const Eigen::Index n = 1 + rep % 8, m = 1 + (rep / 8) % 8;
            const ComplexMatrix h(oracle::gaussian(rng, n, m));
            const ComplexMatrix g(oracle::random_phases(rng, n, m));
            const ComplexMatrix hg = apply_state(h, StateMatrix(g, UnitModulus{}));
            for (std::size_t i = 0; i < hg.rows(); ++i)
                for (std::size_t j = 0; j < hg.cols(); ++j)
                    exact = exact && hg(i, j) == h(i, j) * g(i, j);
            norm_ok = norm_ok && std::abs(hg.frobenius_norm() - h.frobenius_norm()) < 1e-12;
        }
        c.expect(exact, "entrywise product exact");
        c.expect(norm_ok, "Frobenius norm preserved within 1e-12");

        const auto ones = ComplexMatrix::ones(2, 2);
        const auto shaped = apply_state(ones, canonical_state_2x2());
        c.expect(effective_rank(shaped, 1e-6) == 2, "all-ones with canonical state has rank 2");
        for (double rho : {1.0, 10.0})
        {
            const CapacityParams p(rho, 2);
            c.near(capacity(shaped, p) - capacity(ones, p), std::log2((1 + rho) * (1 + rho) / (1 + 2 * rho)), 1e-9,
                   "capacity gain at rho = " + std::to_string(rho));
        }
    }

    double naive_best_2x2(const Eigen::Matrix2cd &h, unsigned levels, double rho)
    {
        double best = -1.0;
        for (unsigned c = 0; c < levels * levels * levels * levels; ++c)
        {
            unsigned digits = c;
            Eigen::Matrix2cd hg;
            for (int k = 0; k < 4; ++k)
            {
                hg(k / 2, k % 2) = h(k / 2, k % 2) * std::polar(1.0, 2.0 * M_PI * double(digits % levels) / levels);
                digits /= levels;
            }
            best = std::max(best, oracle::capacity_2x2(hg, rho));
        }
        return best;
    }

    void optimizer_oracle(Checks &c)
    {
        std::mt19937_64 rng(2718);
        const CapacityParams p(10.0, 2);
        for (int rep = 0; rep < 20; ++rep)
        {
            const Eigen::Matrix2cd h = oracle::gaussian(rng, 2, 2);
            const auto r = exhaustive_state_search(ComplexMatrix(h), PhaseAlphabet(4), p);
            c.near(r.best_capacity, naive_best_2x2(h, 4, 10.0), 1e-9, "channel " + std::to_string(rep));
        }

        const auto ones = ComplexMatrix::ones(2, 2);
        const auto r = exhaustive_state_search(ones, PhaseAlphabet(2), p);
        c.near(capacity(apply_state(ones, canonical_state_2x2()), p), r.best_capacity, 1e-9,
               "canonical state attains the binary optimum");
    }

    void channel_statistics(Checks &c)
    {
        const auto geometry = geometry_for_eta(0.005, 10.0, 2, 2, 3.0);
        for (double k : {0.0, 1.0, 10.0})
        {
            const ChannelSpec spec{geometry, RicianSpec::finite(k)};
            std::vector<std::vector<double>> power(4);
            for (std::uint64_t t = 0; t < 10000; ++t)
            {
                const auto h = draw_channel(spec, {2026, t});
                for (int e = 0; e < 4; ++e)
                    power[e].push_back(std::norm(h(e / 2, e % 2)));
            }
            for (int e = 0; e < 4; ++e)
            {
                const auto s = oracle::mean_se(power[e]);
                c.near(s.mean, 1.0, 3.0 * s.se, "E|h|^2 at K = " + std::to_string(k) + ", entry " + std::to_string(e));
            }
        }

        for (std::size_t n : {2u, 4u, 8u})
        {
            const auto h = los_channel(geometry_for_eta(0.005, 10.0, n, n, 1.0)).eigen();
            const Eigen::MatrixXcd g = h.adjoint() * h;
            double off = 0.0;
            for (Eigen::Index i = 0; i < g.rows(); ++i)
                for (Eigen::Index j = 0; j < g.cols(); ++j)
                    if (i != j)
                        off = std::max(off, std::abs(g(i, j)));
            c.expect(off < 1e-9, "Gram off-diagonals below 1e-9 for N = " + std::to_string(n));
        }
    }

    void antenna_pattern(Checks &c)
    {
        const auto model = default_model();
        for (std::size_t f = 0; f < model.feed_count(); ++f)
            c.near(feed_gain(model, f, model.feed_directions()[f]), 30.0, 0.01, "peak of feed " + std::to_string(f));
        c.expect(model.side_lobe_floor_dbi() == 18.0, "side-lobe floor is 18 dBi");
        c.expect(feed_gain(model, 0, 90.0) == 18.0, "feed 0 at 90 deg sits on the floor");
        c.expect(model.coverage_span() == 120.0, "coverage span is 120 deg");

        const auto dual = select_feeds(model, {30.0, 120.0}).selection;
        for (double dir : {30.0, 120.0})
        {
            const double peak = composite_gain(model, dual, dir);
            c.near(peak, 30.0, 0.1, "dual-beam peak at " + std::to_string(dir));
            c.expect(peak >= composite_gain(model, dual, dir - 0.1) && peak >= composite_gain(model, dual, dir + 0.1),
                     "dual-beam local maximum at " + std::to_string(dir));
        }
    }

    void determinism(Checks &c)
    {
        const std::string text = "mode = fig6_k_sweep\nsweep_values = 0, 1, 10, inf\nstate_mode = canonical_2x2\n"
                                 "trials = 10000\nmaster_seed = 12345";
        auto serial = parse_config(text);
        auto parallel = serial;
        parallel.workers = 8;

        auto bytes = [](const ExperimentConfig &config) {
            std::ostringstream out;
            write_records(out, run_sweep(config));
            return out.str();
        };
        const std::string first = bytes(serial);
        c.expect(first == bytes(serial), "two serial runs are byte-identical");
        c.expect(first == bytes(parallel), "1 worker and 8 workers are byte-identical");

        auto fig1 = parse_config("mode = fig1_eta_sweep\nM = 4\nN = 4\nstate_mode = optimized(2)");
        auto fig1_parallel = fig1;
        fig1_parallel.workers = 8;
        c.expect(bytes(fig1) == bytes(fig1_parallel), "fig1 with optimized states is byte-identical across workers");
    }
}

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1 fig1 endpoints and monotone eta curve", 1.0, fig1_endpoints},
        {"AC2 fig6 endpoints and Rician trends", 30.0, fig6_endpoints},
        {"AC3 reconfiguration algebra", 1.0, reconfiguration_algebra},
        {"AC4 optimizer matches naive enumeration", 10.0, optimizer_oracle},
        {"AC5 channel statistics and LoS orthogonality", 30.0, channel_statistics},
        {"AC6 antenna pattern properties", 1.0, antenna_pattern},
        {"AC7 determinism across runs and workers", 60.0, determinism},
    };

    int failed = 0;
    for (const auto &criterion : criteria)
    {
        Checks checks;
        const auto start = std::chrono::steady_clock::now();
        try
        {
            criterion.body(checks);
        }
        catch (const std::exception &e)
        {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > criterion.budget_seconds)
            checks.expect(false, "took " + std::to_string(elapsed) + " s, budget " +
                                     std::to_string(criterion.budget_seconds) + " s");

        const bool ok = checks.failures().empty();
        failed += ok ? 0 : 1;
        std::printf("[%s] %s (%.3f s)\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), elapsed);
        for (const auto &f : checks.failures())
            std::printf("       %s\n", f.c_str());
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
