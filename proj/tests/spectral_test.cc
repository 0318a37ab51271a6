// Copyright 2026 The cqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqa/spectral.hpp"

#include <cmath>
#include <numeric>

#include "gtest/gtest.h"

#include "cqa/drivers.hpp"
#include "cqa/encodings.hpp"
#include "oracles.hpp"

using namespace cqa;

namespace {

std::vector<int> ring(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Magnetization of the dense ground state of XY - B Sum Z (non-degenerate B only).
double oracle_ground_mz(int n, double b) {
    std::string zeros(static_cast<std::size_t>(n), 'I');
    Eigen::MatrixXcd h = oracle::dense(build_xy_cycle(n, ring(n)));
    Eigen::MatrixXcd mz = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
    for (int k = 0; k < n; ++k) {
        std::string s = zeros;
        s[k] = 'Z';
        mz += oracle::dense_string(s);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h - b * mz);
    EXPECT_GT(es.eigenvalues()[1] - es.eigenvalues()[0], 1e-8) << "degenerate at B=" << b;
    Eigen::VectorXcd v = es.eigenvectors().col(0);
    return v.dot(mz * v).real();
}

}  // namespace

TEST(eigh, matches_reference_solver) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Random(12, 12);
    Eigen::MatrixXcd h = a + a.adjoint();
    auto es = eigh(h);
    auto ref = oracle::dense_eigenvalues(h);
    ASSERT_LT((es.values - ref).norm(), 1e-10);
    ASSERT_LT((h * es.vectors - es.vectors * es.values.asDiagonal()).norm(), 1e-10);
    Eigen::MatrixXcd real = Eigen::MatrixXcd(h.real().cast<Complex>());
    ASSERT_LT((eigh(real).values - oracle::dense_eigenvalues(real)).norm(), 1e-10);
}

TEST(ground_states, keeps_degenerate_space) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m.diagonal() << -1.0, 2.0, -1.0, 0.5;
    auto gs = ground_states(m, 1);
    ASSERT_EQ(gs.multiplicity, 2);
    ASSERT_GE(gs.vectors.cols(), 2);
    ASSERT_NEAR(gs.energies[0], -1.0, 1e-14);
    Eigen::VectorXd v(3);
    v << 0.0, 1e-12, 1.0;
    ASSERT_EQ(ground_multiplicity(v), 2);
}

TEST(sector, restriction_requires_closure) {
    const Constraint c[] = {Constraint::magnetization(4, ring(4), 0)};
    auto sector = sector_basis(c, 4);
    try {
        restrict_to_sector(build_transverse(4), sector);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::closure_violation);
    }
    Hamiltonian xy = build_xy_cycle(4, ring(4));
    Eigen::MatrixXcd local = restrict_to_sector(xy, sector);
    std::vector<Mask> states(sector.states().begin(), sector.states().end());
    ASSERT_LT((local - oracle::dense_restrict(oracle::dense(xy), states)).norm(), 1e-12);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(6);
    ASSERT_LT((project(sector, embed(sector, v)) - v).norm(), 1e-15);
}

TEST(sector, ground_energies_match_dense_restriction) {
    for (int n : {4, 5, 6}) {
        Eigen::MatrixXcd full = oracle::dense(build_xy_cycle(n, ring(n)));
        for (auto [m, e] : xy_sector_ground_energies(n)) {
            const Constraint c[] = {Constraint::magnetization(n, ring(n), m)};
            auto states = oracle::brute_sector(c, n);
            ASSERT_NEAR(e, oracle::dense_eigenvalues(oracle::dense_restrict(full, states))[0], 1e-10);
        }
        auto energies = xy_sector_ground_energies(n);
        for (std::size_t k = 0; k < energies.size(); ++k) {
            ASSERT_NEAR(energies[k].second, energies[energies.size() - 1 - k].second, 1e-10);
        }
    }
}

TEST(magnetization_curve, staircase_properties) {
    for (int n : {4, 6, 8}) {
        auto grid = linspace(0.0, 3.0, 61);
        auto curve = magnetization_curve(n, grid);
        auto full = magnetization_curve_full_space(n, grid);
        ASSERT_EQ(curve.mz.front(), 0);
        ASSERT_EQ(curve.mz.back(), n);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i > 0) {
                ASSERT_GE(curve.mz[i], curve.mz[i - 1]);
            }
            ASSERT_EQ(curve.mz[i], full.mz[i]) << "n=" << n << " B=" << grid[i];
            ASSERT_NEAR(curve.e0_density[i], full.e0_density[i], 1e-10);
        }
    }
}

TEST(magnetization_curve, matches_dense_ground_state_magnetization) {
    const double fields[] = {0.2, 0.8, 1.4, 1.85, 2.5};
    auto curve = magnetization_curve(8, fields);
    const int expect[] = {0, 2, 4, 6, 8};
    for (int i = 0; i < 5; ++i) {
        ASSERT_EQ(curve.mz[i], expect[i]);
        ASSERT_NEAR(oracle_ground_mz(8, fields[i]), expect[i], 1e-8);
    }
    const double around[] = {2.0 * std::sqrt(2.0) - 2.0 - 1e-6, 2.0 * std::sqrt(2.0) - 2.0 + 1e-6};
    auto step = magnetization_curve(4, around);
    ASSERT_EQ(step.mz[0], 0);
    ASSERT_EQ(step.mz[1], 2);
}

TEST(spectrum_sweep, two_level_gap) {
    Hamiltonian hp(1, {PauliTerm::from_string("Z")});
    Hamiltonian hd(1, {PauliTerm::from_string("X", -1.0)});
    auto sweep = spectrum_sweep(hp, hd, linspace(0.0, 1.0, 101), 2);
    ASSERT_NEAR(sweep.min_gap, std::sqrt(2.0), 1e-10);
    ASSERT_NEAR(sweep.min_gap_s, 0.5, 1e-12);
    for (std::size_t i = 0; i < sweep.s_grid.size(); ++i) {
        double s = sweep.s_grid[i];
        double half = std::sqrt(s * s + (1 - s) * (1 - s));
        ASSERT_NEAR(sweep.energies[i][0], -half, 1e-12);
        ASSERT_NEAR(sweep.energies[i][1], half, 1e-12);
    }
}

TEST(spectrum_sweep, sector_levels_match_dense_oracle) {
    auto enc = build_gi_grid(Graph(3, {{0, 1}, {1, 2}}), Graph(3, {{0, 1}, {0, 2}}));
    auto sector = sector_basis(enc.constraints, 9);
    Hamiltonian hd = build_gi_fourbody(3);
    std::vector<double> grid;
    for (int k = 0; k < 64; ++k) {
        grid.push_back(k / 64.0);
    }
    auto sweep = spectrum_sweep(enc.problem, hd, grid, sector, 4);
    std::vector<Mask> states(sector.states().begin(), sector.states().end());
    Eigen::MatrixXcd p = oracle::dense_restrict(oracle::dense(enc.problem), states);
    Eigen::MatrixXcd d = oracle::dense_restrict(oracle::dense(hd), states);
    double min_gap = 1e300;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto ref = oracle::dense_eigenvalues(grid[i] * p + (1 - grid[i]) * d);
        for (int k = 0; k < 4; ++k) {
            ASSERT_NEAR(sweep.energies[i][k], ref[k], 1e-10);
        }
        min_gap = std::min(min_gap, ref[1] - ref[0]);
    }
    ASSERT_NEAR(sweep.min_gap, min_gap, 1e-10);
    ASSERT_GT(sweep.min_gap, 0.0);
}

TEST(linspace, endpoints) {
    auto g = linspace(0.0, 2.0, 5);
    ASSERT_EQ(g.size(), 5u);
    ASSERT_EQ(g.front(), 0.0);
    ASSERT_EQ(g.back(), 2.0);
    ASSERT_EQ(g[2], 1.0);
}
