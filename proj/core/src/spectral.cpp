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

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cqa/drivers.hpp"

namespace cqa {

namespace {

constexpr double kAmplitudeTolerance = 1e-12;

// Ties between sectors within this tolerance resolve to the smaller M.
int pick_sector(const std::vector<std::pair<int, double>> &energies_at_b, double &e0) {
    e0 = std::numeric_limits<double>::infinity();
    for (const auto &[m, e] : energies_at_b) {
        e0 = std::min(e0, e);
    }
    int best = std::numeric_limits<int>::max();
    for (const auto &[m, e] : energies_at_b) {
        if (e - e0 <= degeneracy_tolerance(e0)) {
            best = std::min(best, m);
        }
    }
    return best;
}

Eigen::MatrixXcd mix(const Eigen::MatrixXcd &hp, const Eigen::MatrixXcd &hd, double s) {
    return s * hp + (1.0 - s) * hd;
}

SpectrumSweep sweep_dense(const Eigen::MatrixXcd &hp, const Eigen::MatrixXcd &hd, std::span<const double> s_grid,
                          int k) {
    require(k >= 1, "spectrum sweep needs k >= 1");
    SpectrumSweep out;
    out.s_grid.assign(s_grid.begin(), s_grid.end());
    out.min_gap = std::numeric_limits<double>::infinity();
    for (double s : s_grid) {
        require(s >= 0.0 && s <= 1.0, "annealing parameter s must lie in [0, 1]");
        EigenSystem es = eigh(mix(hp, hd, s), false);
        auto take = std::min<Eigen::Index>(k, es.values.size());
        out.energies.emplace_back(es.values.data(), es.values.data() + take);
        if (es.values.size() >= 2) {
            double gap = es.values[1] - es.values[0];
            if (gap < out.min_gap) {
                out.min_gap = gap;
                out.min_gap_s = s;
            }
        }
    }
    return out;
}

}  // namespace

EigenSystem eigh(const Eigen::MatrixXcd &m, bool with_vectors) {
    require(m.rows() == m.cols(), "eigh needs a square matrix");
    EigenSystem out;
    if (m.rows() == 0) {
        return out;
    }
    int options = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), options);
        out.values = solver.eigenvalues();
        if (with_vectors) {
            out.vectors = solver.eigenvectors().cast<Complex>();
        }
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, options);
        out.values = solver.eigenvalues();
        if (with_vectors) {
            out.vectors = solver.eigenvectors();
        }
    }
    return out;
}

int ground_multiplicity(const Eigen::VectorXd &sorted_values) {
    if (sorted_values.size() == 0) {
        return 0;
    }
    double e0 = sorted_values[0];
    int count = 0;
    while (count < sorted_values.size() && sorted_values[count] - e0 <= degeneracy_tolerance(e0)) {
        ++count;
    }
    return count;
}

GroundStates ground_states(const Eigen::MatrixXcd &m, int k) {
    require(k >= 1, "ground_states needs k >= 1");
    EigenSystem es = eigh(m, true);
    GroundStates out;
    out.multiplicity = ground_multiplicity(es.values);
    auto cols = std::min<Eigen::Index>(std::max(k, out.multiplicity), es.values.size());
    out.energies.assign(es.values.data(), es.values.data() + cols);
    out.vectors = es.vectors.leftCols(cols);
    return out;
}

GroundStates ground_states(const Hamiltonian &h, int k) {
    return ground_states(to_matrix(h), k);
}

Eigen::MatrixXcd restrict_to_sector(const Hamiltonian &h, const SectorBasis &sector) {
    require(h.n_sites() == sector.n_sites(), "sector and Hamiltonian disagree on the site count");
    require(sector.feasible(), "cannot restrict to an empty sector", ErrorCode::infeasible);
    require(sector.size() <= max_dense_dim(),
            "sector dimension " + std::to_string(sector.size()) + " exceeds the dense limit",
            ErrorCode::dimension_limit);
    const auto dim = static_cast<Eigen::Index>(sector.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        Mask u = sector.state(static_cast<std::size_t>(a));
        for (const auto &[v, amp] : column(h, u, kAmplitudeTolerance)) {
            auto b = sector.index_of(v);
            require(b.has_value(), "operator maps a sector state outside the sector", ErrorCode::closure_violation);
            m(static_cast<Eigen::Index>(*b), a) += amp;
        }
    }
    return m;
}

Eigen::VectorXcd embed(const SectorBasis &sector, const Eigen::VectorXcd &local) {
    require(static_cast<std::size_t>(local.size()) == sector.size(), "vector size does not match the sector");
    require(sector.n_sites() < 40, "embedding limited to fewer than 40 sites", ErrorCode::dimension_limit);
    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << sector.n_sites()));
    for (std::size_t a = 0; a < sector.size(); ++a) {
        full[static_cast<Eigen::Index>(sector.state(a))] = local[static_cast<Eigen::Index>(a)];
    }
    return full;
}

Eigen::VectorXcd project(const SectorBasis &sector, const Eigen::VectorXcd &full) {
    require(full.size() == (Eigen::Index{1} << sector.n_sites()), "vector size does not match 2^n");
    Eigen::VectorXcd local(static_cast<Eigen::Index>(sector.size()));
    for (std::size_t a = 0; a < sector.size(); ++a) {
        local[static_cast<Eigen::Index>(a)] = full[static_cast<Eigen::Index>(sector.state(a))];
    }
    return local;
}

SectorGround sector_ground(const Hamiltonian &h, const SectorBasis &sector) {
    GroundStates gs = ground_states(restrict_to_sector(h, sector), 1);
    return SectorGround{gs.energies.front(), gs.vectors.col(0), gs.multiplicity};
}

std::vector<std::pair<int, double>> xy_sector_ground_energies(int n, double J) {
    require(n >= 3, "the XY ring needs at least 3 sites");
    std::vector<int> ring(static_cast<std::size_t>(n));
    std::iota(ring.begin(), ring.end(), 0);
    Hamiltonian xy = build_xy_cycle(n, ring, J);
    std::vector<std::pair<int, double>> out;
    for (int m = -n; m <= n; m += 2) {
        const Constraint c[] = {Constraint::magnetization(n, ring, m)};
        out.emplace_back(m, sector_ground(xy, sector_basis(c, n)).energy);
    }
    return out;
}

MagnetizationCurve magnetization_curve(int n, std::span<const double> b_over_j, double J) {
    require(J != 0.0, "J must be nonzero");
    auto sectors = xy_sector_ground_energies(n, J);
    MagnetizationCurve out;
    out.n = n;
    for (double r : b_over_j) {
        double b = r * J;
        std::vector<std::pair<int, double>> at_b;
        for (const auto &[m, e] : sectors) {
            at_b.emplace_back(m, e - b * m);
        }
        double e0 = 0.0;
        int m = pick_sector(at_b, e0);
        out.b_over_j.push_back(r);
        out.mz.push_back(m);
        out.e0_density.push_back(e0 / (J * n));
    }
    return out;
}

MagnetizationCurve magnetization_curve_full_space(int n, std::span<const double> b_over_j, double J) {
    require(n >= 3, "the XY ring needs at least 3 sites");
    require(J != 0.0, "J must be nonzero");
    std::vector<int> ring(static_cast<std::size_t>(n));
    std::iota(ring.begin(), ring.end(), 0);
    Hamiltonian xy = build_xy_cycle(n, ring, J);
    Hamiltonian total_z(n);
    for (int i = 0; i < n; ++i) {
        total_z += Hamiltonian(n, {PauliTerm{n, 0, Mask{1} << i, 1.0}});
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXd mz_of_state(dim);
    for (Eigen::Index u = 0; u < dim; ++u) {
        mz_of_state[u] = n - 2 * std::popcount(static_cast<Mask>(u));
    }

    // Generic reference fields; an accidental cross-sector degeneracy would
    // show up as a non-integer eigenvector magnetization.
    const double references[] = {0.31830988618379067, 0.27182818284590451, 0.14142135623730950};
    for (double ref : references) {
        double b0 = ref * J;
        EigenSystem es = eigh(to_matrix(xy - total_z * Complex{b0}), true);
        std::vector<std::pair<int, double>> levels;
        bool clean = true;
        for (Eigen::Index k = 0; k < es.values.size() && clean; ++k) {
            double m = es.vectors.col(k).cwiseAbs2().dot(mz_of_state);
            double rounded = std::round(m);
            clean = std::abs(m - rounded) < 1e-6;
            levels.emplace_back(static_cast<int>(rounded), es.values[k] + b0 * rounded);
        }
        if (!clean) {
            continue;
        }
        MagnetizationCurve out;
        out.n = n;
        for (double r : b_over_j) {
            double b = r * J;
            std::vector<std::pair<int, double>> at_b;
            at_b.reserve(levels.size());
            for (const auto &[m, e] : levels) {
                at_b.emplace_back(m, e - b * m);
            }
            double e0 = 0.0;
            int m = pick_sector(at_b, e0);
            out.b_over_j.push_back(r);
            out.mz.push_back(m);
            out.e0_density.push_back(e0 / (J * n));
        }
        return out;
    }
    throw Error(ErrorCode::degenerate, "no reference field separated the magnetization sectors");
}

SpectrumSweep spectrum_sweep(const Hamiltonian &hp, const Hamiltonian &hd, std::span<const double> s_grid, int k) {
    require(hp.n_sites() == hd.n_sites(), "problem and driver disagree on the site count");
    return sweep_dense(to_matrix(hp), to_matrix(hd), s_grid, k);
}

SpectrumSweep spectrum_sweep(const Hamiltonian &hp, const Hamiltonian &hd, std::span<const double> s_grid,
                             const SectorBasis &sector, int k) {
    require(hp.n_sites() == hd.n_sites(), "problem and driver disagree on the site count");
    return sweep_dense(restrict_to_sector(hp, sector), restrict_to_sector(hd, sector), s_grid, k);
}

std::vector<double> linspace(double lo, double hi, int n) {
    require(n >= 1, "linspace needs at least one point");
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    }
    return out;
}

}  // namespace cqa
