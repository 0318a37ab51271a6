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

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cqa/constraints.hpp"
#include "cqa/pauli.hpp"

namespace cqa {

/// Eigenvalues closer than this to E0 count as ground-state degeneracy.
inline double degeneracy_tolerance(double e0) {
    return 1e-10 * std::max(1.0, std::abs(e0));
}

/// Eigenvalues ascending; eigenvectors as columns (empty if not requested).
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

/// Dense Hermitian diagonalization. Real symmetric input takes the real
/// solver path.
EigenSystem eigh(const Eigen::MatrixXcd &m, bool with_vectors = true);

/// Number of eigenvalues within degeneracy_tolerance of the smallest one.
int ground_multiplicity(const Eigen::VectorXd &sorted_values);

struct GroundStates {
    std::vector<double> energies;
    /// At least max(k, multiplicity) columns: a degenerate ground space is
    /// never truncated.
    Eigen::MatrixXcd vectors;
    int multiplicity = 0;
};

GroundStates ground_states(const Eigen::MatrixXcd &m, int k = 1);
GroundStates ground_states(const Hamiltonian &h, int k = 1);

/// Matrix of h on the span of the sector states. Throws closure_violation if
/// h maps any sector state outside the sector (|amplitude| > 1e-12).
Eigen::MatrixXcd restrict_to_sector(const Hamiltonian &h, const SectorBasis &sector);

/// Sector coordinates -> full 2^n vector, and back (dropping outside weight).
Eigen::VectorXcd embed(const SectorBasis &sector, const Eigen::VectorXcd &local);
Eigen::VectorXcd project(const SectorBasis &sector, const Eigen::VectorXcd &full);

struct SectorGround {
    double energy = 0.0;
    Eigen::VectorXcd state;  // sector coordinates
    int multiplicity = 0;
};

SectorGround sector_ground(const Hamiltonian &h, const SectorBasis &sector);

/// Lowest energy of the XY ring in each magnetization sector, as (M, E_M)
/// for M = -n, -n+2, ..., n.
std::vector<std::pair<int, double>> xy_sector_ground_energies(int n, double J = 1.0);

/// Ground-state magnetization of XY-ring(n, J) - B Sum Z over a B/J grid.
struct MagnetizationCurve {
    int n = 0;
    std::vector<double> b_over_j;
    std::vector<int> mz;
    std::vector<double> e0_density;  // E0 / (J n)
};

/// Per-sector route: each magnetization sector is diagonalized once; within a
/// sector the field only shifts energies by -B M. At an exact level crossing
/// the smaller magnetization is reported.
MagnetizationCurve magnetization_curve(int n, std::span<const double> b_over_j, double J = 1.0);

/// Full-space route: one dense 2^n diagonalization at a generic reference
/// field, each eigenvector tagged with its magnetization, energies shifted
/// linearly to every grid field. Serves as an independent check of the
/// per-sector route.
MagnetizationCurve magnetization_curve_full_space(int n, std::span<const double> b_over_j, double J = 1.0);

/// Lowest-k spectrum of s H_p + (1 - s) H_d over a grid of s.
struct SpectrumSweep {
    std::vector<double> s_grid;
    std::vector<std::vector<double>> energies;
    double min_gap = 0.0;  // smallest E1 - E0 over the grid
    double min_gap_s = 0.0;
};

SpectrumSweep spectrum_sweep(const Hamiltonian &hp, const Hamiltonian &hd, std::span<const double> s_grid, int k = 4);
SpectrumSweep spectrum_sweep(const Hamiltonian &hp, const Hamiltonian &hd, std::span<const double> s_grid,
                             const SectorBasis &sector, int k = 4);

/// n evenly spaced points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace cqa
