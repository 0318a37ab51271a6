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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cqa/constraints.hpp"
#include "cqa/pauli.hpp"

namespace cqa {

/// s(t) = shape(t / T). An empty shape is the linear schedule.
struct Schedule {
    double total_time = 0.0;
    std::function<double(double)> shape;
    /// Bound on |s_{k+1} - s_k| * ||H_p - H_d|| * dt for every step.
    double drift_tolerance = 1e-3;
    int checkpoints = 64;

    double s_at(double t) const;
    /// Checks T >= 0, s(0) = 0, s(T) = 1 and monotonicity on a fine grid.
    void validate() const;
};

struct Checkpoint {
    double t = 0.0;
    double s = 0.0;
    double energy = 0.0;   // <psi|H(s)|psi>
    double leakage = 0.0;  // weight outside the monitored sector
    double norm = 1.0;
};

struct AnnealResult {
    /// Full-space amplitudes, or sector coordinates when `sector` is set.
    Eigen::VectorXcd final_state;
    std::optional<SectorBasis> sector;
    /// Weight of the final state on the ground eigenspace of H_p.
    double overlap = 0.0;
    int ground_multiplicity = 0;
    std::vector<Checkpoint> checkpoints;
    std::vector<Eigen::VectorXcd> checkpoint_states;
    std::size_t steps = 0;
    double max_leakage = 0.0;
};

/// Piecewise-constant evolution under H(s) = s H_p + (1 - s) H_d with H
/// frozen at each step midpoint. Step count is a multiple of the checkpoint
/// count. When `monitor` is given, checkpoints record the weight outside it.
AnnealResult evolve(const Hamiltonian &hp, const Hamiltonian &hd, const Eigen::VectorXcd &psi0,
                    const Schedule &sched, const SectorBasis *monitor = nullptr);

/// Same evolution in sector coordinates. Throws closure_violation when
/// either Hamiltonian leaves the sector; leakage is identically zero.
AnnealResult evolve_in_sector(const Hamiltonian &hp, const Hamiltonian &hd, const Eigen::VectorXcd &psi0_local,
                              const Schedule &sched, const SectorBasis &sector);

/// Per-checkpoint probability on basis states whose constraint values differ
/// from those of psi0_sector.
std::vector<double> leakage_trace(const AnnealResult &result, std::span<const Constraint> constraints,
                                  const SectorBasis &psi0_sector);
double leakage(const AnnealResult &result, std::span<const Constraint> constraints, const SectorBasis &psi0_sector);

struct GlobalGround {};
struct SectorGroundMode {
    SectorBasis sector;
};
/// Ground state of H_d - Sum B_j C_j, required to satisfy every constraint.
struct AuxAssisted {
    std::vector<Constraint> constraints;
    std::vector<double> B;
};
using PrepareMode = std::variant<GlobalGround, SectorGroundMode, AuxAssisted>;

/// Full-space initial state, phase fixed so the largest component is real
/// and positive. Throws degenerate for a non-unique ground state and
/// wrong_sector when the aux-assisted ground state violates a constraint.
Eigen::VectorXcd prepare_initial(const Hamiltonian &hd, const PrepareMode &mode);

}  // namespace cqa
