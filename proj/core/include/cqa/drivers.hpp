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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cqa/constraints.hpp"
#include "cqa/pauli.hpp"

namespace cqa {

/// Driver families that can be built from a DriverSpec.
enum class DriverFamily {
    transverse,
    xy_cycle,
    gi_row_xy,
    gi_fourbody,
    nae_clause,
    lhz_twoflip,
    lhz_gf2,
};

std::string to_string(DriverFamily f);
DriverFamily driver_family_from_string(const std::string &name);

/// -Sum_i X_i. The ground state is |+>^n.
Hamiltonian build_transverse(int n);

/// -J Sum_m (X_m X_{m+1} + Y_m Y_{m+1}) around a closed cycle of sites. Each
/// bond hops an up spin to a neighbouring down site, so total magnetization
/// is conserved.
Hamiltonian build_xy_cycle(int n_sites, std::span<const int> cycle, double J = 1.0);

/// H_aux = -Sum_j B_j C_j.
Hamiltonian build_aux(std::span<const Constraint> cs, std::span<const double> B);

struct AuxFieldResult {
    /// Midpoint of the field interval that makes the target sector globally
    /// minimal; empty when no such interval exists.
    std::optional<double> B;
    double lower = 0.0;
    double upper = 0.0;
    bool upper_unbounded = false;
    /// Magnetization sectors that are the global ground sector for some field.
    std::vector<int> attainable;
};

/// Field B for which the ground state of XY-ring(n, J) - B Sum Z lies in the
/// magnetization sector target_mz. For the fully polarized sector the
/// interval is unbounded above and B is placed |J| above the last step.
AuxFieldResult find_aux_field(int n, int target_mz, double J = 1.0);

/// Grid site of row r, column c in an n x n layout.
inline int grid_site(int n, int row, int col) {
    return row * n + col;
}

/// One XY cycle per grid row; conserves every row magnetization.
Hamiltonian build_gi_row_xy(int n, double J = 1.0);

/// Four-site hops exchanging the columns of the up spins in neighbouring
/// rows r, r+1 (periodic in r) for every column pair c < c'. Conserves every
/// row and column magnetization.
Hamiltonian build_gi_fourbody(int n);

/// The individual hop generators of build_gi_fourbody, one per
/// (row, column pair), each including its Hermitian conjugate.
std::vector<Hamiltonian> gi_fourbody_generators(int n);

/// Clause-hop driver: for each constraint clause, -Sum_{a != b} |a><b| over
/// its six satisfying configurations; -X on every site outside those clauses.
/// Clauses must be disjoint.
Hamiltonian build_nae_driver(std::span<const Constraint> clauses, int n);

/// -Sum_m X_{l_m} X_{l_{m+1}} around the constraint's spins (periodic).
Hamiltonian build_lhz_twoflip(int n_sites, std::span<const int> cycle);

/// Two-flip drivers on disjoint cycles plus -X on all remaining sites.
Hamiltonian build_lhz_twoflip_total(int n_sites, std::span<const std::vector<int>> cycles);

/// X-strings X_{S_p} X_{Sbar_p}: each dependent site is added to Sbar_p when
/// X_{S_p} anticommutes with the solved constraint Z_d Prod_{i in expr(d)} Z_i.
std::vector<PauliTerm> lhz_gf2_terms(const Gf2Solution &sol, std::span<const std::vector<int>> subsets);

/// -Sum_p of the lhz_gf2_terms. An empty subset list means all singletons of
/// independent sites.
Hamiltonian build_lhz_gf2_driver(const Gf2Solution &sol, std::span<const std::vector<int>> subsets = {});

struct TermIndependence {
    bool independent = false;
    int rank = 0;
};

/// GF(2) rank of the x masks of pure X-strings.
TermIndependence check_term_independence(std::span<const PauliTerm> terms);

}  // namespace cqa
