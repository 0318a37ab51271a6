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

#include <array>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "cqa/pauli.hpp"

namespace cqa {

/// Sum_i coeffs[i] * z_i with z_i = +1 (bit 0) or -1 (bit 1).
struct LinearZ {
    std::vector<int> coeffs;
    int target = 0;

    bool operator==(const LinearZ &) const = default;
};

/// Product of z_i over the support; target is +1 or -1.
struct ZParity {
    std::vector<int> support;
    int target = 1;

    bool operator==(const ZParity &) const = default;
};

/// Indicator of the two violating configurations {j, ~j} of a 3-site clause.
/// Bit k of `violating` is the bit of site support[k]. Target is always 0.
struct ClauseIndicator {
    std::array<int, 3> support{};
    unsigned violating = 0;

    unsigned violating_complement() const {
        return violating ^ 7u;
    }

    bool operator==(const ClauseIndicator &) const = default;
};

/// A diagonal constraint operator C together with its target value c.
class Constraint {
   public:
    using Kind = std::variant<LinearZ, ZParity, ClauseIndicator>;

    static Constraint linear_z(std::vector<int> coeffs, int target);
    /// Total magnetization Sum z_i over `sites` equal to target.
    static Constraint magnetization(int n_sites, std::span<const int> sites, int target);
    /// Exactly one spin up among `sites`: the 0/1 form Sum (1 + z_i)/2 = 1,
    /// stored in spin units as Sum z_i = 2 - |sites|.
    static Constraint one_up(int n_sites, std::span<const int> sites);
    static Constraint z_parity(int n_sites, std::vector<int> support, int target = 1);
    static Constraint clause(int n_sites, std::array<int, 3> support, unsigned violating);

    int n_sites() const {
        return n_sites_;
    }
    int target() const;
    const Kind &kind() const {
        return kind_;
    }
    /// Sites the constraint depends on.
    Mask support() const;

    bool operator==(const Constraint &) const = default;

   private:
    Constraint(int n_sites, Kind kind) : n_sites_(n_sites), kind_(std::move(kind)) {}

    int n_sites_ = 0;
    Kind kind_;
};

int eval_constraint(const Constraint &c, Mask state);

inline bool satisfied(const Constraint &c, Mask state) {
    return eval_constraint(c, state) == c.target();
}

/// Diagonal operator whose eigenvalue on each basis state is eval_constraint.
Hamiltonian constraint_as_hamiltonian(const Constraint &c);

/// (C - c)^2, the standard penalty term for one constraint.
Hamiltonian penalty_term(const Constraint &c);

/// Computational-basis states satisfying a constraint set, sorted ascending.
class SectorBasis {
   public:
    SectorBasis() = default;
    SectorBasis(int n_sites, std::vector<Mask> states);

    int n_sites() const {
        return n_sites_;
    }
    std::span<const Mask> states() const {
        return states_;
    }
    std::size_t size() const {
        return states_.size();
    }
    /// False when no state satisfies the constraints.
    bool feasible() const {
        return !states_.empty();
    }
    Mask state(std::size_t i) const {
        return states_[i];
    }
    std::optional<std::size_t> index_of(Mask state) const;
    bool contains(Mask state) const {
        return index_of(state).has_value();
    }

   private:
    int n_sites_ = 0;
    std::vector<Mask> states_;
};

/// Sector size above which enumeration is refused.
inline constexpr std::size_t kMaxSectorStates = std::size_t{1} << 24;

/// Enumerates the states meeting every constraint via depth-first
/// assignment with bound pruning on the linear constraints, so structured
/// sets (one-up rows/columns) stay cheap far beyond 2^24 raw states.
SectorBasis sector_basis(std::span<const Constraint> cs, int n_sites);

/// Solved form of a mod-2 parity system.
///
/// Each dependent site d satisfies b_d = constant XOR (XOR of b_i over its
/// expression), where expressions reference independent sites only.
struct Gf2Solution {
    int n_sites = 0;
    std::vector<int> dependent;
    std::vector<std::vector<int>> expressions;
    std::vector<int> constants;
    std::vector<int> independent;

    int rank() const {
        return static_cast<int>(dependent.size());
    }
    /// Extends an assignment of the independent sites (other bits ignored)
    /// to a full state obeying every parity in the system.
    Mask complete(Mask assignment) const;
};

/// Gaussian elimination over GF(2). A parity Prod z = t becomes the row
/// Sum b = (t == -1) mod 2. The highest-index remaining variable of each row
/// is its pivot and becomes that row's dependent site; rows are fully
/// reduced so every expression contains independent sites only.
/// Throws ErrorCode::infeasible on contradictory rows.
Gf2Solution gf2_solve(std::span<const Constraint> parities);

}  // namespace cqa
