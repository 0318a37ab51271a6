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
#include <span>
#include <utility>
#include <vector>

#include "cqa/constraints.hpp"
#include "cqa/encodings.hpp"
#include "cqa/pauli.hpp"

namespace cqa {

/// Matrix elements at or below this magnitude do not create hop edges.
inline constexpr double kHopThreshold = 1e-12;

/// Undirected graph on sector states or configuration words. Edges are
/// stored once as (u, v) with u < v, sorted.
class HopGraph {
   public:
    HopGraph() = default;
    HopGraph(std::size_t n_nodes, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t n_nodes() const {
        return adjacency_.size();
    }
    std::span<const std::pair<std::size_t, std::size_t>> edges() const {
        return edges_;
    }
    std::span<const std::size_t> neighbours(std::size_t node) const {
        return adjacency_[node];
    }

   private:
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Edge (u, v) iff |<v|H|u>| > kHopThreshold for u != v, both in the sector.
/// Amplitudes leaving the sector are ignored here; check_closure reports them.
HopGraph hop_graph(const Hamiltonian &driver, const SectorBasis &sector);

/// Edge (u, v) iff some hop generator maps word u to word v.
HopGraph hop_graph(const ConfigModel &model, std::span<const Word> words);

/// Connected components by BFS. An empty graph has zero components.
std::size_t component_count(const HopGraph &g);
bool is_connected(const HopGraph &g);

/// A matrix element <to|H|from> joining states with different constraint
/// values. x_mask identifies the group of Pauli strings responsible.
struct ClosureWitness {
    Mask from = 0;
    Mask to = 0;
    Mask x_mask = 0;
    Complex amplitude = 0.0;
};

struct ClosureReport {
    bool pass = true;
    std::size_t states_checked = 0;
    std::size_t violations = 0;  // total, witnesses may be truncated
    std::vector<ClosureWitness> witnesses;
};

/// Every state of the full space is checked up to this many sites; larger
/// systems check only the sector of the constraint targets.
inline constexpr int kClosureFullSpaceSites = 22;

/// Applies the driver to basis states and compares constraint values of
/// input and output. Strings sharing an x mask are summed before the
/// comparison, so XX + YY is one hop.
ClosureReport check_closure(const Hamiltonian &driver, std::span<const Constraint> constraints,
                            std::size_t max_witnesses = 16);

/// Word-level closure: every hop of an allowed word yields an allowed word.
ClosureReport check_closure(const ConfigModel &model, std::span<const Word> words, std::size_t max_witnesses = 16);

/// Closure, completeness and locality diagnostics for a driver on the sector
/// of the constraint targets.
struct VerifyReport {
    ClosureReport closure;
    bool connected = false;
    std::size_t components = 0;
    std::size_t sector_size = 0;
    int max_term_support = 0;
    std::size_t n_terms = 0;

    bool pass() const {
        return closure.pass && connected;
    }
};

/// Throws infeasible when no state satisfies the constraints.
VerifyReport verify_driver(const Hamiltonian &driver, std::span<const Constraint> constraints,
                           std::size_t max_witnesses = 16);

}  // namespace cqa
