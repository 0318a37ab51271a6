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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cqa/constraints.hpp"
#include "cqa/pauli.hpp"

namespace cqa {

/// Simple undirected graph; edges normalized to (u < v), sorted and unique.
class Graph {
   public:
    Graph() = default;
    Graph(int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_vertices() const {
        return n_;
    }
    std::span<const std::pair<int, int>> edges() const {
        return edges_;
    }
    bool has_edge(int u, int v) const;

    static Graph complete(int n);
    static Graph path(int n);

   private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint8_t> adjacency_;
};

/// Grid encoding of graph isomorphism on n x n sites. Site (i, a) =
/// grid_site(n, i, a) is up when vertex i of G1 maps to vertex a of G2.
struct GiGridEncoding {
    Hamiltonian problem;
    /// 2n one-up constraints: rows first, then columns.
    std::vector<Constraint> constraints;
};

/// Rows (one per G1 vertex) and columns (one per G2 vertex) of one-up
/// constraints, rows first.
std::vector<Constraint> gi_constraints(int n);

/// H_p = Sum_{ij not in E1} Sum_{(a,b) in E2} P + Sum_{ij in E1} Sum_{(a,b) not in E2} P with
/// P = (1 + Z_{i,a})(1 + Z_{j,b})/4 over unordered {i,j} and ordered (a,b),
/// a != b. On a permutation state this counts the mismatched vertex pairs.
GiGridEncoding build_gi_grid(const Graph &g1, const Graph &g2);

/// Sum over rows and columns of (Sum (1 + Z)/2 - 1)^2.
Hamiltonian build_gi_penalty(int n);

/// Basis state with site (i, perm[i]) up and every other grid site down.
Mask permutation_state(std::span<const int> perm);

/// NAE3SAT problem Hamiltonian: clause projectors |j><j| + |~j><~j| of the
/// clauses NOT listed in `constrained`. Constrained clauses must be disjoint.
Hamiltonian build_nae_problem(std::span<const Constraint> clauses, int n, std::span<const std::size_t> constrained);

/// All-to-all n-spin problem laid out on M = n(n-1)/2 spins with parity
/// cycles among them.
struct LhzInstance {
    int n_logical = 0;
    std::vector<double> J;  // one local field per physical spin
    std::vector<std::vector<int>> cycles;

    int n_physical() const {
        return n_logical * (n_logical - 1) / 2;
    }
    void validate() const;
};

/// Physical spin of the logical pair (a, b), a < b, in row-major order.
int lhz_spin(int n_logical, int a, int b);

/// Standard plaquette layout: triangles (i,i+1),(i,i+2),(i+1,i+2) and
/// squares (i,j),(i,j+1),(i+1,j),(i+1,j+1). These generate the full cycle
/// space of the complete graph, M - n + 1 independent parities.
LhzInstance lhz_plaquette_instance(int n_logical, std::vector<double> J);

enum class LhzPath { two_flip, gf2 };

struct LhzEncoding {
    Hamiltonian problem;                  // Sum_k J_k Z_k
    std::vector<Constraint> constraints;  // constrained cycles, Prod Z = +1
    std::vector<Constraint> remaining;    // cycles left to penalties
};

/// The two-flip path needs mutually disjoint constrained cycles.
LhzEncoding build_lhz(const LhzInstance &inst, std::span<const std::size_t> constrained, LhzPath path);

/// Sum_l alpha (1 - t_l C_l) for parity constraints with targets t_l. Zero on
/// satisfying states, 2 alpha per violated parity.
Hamiltonian lhz_penalty(std::span<const Constraint> parities, double alpha);

/// Penalty weight that guarantees constrained ground states dominate:
/// 2 * Sum |coefficients|, an upper bound on 2 max |H_p|.
double penalty_bound(const Hamiltonian &hp);

/// Words over {0..alphabet-1}; position i holds the image of G1 vertex i.
using Word = std::vector<int>;

/// Exchange of the values {value_a, value_b} at two positions; acts only on
/// words holding one of the two values at each position in either order.
struct HopGenerator {
    int pos_a = 0;
    int pos_b = 0;
    int value_a = 0;
    int value_b = 0;
};

/// Discrete configuration space with a diagonal cost and hop generators.
/// block_width is 1 for n-level qudits and ceil(log2 n) for the binary
/// block encoding, in which case each word position is a block of qubits.
struct ConfigModel {
    int word_length = 0;
    int alphabet_size = 0;
    int block_width = 1;
    std::function<double(std::span<const int>)> cost;
    std::vector<HopGenerator> hops;

    std::optional<Word> apply(const HopGenerator &g, std::span<const int> word) const;
    /// Physical two-level systems (block encoding) or qudits (block_width 1).
    int physical_units() const {
        return word_length * block_width;
    }
    /// Bitstring of the block encoding, position i in bits [i w, (i+1) w).
    Mask to_bits(std::span<const int> word) const;
};

/// n-level qudit GI encoding with periodic neighbour swaps.
ConfigModel build_gi_qudit(const Graph &g1, const Graph &g2);
/// Same model interpreted as ceil(log2 n)-qubit binary blocks.
ConfigModel build_gi_log_binary(const Graph &g1, const Graph &g2);

std::vector<Word> permutation_words(int n);

int ceil_log2(int n);

enum class Encoding { gi_standard, gi_partial, gi_fourbody, gi_log_binary, gi_qudit, lhz };

std::string to_string(Encoding e);
Encoding encoding_from_string(const std::string &name);

/// Closed-form hardware resources. Fields the encoding has no formula for
/// stay empty.
struct ResourceCounts {
    std::optional<std::int64_t> qubits;
    std::optional<std::int64_t> qudits;
    std::optional<std::int64_t> edges;
    std::optional<std::int64_t> driver_terms;
    std::optional<std::int64_t> constraints;
    std::optional<std::int64_t> levels;
};

ResourceCounts resource_counts(Encoding e, int n);

}  // namespace cqa
