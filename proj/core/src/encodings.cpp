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

#include "cqa/encodings.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace cqa {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edges) : n_(n_vertices) {
    require(n_vertices >= 1, "graph needs at least one vertex");
    adjacency_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
        require(u != v, "self-loops are not allowed");
        if (u > v) {
            std::swap(u, v);
        }
        edges_.emplace_back(u, v);
        adjacency_[u * n_ + v] = adjacency_[v * n_ + u] = 1;
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) {
        e.emplace_back(u, u + 1);
    }
    return Graph(n, std::move(e));
}

std::vector<Constraint> gi_constraints(int n) {
    require(n >= 2, "graph isomorphism encodings need n >= 2");
    require(n * n <= kMaxSites, "grid encoding limited to 64 sites");
    std::vector<Constraint> out;
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            line[c] = r * n + c;
        }
        out.push_back(Constraint::one_up(n * n, line));
    }
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            line[r] = r * n + c;
        }
        out.push_back(Constraint::one_up(n * n, line));
    }
    return out;
}

GiGridEncoding build_gi_grid(const Graph &g1, const Graph &g2) {
    const int n = g1.n_vertices();
    require(n == g2.n_vertices(), "graphs have different vertex counts");
    auto constraints = gi_constraints(n);
    const int sites = n * n;
    std::vector<PauliTerm> terms;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool e1 = g1.has_edge(i, j);
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (a == b || e1 == g2.has_edge(a, b)) {
                        continue;
                    }
                    Mask za = Mask{1} << (i * n + a);
                    Mask zb = Mask{1} << (j * n + b);
                    terms.push_back(PauliTerm{sites, 0, 0, 0.25});
                    terms.push_back(PauliTerm{sites, 0, za, 0.25});
                    terms.push_back(PauliTerm{sites, 0, zb, 0.25});
                    terms.push_back(PauliTerm{sites, 0, za | zb, 0.25});
                }
            }
        }
    }
    return GiGridEncoding{Hamiltonian(sites, std::move(terms)), std::move(constraints)};
}

Hamiltonian build_gi_penalty(int n) {
    require(n >= 2, "penalty needs n >= 2");
    require(n * n <= kMaxSites, "grid encoding limited to 64 sites");
    const int sites = n * n;
    Hamiltonian out(sites);
    auto line_penalty = [&](auto site_of) {
        Hamiltonian count = Hamiltonian::identity(sites, -1.0);
        for (int k = 0; k < n; ++k) {
            count += Hamiltonian(sites, {PauliTerm::identity(sites, 0.5), PauliTerm{sites, 0, Mask{1} << site_of(k), 0.5}});
        }
        return count * count;
    };
    for (int r = 0; r < n; ++r) {
        out += line_penalty([&](int c) { return r * n + c; });
        out += line_penalty([&](int c) { return c * n + r; });
    }
    return out;
}

Mask permutation_state(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    require(n * n <= kMaxSites, "grid encoding limited to 64 sites");
    Mask state = n * n == 64 ? ~Mask{0} : (Mask{1} << (n * n)) - 1;
    for (int i = 0; i < n; ++i) {
        require(perm[i] >= 0 && perm[i] < n, "permutation entry out of range");
        state &= ~(Mask{1} << (i * n + perm[i]));
    }
    return state;
}

Hamiltonian build_nae_problem(std::span<const Constraint> clauses, int n, std::span<const std::size_t> constrained) {
    std::vector<bool> is_constrained(clauses.size(), false);
    Mask covered = 0;
    for (std::size_t idx : constrained) {
        require(idx < clauses.size(), "constrained clause index out of range");
        require(!is_constrained[idx], "constrained clause listed twice");
        is_constrained[idx] = true;
        require((covered & clauses[idx].support()) == 0, "constraint clauses must be disjoint");
        covered |= clauses[idx].support();
    }
    Hamiltonian out(n);
    for (std::size_t m = 0; m < clauses.size(); ++m) {
        require(std::holds_alternative<ClauseIndicator>(clauses[m].kind()), "NAE problem accepts clauses only");
        require(clauses[m].n_sites() == n, "clause defined on a different number of sites");
        if (!is_constrained[m]) {
            out += constraint_as_hamiltonian(clauses[m]);
        }
    }
    return out;
}

int lhz_spin(int n_logical, int a, int b) {
    require(0 <= a && a < b && b < n_logical, "logical pair must satisfy 0 <= a < b < n");
    return a * n_logical - a * (a + 1) / 2 + (b - a - 1);
}

void LhzInstance::validate() const {
    require(n_logical >= 2, "LHZ instance needs at least 2 logical spins");
    const int m = n_physical();
    require(m <= kMaxSites, "LHZ instance limited to 64 physical spins");
    require(static_cast<int>(J.size()) == m,
            "LHZ instance needs " + std::to_string(m) + " local fields, got " + std::to_string(J.size()));
    for (const auto &cycle : cycles) {
        require(cycle.size() >= 3, "LHZ cycles need at least 3 spins");
        Mask seen = 0;
        for (int s : cycle) {
            require(s >= 0 && s < m, "LHZ cycle spin out of range");
            require(!((seen >> s) & 1), "LHZ cycle repeats a spin");
            seen |= Mask{1} << s;
        }
    }
}

LhzInstance lhz_plaquette_instance(int n_logical, std::vector<double> J) {
    LhzInstance inst{n_logical, std::move(J), {}};
    const int n = n_logical;
    for (int i = 0; i + 2 < n; ++i) {
        inst.cycles.push_back({lhz_spin(n, i, i + 1), lhz_spin(n, i, i + 2), lhz_spin(n, i + 1, i + 2)});
    }
    for (int i = 0; i + 3 < n; ++i) {
        for (int j = i + 2; j + 1 < n; ++j) {
            inst.cycles.push_back(
                {lhz_spin(n, i, j), lhz_spin(n, i, j + 1), lhz_spin(n, i + 1, j), lhz_spin(n, i + 1, j + 1)});
        }
    }
    inst.validate();
    return inst;
}

LhzEncoding build_lhz(const LhzInstance &inst, std::span<const std::size_t> constrained, LhzPath path) {
    inst.validate();
    const int m = inst.n_physical();
    std::vector<PauliTerm> fields;
    for (int k = 0; k < m; ++k) {
        fields.push_back(PauliTerm{m, 0, Mask{1} << k, inst.J[k]});
    }
    LhzEncoding out{Hamiltonian(m, std::move(fields)), {}, {}};
    std::vector<bool> chosen(inst.cycles.size(), false);
    Mask covered = 0;
    for (std::size_t idx : constrained) {
        require(idx < inst.cycles.size(), "constrained cycle index out of range");
        require(!chosen[idx], "constrained cycle listed twice");
        chosen[idx] = true;
        Constraint c = Constraint::z_parity(m, inst.cycles[idx], 1);
        if (path == LhzPath::two_flip) {
            require((covered & c.support()) == 0, "the two-flip path needs non-overlapping cycles");
        }
        covered |= c.support();
        out.constraints.push_back(std::move(c));
    }
    for (std::size_t idx = 0; idx < inst.cycles.size(); ++idx) {
        if (!chosen[idx]) {
            out.remaining.push_back(Constraint::z_parity(m, inst.cycles[idx], 1));
        }
    }
    return out;
}

Hamiltonian lhz_penalty(std::span<const Constraint> parities, double alpha) {
    require(!parities.empty(), "lhz_penalty needs at least one parity");
    const int n = parities.front().n_sites();
    Hamiltonian out(n);
    for (const auto &c : parities) {
        require(std::holds_alternative<ZParity>(c.kind()), "lhz_penalty accepts parity constraints only");
        out += (Hamiltonian::identity(n) - constraint_as_hamiltonian(c) * Complex{double(c.target())}) * Complex{alpha};
    }
    return out;
}

double penalty_bound(const Hamiltonian &hp) {
    double sum = 0.0;
    for (const auto &t : hp.terms()) {
        sum += std::abs(t.coeff);
    }
    return 2.0 * sum;
}

std::optional<Word> ConfigModel::apply(const HopGenerator &g, std::span<const int> word) const {
    int a = word[g.pos_a];
    int b = word[g.pos_b];
    bool forward = a == g.value_a && b == g.value_b;
    bool backward = a == g.value_b && b == g.value_a;
    if (!forward && !backward) {
        return std::nullopt;
    }
    Word out(word.begin(), word.end());
    std::swap(out[g.pos_a], out[g.pos_b]);
    return out;
}

Mask ConfigModel::to_bits(std::span<const int> word) const {
    require(static_cast<int>(word.size()) == word_length, "word has the wrong length");
    require(word_length * block_width <= kMaxSites, "bit encoding limited to 64 qubits");
    Mask bits = 0;
    for (int i = 0; i < word_length; ++i) {
        require(word[i] >= 0 && word[i] < alphabet_size, "word value out of range");
        bits |= static_cast<Mask>(word[i]) << (i * block_width);
    }
    return bits;
}

ConfigModel build_gi_qudit(const Graph &g1, const Graph &g2) {
    const int n = g1.n_vertices();
    require(n == g2.n_vertices(), "graphs have different vertex counts");
    require(n >= 2, "graph isomorphism encodings need n >= 2");
    ConfigModel model;
    model.word_length = n;
    model.alphabet_size = n;
    model.cost = [g1, g2, n](std::span<const int> w) {
        double cost = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (w[i] != w[j] && g1.has_edge(i, j) != g2.has_edge(w[i], w[j])) {
                    cost += 1.0;
                }
            }
        }
        return cost;
    };
    std::vector<std::pair<int, int>> positions;
    for (int i = 0; i < n; ++i) {
        int a = i;
        int b = (i + 1) % n;
        positions.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (auto [pa, pb] : positions) {
        for (int va = 0; va < n; ++va) {
            for (int vb = va + 1; vb < n; ++vb) {
                model.hops.push_back(HopGenerator{pa, pb, va, vb});
            }
        }
    }
    return model;
}

ConfigModel build_gi_log_binary(const Graph &g1, const Graph &g2) {
    ConfigModel model = build_gi_qudit(g1, g2);
    model.block_width = ceil_log2(model.alphabet_size);
    return model;
}

std::vector<Word> permutation_words(int n) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

int ceil_log2(int n) {
    require(n >= 1, "ceil_log2 needs n >= 1");
    return static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
}

std::string to_string(Encoding e) {
    switch (e) {
        case Encoding::gi_standard:
            return "gi_standard";
        case Encoding::gi_partial:
            return "gi_partial";
        case Encoding::gi_fourbody:
            return "gi_fourbody";
        case Encoding::gi_log_binary:
            return "gi_log_binary";
        case Encoding::gi_qudit:
            return "gi_qudit";
        case Encoding::lhz:
            return "lhz";
    }
    return "unknown";
}

Encoding encoding_from_string(const std::string &name) {
    for (auto e : {Encoding::gi_standard, Encoding::gi_partial, Encoding::gi_fourbody, Encoding::gi_log_binary,
                   Encoding::gi_qudit, Encoding::lhz}) {
        if (to_string(e) == name) {
            return e;
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown encoding '" + name + "'");
}

ResourceCounts resource_counts(Encoding e, int n) {
    require(n >= 2, "resource counts need n >= 2");
    require(n <= 1 << 20, "resource counts limited to n <= 2^20");
    const std::int64_t nn = n;
    ResourceCounts out;
    switch (e) {
        case Encoding::gi_standard:
            // 2n penalty cliques of n(n-1)/2 edges each
            out.qubits = nn * nn;
            out.edges = nn * nn * (nn - 1);
            break;
        case Encoding::gi_partial:
            out.qubits = nn * nn;
            out.edges = nn * nn * (nn - 1) / 2 + nn * nn;
            break;
        case Encoding::gi_fourbody:
            out.qubits = nn * nn;
            out.driver_terms = nn * (nn * (nn - 1) / 2);
            break;
        case Encoding::gi_log_binary:
            out.qubits = nn * ceil_log2(n);
            out.driver_terms = nn * nn * (nn - 1);
            break;
        case Encoding::gi_qudit:
            out.qudits = nn;
            out.levels = nn;
            out.driver_terms = nn * nn * (nn - 1);
            break;
        case Encoding::lhz: {
            std::int64_t m = nn * (nn - 1) / 2;
            out.qubits = m;
            out.constraints = m - nn;
            break;
        }
    }
    return out;
}

}  // namespace cqa
